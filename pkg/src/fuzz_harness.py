"""
시드 기반 항등식 퍼즈 하네스
시행별 난수 = Random(seed, 시행 번호) 로 결정되어 실행 순서와 무관하게 재현 가능
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .exact_algebra import RingValue
from .identity_engine import IdentityEngine, IdentityName, IdentityReport
from .logger_config import ProgressReporter
from .recurrence_core import RecurrenceSpec, VarCoeffSpec, generate

# 시행 번호 → 시드 혼합 상수
TRIAL_SEED_STRIDE = 1_000_003

ALL_CHECKERS: Tuple[IdentityName, ...] = tuple(IdentityName)

# recover-a 보고서는 증거 재계산 함수가 없음
MUTATION_CHECKERS: Tuple[IdentityName, ...] = tuple(
    name for name in IdentityName if name is not IdentityName.RECOVER_A)


@dataclass(frozen=True)
class FuzzConfig:
    """퍼즈 실행 설정 (기본 범위: 계수/초기값 ±9, 인덱스 ≤ 25)"""
    seed: int
    trials: int
    coeff_max: int = 9
    init_max: int = 9
    index_max: int = 25
    identities: Tuple[IdentityName, ...] = ALL_CHECKERS

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials 는 1 이상이어야 합니다: {self.trials}")
        if self.coeff_max < 1 or self.init_max < 0 or self.index_max < 0:
            raise ValueError("범위는 coeff_max ≥ 1, init_max ≥ 0, index_max ≥ 0 이어야 합니다")
        if not self.identities:
            raise ValueError("항등식을 하나 이상 지정해야 합니다")


@dataclass
class FuzzSummary:
    """퍼즈 결과 요약"""
    seed: int
    trials: int
    covered: Dict[str, int] = field(default_factory=dict)
    failures: List[IdentityReport] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.trials - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def _ints(*values: int) -> Tuple[RingValue, ...]:
    return tuple(RingValue.integer(v) for v in values)


class FuzzHarness:
    """무작위 인스턴스로 모든 검증기를 순환 실행"""

    VAR_COEFF_MAX = 5
    VAR_COEFF_TOP = 15  # n + 2 ≤ 15
    MUTATION_VALUE_MAX = 9
    MUTATION_INDEX_MAX = 12

    def __init__(self, logger: logging.Logger = None):
        self.logger = logger or logging.getLogger(__name__)
        self.engine = IdentityEngine(self.logger)
        self.progress = ProgressReporter(self.logger)

    def run(self, config: FuzzConfig) -> FuzzSummary:
        """
        퍼즈 실행

        Args:
            config: 시드, 시행 수, 범위, 대상 항등식

        Returns:
            시행 번호 순서의 결과 요약 (시간 정보 없음)
        """
        summary = FuzzSummary(config.seed, config.trials,
                              covered={name.value: 0 for name in config.identities})
        for trial in range(config.trials):
            identity = config.identities[trial % len(config.identities)]
            rng = random.Random(config.seed * TRIAL_SEED_STRIDE + trial)
            report = self._trial(identity, rng, config)
            summary.covered[identity.value] += 1
            if not report.holds:
                self.logger.error(f"퍼즈 실패: 시행 {trial} {identity.value} {report.params}")
                summary.failures.append(report)
            self.progress.report_fuzz_progress(trial + 1, config.trials, len(summary.failures))
        return summary

    def _trial(self, identity: IdentityName, rng: random.Random,
               config: FuzzConfig) -> IdentityReport:
        c, i, top = config.coeff_max, config.init_max, config.index_max
        x = RingValue.integer(rng.randint(-c, c))
        y = RingValue.integer(rng.choice([v for v in range(-c, c + 1) if v]))
        b_init = _ints(rng.randint(-i, i), rng.randint(-i, i))
        c_init = _ints(rng.randint(-i, i), rng.randint(-i, i))
        engine = self.engine

        if identity is IdentityName.DOCAGNE:
            return engine.check_docagne_general(x, y, b_init, c_init,
                                                rng.randint(0, top), rng.randint(0, top))
        if identity is IdentityName.VARIABLE_COEFFICIENT:
            return self._var_coeff_trial(rng, b_init, c_init, positive=False)
        if identity is IdentityName.CASSINI:
            return engine.check_cassini(x, y, b_init, c_init, rng.randint(0, top))
        if identity is IdentityName.INDEX_REDUCTION:
            k = rng.randint(0, top)
            return engine.check_index_reduction(x, y, b_init, c_init, k,
                                                rng.randint(0, top), rng.randint(0, k))
        if identity is IdentityName.REDUCED_DOCAGNE:
            return engine.check_reduced_docagne(x, y, b_init, c_init, rng.randint(0, top))
        if identity is IdentityName.FOUR_PARAM:
            m, p = rng.randint(0, top), rng.randint(0, top)
            return engine.check_four_param(x, y, b_init, rng.randint(0, m), m,
                                           p, rng.randint(0, p))
        if identity is IdentityName.VAJDA:
            return engine.check_vajda(x, y, b_init, rng.randint(0, top),
                                      rng.randint(0, top), rng.randint(0, top))
        if identity is IdentityName.CATALAN:
            n = rng.randint(0, top)
            return engine.check_catalan(x, y, n, rng.randint(0, n))
        return self._recover_trial(x, y, b_init, c_init, rng, top)

    def _var_coeff_trial(self, rng: random.Random, b_init, c_init,
                         positive: bool) -> IdentityReport:
        low = 1 if positive else -self.VAR_COEFF_MAX
        values = [v for v in range(low, self.VAR_COEFF_MAX + 1) if v]
        if positive:
            n = rng.randint(1, self.VAR_COEFF_TOP - 2)
            k = rng.randint(2, n + 1)
        else:
            n = rng.randint(0, self.VAR_COEFF_TOP - 2)
            k = rng.randint(0, n + 2)
        length = n + 3
        spec = VarCoeffSpec(
            tuple(RingValue.integer(rng.choice(values + ([] if positive else [0])))
                  for _ in range(length)),
            tuple(RingValue.integer(rng.choice(values)) for _ in range(length)),
            b_init,
        )
        return self.engine.check_variable_coefficient(spec, b_init, c_init, k, n)

    def _recover_trial(self, x, y, b_init, c_init, rng: random.Random,
                       top: int) -> IdentityReport:
        b0, b1 = b_init
        c0, c1 = c_init
        if (b0 * c1 - b1 * c0).is_zero():
            # 특이 초기쌍이면 표준 기저로 대체
            b_init, c_init = _ints(1, 0), _ints(0, 1)
        k, m = rng.randint(0, top), rng.randint(0, top)
        b = generate(RecurrenceSpec(x, y, b_init), max(k + m, 1))
        c = generate(RecurrenceSpec(x, y, c_init), max(k + m, 1))
        return self.engine.check_recover_a(x, y, b.values, c.values, k, m)

    def mutation_sensitivity(self, identity: IdentityName, samples: int,
                             seed: int = 0) -> float:
        """
        증거 하나를 +1 변형했을 때 holds 가 뒤집히는 비율

        run() 의 무작위 인스턴스가 아니라 _mutation_instance 가 거른 비퇴화
        인스턴스에서만 측정. 0 값이나 같은 증거를 두 번 쓰는 인덱스에서는
        +1 변형이 양변을 함께 바꿀 수 있어 비율이 낮게 나옴
        """
        if identity not in MUTATION_CHECKERS:
            raise ValueError(f"{identity.value} 는 변이 검사를 지원하지 않습니다")

        flipped = 0
        for trial in range(samples):
            rng = random.Random(seed * TRIAL_SEED_STRIDE + trial)
            report = self._mutation_instance(identity, rng)
            key = rng.choice(sorted(report.witnesses))
            value = report.witnesses[key]
            mutated = report.with_witnesses({key: value + value.one_like()})
            flipped += report.holds and not mutated.holds

        ratio = flipped / samples
        self.logger.info(f"변이 민감도: {identity.value} {flipped}/{samples} ({ratio:.1%})")
        return ratio

    def _mutation_instance(self, identity: IdentityName, rng: random.Random) -> IdentityReport:
        """
        변이 민감도용 비퇴화 인스턴스

        공통 필터:
            x, y, 초기값 모두 1..MUTATION_VALUE_MAX 의 양수
            초기 행렬식 b_0·c_1 − b_1·c_0 ≠ 0
        항등식별 인덱스 제외 (증거 인덱스가 서로 다르도록):
            docagne: k ≥ 2, m ≥ 1
            var-coeff: u, v 는 1..VAR_COEFF_MAX, 2 ≤ k ≤ n+1
            cassini: k ≥ 2
            index-reduction: 1 ≤ p ≤ k, m ≥ 1, m ≠ p
            reduced-docagne: m ≥ 2
            four-param: m > k ≥ 1, p ≥ q ≥ 1, m ≠ 2k+q
            vajda: k ≥ 1, m ≥ 1, m ≠ k
            catalan: 1 ≤ r < n, n ≠ 2r
        """
        vmax, top = self.MUTATION_VALUE_MAX, self.MUTATION_INDEX_MAX
        x = RingValue.integer(rng.randint(1, vmax))
        y = RingValue.integer(rng.randint(1, vmax))
        while True:
            b_init = _ints(rng.randint(1, vmax), rng.randint(1, vmax))
            c_init = _ints(rng.randint(1, vmax), rng.randint(1, vmax))
            if not (b_init[0] * c_init[1] - b_init[1] * c_init[0]).is_zero():
                break
        engine = self.engine

        if identity is IdentityName.DOCAGNE:
            return engine.check_docagne_general(x, y, b_init, c_init,
                                                rng.randint(2, top), rng.randint(1, top))
        if identity is IdentityName.VARIABLE_COEFFICIENT:
            return self._var_coeff_trial(rng, b_init, c_init, positive=True)
        if identity is IdentityName.CASSINI:
            return engine.check_cassini(x, y, b_init, c_init, rng.randint(2, top))
        if identity is IdentityName.INDEX_REDUCTION:
            k = rng.randint(1, top)
            p = rng.randint(1, k)
            m = rng.choice([v for v in range(1, top + 1) if v != p])
            return engine.check_index_reduction(x, y, b_init, c_init, k, m, p)
        if identity is IdentityName.REDUCED_DOCAGNE:
            return engine.check_reduced_docagne(x, y, b_init, c_init, rng.randint(2, top))
        if identity is IdentityName.FOUR_PARAM:
            while True:
                k = rng.randint(1, top - 1)
                m = rng.randint(k + 1, top)
                q = rng.randint(1, top - 1)
                p = rng.randint(q, top)
                if m != 2 * k + q:
                    return engine.check_four_param(x, y, b_init, k, m, p, q)
        if identity is IdentityName.VAJDA:
            k = rng.randint(1, top)
            m = rng.choice([v for v in range(1, top + 1) if v != k])
            return engine.check_vajda(x, y, b_init, k, m, rng.randint(0, top))
        while True:
            n = rng.randint(2, top)
            r = rng.randint(1, n - 1)
            if n != 2 * r:
                return engine.check_catalan(x, y, n, r)
