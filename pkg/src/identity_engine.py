"""
행렬식 항등식 검증 엔진
일반화된 d'Ocagne 항등식과 그 특수화 (Cassini, 지수 축소, Vajda, Catalan 등) 를
정확 산술로 양변 계산 후 판정
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from .errors import IndexConstraint, InexactDivision, SingularInitialPair
from .exact_algebra import IntPoly, RingTag, RingValue, common_tag, power
from .recurrence_core import (Pair, RecurrenceSpec, VarCoeffSpec,
                              derived_shifted, generate, generate_var)

Witnesses = Dict[str, RingValue]
SidesEvaluator = Callable[[Mapping[str, RingValue]], Tuple[RingValue, RingValue]]


class IdentityName(str, Enum):
    """검증 가능한 항등식 (값은 CLI 이름)"""
    DOCAGNE = "docagne"
    VARIABLE_COEFFICIENT = "var-coeff"
    CASSINI = "cassini"
    INDEX_REDUCTION = "index-reduction"
    REDUCED_DOCAGNE = "reduced-docagne"
    FOUR_PARAM = "four-param"
    VAJDA = "vajda"
    CATALAN = "catalan"
    RECOVER_A = "recover-a"


class VProductConvention(str, Enum):
    """가변 계수 항등식의 v 곱 범위"""
    ZERO_BASED = "zero-based"  # v_0·v_1⋯v_{k-1}
    ONE_BASED = "one-based"    # v_1·v_2⋯v_k (반례 존재)


@dataclass(frozen=True)
class Det2:
    """2×2 행렬식 |a11 a12; a21 a22|"""
    a11: RingValue
    a12: RingValue
    a21: RingValue
    a22: RingValue

    @property
    def value(self) -> RingValue:
        return self.a11 * self.a22 - self.a12 * self.a21


@dataclass(frozen=True)
class IdentityReport:
    """항등식 한 건의 검증 결과"""
    identity: IdentityName
    params: Dict[str, int]
    lhs: RingValue
    rhs: RingValue
    holds: bool
    witnesses: Witnesses
    evaluator: Optional[SidesEvaluator] = field(default=None, repr=False, compare=False)

    def with_witnesses(self, overrides: Mapping[str, RingValue]) -> 'IdentityReport':
        """
        일부 증거 값을 바꿔 양변을 다시 계산 (변이 민감도 검사용)
        """
        if self.evaluator is None:
            raise ValueError(f"{self.identity.value} 보고서는 재계산할 수 없습니다")
        unknown = set(overrides) - set(self.witnesses)
        if unknown:
            raise KeyError(f"알 수 없는 증거 항목: {sorted(unknown)}")

        witnesses = {**self.witnesses, **overrides}
        lhs, rhs = self.evaluator(witnesses)
        return replace(self, witnesses=witnesses, lhs=lhs, rhs=rhs, holds=lhs == rhs)


def _det(w: Mapping[str, RingValue], a11: str, a12: str, a21: str, a22: str) -> RingValue:
    return Det2(w[a11], w[a12], w[a21], w[a22]).value


def _key(sequence: str, index: int) -> str:
    return f"{sequence}_{index}"


def _collect(witnesses: Witnesses, sequence: str, window, indices: Sequence[int]):
    for i in indices:
        witnesses[_key(sequence, i)] = window.term(i)


def _report(identity: IdentityName, params: Dict[str, int], witnesses: Witnesses,
            evaluator: SidesEvaluator) -> IdentityReport:
    lhs, rhs = evaluator(witnesses)
    return IdentityReport(identity, dict(params), lhs, rhs, lhs == rhs, witnesses, evaluator)


def _require(condition: bool, message: str):
    if not condition:
        raise IndexConstraint(message)


def _exact_quotient(numerator: RingValue, denominator: RingValue) -> RingValue:
    """
    나머지 검사를 포함한 정확 나눗셈

    Raises:
        InexactDivision: 나머지가 0이 아닌 경우
    """
    common_tag([numerator, denominator])
    if denominator.is_zero():
        raise SingularInitialPair("분모가 0입니다")

    if numerator.tag is RingTag.INTEGER:
        quotient, remainder = divmod(numerator.payload, denominator.payload)
        if remainder:
            raise InexactDivision(f"{numerator} 은 {denominator} 로 나누어떨어지지 않습니다")
        return RingValue.integer(quotient)

    # 정수 계수 다항식 긴 나눗셈 (각 단계의 최고차 계수 나눗셈도 정확해야 함)
    remainder = list(numerator.payload.coefficients)
    divisor = denominator.payload.coefficients
    lead = divisor[-1]
    quotient = [0] * max(len(remainder) - len(divisor) + 1, 0)
    for shift in range(len(quotient) - 1, -1, -1):
        top = remainder[shift + len(divisor) - 1]
        if top % lead:
            raise InexactDivision(f"{numerator} 은 {denominator} 로 나누어떨어지지 않습니다")
        factor = top // lead
        quotient[shift] = factor
        for i, d in enumerate(divisor):
            remainder[shift + i] -= factor * d
    if any(remainder):
        raise InexactDivision(f"{numerator} 은 {denominator} 로 나누어떨어지지 않습니다")
    return RingValue(RingTag.POLYNOMIAL, IntPoly(tuple(quotient), numerator.payload.variable))


class IdentityEngine:
    """2-행렬식 항등식 검증기"""

    def __init__(self, logger: logging.Logger = None):
        self.logger = logger or logging.getLogger(__name__)

    def _finish(self, report: IdentityReport) -> IdentityReport:
        if report.holds:
            self.logger.debug(f"항등식 성립: {report.identity.value} {report.params}")
        else:
            self.logger.warning(f"항등식 불성립: {report.identity.value} {report.params} "
                                f"lhs={report.lhs} rhs={report.rhs}")
        return report

    def check_docagne_general(self, x: RingValue, y: RingValue, b_init: Pair, c_init: Pair,
                              k: int, m: int) -> IdentityReport:
        """
        일반화된 d'Ocagne 항등식

        |b_k b_{k+m}; c_k c_{k+m}| = (-y)^k · a_m · |b_0 b_1; c_0 c_1|
        """
        _require(k >= 0 and m >= 0, f"k, m 은 0 이상이어야 합니다: k={k}, m={m}")

        top = k + m
        b = generate(RecurrenceSpec(x, y, b_init), max(top, 1))
        c = generate(RecurrenceSpec(x, y, c_init), max(top, 1))
        a = generate(RecurrenceSpec.canonical(x, y), max(m, 1))

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (0, 1, k, top))
        _collect(witnesses, 'c', c, (0, 1, k, top))
        _collect(witnesses, 'a', a, (m,))
        factor = power(-y, k)

        def sides(w):
            lhs = _det(w, _key('b', k), _key('b', top), _key('c', k), _key('c', top))
            rhs = factor * w[_key('a', m)] * _det(w, 'b_0', 'b_1', 'c_0', 'c_1')
            return lhs, rhs

        return self._finish(_report(IdentityName.DOCAGNE, {'k': k, 'm': m}, witnesses, sides))

    def check_variable_coefficient(self, spec: VarCoeffSpec, b_init: Pair, c_init: Pair,
                                   k: int, n: int,
                                   convention: VProductConvention = VProductConvention.ZERO_BASED
                                   ) -> IdentityReport:
        """
        가변 계수 항등식

        |b_k b_{n+2}; c_k c_{n+2}| = (-1)^k · (v_0⋯v_{k-1}) · a_{n-k+2} · |b_0 b_1; c_0 c_1|
        a 는 derived_shifted(spec, k) 보조 수열
        """
        _require(0 <= k <= n + 2 and n >= 0, f"0 ≤ k ≤ n+2 이어야 합니다: k={k}, n={n}")

        top = n + 2
        b = generate_var(spec.with_init(b_init), top)
        c = generate_var(spec.with_init(c_init), top)
        a = derived_shifted(spec, k, top - k + 1)

        if convention is VProductConvention.ZERO_BASED:
            v_indices = range(0, k)
        else:
            v_indices = range(1, k + 1)
        v_product = b_init[0].one_like()
        for j in v_indices:
            v_product = v_product * spec.v_at(j)
        factor = v_product if k % 2 == 0 else -v_product

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (0, 1, k, top))
        _collect(witnesses, 'c', c, (0, 1, k, top))
        _collect(witnesses, 'a', a, (top - k,))

        def sides(w):
            lhs = _det(w, _key('b', k), _key('b', top), _key('c', k), _key('c', top))
            rhs = factor * w[_key('a', top - k)] * _det(w, 'b_0', 'b_1', 'c_0', 'c_1')
            return lhs, rhs

        return self._finish(_report(IdentityName.VARIABLE_COEFFICIENT, {'k': k, 'n': n},
                                    witnesses, sides))

    def check_cassini(self, x: RingValue, y: RingValue, b_init: Pair, c_init: Pair,
                      k: int) -> IdentityReport:
        """Cassini 형 항등식: |b_k b_{k+1}; c_k c_{k+1}| = (-y)^k · |b_0 b_1; c_0 c_1|"""
        _require(k >= 0, f"k 는 0 이상이어야 합니다: k={k}")

        b = generate(RecurrenceSpec(x, y, b_init), k + 1)
        c = generate(RecurrenceSpec(x, y, c_init), k + 1)

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (0, 1, k, k + 1))
        _collect(witnesses, 'c', c, (0, 1, k, k + 1))
        factor = power(-y, k)

        def sides(w):
            lhs = _det(w, _key('b', k), _key('b', k + 1), _key('c', k), _key('c', k + 1))
            rhs = factor * _det(w, 'b_0', 'b_1', 'c_0', 'c_1')
            return lhs, rhs

        return self._finish(_report(IdentityName.CASSINI, {'k': k}, witnesses, sides))

    def check_index_reduction(self, x: RingValue, y: RingValue, b_init: Pair, c_init: Pair,
                              k: int, m: int, p: int) -> IdentityReport:
        """지수 축소: |b_k b_{k+m}; c_k c_{k+m}| = (-y)^p · |b_{k-p} b_{k-p+m}; c_{k-p} c_{k-p+m}|"""
        _require(m >= 0, f"m 은 0 이상이어야 합니다: m={m}")
        _require(k >= p >= 0, f"k ≥ p ≥ 0 이어야 합니다: k={k}, p={p}")

        top = k + m
        low = k - p
        b = generate(RecurrenceSpec(x, y, b_init), max(top, 1))
        c = generate(RecurrenceSpec(x, y, c_init), max(top, 1))

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (k, top, low, low + m))
        _collect(witnesses, 'c', c, (k, top, low, low + m))
        factor = power(-y, p)

        def sides(w):
            lhs = _det(w, _key('b', k), _key('b', top), _key('c', k), _key('c', top))
            rhs = factor * _det(w, _key('b', low), _key('b', low + m),
                                _key('c', low), _key('c', low + m))
            return lhs, rhs

        return self._finish(_report(IdentityName.INDEX_REDUCTION, {'k': k, 'm': m, 'p': p},
                                    witnesses, sides))

    def check_reduced_docagne(self, x: RingValue, y: RingValue, b_init: Pair, c_init: Pair,
                              m: int) -> IdentityReport:
        """축소 d'Ocagne: a_m · |b_0 b_1; c_0 c_1| = |b_0 b_m; c_0 c_m|"""
        _require(m >= 0, f"m 은 0 이상이어야 합니다: m={m}")

        b = generate(RecurrenceSpec(x, y, b_init), max(m, 1))
        c = generate(RecurrenceSpec(x, y, c_init), max(m, 1))
        a = generate(RecurrenceSpec.canonical(x, y), max(m, 1))

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (0, 1, m))
        _collect(witnesses, 'c', c, (0, 1, m))
        _collect(witnesses, 'a', a, (m,))

        def sides(w):
            lhs = w[_key('a', m)] * _det(w, 'b_0', 'b_1', 'c_0', 'c_1')
            rhs = _det(w, 'b_0', _key('b', m), 'c_0', _key('c', m))
            return lhs, rhs

        return self._finish(_report(IdentityName.REDUCED_DOCAGNE, {'m': m}, witnesses, sides))

    def check_four_param(self, x: RingValue, y: RingValue, b_init: Pair,
                         k: int, m: int, p: int, q: int) -> IdentityReport:
        """4-매개변수 정리: |b_{k+p} b_{m+p}; a_{k+q} a_{m+q}| = (-y)^{k+q} · a_{m-k} · b_{p-q}"""
        _require(m >= k >= 0, f"m ≥ k ≥ 0 이어야 합니다: k={k}, m={m}")
        _require(p >= q >= 0, f"p ≥ q ≥ 0 이어야 합니다: p={p}, q={q}")

        b = generate(RecurrenceSpec(x, y, b_init), max(m + p, 1))
        a = generate(RecurrenceSpec.canonical(x, y), max(m + q, 1))

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (k + p, m + p, p - q))
        _collect(witnesses, 'a', a, (k + q, m + q, m - k))
        factor = power(-y, k + q)

        def sides(w):
            lhs = _det(w, _key('b', k + p), _key('b', m + p), _key('a', k + q), _key('a', m + q))
            rhs = factor * w[_key('a', m - k)] * w[_key('b', p - q)]
            return lhs, rhs

        return self._finish(_report(IdentityName.FOUR_PARAM,
                                    {'k': k, 'm': m, 'p': p, 'q': q}, witnesses, sides))

    def check_vajda(self, x: RingValue, y: RingValue, b_init: Pair,
                    k: int, m: int, p: int) -> IdentityReport:
        """Vajda 형 항등식: |b_{k+p} b_{k+m+p}; a_k a_{k+m}| = (-y)^k · a_m · b_p"""
        _require(k >= 0 and m >= 0 and p >= 0,
                 f"k, m, p 는 0 이상이어야 합니다: k={k}, m={m}, p={p}")

        b = generate(RecurrenceSpec(x, y, b_init), max(k + m + p, 1))
        a = generate(RecurrenceSpec.canonical(x, y), max(k + m, 1))

        witnesses: Witnesses = {}
        _collect(witnesses, 'b', b, (k + p, k + m + p, p))
        _collect(witnesses, 'a', a, (k, k + m, m))
        factor = power(-y, k)

        def sides(w):
            lhs = _det(w, _key('b', k + p), _key('b', k + m + p), _key('a', k), _key('a', k + m))
            rhs = factor * w[_key('a', m)] * w[_key('b', p)]
            return lhs, rhs

        return self._finish(_report(IdentityName.VAJDA, {'k': k, 'm': m, 'p': p},
                                    witnesses, sides))

    def check_catalan(self, x: RingValue, y: RingValue, n: int, r: int) -> IdentityReport:
        """Catalan 형 항등식: a_n² − a_{n-r}·a_{n+r} = (-y)^{n-r} · a_r²"""
        _require(n >= r >= 0, f"n ≥ r ≥ 0 이어야 합니다: n={n}, r={r}")

        a = generate(RecurrenceSpec.canonical(x, y), max(n + r, 1))

        witnesses: Witnesses = {}
        _collect(witnesses, 'a', a, (n, n - r, n + r, r))
        factor = power(-y, n - r)

        def sides(w):
            lhs = _det(w, _key('a', n), _key('a', n + r), _key('a', n - r), _key('a', n))
            rhs = factor * w[_key('a', r)] * w[_key('a', r)]
            return lhs, rhs

        return self._finish(_report(IdentityName.CATALAN, {'n': n, 'r': r}, witnesses, sides))

    def recover_a(self, x: RingValue, y: RingValue, b_window: Sequence[RingValue],
                  c_window: Sequence[RingValue], k: int, m: int) -> RingValue:
        """
        두 수열 윈도우로부터 a_m 복원

        a_m = |b_k b_{k+m}; c_k c_{k+m}| / ((-y)^k · |b_0 b_1; c_0 c_1|)

        Raises:
            SingularInitialPair: 초기 행렬식이 0
            InexactDivision: 윈도우가 같은 점화식의 해가 아님
        """
        _require(k >= 0 and m >= 0, f"k, m 은 0 이상이어야 합니다: k={k}, m={m}")
        needed = max(k + m, 1) + 1
        _require(len(b_window) >= needed and len(c_window) >= needed,
                 f"윈도우 길이 {needed} 이상이 필요합니다")
        common_tag([x, y, *b_window, *c_window])

        initial = Det2(b_window[0], b_window[1], c_window[0], c_window[1]).value
        if initial.is_zero():
            raise SingularInitialPair("초기 행렬식 b_0·c_1 − b_1·c_0 이 0입니다")

        numerator = Det2(b_window[k], b_window[k + m], c_window[k], c_window[k + m]).value
        recovered = _exact_quotient(numerator, power(-y, k) * initial)
        self.logger.debug(f"a_{m} 복원: {numerator} / ((-y)^{k}·{initial}) = {recovered}")
        return recovered

    def check_recover_a(self, x: RingValue, y: RingValue, b_window: Sequence[RingValue],
                        c_window: Sequence[RingValue], k: int, m: int) -> IdentityReport:
        """복원한 a_m 과 점화식 값 비교"""
        recovered = self.recover_a(x, y, b_window, c_window, k, m)
        expected = generate(RecurrenceSpec.canonical(x, y), max(m, 1)).term(m)
        witnesses: Witnesses = {f"b_{i}": v for i, v in enumerate(b_window)}
        witnesses.update({f"c_{i}": v for i, v in enumerate(c_window)})
        report = IdentityReport(IdentityName.RECOVER_A, {'k': k, 'm': m}, recovered, expected,
                                recovered == expected, witnesses)
        return self._finish(report)
