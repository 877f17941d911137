"""
프리셋 카탈로그
고전 수열(피보나치, 뤼카, 펠, 야콥스탈, 메르센, 체비셰프 등)을 점화식/단어 모델/
항등식 바인딩에 연결하고 교차 검증 수행
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .errors import UnknownPreset
from .exact_algebra import RingValue, binomial, evaluate
from .identity_engine import IdentityEngine, IdentityName, IdentityReport
from .logger_config import ProgressReporter
from .recurrence_core import (Pair, RecurrenceSpec, VarCoeffSpec, explicit_from_init,
                              explicit_term, generate)
from .word_models import (WordConstraint, constraint_from_params, count_colored_tilings,
                          count_sequence)


class PresetId(str, Enum):
    """프리셋 식별자 (CLI 에서 쓰는 고정 문자열)"""
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    FIBONACCI_POLY = "fibonacci_poly"
    PELL = "pell"
    JACOBSTHAL = "jacobsthal"
    TWO_COLOR_TILING = "two_color_tiling"
    NONNEG_INTEGERS = "nonneg_integers"
    FIB_BISECTION = "fib_bisection"
    MERSENNE = "mersenne"
    Q3_HALVED = "q3_halved"
    CHEBYSHEV_U = "chebyshev_U"
    CHEBYSHEV_T = "chebyshev_T"


@dataclass(frozen=True)
class WordModel:
    """
    단어/타일링 해석

    eval_point 가 있으면 다항식 프리셋을 그 점에서 평가한 정수 수열에 적용
    """
    constraint: Optional[WordConstraint] = None
    tiling: Optional[Tuple[int, int]] = None
    eval_point: Optional[int] = None


@dataclass(frozen=True)
class ClosedForm:
    """닫힌 형태 검증 (곱셈-비교로 나눗셈 없음)"""
    description: str
    check: Callable[[int, RingValue], bool] = field(compare=False, repr=False)


@dataclass(frozen=True)
class Preset:
    """카탈로그 프리셋"""
    id: PresetId
    x: RingValue
    y: RingValue
    init: Pair
    reference_values: Tuple[RingValue, ...]
    word_model: Optional[WordModel] = None
    closed_form: Optional[ClosedForm] = None
    note: str = ""

    @property
    def spec(self) -> RecurrenceSpec:
        return RecurrenceSpec(self.x, self.y, self.init)

    @property
    def tag(self):
        return self.x.tag

    def term(self, n: int) -> RingValue:
        return generate(self.spec, max(n, 1)).term(n)


def _int(value: int) -> RingValue:
    return RingValue.integer(value)


def _ints(*values: int) -> Tuple[RingValue, ...]:
    return tuple(RingValue.integer(v) for v in values)


def _poly(*coefficients: int) -> RingValue:
    return RingValue.polynomial(coefficients)


def _polys(*coefficient_lists: Tuple[int, ...]) -> Tuple[RingValue, ...]:
    return tuple(RingValue.polynomial(c) for c in coefficient_lists)


def _fibonacci(n: int) -> int:
    return _PRESETS[PresetId.FIBONACCI].term(n).payload


def _lucas_closed(n: int, value: RingValue) -> bool:
    if n == 0:
        return value.payload == 2
    return value.payload == _fibonacci(n - 1) + _fibonacci(n + 1)


def _chebyshev_t_closed(n: int, value: RingValue) -> bool:
    u = _PRESETS[PresetId.CHEBYSHEV_U]
    return value == u.term(n + 1) - _poly(0, 1) * u.term(n)


_PRESETS: Dict[PresetId, Preset] = {}


def _register(preset: Preset):
    _PRESETS[preset.id] = preset


_register(Preset(
    id=PresetId.FIBONACCI, x=_int(1), y=_int(1), init=_ints(0, 1),
    reference_values=_ints(0, 1, 1, 2, 3, 5, 8, 13),
    word_model=WordModel(constraint=constraint_from_params(1, 1)),
    note="a_n = F_n. 관용 표기 a_{n+1} = F_n 과 달리 (0,1) 초기값의 점화식 값은 a_n = F_n. "
         "길이 n 의 이진 단어(0 의 런이 짝수) 수 = a_{n+1}.",
))

_register(Preset(
    id=PresetId.LUCAS, x=_int(1), y=_int(1), init=_ints(2, 1),
    reference_values=_ints(2, 1, 3, 4, 7, 11, 18, 29),
    closed_form=ClosedForm("L_n = F_{n-1} + F_{n+1} (n ≥ 1), L_0 = 2", _lucas_closed),
    note="L_0 = 2, L_1 = 1.",
))

_register(Preset(
    id=PresetId.FIBONACCI_POLY, x=_poly(0, 1), y=_poly(1), init=(_poly(), _poly(1)),
    reference_values=_polys((), (1,), (0, 1), (1, 0, 1), (0, 2, 0, 1), (1, 0, 3, 0, 1),
                            (0, 3, 0, 4, 0, 1), (1, 0, 6, 0, 5, 0, 1)),
    word_model=WordModel(constraint=constraint_from_params(3, 1), eval_point=3),
    note="a_n = F_n(x) (F_1 = 1, F_2 = x). 관용 표기는 a_{n+1} = F_n(x). "
         "x 에 정수 t 대입 시 단어 수는 알파벳 크기 t+1 ('x 개 문자' 라는 서술과 달리 값으로 확정).",
))

_register(Preset(
    id=PresetId.PELL, x=_int(2), y=_int(1), init=_ints(0, 1),
    reference_values=_ints(0, 1, 2, 5, 12, 29, 70, 169),
    word_model=WordModel(constraint=constraint_from_params(2, 1)),
    note="a_n = P_n. 삼진 단어(0 의 런이 짝수) 길이 n 의 수 = a_{n+1}.",
))

_register(Preset(
    id=PresetId.JACOBSTHAL, x=_int(1), y=_int(2), init=_ints(0, 1),
    reference_values=_ints(0, 1, 1, 3, 5, 11, 21, 43),
    word_model=WordModel(constraint=constraint_from_params(1, 2)),
    closed_form=ClosedForm("3·J_n = 2^n − (−1)^n",
                           lambda n, v: 3 * v.payload == 2 ** n - (-1) ** n),
    note="a_n = J_n. 흔히 인쇄되는 C(n−k−1, k−1) 형태는 수치상 틀림 (printed_jacobsthal_term 참고); "
         "일반식 C(n−k−1, k) 로 검증.",
))

_register(Preset(
    id=PresetId.TWO_COLOR_TILING, x=_int(2), y=_int(2), init=_ints(0, 1),
    reference_values=_ints(0, 1, 2, 6, 16, 44, 120, 328),
    word_model=WordModel(constraint=constraint_from_params(2, 2), tiling=(2, 2)),
    note="길이 n 판의 2색 타일링 수 = a_{n+1}.",
))

_register(Preset(
    id=PresetId.NONNEG_INTEGERS, x=_int(2), y=_int(-1), init=_ints(0, 1),
    reference_values=_ints(0, 1, 2, 3, 4, 5, 6, 7),
    word_model=WordModel(constraint=constraint_from_params(2, -1)),
    closed_form=ClosedForm("a_n = n", lambda n, v: v.payload == n),
    note="01 을 피하는 길이 n 이진 단어 수 = a_{n+1} = n+1.",
))

_register(Preset(
    id=PresetId.FIB_BISECTION, x=_int(3), y=_int(-1), init=_ints(0, 1),
    reference_values=_ints(0, 1, 3, 8, 21, 55, 144, 377),
    word_model=WordModel(constraint=constraint_from_params(3, -1)),
    closed_form=ClosedForm("a_n = F_{2n}", lambda n, v: v.payload == _fibonacci(2 * n)),
    note="a_n = F_{2n} (a_2 = 3 = F_4). 관용 표기는 a_{n+1} = F_{2n}.",
))

_register(Preset(
    id=PresetId.MERSENNE, x=_int(3), y=_int(-2), init=_ints(0, 1),
    reference_values=_ints(0, 1, 3, 7, 15, 31, 63, 127),
    word_model=WordModel(constraint=constraint_from_params(3, -2)),
    closed_form=ClosedForm("a_n = 2^n − 1", lambda n, v: v.payload == 2 ** n - 1),
    note="01, 02 를 피하는 길이 n 삼진 단어 수 = 2^{n+1} − 1 = a_{n+1}.",
))

_register(Preset(
    id=PresetId.Q3_HALVED, x=_int(4), y=_int(-3), init=_ints(0, 1),
    reference_values=_ints(0, 1, 4, 13, 40, 121, 364, 1093),
    word_model=WordModel(constraint=constraint_from_params(4, -3)),
    closed_form=ClosedForm("2·a_n = 3^n − 1", lambda n, v: 2 * v.payload == 3 ** n - 1),
    note="01, 02, 03 을 피하는 길이 n 사진 단어 수 = a_{n+1}.",
))

_register(Preset(
    id=PresetId.CHEBYSHEV_U, x=_poly(0, 2), y=_poly(-1), init=(_poly(), _poly(1)),
    reference_values=_polys((), (1,), (0, 2), (-1, 0, 4), (0, -4, 0, 8), (1, 0, -12, 0, 16),
                            (0, 6, 0, -32, 0, 32), (-1, 0, 24, 0, -80, 0, 64)),
    word_model=WordModel(constraint=constraint_from_params(4, -1), eval_point=2),
    note="a_n = U_{n-1}(z) (표준 U_0 = 1 기준). 관용 표기는 a_n = U_n(z). "
         "z = 2 에서 01 을 피하는 길이 n 사진 단어 수 = a_{n+1}.",
))

_register(Preset(
    id=PresetId.CHEBYSHEV_T, x=_poly(0, 2), y=_poly(-1), init=(_poly(1), _poly(0, 1)),
    reference_values=_polys((1,), (0, 1), (-1, 0, 2), (0, -3, 0, 4), (1, 0, -8, 0, 8),
                            (0, 5, 0, -20, 0, 16), (-1, 0, 18, 0, -48, 0, 32),
                            (0, -7, 0, 56, 0, -112, 0, 64)),
    closed_form=ClosedForm("T_n = a_{n+1} − z·a_n (a = chebyshev_U)", _chebyshev_t_closed),
    note="T_0 = 1, T_1 = z (표준 초기값).",
))


def get_preset(preset_id: Union[str, PresetId]) -> Preset:
    """
    프리셋 조회

    Raises:
        UnknownPreset: 없는 id
    """
    try:
        return _PRESETS[PresetId(preset_id)]
    except ValueError:
        known = ", ".join(p.value for p in PresetId)
        raise UnknownPreset(f"알 수 없는 프리셋: {preset_id} (가능: {known})") from None


def list_presets() -> List[Preset]:
    return [_PRESETS[p] for p in PresetId]


def printed_jacobsthal_term(n: int) -> int:
    """인쇄된 변형 Σ 2^k·C(n−k−1, k−1) (J_n 과 다름; 오식 확인용)"""
    if n <= 0:
        return 0
    return sum(2 ** k * binomial(n - k - 1, k - 1) for k in range((n - 1) // 2 + 1))


@dataclass(frozen=True)
class CrossCheckRow:
    """교차 검증 한 행 (인덱스 n)"""
    preset: PresetId
    n: int
    recurrence: RingValue
    explicit: RingValue
    word_count: Optional[int] = None
    tiling_count: Optional[int] = None
    closed_form: Optional[bool] = None

    @property
    def word_target(self) -> RingValue:
        """단어 수와 비교할 정수 값"""
        preset = _PRESETS[self.preset]
        point = preset.word_model.eval_point if preset.word_model else None
        return evaluate(self.recurrence, point) if point is not None else self.recurrence

    @property
    def agree(self) -> bool:
        if self.explicit != self.recurrence:
            return False
        target = self.word_target.payload
        if self.word_count is not None and self.word_count != target:
            return False
        if self.tiling_count is not None and self.tiling_count != target:
            return False
        return self.closed_form is not False


@dataclass(frozen=True)
class IdentityBinding:
    """카탈로그 프리셋에 묶인 항등식과 매개변수 범위"""
    name: str
    presets: Tuple[PresetId, ...]
    identity: IdentityName
    expected: str
    max_index: int
    grid: Callable[[int], Iterable[Dict[str, int]]] = field(repr=False)
    invoke: Callable[[IdentityEngine, Dict[str, int]], IdentityReport] = field(repr=False)
    named_check: Callable[[IdentityReport], bool] = field(repr=False)


@dataclass(frozen=True)
class BindingOutcome:
    """바인딩 한 건의 결과: 엔진 보고서와 고전 형태 검사 결과를 따로 보관"""
    binding: str
    report: IdentityReport
    named_ok: bool

    @property
    def ok(self) -> bool:
        return self.report.holds and self.named_ok


def _triples(limit: int) -> Iterator[Dict[str, int]]:
    for k in range(limit + 1):
        for m in range(limit + 1):
            for p in range(limit + 1):
                yield {'k': k, 'm': m, 'p': p}


def _reduced_grid(limit: int) -> Iterator[Dict[str, int]]:
    for m in range(limit + 1):
        for p in range(limit + 1):
            for q in range(limit + 1):
                yield {'m': m, 'p': p, 'q': q}


def _catalan_grid(limit: int) -> Iterator[Dict[str, int]]:
    for n in range(limit + 1):
        for r in range(n + 1):
            yield {'n': n, 'r': r}


def _squares_grid(limit: int) -> Iterator[Dict[str, int]]:
    for m in range(limit + 1):
        for k in range(m + 1):
            yield {'k': k, 'm': m}


def _single(name: str) -> Callable[[int], Iterator[Dict[str, int]]]:
    return lambda limit: ({name: i} for i in range(limit + 1))


def _pairs(limit: int) -> Iterator[Dict[str, int]]:
    for k in range(limit + 1):
        for m in range(limit + 1):
            yield {'k': k, 'm': m}


def _var_coeff_grid(limit: int) -> Iterator[Dict[str, int]]:
    for n in range(limit + 1):
        for k in range(n + 3):
            yield {'n': n, 'k': k}


def _term(preset_id: PresetId, n: int) -> RingValue:
    return _PRESETS[preset_id].term(n)


def _shifted_pair(preset_id: PresetId, start: int) -> Pair:
    return (_term(preset_id, start), _term(preset_id, start + 1))


def _reduced_named(preset_id: PresetId) -> Callable[[IdentityReport], bool]:
    def check(report: IdentityReport) -> bool:
        m, p, q = report.params['m'], report.params['p'], report.params['q']
        t = lambda n: _term(preset_id, n)
        lhs = t(m) * (t(p) * t(q + 1) - t(p + 1) * t(q))
        rhs = t(p) * t(m + q) - t(m + p) * t(q)
        return report.lhs == lhs and report.rhs == rhs
    return check


def _build_bindings() -> List[IdentityBinding]:
    fib = _PRESETS[PresetId.FIBONACCI]
    lucas = _PRESETS[PresetId.LUCAS]
    jac = _PRESETS[PresetId.JACOBSTHAL]
    pell = _PRESETS[PresetId.PELL]
    mersenne = _PRESETS[PresetId.MERSENNE]
    integers = _PRESETS[PresetId.NONNEG_INTEGERS]
    cheb_u = _PRESETS[PresetId.CHEBYSHEV_U]
    cheb_t = _PRESETS[PresetId.CHEBYSHEV_T]
    F = lambda n: _term(PresetId.FIBONACCI, n).payload
    L = lambda n: _term(PresetId.LUCAS, n).payload
    J = lambda n: _term(PresetId.JACOBSTHAL, n).payload
    P = lambda n: _term(PresetId.PELL, n).payload
    U = lambda n: _term(PresetId.CHEBYSHEV_U, n)

    def mersenne_named(report: IdentityReport) -> bool:
        k, m, p = report.params['k'], report.params['m'], report.params['p']
        lhs = (2 ** (k + p) - 1) * (2 ** (k + m) - 1) - (2 ** (k + m + p) - 1) * (2 ** k - 1)
        return (report.lhs.payload == lhs
                and report.rhs.payload == 2 ** k * (2 ** m - 1) * (2 ** p - 1))

    def integers_named(report: IdentityReport) -> bool:
        k, m, p = report.params['k'], report.params['m'], report.params['p']
        return (report.lhs.payload == (k + p) * (k + m) - (k + m + p) * k
                and report.rhs.payload == m * p)

    def squares_difference(report: IdentityReport) -> bool:
        k, m = report.params['k'], report.params['m']
        return (report.lhs.payload == F(k + m) ** 2 - F(2 * k) * F(2 * m)
                and report.rhs.payload == F(m - k) ** 2)

    def squares_sum(report: IdentityReport) -> bool:
        k, m = report.params['k'], report.params['m']
        return (report.lhs.payload == F(k + m + 1) ** 2 - F(2 * k + 1) * F(2 * m + 1)
                and report.rhs.payload == -F(m - k) ** 2)

    return [
        IdentityBinding(
            "fibonacci-docagne", (PresetId.FIBONACCI,), IdentityName.DOCAGNE,
            "F_{k+1}·F_{k+m} − F_{k+m+1}·F_k = (−1)^k·F_m", 50, _pairs,
            lambda e, p: e.check_docagne_general(fib.x, fib.y, _ints(1, 1), _ints(0, 1), **p),
            lambda r: r.rhs.payload == (-1) ** r.params['k'] * F(r.params['m'])),
        IdentityBinding(
            "fibonacci-cassini", (PresetId.FIBONACCI,), IdentityName.CASSINI,
            "F_{k+1}² − F_{k+2}·F_k = (−1)^k", 100, _single('k'),
            lambda e, p: e.check_cassini(fib.x, fib.y, _ints(1, 1), _ints(0, 1), **p),
            lambda r: r.rhs.payload == (-1) ** r.params['k']),
        IdentityBinding(
            "lucas-fibonacci-cassini", (PresetId.LUCAS, PresetId.FIBONACCI), IdentityName.CASSINI,
            "L_k·F_{k+1} − L_{k+1}·F_k = 2·(−1)^k", 100, _single('k'),
            lambda e, p: e.check_cassini(lucas.x, lucas.y, lucas.init, fib.init, **p),
            lambda r: r.rhs.payload == 2 * (-1) ** r.params['k']),
        IdentityBinding(
            "jacobsthal-cassini", (PresetId.JACOBSTHAL,), IdentityName.CASSINI,
            "J_{k+1}² − J_k·J_{k+2} = (−2)^k", 60, _single('k'),
            lambda e, p: e.check_cassini(jac.x, jac.y, _shifted_pair(PresetId.JACOBSTHAL, 1),
                                         jac.init, **p),
            lambda r: r.rhs.payload == (-2) ** r.params['k']),
        IdentityBinding(
            "chebyshev-t-cassini", (PresetId.CHEBYSHEV_T,), IdentityName.CASSINI,
            "T_{k+1}² − T_k·T_{k+2} = 1 − z²", 20, _single('k'),
            lambda e, p: e.check_cassini(cheb_t.x, cheb_t.y, _shifted_pair(PresetId.CHEBYSHEV_T, 1),
                                         cheb_t.init, **p),
            lambda r: r.rhs == _poly(1, 0, -1)),
        IdentityBinding(
            "fibonacci-reduced-docagne", (PresetId.FIBONACCI,), IdentityName.REDUCED_DOCAGNE,
            "F_m·|F_p F_{p+1}; F_q F_{q+1}| = |F_p F_{m+p}; F_q F_{m+q}|", 15, _reduced_grid,
            lambda e, p: e.check_reduced_docagne(fib.x, fib.y,
                                                 _shifted_pair(PresetId.FIBONACCI, p['p']),
                                                 _shifted_pair(PresetId.FIBONACCI, p['q']), p['m']),
            _reduced_named(PresetId.FIBONACCI)),
        IdentityBinding(
            "chebyshev-u-reduced-docagne", (PresetId.CHEBYSHEV_U,), IdentityName.REDUCED_DOCAGNE,
            "U_m·|U_p U_{p+1}; U_q U_{q+1}| = |U_p U_{m+p}; U_q U_{m+q}|", 8, _reduced_grid,
            lambda e, p: e.check_reduced_docagne(cheb_u.x, cheb_u.y,
                                                 _shifted_pair(PresetId.CHEBYSHEV_U, p['p']),
                                                 _shifted_pair(PresetId.CHEBYSHEV_U, p['q']), p['m']),
            _reduced_named(PresetId.CHEBYSHEV_U)),
        IdentityBinding(
            "fibonacci-vajda", (PresetId.FIBONACCI,), IdentityName.VAJDA,
            "|F_{k+p} F_{k+m+p}; F_k F_{k+m}| = (−1)^k·F_m·F_p", 20, _triples,
            lambda e, p: e.check_vajda(fib.x, fib.y, fib.init, **p),
            lambda r: r.rhs.payload == (-1) ** r.params['k'] * F(r.params['m']) * F(r.params['p'])),
        IdentityBinding(
            "lucas-fibonacci-vajda", (PresetId.LUCAS, PresetId.FIBONACCI), IdentityName.VAJDA,
            "|L_{k+p} L_{k+m+p}; F_k F_{k+m}| = (−1)^k·F_m·L_p", 20, _triples,
            lambda e, p: e.check_vajda(lucas.x, lucas.y, lucas.init, **p),
            lambda r: r.rhs.payload == (-1) ** r.params['k'] * F(r.params['m']) * L(r.params['p'])),
        IdentityBinding(
            "mersenne-vajda", (PresetId.MERSENNE,), IdentityName.VAJDA,
            "|2^{k+p}−1 2^{k+m+p}−1; 2^k−1 2^{k+m}−1| = 2^k·(2^m−1)·(2^p−1)", 20, _triples,
            lambda e, p: e.check_vajda(mersenne.x, mersenne.y, mersenne.init, **p),
            mersenne_named),
        IdentityBinding(
            "integers-vajda", (PresetId.NONNEG_INTEGERS,), IdentityName.VAJDA,
            "|k+p k+m+p; k k+m| = m·p", 30, _triples,
            lambda e, p: e.check_vajda(integers.x, integers.y, integers.init, **p),
            integers_named),
        IdentityBinding(
            "jacobsthal-catalan", (PresetId.JACOBSTHAL,), IdentityName.CATALAN,
            "J_n² − J_{n−r}·J_{n+r} = (−2)^{n−r}·J_r²", 50, _catalan_grid,
            lambda e, p: e.check_catalan(jac.x, jac.y, **p),
            lambda r: r.rhs.payload == (-2) ** (r.params['n'] - r.params['r']) * J(r.params['r']) ** 2),
        IdentityBinding(
            "pell-catalan", (PresetId.PELL,), IdentityName.CATALAN,
            "P_n² − P_{n−r}·P_{n+r} = (−1)^{n−r}·P_r²", 50, _catalan_grid,
            lambda e, p: e.check_catalan(pell.x, pell.y, **p),
            lambda r: r.rhs.payload == (-1) ** (r.params['n'] - r.params['r']) * P(r.params['r']) ** 2),
        IdentityBinding(
            "chebyshev-u-catalan", (PresetId.CHEBYSHEV_U,), IdentityName.CATALAN,
            "U_n² − U_{n−r}·U_{n+r} = U_r² (−y = 1)", 25, _catalan_grid,
            lambda e, p: e.check_catalan(cheb_u.x, cheb_u.y, **p),
            lambda r: r.rhs == U(r.params['r']) * U(r.params['r'])),
        IdentityBinding(
            "fibonacci-squares-difference", (PresetId.FIBONACCI,), IdentityName.FOUR_PARAM,
            "F_{k+m}² − F_{m−k}² = F_{2k}·F_{2m}", 50, _squares_grid,
            lambda e, p: e.check_four_param(fib.x, fib.y, fib.init, p['k'], p['m'], p['m'], p['k']),
            squares_difference),
        IdentityBinding(
            "fibonacci-squares-sum", (PresetId.FIBONACCI,), IdentityName.FOUR_PARAM,
            "F_{k+m+1}² + F_{m−k}² = F_{2k+1}·F_{2m+1}", 50, _squares_grid,
            lambda e, p: e.check_four_param(fib.x, fib.y, fib.init,
                                            p['k'], p['m'], p['m'] + 1, p['k'] + 1),
            squares_sum),
        IdentityBinding(
            "fibonacci-constant-var-coeff", (PresetId.FIBONACCI,), IdentityName.VARIABLE_COEFFICIENT,
            "u_n = v_n = 1: |b_k b_{n+2}; c_k c_{n+2}| = (−1)^k·F_{n+2−k}", 30, _var_coeff_grid,
            lambda e, p: e.check_variable_coefficient(
                VarCoeffSpec.constant(fib.x, fib.y, p['n'] + 3), _ints(1, 1), _ints(0, 1), **p),
            lambda r: r.rhs.payload == (-1) ** r.params['k'] * F(r.params['n'] + 2 - r.params['k'])),
    ]


_BINDINGS: List[IdentityBinding] = _build_bindings()


def list_bindings(preset_id: Optional[Union[str, PresetId]] = None) -> List[IdentityBinding]:
    """프리셋에 연결된 바인딩 (None 이면 전체)"""
    if preset_id is None:
        return list(_BINDINGS)
    preset = get_preset(preset_id)
    return [b for b in _BINDINGS if preset.id in b.presets]


class CatalogChecker:
    """프리셋 교차 검증 및 항등식 바인딩 실행"""

    def __init__(self, logger: logging.Logger = None):
        self.logger = logger or logging.getLogger(__name__)
        self.engine = IdentityEngine(self.logger)
        self.progress = ProgressReporter(self.logger)

    def crosscheck(self, preset_id: Union[str, PresetId], n_max: int) -> List[CrossCheckRow]:
        """
        점화식 / 명시적 공식 / 단어·타일링 수 / 닫힌 형태 비교

        Args:
            preset_id: 프리셋 id
            n_max: 마지막 인덱스 (2 이상)

        Returns:
            인덱스별 비교 행
        """
        if n_max < 2:
            raise ValueError(f"n_max 는 2 이상이어야 합니다: {n_max}")

        preset = get_preset(preset_id)
        window = generate(preset.spec, n_max)
        model = preset.word_model
        canonical = preset.init == (preset.x.zero_like(), preset.x.one_like())

        word_counts = None
        if model and model.constraint is not None:
            word_counts = count_sequence(model.constraint, n_max - 1)

        rows = []
        for n in range(n_max + 1):
            if canonical:
                explicit = explicit_term(preset.x, preset.y, n)
            else:
                explicit = explicit_from_init(preset.x, preset.y, preset.init, n)

            word_count = word_counts[n - 1] if word_counts is not None and n >= 1 else None
            tiling_count = None
            if model and model.tiling is not None and n >= 1:
                tiling_count = count_colored_tilings(n - 1, *model.tiling)

            closed = None
            if preset.closed_form is not None:
                closed = preset.closed_form.check(n, window.term(n))

            rows.append(CrossCheckRow(preset.id, n, window.term(n), explicit,
                                      word_count, tiling_count, closed))

        disagreements = [row.n for row in rows if not row.agree]
        if disagreements:
            self.logger.error(f"교차 검증 불일치: {preset.id.value} n={disagreements}")
        self.progress.report_crosscheck_progress(preset.id.value, len(rows), len(disagreements))
        return rows

    def check_binding(self, binding: IdentityBinding,
                      max_index: Optional[int] = None) -> List[BindingOutcome]:
        """바인딩 하나를 범위 전체에서 실행 (보고서의 holds 는 lhs == rhs 그대로)"""
        limit = binding.max_index if max_index is None else max_index
        outcomes: List[BindingOutcome] = []
        for params in binding.grid(limit):
            report = binding.invoke(self.engine, params)
            named_ok = binding.named_check(report)
            if report.holds and not named_ok:
                self.logger.error(f"{binding.name}: 고전 형태 '{binding.expected}' 불일치 "
                                  f"{report.params}")
            outcomes.append(BindingOutcome(binding.name, report, named_ok))
        return outcomes

    def check_bindings(self, preset_id: Optional[Union[str, PresetId]] = None,
                       max_index: Optional[int] = None) -> List[BindingOutcome]:
        """
        항등식 바인딩 실행

        Args:
            preset_id: 특정 프리셋만 (None 이면 전체)
            max_index: 바인딩 기본 범위 대신 쓸 최대 인덱스

        Returns:
            바인딩 결과 목록 (ok = 항등식 성립 그리고 고전 형태 일치)
        """
        outcomes: List[BindingOutcome] = []
        bindings = list_bindings(preset_id)
        for position, binding in enumerate(bindings, 1):
            found = self.check_binding(binding, max_index)
            failures = sum(not outcome.ok for outcome in found)
            self.progress.report_binding_progress(position, len(bindings), binding.name, failures)
            outcomes.extend(found)
        return outcomes

    def run_bindings(self, preset_id: Optional[Union[str, PresetId]] = None,
                     max_index: Optional[int] = None) -> List[IdentityReport]:
        """바인딩 보고서만 (고전 형태 검사 결과는 check_bindings 참조)"""
        return [outcome.report for outcome in self.check_bindings(preset_id, max_index)]
