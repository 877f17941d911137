"""
2차 선형 동차 점화식 코어
a_{n+1} = x·a_n + y·a_{n-1} 의 수열 윈도우, 명시적 공식, 가변 계수 점화식
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple, Union

from .errors import DegenerateCoefficient, IndexConstraint, InsufficientCoefficients
from .exact_algebra import RingTag, RingValue, binomial, common_tag, power

Pair = Tuple[RingValue, RingValue]


def canonical_init(x: RingValue) -> Pair:
    """표준 초기값 (0, 1)"""
    return (x.zero_like(), x.one_like())


@dataclass(frozen=True)
class RecurrenceSpec:
    """상수 계수 점화식 정의"""
    x: RingValue
    y: RingValue
    init: Pair

    def __post_init__(self):
        object.__setattr__(self, 'init', tuple(self.init))
        if len(self.init) != 2:
            raise ValueError(f"초기값은 2개여야 합니다: {len(self.init)}개")
        common_tag([self.x, self.y, *self.init])
        if self.y.is_zero():
            raise DegenerateCoefficient("y = 0 이면 1차 점화식으로 퇴화합니다")

    @classmethod
    def canonical(cls, x: RingValue, y: RingValue) -> 'RecurrenceSpec':
        return cls(x, y, canonical_init(x))

    @property
    def tag(self) -> RingTag:
        return self.x.tag

    def with_init(self, init: Pair) -> 'RecurrenceSpec':
        return RecurrenceSpec(self.x, self.y, init)


@dataclass(frozen=True)
class VarCoeffSpec:
    """
    가변 계수 점화식 b_{n+1} = u_n·b_n + v_{n-1}·b_{n-1} 의 유한 계수 윈도우
    """
    u: Tuple[RingValue, ...]
    v: Tuple[RingValue, ...]
    init: Pair

    def __post_init__(self):
        object.__setattr__(self, 'u', tuple(self.u))
        object.__setattr__(self, 'v', tuple(self.v))
        object.__setattr__(self, 'init', tuple(self.init))
        if len(self.init) != 2:
            raise ValueError(f"초기값은 2개여야 합니다: {len(self.init)}개")
        common_tag([*self.u, *self.v, *self.init])

    @classmethod
    def constant(cls, x: RingValue, y: RingValue, length: int,
                 init: Optional[Pair] = None) -> 'VarCoeffSpec':
        """u_n = x, v_n = y 인 상수 윈도우"""
        return cls((x,) * length, (y,) * length, init or canonical_init(x))

    @property
    def tag(self) -> RingTag:
        return self.init[0].tag

    def with_init(self, init: Pair) -> 'VarCoeffSpec':
        return VarCoeffSpec(self.u, self.v, init)

    def u_at(self, index: int) -> RingValue:
        if not 0 <= index < len(self.u):
            raise InsufficientCoefficients('u', index)
        return self.u[index]

    def v_at(self, index: int) -> RingValue:
        if not 0 <= index < len(self.v):
            raise InsufficientCoefficients('v', index)
        return self.v[index]


@dataclass(frozen=True)
class SequenceWindow:
    """인덱스 lo..lo+len-1 의 수열 값"""
    spec: Optional[Union[RecurrenceSpec, VarCoeffSpec]]
    lo: int
    values: Tuple[RingValue, ...]

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))
        if self.lo < 0:
            raise IndexConstraint(f"윈도우 시작 인덱스는 0 이상이어야 합니다: {self.lo}")

    @property
    def hi(self) -> int:
        """마지막 인덱스"""
        return self.lo + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[RingValue]:
        return iter(self.values)

    def term(self, n: int) -> RingValue:
        """절대 인덱스 n 의 값"""
        if not self.lo <= n <= self.hi:
            raise IndexConstraint(f"인덱스 {n} 은 윈도우 [{self.lo}..{self.hi}] 밖입니다")
        return self.values[n - self.lo]

    def slice(self, lo: int, hi: int) -> 'SequenceWindow':
        if lo > hi or lo < self.lo or hi > self.hi:
            raise IndexConstraint(f"[{lo}..{hi}] 은 윈도우 [{self.lo}..{self.hi}] 밖입니다")
        return SequenceWindow(self.spec, lo, self.values[lo - self.lo:hi - self.lo + 1])


@lru_cache(maxsize=8192)
def _iterate(spec: RecurrenceSpec, n_max: int) -> Tuple[RingValue, ...]:
    values = list(spec.init)
    for _ in range(2, n_max + 1):
        values.append(spec.x * values[-1] + spec.y * values[-2])
    return tuple(values[:n_max + 1])


def generate(spec: RecurrenceSpec, n_max: int) -> SequenceWindow:
    """
    초기값에서 점화식을 반복하여 [0..n_max] 윈도우 생성

    Args:
        spec: 점화식 정의
        n_max: 마지막 인덱스

    Returns:
        lo = 0 인 SequenceWindow
    """
    if n_max < 0:
        raise IndexConstraint(f"n_max 는 0 이상이어야 합니다: {n_max}")
    return SequenceWindow(spec, 0, _iterate(spec, n_max))


def explicit_term(x: RingValue, y: RingValue, n: int) -> RingValue:
    """
    명시적 공식 a_n = Σ_k C(n-1-k, k)·x^(n-2k-1)·y^k

    n = 0 이면 빈 합 (0)
    """
    common_tag([x, y])
    if y.is_zero():
        raise DegenerateCoefficient("y = 0 이면 1차 점화식으로 퇴화합니다")
    if n < 0:
        raise IndexConstraint(f"n 은 0 이상이어야 합니다: {n}")

    total = x.zero_like()
    for k in range((n - 1) // 2 + 1 if n > 0 else 0):
        coefficient = x.from_int(binomial(n - 1 - k, k))
        total = total + coefficient * power(x, n - 2 * k - 1) * power(y, k)
    return total


def explicit_from_init(x: RingValue, y: RingValue, init: Pair, n: int) -> RingValue:
    """
    임의 초기값 해의 명시적 표현: b_n = b_1·a_n + y·b_0·a_{n-1} (n ≥ 1)
    """
    b0, b1 = init
    common_tag([x, y, b0, b1])
    if n == 0:
        return b0
    return b1 * explicit_term(x, y, n) + y * b0 * explicit_term(x, y, n - 1)


def generate_var(spec: VarCoeffSpec, n_max: int) -> SequenceWindow:
    """
    가변 계수 점화식 윈도우 [0..n_max]

    Raises:
        InsufficientCoefficients: u_{n_max-1} 또는 v_{n_max-2} 가 없을 때
    """
    if n_max < 0:
        raise IndexConstraint(f"n_max 는 0 이상이어야 합니다: {n_max}")

    values = list(spec.init)
    for i in range(2, n_max + 1):
        values.append(spec.u_at(i - 1) * values[i - 1] + spec.v_at(i - 2) * values[i - 2])
    return SequenceWindow(spec, 0, values[:n_max + 1])


def derived_shifted(spec: VarCoeffSpec, k: int, length: int) -> SequenceWindow:
    """
    보조 수열 a_0 = 0, a_1 = 1, a_i = v_{k+i-2}·a_{i-2} + u_{k+i-1}·a_{i-1}
    (a_2 = u_{k+1})
    """
    if k < 0 or length < 0:
        raise IndexConstraint(f"k, len 은 0 이상이어야 합니다: k={k}, len={length}")

    zero, one = canonical_init(spec.init[0])
    values = [zero, one][:length]
    for i in range(2, length):
        values.append(spec.v_at(k + i - 2) * values[i - 2] + spec.u_at(k + i - 1) * values[i - 1])
    return SequenceWindow(spec, 0, values)


def window_is_consistent(window: SequenceWindow, x: RingValue, y: RingValue) -> bool:
    """모든 내부 삼중항이 점화식을 만족하는지"""
    values: Sequence[RingValue] = window.values
    return all(values[i] == x * values[i - 1] + y * values[i - 2]
               for i in range(2, len(values)))
