"""
정확 산술 모듈
임의 정밀도 정수와 정수 계수 1변수 다항식, 그리고 둘을 묶는 태그 값(RingValue)
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Tuple, Union

from .errors import TagMismatch

# 영다항식의 차수 ("마이너스 무한대"; 차수 0과 절대 같지 않음)
ZERO_POLY_DEGREE = float('-inf')


class RingTag(str, Enum):
    """값이 속한 환"""
    INTEGER = "integer"
    POLYNOMIAL = "polynomial"


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    """최고차 0 계수 제거 (정규형)"""
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _convolve(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """
    정수 계수 다항식 (오름차순 계수, 정규형)

    variable 은 표시용이며 동등성 비교에 쓰이지 않음
    """
    coefficients: Tuple[int, ...] = ()
    variable: str = field(default='z', compare=False)

    def __post_init__(self):
        for c in self.coefficients:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"다항식 계수는 정수여야 합니다: {c!r}")
        object.__setattr__(self, 'coefficients', _trim(self.coefficients))

    @property
    def degree(self) -> Union[int, float]:
        if not self.coefficients:
            return ZERO_POLY_DEGREE
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: 'IntPoly') -> 'IntPoly':
        p, q = self.coefficients, other.coefficients
        if len(p) < len(q):
            p, q = q, p
        summed = list(p)
        for i, c in enumerate(q):
            summed[i] += c
        return IntPoly(tuple(summed), self.variable)

    def __neg__(self) -> 'IntPoly':
        return IntPoly(tuple(-c for c in self.coefficients), self.variable)

    def __sub__(self, other: 'IntPoly') -> 'IntPoly':
        return self + (-other)

    def __mul__(self, other: 'IntPoly') -> 'IntPoly':
        return IntPoly(_convolve(self.coefficients, other.coefficients), self.variable)

    def evaluate(self, point: int) -> int:
        """호너 방식 정수 대입"""
        result = 0
        for c in reversed(self.coefficients):
            result = result * point + c
        return result

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"

        terms = []
        for power, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = self.variable if power == 1 else f"{self.variable}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        text = f"-{first_body}" if first_sign == "-" else first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class RingValue:
    """
    태그가 붙은 정확 값 (정수 또는 다항식)

    같은 식 안의 피연산자는 모두 같은 태그여야 하며,
    정수 → 다항식 승격은 promote() 로만 명시적으로 수행
    """
    tag: RingTag
    payload: Union[int, IntPoly]

    def __post_init__(self):
        if self.tag is RingTag.INTEGER:
            if isinstance(self.payload, bool) or not isinstance(self.payload, int):
                raise TypeError(f"정수 값이 아닙니다: {self.payload!r}")
        elif not isinstance(self.payload, IntPoly):
            raise TypeError(f"다항식 값이 아닙니다: {self.payload!r}")

    @classmethod
    def integer(cls, value: int) -> 'RingValue':
        return cls(RingTag.INTEGER, value)

    @classmethod
    def polynomial(cls, coefficients: Iterable[int], variable: str = 'z') -> 'RingValue':
        return cls(RingTag.POLYNOMIAL, IntPoly(tuple(coefficients), variable))

    @property
    def is_polynomial(self) -> bool:
        return self.tag is RingTag.POLYNOMIAL

    def is_zero(self) -> bool:
        if self.tag is RingTag.INTEGER:
            return self.payload == 0
        return self.payload.is_zero()

    def zero_like(self) -> 'RingValue':
        if self.tag is RingTag.INTEGER:
            return RingValue(RingTag.INTEGER, 0)
        return RingValue(RingTag.POLYNOMIAL, IntPoly((), self.payload.variable))

    def one_like(self) -> 'RingValue':
        if self.tag is RingTag.INTEGER:
            return RingValue(RingTag.INTEGER, 1)
        return RingValue(RingTag.POLYNOMIAL, IntPoly((1,), self.payload.variable))

    def from_int(self, value: int) -> 'RingValue':
        """같은 태그의 상수 값"""
        if self.tag is RingTag.INTEGER:
            return RingValue(RingTag.INTEGER, value)
        return RingValue(RingTag.POLYNOMIAL, IntPoly((value,), self.payload.variable))

    def _require_same_tag(self, other: 'RingValue', operation: str):
        if not isinstance(other, RingValue):
            raise TypeError(f"RingValue 가 아닌 피연산자: {other!r}")
        if other.tag is not self.tag:
            raise TagMismatch(f"{operation}: {self.tag.value} 와 {other.tag.value} 를 섞을 수 없습니다")

    def __add__(self, other: 'RingValue') -> 'RingValue':
        self._require_same_tag(other, "덧셈")
        return RingValue(self.tag, self.payload + other.payload)

    def __sub__(self, other: 'RingValue') -> 'RingValue':
        self._require_same_tag(other, "뺄셈")
        return RingValue(self.tag, self.payload - other.payload)

    def __mul__(self, other: 'RingValue') -> 'RingValue':
        self._require_same_tag(other, "곱셈")
        return RingValue(self.tag, self.payload * other.payload)

    def __neg__(self) -> 'RingValue':
        return RingValue(self.tag, -self.payload)

    def __pow__(self, exponent: int) -> 'RingValue':
        return power(self, exponent)

    def __str__(self) -> str:
        return str(self.payload)


def add(a: RingValue, b: RingValue) -> RingValue:
    return a + b


def sub(a: RingValue, b: RingValue) -> RingValue:
    return a - b


def mul(a: RingValue, b: RingValue) -> RingValue:
    return a * b


def neg(a: RingValue) -> RingValue:
    return -a


def power(base: RingValue, exponent: int) -> RingValue:
    """
    정확 거듭제곱 (제곱-곱 반복)

    Args:
        base: 밑
        exponent: 0 이상의 지수

    Returns:
        base^exponent; exponent = 0 이면 같은 태그의 곱셈 항등원
    """
    if exponent < 0:
        raise ValueError(f"지수는 0 이상이어야 합니다: {exponent}")

    result = base.one_like()
    square = base
    while exponent:
        if exponent & 1:
            result = result * square
        exponent >>= 1
        if exponent:
            square = square * square
    return result


def promote(value: RingValue, variable: str = 'z') -> RingValue:
    """정수를 0차 다항식으로 명시적 승격"""
    if value.tag is RingTag.POLYNOMIAL:
        return value
    return RingValue.polynomial((value.payload,), variable)


def evaluate(value: RingValue, point: int) -> RingValue:
    """다항식에 정수 대입 (정수 값은 그대로)"""
    if value.tag is RingTag.INTEGER:
        return value
    return RingValue.integer(value.payload.evaluate(point))


def degree(value: RingValue) -> Union[int, float]:
    if value.tag is RingTag.INTEGER:
        return ZERO_POLY_DEGREE if value.payload == 0 else 0
    return value.payload.degree


def binomial(n: int, k: int) -> int:
    """이항계수; k < 0 또는 k > n 이면 0"""
    if n < 0:
        raise ValueError(f"n 은 0 이상이어야 합니다: {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def common_tag(values: Iterable[RingValue]) -> RingTag:
    """
    값들의 공통 태그 확인

    Raises:
        TagMismatch: 태그가 섞인 경우
    """
    tags = {v.tag for v in values}
    if len(tags) != 1:
        raise TagMismatch(f"태그가 섞여 있습니다: {sorted(t.value for t in tags)}")
    return tags.pop()
