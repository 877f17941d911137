"""
오류 정의 모듈
모든 도메인 오류는 Recur2Error(ValueError)를 상속
"""

from typing import Optional


class Recur2Error(ValueError):
    """recur2 공통 오류"""


class TagMismatch(Recur2Error):
    """정수/다항식 태그가 다른 값끼리 연산한 경우"""


class DegenerateCoefficient(Recur2Error):
    """y = 0 (1차 점화식으로 퇴화)"""


class InsufficientCoefficients(Recur2Error):
    """계수 윈도우 u, v 길이 부족"""

    def __init__(self, sequence: str, index: int):
        self.sequence = sequence
        self.index = index
        super().__init__(f"계수 {sequence}_{index} 가 필요하지만 윈도우에 없습니다")


class IndexConstraint(Recur2Error):
    """항등식의 인덱스 조건 위반"""


class SingularInitialPair(Recur2Error):
    """초기 행렬식 b_0·c_1 − b_1·c_0 = 0"""


class InexactDivision(Recur2Error):
    """나머지가 0이 아닌 나눗셈 (입력 윈도우 불일치)"""


class UnknownPreset(Recur2Error):
    """카탈로그에 없는 프리셋 id"""


class UnsupportedParams(Recur2Error):
    """단어 해석이 존재하지 않는 (x, y) 조합"""


class CapExceeded(Recur2Error):
    """전수 열거 한도 초과"""


class ConstraintError(Recur2Error):
    """단어 제약 DSL 오류"""


class ParseError(ConstraintError):
    """문법 오류 (위치 포함)"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (위치 {position})"
        super().__init__(message)


class MissingAlphabet(ConstraintError):
    """alphabet 절이 없거나 첫 절이 아님"""


class LetterOutOfRange(ConstraintError):
    """알파벳 크기 이상의 문자 사용"""


class AlphabetOutOfRange(ConstraintError):
    """알파벳 크기가 1..10 범위 밖"""


class DuplicateAlphabet(ConstraintError):
    """alphabet 절 중복"""
