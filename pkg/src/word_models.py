"""
제한 단어 모델
제약 DSL 파서, 계수 오토마톤(금지 인자 + 짝수 런), 동적 계획법 계수기,
전수 열거 오라클, 색칠 타일링 계수기
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from .errors import (AlphabetOutOfRange, CapExceeded, ConstraintError, DuplicateAlphabet,
                     LetterOutOfRange, MissingAlphabet, ParseError, UnsupportedParams)

logger = logging.getLogger(__name__)

MAX_ALPHABET_SIZE = 10
DEFAULT_ENUMERATION_CAP = 10 ** 7

Tile = Tuple[int, int]  # (길이, 색)


@dataclass(frozen=True)
class WordConstraint:
    """
    단어 제약

    Attributes:
        alphabet_size: 알파벳 크기 σ (문자 0..σ-1)
        forbidden_factors: 금지 인자 (숫자 문자열)
        even_run_letters: 모든 런이 짝수 길이여야 하는 문자
    """
    alphabet_size: int
    forbidden_factors: FrozenSet[str] = frozenset()
    even_run_letters: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'forbidden_factors', frozenset(self.forbidden_factors))
        object.__setattr__(self, 'even_run_letters', frozenset(self.even_run_letters))

        if not 1 <= self.alphabet_size <= MAX_ALPHABET_SIZE:
            raise AlphabetOutOfRange(
                f"알파벳 크기는 1..{MAX_ALPHABET_SIZE} 이어야 합니다: {self.alphabet_size}")
        for factor in self.forbidden_factors:
            if not factor or not factor.isdigit():
                raise ConstraintError(f"금지 인자는 비어 있지 않은 숫자열이어야 합니다: {factor!r}")
            for letter in factor:
                if int(letter) >= self.alphabet_size:
                    raise LetterOutOfRange(
                        f"금지 인자 {factor} 의 문자 {letter} ≥ σ={self.alphabet_size}")
        for letter in self.even_run_letters:
            if not 0 <= letter < self.alphabet_size:
                raise LetterOutOfRange(f"짝수 런 문자 {letter} ≥ σ={self.alphabet_size}")

    def to_text(self) -> str:
        """정규 DSL 표현 (정렬, 빈 절 생략)"""
        clauses = [f"alphabet={self.alphabet_size}"]
        if self.forbidden_factors:
            clauses.append("forbid=" + ",".join(sorted(self.forbidden_factors)))
        if self.even_run_letters:
            clauses.append("evenrun=" + ",".join(str(l) for l in sorted(self.even_run_letters)))
        return "; ".join(clauses)

    def __str__(self) -> str:
        return self.to_text()


class _ConstraintParser:
    """
    spec   := clause (";" clause)*
    clause := "alphabet=" INT | "forbid=" WORD ("," WORD)* | "evenrun=" INT ("," INT)*
    공백은 어디서나 무시
    """

    KEYWORDS = ("alphabet", "forbid", "evenrun")

    def __init__(self, text: str):
        self.text = text
        self.chars = [(ch, pos) for pos, ch in enumerate(text) if not ch.isspace()]
        self.index = 0

    def _position(self) -> int:
        if self.index < len(self.chars):
            return self.chars[self.index][1]
        return len(self.text)

    def _peek(self) -> Optional[str]:
        if self.index < len(self.chars):
            return self.chars[self.index][0]
        return None

    def _expect(self, symbol: str):
        if self._peek() != symbol:
            found = self._peek() or "입력 끝"
            raise ParseError(f"'{symbol}' 가 필요하지만 '{found}' 를 만났습니다", self._position())
        self.index += 1

    def _keyword(self) -> Tuple[str, int]:
        start = self._position()
        letters = []
        while self._peek() is not None and self._peek().isalpha():
            letters.append(self._peek())
            self.index += 1
        keyword = "".join(letters)
        if keyword not in self.KEYWORDS:
            raise ParseError(f"알 수 없는 절 '{keyword}' (alphabet/forbid/evenrun 중 하나)", start)
        self._expect("=")
        return keyword, start

    def _digits(self) -> Tuple[str, int]:
        start = self._position()
        digits = []
        while self._peek() is not None and self._peek() in "0123456789":
            digits.append(self._peek())
            self.index += 1
        if not digits:
            raise ParseError("숫자가 필요합니다", start)
        return "".join(digits), start

    def _digit_list(self) -> List[Tuple[str, int]]:
        items = [self._digits()]
        while self._peek() == ",":
            self.index += 1
            items.append(self._digits())
        return items

    def parse(self) -> WordConstraint:
        if not self.chars:
            raise MissingAlphabet("alphabet 절이 필요합니다")

        alphabet_size: Optional[int] = None
        factors: List[str] = []
        even_runs: List[int] = []

        while True:
            keyword, start = self._keyword()

            if keyword == "alphabet":
                if alphabet_size is not None:
                    raise DuplicateAlphabet(f"alphabet 절이 중복되었습니다 (위치 {start})")
                digits, _ = self._digits()
                alphabet_size = int(digits)
                if not 1 <= alphabet_size <= MAX_ALPHABET_SIZE:
                    raise AlphabetOutOfRange(
                        f"알파벳 크기는 1..{MAX_ALPHABET_SIZE} 이어야 합니다: {alphabet_size}")
            elif alphabet_size is None:
                raise MissingAlphabet(f"alphabet 절이 처음에 와야 합니다 (위치 {start})")
            elif keyword == "forbid":
                for word, position in self._digit_list():
                    for offset, letter in enumerate(word):
                        if int(letter) >= alphabet_size:
                            raise LetterOutOfRange(
                                f"문자 {letter} ≥ σ={alphabet_size} (위치 {position + offset})")
                    factors.append(word)
            else:
                for digits, position in self._digit_list():
                    letter = int(digits)
                    if letter >= alphabet_size:
                        raise LetterOutOfRange(f"문자 {letter} ≥ σ={alphabet_size} (위치 {position})")
                    even_runs.append(letter)

            if self._peek() is None:
                break
            self._expect(";")

        return WordConstraint(alphabet_size, frozenset(factors), frozenset(even_runs))


def parse_constraint(text: str) -> WordConstraint:
    """
    제약 DSL 파싱

    Args:
        text: 예) "alphabet=3; forbid=01,02"

    Returns:
        검증된 WordConstraint

    Raises:
        ParseError, MissingAlphabet, LetterOutOfRange, AlphabetOutOfRange, DuplicateAlphabet
    """
    return _ConstraintParser(text).parse()


@dataclass
class _TrieNode:
    """금지 인자 트라이 노드"""
    prefix: str
    children: Dict[str, '_TrieNode'] = field(default_factory=dict)
    fail: Optional['_TrieNode'] = None
    terminal: bool = False


def _build_factor_trie(factors: Iterable[str]) -> Tuple[_TrieNode, List[_TrieNode]]:
    """트라이와 실패 링크 구성; BFS 순서의 노드 목록도 반환"""
    root = _TrieNode("")
    for factor in sorted(factors):
        node = root
        for letter in factor:
            if letter not in node.children:
                node.children[letter] = _TrieNode(node.prefix + letter)
            node = node.children[letter]
        node.terminal = True

    order = [root]
    queue = deque()
    for child in root.children.values():
        child.fail = root
        queue.append(child)

    while queue:
        node = queue.popleft()
        order.append(node)
        for letter, child in node.children.items():
            fallback = node.fail
            while fallback is not None and letter not in fallback.children:
                fallback = fallback.fail
            child.fail = fallback.children[letter] if fallback is not None else root
            # 접미사가 금지 인자이면 이 노드도 거부
            child.terminal = child.terminal or child.fail.terminal
            queue.append(child)

    return root, order


@dataclass(frozen=True)
class CountAutomaton:
    """
    결정적 계수 오토마톤

    transitions[state][letter] 은 다음 상태 번호 또는 None(거부)
    """
    alphabet_size: int
    states: Tuple[Tuple[str, Optional[int]], ...]
    start: int
    transitions: Tuple[Tuple[Optional[int], ...], ...]
    accepting: Tuple[bool, ...]

    @property
    def state_count(self) -> int:
        return len(self.states)

    def step(self, state: int, letter: int) -> Optional[int]:
        return self.transitions[state][letter]

    def accepts(self, word: str) -> bool:
        state: Optional[int] = self.start
        for letter in word:
            state = self.step(state, int(letter))
            if state is None:
                return False
        return self.accepting[state]

    def transfer_matrix(self) -> np.ndarray:
        """상태 간 전이 개수 행렬 (object dtype, 정확 정수)"""
        matrix = np.zeros((self.state_count, self.state_count), dtype=object)
        for source, row in enumerate(self.transitions):
            for target in row:
                if target is not None:
                    matrix[source, target] += 1
        return matrix


@lru_cache(maxsize=256)
def build_automaton(constraint: WordConstraint) -> CountAutomaton:
    """
    금지 인자 오토마톤(실패 링크)과 짝수 런 패리티 상태의 곱 오토마톤 생성

    상태 = (금지 인자 접두사, 홀수 길이로 진행 중인 짝수 런 문자 또는 None)
    """
    root, order = _build_factor_trie(constraint.forbidden_factors)

    # 실패 링크로 완성한 goto 함수 (BFS 순서라 실패 노드가 먼저 계산됨)
    goto: Dict[str, Dict[str, _TrieNode]] = {}
    for node in order:
        row = {}
        for letter_value in range(constraint.alphabet_size):
            letter = str(letter_value)
            if letter in node.children:
                row[letter] = node.children[letter]
            elif node is root:
                row[letter] = root
            else:
                row[letter] = goto[node.fail.prefix][letter]
        goto[node.prefix] = row

    def advance(label: Tuple[str, Optional[int]], letter_value: int):
        prefix, pending = label
        target = goto[prefix][str(letter_value)]
        if target.terminal:
            return None
        if pending is not None:
            if letter_value != pending:
                return None  # 홀수 길이 런이 닫힘
            return (target.prefix, None)
        if letter_value in constraint.even_run_letters:
            return (target.prefix, letter_value)
        return (target.prefix, None)

    start_label = (root.prefix, None)
    index: Dict[Tuple[str, Optional[int]], int] = {start_label: 0}
    labels = [start_label]
    rows: List[List[Optional[int]]] = []
    queue = deque([start_label])
    while queue:
        label = queue.popleft()
        row: List[Optional[int]] = []
        for letter_value in range(constraint.alphabet_size):
            target = advance(label, letter_value)
            if target is None:
                row.append(None)
                continue
            if target not in index:
                index[target] = len(labels)
                labels.append(target)
                queue.append(target)
            row.append(index[target])
        rows.append(row)

    automaton = CountAutomaton(
        alphabet_size=constraint.alphabet_size,
        states=tuple(labels),
        start=0,
        transitions=tuple(tuple(r) for r in rows),
        accepting=tuple(pending is None for _, pending in labels),
    )
    logger.debug(f"오토마톤 생성: {constraint.to_text()} → 상태 {automaton.state_count}개")
    return automaton


def count_sequence(constraint: WordConstraint, n_max: int) -> List[int]:
    """
    길이 0..n_max 의 허용 단어 수 (전이 행렬 한 번씩 곱하는 DP)
    """
    if n_max < 0:
        raise ValueError(f"길이는 0 이상이어야 합니다: {n_max}")

    automaton = build_automaton(constraint)
    matrix = automaton.transfer_matrix()
    accepting = [i for i, ok in enumerate(automaton.accepting) if ok]

    vector = np.zeros(automaton.state_count, dtype=object)
    vector[automaton.start] = 1
    counts = []
    for n in range(n_max + 1):
        counts.append(int(sum(vector[i] for i in accepting)))
        if n < n_max:
            vector = vector.dot(matrix)
    return counts


def count_words(constraint: WordConstraint, n: int) -> int:
    """길이 n 의 허용 단어 수"""
    return count_sequence(constraint, n)[n]


def _closes_odd_run(word: str, even_run_letters: FrozenSet[int]) -> bool:
    """마지막 문자가 새 런을 시작하며 직전 런이 홀수 길이로 닫혔는지"""
    if len(word) < 2 or word[-1] == word[-2]:
        return False
    closed = word[:-1]
    if int(closed[-1]) not in even_run_letters:
        return False
    run = len(closed) - len(closed.rstrip(closed[-1]))
    return run % 2 == 1


def _trailing_run_ok(word: str, even_run_letters: FrozenSet[int]) -> bool:
    if not word or int(word[-1]) not in even_run_letters:
        return True
    run = len(word) - len(word.rstrip(word[-1]))
    return run % 2 == 0


def iter_words(constraint: WordConstraint, n: int) -> Iterator[str]:
    """
    허용 단어를 사전순으로 하나씩 생성 (상한 검사 없음)

    오토마톤과 독립적으로 문자열 자체의 인자/런을 검사하며 접두사를 확장.
    명시적 스택을 쓰므로 깊이는 n 에 제한되지 않음
    """
    if n < 0:
        raise ValueError(f"길이는 0 이상이어야 합니다: {n}")

    letters = [str(l) for l in range(constraint.alphabet_size)]
    factors = constraint.forbidden_factors
    even_runs = constraint.even_run_letters

    stack = [""]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            if _trailing_run_ok(prefix, even_runs):
                yield prefix
            continue
        children = []
        for letter in letters:
            candidate = prefix + letter
            if any(candidate.endswith(f) for f in factors):
                continue
            if _closes_odd_run(candidate, even_runs):
                continue
            children.append(candidate)
        # 작은 문자가 먼저 나오도록 역순으로 쌓음
        stack.extend(reversed(children))


def enumerate_words(constraint: WordConstraint, n: int,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> List[str]:
    """
    허용 단어 전수 열거 (사전순)

    Raises:
        CapExceeded: σ^n > cap
    """
    if n < 0:
        raise ValueError(f"길이는 0 이상이어야 합니다: {n}")
    if constraint.alphabet_size ** n > cap:
        raise CapExceeded(f"σ^n = {constraint.alphabet_size}^{n} 이 한도 {cap} 를 넘습니다")
    return list(iter_words(constraint, n))


def constraint_from_params(x: int, y: int) -> WordConstraint:
    """
    (x, y) 점화식의 단어 해석 제약

    y > 0: σ = x + y, 문자 0..y-1 은 짝수 런만 허용 (나머지 x 개는 자유)
    y < 0, -y < x: σ = x, 금지 인자 {0i : 1 ≤ i ≤ -y}
    두 경우 모두 길이 n 의 단어 수가 a_{n+1}

    Raises:
        UnsupportedParams: 해석이 없는 조합
    """
    if x > 0 and y > 0:
        if x + y > MAX_ALPHABET_SIZE:
            raise UnsupportedParams(f"x + y = {x + y} > {MAX_ALPHABET_SIZE}")
        return WordConstraint(x + y, frozenset(), frozenset(range(y)))
    if x > 0 and y < 0 and -y < x:
        if x > MAX_ALPHABET_SIZE:
            raise UnsupportedParams(f"x = {x} > {MAX_ALPHABET_SIZE}")
        return WordConstraint(x, frozenset(f"0{i}" for i in range(1, -y + 1)), frozenset())
    raise UnsupportedParams(f"단어 해석이 없는 계수입니다: x={x}, y={y}")


def _check_colors(colors1: int, colors2: int):
    if colors1 <= 0 or colors2 <= 0:
        raise UnsupportedParams(f"색 수는 양수여야 합니다: {colors1}, {colors2}")


def count_colored_tilings(n: int, colors1: int, colors2: int) -> int:
    """
    길이 1 타일 colors1 색, 길이 2 타일 colors2 색으로 1×n 판을 채우는 방법 수

    t(n) = colors1·t(n-1) + colors2·t(n-2), t(0) = 1, t(1) = colors1
    """
    if n < 0:
        raise ValueError(f"길이는 0 이상이어야 합니다: {n}")
    _check_colors(colors1, colors2)

    previous, current = 1, colors1
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, colors1 * current + colors2 * previous
    return current


def enumerate_colored_tilings(n: int, colors1: int, colors2: int,
                              cap: int = DEFAULT_ENUMERATION_CAP) -> List[Tuple[Tile, ...]]:
    """타일링 전수 열거 (타일 = (길이, 색))"""
    _check_colors(colors1, colors2)
    total = count_colored_tilings(n, colors1, colors2)
    if total > cap:
        raise CapExceeded(f"타일링 {total}개가 한도 {cap} 를 넘습니다")

    tiles = [(1, c) for c in range(colors1)] + [(2, c) for c in range(colors2)]
    tilings: List[Tuple[Tile, ...]] = []

    stack: List[Tuple[Tuple[Tile, ...], int]] = [((), n)]
    while stack:
        prefix, remaining = stack.pop()
        if remaining == 0:
            tilings.append(prefix)
            continue
        stack.extend((prefix + (tile,), remaining - tile[0])
                     for tile in reversed(tiles) if tile[0] <= remaining)
    return tilings


def induced_recurrence_holds(counts: List[int], x: int, y: int) -> bool:
    """c(n) = x·c(n-1) + y·c(n-2) 이 모든 n ≥ 2 에서 성립하는지"""
    return all(counts[n] == x * counts[n - 1] + y * counts[n - 2]
               for n in range(2, len(counts)))
