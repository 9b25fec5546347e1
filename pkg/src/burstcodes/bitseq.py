"""Binary words, run decompositions, and the b x (n/b) column-major array view.

A word is an immutable tuple of bits. Positions are 1-indexed in every public
contract, so ``x[i-1]`` is the bit at position ``i``. Words compare and sort
lexicographically (tuple order), which is also the order used in codebook
files. The text form is an ASCII string of ``'0'``/``'1'`` with the leftmost
character at position 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

Word = tuple[int, ...]

# Full-space sweeps iterate 2^n words; beyond this the space is not iterable.
MAX_ENUM_BITS = 30


def word(bits: Iterable[int]) -> Word:
    """Validate and freeze a bit sequence into a Word."""
    w = tuple(bits)
    if len(w) < 1:
        raise DomainError("a word must have length >= 1")
    if any(b not in (0, 1) for b in w):
        raise DomainError(f"word bits must be 0 or 1, got {w!r}")
    return w


def parse_word(text: str) -> Word:
    """Parse the ASCII '0'/'1' text form (leftmost character = position 1)."""
    if not text or any(ch not in "01" for ch in text):
        raise DomainError(f"not a binary word: {text!r}")
    return tuple(1 if ch == "1" else 0 for ch in text)


def format_word(x: Word) -> str:
    return "".join("1" if b else "0" for b in x)


def to_int(x: Word) -> int:
    """Pack a word into an integer with position 1 as the least significant bit."""
    v = 0
    for i, b in enumerate(x):
        v |= b << i
    return v


def from_int(v: int, n: int) -> Word:
    return tuple((v >> i) & 1 for i in range(n))


def weight(x: Word) -> int:
    """Hamming weight."""
    return sum(x)


def enumerate_words(n: int) -> Iterator[Word]:
    """Yield all words of length n in lexicographic order (n <= 30 enforced)."""
    if not 1 <= n <= MAX_ENUM_BITS:
        raise DomainError(f"enumeration requires 1 <= n <= {MAX_ENUM_BITS}, got {n}")
    # Iterating the integer with position 1 at the MSB gives lexicographic order.
    for v in range(1 << n):
        yield tuple((v >> (n - 1 - i)) & 1 for i in range(n))


@dataclass(frozen=True)
class Run:
    value: int
    start: int
    length: int


@dataclass(frozen=True)
class RunProfile:
    runs: tuple[Run, ...]

    @property
    def total_runs(self) -> int:
        return len(self.runs)

    def run_at(self, position: int) -> Run:
        """The maximal run containing the given 1-indexed position."""
        for r in self.runs:
            if r.start <= position < r.start + r.length:
                return r
        raise DomainError(f"position {position} outside word")


def runs(x: Word) -> RunProfile:
    """Maximal-run decomposition of x; ``total_runs`` is the run count r(x)."""
    out: list[Run] = []
    start = 1
    for i in range(1, len(x) + 1):
        if i == len(x) or x[i] != x[i - 1]:
            out.append(Run(value=x[start - 1], start=start, length=i - start + 1))
            start = i + 1
    return RunProfile(runs=tuple(out))


def run_count(x: Word) -> int:
    """r(x): 1 + number of positions where adjacent bits differ."""
    return 1 + sum(1 for i in range(len(x) - 1) if x[i] != x[i + 1])


@dataclass(frozen=True)
class ArrayRep:
    """Column-major b x (n/b) array: entry (r, j) = x_{(j-1)b + r}."""

    rows: tuple[Word, ...]

    @property
    def b(self) -> int:
        return len(self.rows)

    @property
    def cols(self) -> int:
        return len(self.rows[0])

    def entry(self, r: int, j: int) -> int:
        return self.rows[r - 1][j - 1]


def array_view(x: Word, b: int) -> ArrayRep:
    """Arrange x column by column into b rows of length n/b (requires b | n)."""
    n = len(x)
    if b < 1 or n % b != 0:
        raise DomainError(f"row count {b} does not divide word length {n}")
    cols = n // b
    rows = tuple(tuple(x[(j * b) + r] for j in range(cols)) for r in range(b))
    return ArrayRep(rows=rows)


def flatten(a: ArrayRep) -> Word:
    """Inverse of array_view: read the array column by column."""
    if len({len(r) for r in a.rows}) != 1:
        raise DomainError("ragged array")
    return tuple(a.rows[r][j] for j in range(a.cols) for r in range(a.b))
