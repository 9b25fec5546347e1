"""Error balls for burst deletion/insertion channels, and their counting laws.

Seven channel models are supported: a deletion burst of exactly b consecutive
positions, of at most b consecutive positions, of at most b positions inside a
window of b consecutive positions (the non-consecutive variant), the three
mirror-image insertion models, and the (2,1)-burst (two adjacent deletions
followed by one insertion at the same position).

Balls contain only corrupted words: the "at most b" models exclude the
zero-error event, which decoders instead treat as pass-through when the
received length equals the code length. Balls are deduplicated sets of words,
not multisets of events.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .bitseq import Word, from_int, run_count, to_int
from .errors import DomainError


class ErrorKind(Enum):
    DEL_EXACT = "del-exact"
    DEL_AT_MOST_CONSECUTIVE = "del-at-most-consecutive"
    DEL_AT_MOST_NONCONSECUTIVE = "del-at-most-nonconsecutive"
    INS_EXACT = "ins-exact"
    INS_AT_MOST_CONSECUTIVE = "ins-at-most-consecutive"
    INS_AT_MOST_NONCONSECUTIVE = "ins-at-most-nonconsecutive"
    BURST_2_1 = "burst-2-1"


@dataclass(frozen=True)
class ErrorModel:
    kind: ErrorKind
    b: int = 1

    def __post_init__(self) -> None:
        if self.b < 1:
            raise DomainError("burst size b must be >= 1")
        if self.kind is ErrorKind.BURST_2_1 and self.b != 2:
            # The (2,1)-burst always deletes two adjacent bits.
            object.__setattr__(self, "b", 2)

    def __str__(self) -> str:
        if self.kind is ErrorKind.BURST_2_1:
            return self.kind.value
        return f"{self.kind.value}(b={self.b})"


def del_exact(b: int) -> ErrorModel:
    return ErrorModel(ErrorKind.DEL_EXACT, b)


def del_at_most(b: int) -> ErrorModel:
    return ErrorModel(ErrorKind.DEL_AT_MOST_CONSECUTIVE, b)


def del_at_most_noncons(b: int) -> ErrorModel:
    return ErrorModel(ErrorKind.DEL_AT_MOST_NONCONSECUTIVE, b)


def ins_exact(b: int) -> ErrorModel:
    return ErrorModel(ErrorKind.INS_EXACT, b)


def ins_at_most(b: int) -> ErrorModel:
    return ErrorModel(ErrorKind.INS_AT_MOST_CONSECUTIVE, b)


def ins_at_most_noncons(b: int) -> ErrorModel:
    return ErrorModel(ErrorKind.INS_AT_MOST_NONCONSECUTIVE, b)


def burst21() -> ErrorModel:
    return ErrorModel(ErrorKind.BURST_2_1, 2)


def parse_model(name: str, b: int) -> ErrorModel:
    for kind in ErrorKind:
        if kind.value == name:
            return ErrorModel(kind, 2 if kind is ErrorKind.BURST_2_1 else b)
    raise DomainError(f"unknown error model {name!r}")


# ---------------------------------------------------------------------------
# Integer cores. Words are packed with position 1 at the LSB; every ball
# element is keyed (length, value) because "at most" balls mix lengths.
# ---------------------------------------------------------------------------


def _delete_block(v: int, i: int, b: int) -> int:
    """Delete positions i..i+b-1 from a packed word."""
    low = v & ((1 << (i - 1)) - 1)
    return low | ((v >> (i - 1 + b)) << (i - 1))


def _insert_block(v: int, slot: int, bits: int, b: int) -> int:
    """Insert a b-bit pattern after position `slot` (0 = before position 1)."""
    low = v & ((1 << slot) - 1)
    return low | (bits << slot) | ((v >> slot) << (slot + b))


def _delete_positions(v: int, positions: tuple[int, ...]) -> int:
    for p in sorted(positions, reverse=True):
        v = _delete_block(v, p, 1)
    return v


def _window_subsets(n: int, b: int):
    """All nonempty position sets of size <= b whose span fits in b consecutive
    positions of a length-n word, each generated exactly once (anchored at its
    minimum)."""
    for first in range(1, n + 1):
        rest = range(first + 1, min(first + b, n + 1))
        for a in range(0, b):
            for tail in combinations(rest, a):
                yield (first, *tail)


def ball_ints(v: int, n: int, model: ErrorModel) -> set[tuple[int, int]]:
    """The error ball of a packed word, as a set of (length, value) pairs."""
    kind, b = model.kind, model.b
    out: set[tuple[int, int]] = set()
    if kind is ErrorKind.DEL_EXACT:
        if n <= b:
            raise DomainError(f"word length {n} too short for a {b}-burst deletion")
        out = {(n - b, _delete_block(v, i, b)) for i in range(1, n - b + 2)}
    elif kind is ErrorKind.DEL_AT_MOST_CONSECUTIVE:
        if n <= b:
            raise DomainError(f"word length {n} too short for bursts up to {b}")
        for a in range(1, b + 1):
            out |= {(n - a, _delete_block(v, i, a)) for i in range(1, n - a + 2)}
    elif kind is ErrorKind.DEL_AT_MOST_NONCONSECUTIVE:
        if n <= b:
            raise DomainError(f"word length {n} too short for bursts up to {b}")
        for positions in _window_subsets(n, b):
            out.add((n - len(positions), _delete_positions(v, positions)))
    elif kind is ErrorKind.INS_EXACT:
        for slot in range(n + 1):
            for bits in range(1 << b):
                out.add((n + b, _insert_block(v, slot, bits, b)))
    elif kind is ErrorKind.INS_AT_MOST_CONSECUTIVE:
        for a in range(1, b + 1):
            for slot in range(n + 1):
                for bits in range(1 << a):
                    out.add((n + a, _insert_block(v, slot, bits, a)))
    elif kind is ErrorKind.INS_AT_MOST_NONCONSECUTIVE:
        for a in range(1, b + 1):
            for positions in _window_subsets(n + a, b):
                if len(positions) != a:
                    continue
                out |= _scatter_insertions(v, n, positions)
    elif kind is ErrorKind.BURST_2_1:
        if n < 3:
            raise DomainError(f"word length {n} too short for a (2,1)-burst")
        for i in range(1, n):
            shrunk = _delete_block(v, i, 2)
            for vb in (0, 1):
                out.add((n - 1, _insert_block(shrunk, i - 1, vb, 1)))
    else:  # pragma: no cover
        raise DomainError(f"unhandled model {model}")
    return out


def _scatter_insertions(v: int, n: int, positions: tuple[int, ...]) -> set[tuple[int, int]]:
    """All words of length n+a whose positions `positions` hold arbitrary bits
    and whose remaining positions spell out the packed word v."""
    a = len(positions)
    m = n + a
    pos_set = set(positions)
    base = 0
    src = 0
    for p in range(1, m + 1):
        if p not in pos_set:
            base |= ((v >> src) & 1) << (p - 1)
            src += 1
    out = set()
    for bits in range(1 << a):
        y = base
        for k, p in enumerate(positions):
            y |= ((bits >> k) & 1) << (p - 1)
        out.add((m, y))
    return out


def ball(x: Word, model: ErrorModel) -> set[Word]:
    """All words reachable from x by one admissible error event of the model."""
    n = len(x)
    return {from_int(v, m) for m, v in ball_ints(to_int(x), n, model)}


def restricted_burst21_ball(x: Word, deleted_pair: tuple[int, int], inserted: int) -> set[Word]:
    """(2,1)-burst outcomes restricted to deleted subvector = deleted_pair and
    inserted bit = inserted."""
    n = len(x)
    if n < 3:
        raise DomainError("word too short for a (2,1)-burst")
    out = set()
    for i in range(n - 1):
        if (x[i], x[i + 1]) == deleted_pair:
            out.add(x[:i] + (inserted,) + x[i + 2:])
    return out


# ---------------------------------------------------------------------------
# Counting laws for the exact-burst ball.
# ---------------------------------------------------------------------------


def ball_size_formula(x: Word, b: int) -> int:
    """|D_b(x)| = 1 + sum over rows of (runs(row) - 1); requires b | n, n > b."""
    n = len(x)
    if n % b != 0:
        raise DomainError(f"burst size {b} does not divide word length {n}")
    if n <= b:
        raise DomainError(f"word length {n} too short for a {b}-burst deletion")
    m = n // b
    total = 1
    for r in range(b):
        row = tuple(x[r + k * b] for k in range(m))
        total += run_count(row) - 1
    return total


def words_with_runs(n: int, r: int) -> int:
    """M(n, r): number of length-n words with exactly r runs."""
    if not 1 <= r <= n:
        return 0
    return 2 * math.comb(n - 1, r - 1)


@dataclass(frozen=True)
class BallSizeDistribution:
    """Counts of words by exact-burst ball size: counts[i] = #{x : |D_b(x)| = i}."""

    n: int
    b: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def ball_size_distribution(n: int, b: int) -> BallSizeDistribution:
    """Closed form N(n, b, i) = 2^b * C(n-b, i-1) for 1 <= i <= n-b+1."""
    if n % b != 0:
        raise DomainError(f"burst size {b} does not divide word length {n}")
    if n <= b:
        raise DomainError("need n > b")
    counts = {i: (1 << b) * math.comb(n - b, i - 1) for i in range(1, n - b + 2)}
    return BallSizeDistribution(n=n, b=b, counts=counts)


def ball_size_tally(n: int, b: int) -> dict[int, int]:
    """Brute-force tally of |D_b(x)| over all 2^n words, by enumerating every
    ball explicitly. Independent of ball_size_formula."""
    if n > 24:
        raise DomainError("tally capped at n <= 24")
    if n <= b:
        raise DomainError("need n > b")
    counts: dict[int, int] = {}
    model = del_exact(b)
    for v in range(1 << n):
        size = len(ball_ints(v, n, model))
        counts[size] = counts.get(size, 0) + 1
    return counts


def distribution_report(n: int, b: int) -> dict:
    """JSON-ready comparison of the closed form against the brute-force tally."""
    dist = ball_size_distribution(n, b)
    tally = ball_size_tally(n, b)
    rows = [
        {"i": i, "formula": dist.counts[i], "enumerated": tally.get(i, 0)}
        for i in sorted(dist.counts)
    ]
    return {"n": n, "b": b, "counts": rows}
