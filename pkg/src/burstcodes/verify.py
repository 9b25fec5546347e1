"""Brute-force ground truth: exhaustive codebook verification, the
deletion/insertion equivalence sweep, a generic unique-preimage decoder,
greedy code construction, and a seeded channel sampler.

Everything here enumerates; nothing samples except apply_error, whose RNG is
fully determined by the seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import balls
from .bitseq import Word, from_int, to_int
from .codes import Codebook, codebook_from_words
from .errors import CodeIntegrityError, DecodeFailure, DomainError
from .vt import DecodeResult

_RNG_NAME = "python-random-mt19937"


@dataclass(frozen=True)
class VerifyReport:
    model: balls.ErrorModel
    codebook: str
    pairs_checked: int
    violations: tuple[tuple[Word, Word, Word], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        from .bitseq import format_word

        return {
            "model": str(self.model),
            "codebook": self.codebook,
            "pairs_checked": self.pairs_checked,
            "passed": self.passed,
            "violations": [
                {"x": format_word(x), "y": format_word(y), "common": format_word(z)}
                for x, y, z in self.violations
            ],
        }


def verify_code(cb: Codebook, model: balls.ErrorModel) -> VerifyReport:
    """Exhaustively confirm that the error balls of all codewords are pairwise
    disjoint. Exact: every ball element of every codeword is indexed, so any
    intersecting pair is found."""
    owners: dict[tuple[int, int], int] = {}
    violations: list[tuple[Word, Word, Word]] = []
    n = cb.n
    for idx, w in enumerate(cb.words):
        for key in sorted(balls.ball_ints(to_int(w), n, model)):
            prev = owners.setdefault(key, idx)
            if prev != idx:
                violations.append((cb.words[prev], w, from_int(key[1], key[0])))
    k = len(cb.words)
    return VerifyReport(
        model=model,
        codebook=cb.label,
        pairs_checked=k * (k - 1) // 2,
        violations=tuple(violations),
    )


EQUIV_MAX_BITS = 10

_FLAVORS = {
    "exact": (balls.del_exact, balls.ins_exact),
    "at-most-consecutive": (balls.del_at_most, balls.ins_at_most),
    "at-most-nonconsecutive": (balls.del_at_most_noncons, balls.ins_at_most_noncons),
}


def _conflict_pairs(n: int, model: balls.ErrorModel) -> set[int]:
    """All unordered word pairs whose balls intersect, packed as v1*2^n + v2."""
    owners: dict[tuple[int, int], list[int]] = {}
    for v in range(1 << n):
        for key in balls.ball_ints(v, n, model):
            owners.setdefault(key, []).append(v)
    pairs: set[int] = set()
    for group in owners.values():
        for i, v1 in enumerate(group):
            for v2 in group[i + 1 :]:
                pairs.add((v1 << n) | v2)
    return pairs


def equivalence_check(n: int, b: int, flavor: str) -> bool:
    """Whether deletion-ball disjointness and insertion-ball disjointness agree
    on every pair of length-n words, for the given burst flavor. This is the
    pairwise core of the deletion/insertion duality: a code-level
    counterexample would need a violating pair."""
    if flavor not in _FLAVORS:
        raise DomainError(f"flavor must be one of {sorted(_FLAVORS)}, got {flavor!r}")
    if n > EQUIV_MAX_BITS:
        raise DomainError(f"pairwise sweep capped at n <= {EQUIV_MAX_BITS}")
    del_model, ins_model = (mk(b) for mk in _FLAVORS[flavor])
    return _conflict_pairs(n, del_model) == _conflict_pairs(n, ins_model)


def oracle_decode(cb: Codebook, y: Word, model: balls.ErrorModel) -> DecodeResult:
    """Ground-truth decoder: the unique codeword whose ball contains y. A
    length-n input decodes to itself when it is a codeword (zero errors)."""
    if len(y) == cb.n:
        if y in cb.words:
            return DecodeResult(word=y, window=(1, cb.n), detail={"kind": "none"})
        raise DecodeFailure("length-n input is not a codeword")
    key = (len(y), to_int(y))
    hits = [w for w in cb.words if key in balls.ball_ints(to_int(w), cb.n, model)]
    if not hits:
        raise DecodeFailure("received word lies in no codeword's ball")
    if len(hits) > 1:
        raise CodeIntegrityError(
            f"{len(hits)} codewords share a ball element; codebook is not a code for {model}"
        )
    return DecodeResult(word=hits[0], window=(1, cb.n), detail={"kind": "oracle"})


GREEDY_MAX_BITS = 16


def greedy_code(n: int, model: balls.ErrorModel) -> Codebook:
    """Lexicographic greedy maximal code for the model: accept each word whose
    ball avoids every previously accepted ball."""
    if n > GREEDY_MAX_BITS:
        raise DomainError(f"greedy construction capped at n <= {GREEDY_MAX_BITS}")
    used: set[tuple[int, int]] = set()
    chosen: list[Word] = []
    for bits in itertools.product((0, 1), repeat=n):
        w = tuple(bits)
        b = balls.ball_ints(to_int(w), n, model)
        if used.isdisjoint(b):
            used |= b
            chosen.append(w)
    return codebook_from_words(chosen, n)


# ---------------------------------------------------------------------------
# Channel sampling.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChannelEvent:
    """One admissible error event, reproducible from the seed."""

    model: balls.ErrorModel
    start: int
    deleted: tuple[int, ...] = ()
    inserted_at: int | None = None
    inserted_bits: tuple[int, ...] = ()
    seed: int = 0
    rng: str = field(default=_RNG_NAME)

    def to_json(self) -> dict:
        return {
            "model": str(self.model),
            "start": self.start,
            "deleted_positions": list(self.deleted),
            "inserted_at": self.inserted_at,
            "inserted_bits": list(self.inserted_bits),
            "seed": self.seed,
            "rng": self.rng,
        }


def _admissible_events(n: int, model: balls.ErrorModel) -> list[tuple]:
    kind, b = model.kind, model.b
    events: list[tuple] = []
    if kind is balls.ErrorKind.DEL_EXACT:
        if n <= b:
            raise DomainError("word too short for the model")
        events = [(i, tuple(range(i, i + b)), None, ()) for i in range(1, n - b + 2)]
    elif kind is balls.ErrorKind.DEL_AT_MOST_CONSECUTIVE:
        if n <= b:
            raise DomainError("word too short for the model")
        for a in range(1, b + 1):
            events += [(i, tuple(range(i, i + a)), None, ()) for i in range(1, n - a + 2)]
    elif kind is balls.ErrorKind.DEL_AT_MOST_NONCONSECUTIVE:
        if n <= b:
            raise DomainError("word too short for the model")
        for w in range(1, n - b + 2):
            positions = range(w, w + b)
            for a in range(1, b + 1):
                for subset in itertools.combinations(positions, a):
                    events.append((w, subset, None, ()))
    elif kind is balls.ErrorKind.INS_EXACT:
        for slot in range(n + 1):
            for bits in itertools.product((0, 1), repeat=b):
                events.append((slot, (), slot, bits))
    elif kind is balls.ErrorKind.INS_AT_MOST_CONSECUTIVE:
        for a in range(1, b + 1):
            for slot in range(n + 1):
                for bits in itertools.product((0, 1), repeat=a):
                    events.append((slot, (), slot, bits))
    elif kind is balls.ErrorKind.INS_AT_MOST_NONCONSECUTIVE:
        for a in range(1, b + 1):
            m = n + a
            for w in range(1, max(m - b + 1, 1) + 1):
                for subset in itertools.combinations(range(w, min(w + b, m + 1)), a):
                    for bits in itertools.product((0, 1), repeat=a):
                        events.append((w, subset, None, bits))
    elif kind is balls.ErrorKind.BURST_2_1:
        if n < 3:
            raise DomainError("word too short for the model")
        for i in range(1, n):
            for v in (0, 1):
                events.append((i, (i, i + 1), i, (v,)))
    else:  # pragma: no cover
        raise DomainError(f"unhandled model {model}")
    return events


def _apply_event(x: Word, model: balls.ErrorModel, event: tuple) -> Word:
    kind = model.kind
    start, deleted, inserted_at, bits = event
    if kind in (
        balls.ErrorKind.DEL_EXACT,
        balls.ErrorKind.DEL_AT_MOST_CONSECUTIVE,
        balls.ErrorKind.DEL_AT_MOST_NONCONSECUTIVE,
    ):
        drop = set(deleted)
        return tuple(b for i, b in enumerate(x, start=1) if i not in drop)
    if kind in (balls.ErrorKind.INS_EXACT, balls.ErrorKind.INS_AT_MOST_CONSECUTIVE):
        return x[:inserted_at] + bits + x[inserted_at:]
    if kind is balls.ErrorKind.INS_AT_MOST_NONCONSECUTIVE:
        fill = dict(zip(deleted, bits))
        out: list[int] = []
        xi = 0
        for p in range(1, len(x) + len(bits) + 1):
            if p in fill:
                out.append(fill[p])
            else:
                out.append(x[xi])
                xi += 1
        return tuple(out)
    if kind is balls.ErrorKind.BURST_2_1:
        i = start
        return x[: i - 1] + bits + x[i + 1 :]
    raise DomainError(f"unhandled model {model}")  # pragma: no cover


def apply_error(x: Word, model: balls.ErrorModel, seed: int) -> tuple[Word, ChannelEvent]:
    """Apply one admissible error event drawn uniformly (over events, not over
    outcomes) with a generator fully determined by the seed."""
    events = _admissible_events(len(x), model)
    rng = random.Random(seed)
    start, deleted, inserted_at, bits = events[rng.randrange(len(events))]
    corrupted = _apply_event(x, model, (start, deleted, inserted_at, bits))
    event = ChannelEvent(
        model=model,
        start=start,
        deleted=tuple(deleted),
        inserted_at=inserted_at,
        inserted_bits=tuple(bits),
        seed=seed,
    )
    return corrupted, event
