"""Run-length-limited machinery.

Three pieces live here: counting of the set S_n(f) of words whose longest run
is at most f, the universal constraint that applies a shared run cap to the
first row of every array view A_i(x) for 3 <= i <= b, and a systematic
single-redundancy-bit encoder that maps any length-n word to a length-(n+1)
word with maximum run ceil(log2 n) + 3.

The encoder appends a sentinel 0, then repeatedly excises ceil(log2 n) + 3
bits from any run still longer than that and appends a fixed-width marker
block (1, position, 0, 1) on the right; the decoder pops marker blocks off the
right and reinserts the excised runs. A run long enough to fire k times simply
produces k identical marker blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _enum
from .bitseq import Word
from .errors import DecodeFailure, DomainError


def max_run(x: Word) -> int:
    """Length of the longest run in x."""
    best = run = 1
    for i in range(1, len(x)):
        run = run + 1 if x[i] == x[i - 1] else 1
        best = max(best, run)
    return best


def ceil_log2(k: int) -> int:
    if k < 1:
        raise DomainError("ceil_log2 needs a positive argument")
    return (k - 1).bit_length()


@dataclass(frozen=True)
class RllSpec:
    """Words of length n whose longest run is at most f."""

    n: int
    f: int

    def __post_init__(self) -> None:
        if not 1 <= self.f <= self.n:
            raise DomainError(f"run cap must satisfy 1 <= f <= n, got f={self.f}, n={self.n}")


def rll_count(spec: RllSpec) -> int:
    """|S_n(f)| via the composition recurrence: runs alternate values, so the
    count is twice the number of compositions of n into parts of size <= f."""
    if spec.n > 30:
        raise DomainError("count capped at n <= 30")
    n, f = spec.n, spec.f
    comps = [0] * (n + 1)
    comps[0] = 1
    for ln in range(1, n + 1):
        comps[ln] = sum(comps[ln - k] for k in range(1, min(f, ln) + 1))
    return 2 * comps[n]


def rll_count_enumerated(spec: RllSpec) -> int:
    """|S_n(f)| by sweeping all 2^n words; oracle for rll_count."""
    if spec.n > 24:
        raise DomainError("enumeration capped at n <= 24")
    return _enum.count_max_run_le(spec.n, spec.f)


# ---------------------------------------------------------------------------
# Systematic encoder (one redundancy bit, output run cap ceil(log2 n) + 3).
# ---------------------------------------------------------------------------


def _block_size(n: int) -> int:
    return ceil_log2(n) + 3


def rll_encode(x: Word, trace: bool = False):
    """Encode x (length n >= 2) into a length-(n+1) word with max run <=
    ceil(log2 n) + 3. With trace=True also returns the intermediate word after
    each excision."""
    n = len(x)
    if n < 2:
        raise DomainError("encoding needs length >= 2")
    width = ceil_log2(n)
    block = _block_size(n)
    y = list(x) + [0]
    i = 1
    i_end = n
    steps: list[Word] = []
    while i <= i_end:
        val = y[i - 1]
        stretch = 1
        while i - 1 + stretch < len(y) and y[i - 1 + stretch] == val:
            stretch += 1
        if stretch >= block + 1:
            marker = [1] + [(i >> (width - 1 - k)) & 1 for k in range(width)] + [0, 1]
            del y[i - 1 : i - 1 + block]
            y.extend(marker)
            i_end -= block
            if trace:
                steps.append(tuple(y))
        else:
            i += 1
    return (tuple(y), steps) if trace else tuple(y)


def rll_decode(y: Word) -> Word:
    """Invert rll_encode: pop marker blocks off the right while the last bit is
    1, reinserting the excised run each time; then strip the sentinel."""
    n = len(y) - 1
    if n < 2:
        raise DomainError("decoding needs length >= 3")
    width = ceil_log2(n)
    block = _block_size(n)
    buf = list(y)
    while buf[-1] == 1:
        if len(buf) < block + 1:
            raise DecodeFailure("trailing marker block truncated")
        marker = buf[-block:]
        pos = 0
        for k in range(width):
            pos = (pos << 1) | marker[1 + k]
        del buf[-block:]
        if not 1 <= pos <= len(buf):
            raise DecodeFailure(f"marker names position {pos} outside the word")
        buf[pos - 1 : pos - 1] = [buf[pos - 1]] * block
    if len(buf) != n + 1:
        raise DecodeFailure("marker blocks inconsistent with declared length")
    return tuple(buf[:n])


# ---------------------------------------------------------------------------
# Universal constraint across array views.
# ---------------------------------------------------------------------------


def urll_cap(n: int, b: int) -> int:
    """Default run cap for the universal constraint: ceil(log2(n log2 b)) + 1."""
    if b < 3:
        raise DomainError("universal constraint applies for b >= 3")
    return math.ceil(math.log2(n * math.log2(b))) + 1


@dataclass(frozen=True)
class UrllSpec:
    """Run cap f on the first row of A_i(x) for every 3 <= i <= b."""

    n: int
    b: int
    f: int | None = None

    def __post_init__(self) -> None:
        if self.b < 3:
            raise DomainError("universal constraint applies for b >= 3")
        for i in range(3, self.b + 1):
            if self.n % i != 0:
                raise DomainError(f"level {i} does not divide n={self.n}")
        if self.f is None:
            object.__setattr__(self, "f", urll_cap(self.n, self.b))

    @property
    def cap(self) -> int:
        assert self.f is not None
        return self.f


def urll_member(x: Word, spec: UrllSpec) -> bool:
    if len(x) != spec.n:
        raise DomainError(f"expected length {spec.n}, got {len(x)}")
    for i in range(3, spec.b + 1):
        m = spec.n // i
        row = tuple(x[(j * i)] for j in range(m))
        if max_run(row) > spec.cap:
            return False
    return True


def urll_count(spec: UrllSpec) -> int:
    """|U_{n,b}(f)| by a vectorized sweep over all 2^n words."""
    if spec.n > 30:
        raise DomainError("count capped at n <= 30")
    import numpy as np

    total = 0
    for chunk in _enum.iter_chunks(spec.n):
        ok = (chunk & 0) == 0
        for i in range(3, spec.b + 1):
            m = spec.n // i
            row = _enum.row_int(chunk, spec.n, i, 1)
            ok = ok & _enum.max_run_le(row, m, spec.cap)
        total += int(np.count_nonzero(ok))
    return total
