"""Composite code constructions over the array view.

Families:

* ``cheng1``       - every row of A_b(x) is a VT_0(n/b) code (baseline).
* ``burst-exact``  - row 1 of A_b(x) is a run-length-limited VT code, rows
  2..b share one shifted-VT code; corrects one deletion burst of exactly b.
* ``cl2``          - a whole-word VT residue intersected with burst-exact at
  b=2; corrects a burst of at most 2 consecutive deletions. Stands in for the
  classical two-adjacent-deletions code, at the cost of about log2(n) extra
  redundancy (reports flag this).
* ``at-most-consecutive`` - cl2 intersected with per-level burst-exact-style
  codes for levels 3..b under a universal run cap; corrects bursts of at most
  b consecutive deletions.
* ``c21``          - weight mod 4 plus checksum mod 2n-1; corrects one
  (2,1)-burst (and in particular one deletion).
* ``noncons3`` / ``noncons4`` - VT plus burst-exact plus (2,1)-burst codes on
  the rows of A_2 (and A_3); correct up to 3 (resp. 4) deletions confined to a
  window of 3 (resp. 4) consecutive positions.

Parameters of a family are a flat tuple of residues in a fixed documented
order (see ``param_fields``). Membership is a pure per-word predicate; builds
and best-parameter searches run the same predicate vectorized over the packed
word space in chunks, so the full space is never materialized.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import IO, Iterable

import numpy as np

from . import _enum
from .bitseq import ArrayRep, Word, array_view, flatten, from_int, parse_word, format_word, to_int
from .errors import DecodeFailure, DomainError
from .rll import ceil_log2, urll_cap
from .svt import SvtParams, svt_decode
from .vt import DecodeResult, VtParams, vt_decode


class Family(Enum):
    CHENG1 = "cheng1"
    BURST_EXACT = "burst-exact"
    CL2 = "cl2"
    AT_MOST_CONSECUTIVE = "at-most-consecutive"
    C21 = "c21"
    NONCONS3 = "noncons3"
    NONCONS4 = "noncons4"


def parse_family(name: str) -> Family:
    for fam in Family:
        if fam.value == name:
            return fam
    raise DomainError(f"unknown code family {name!r}")


# Families whose burst parameter is fixed by the family itself.
_FIXED_B = {Family.CL2: 2, Family.C21: 2, Family.NONCONS3: 3, Family.NONCONS4: 4}


def default_burst(family: Family) -> int | None:
    """The burst parameter a family fixes on its own, if any."""
    return _FIXED_B.get(family)


@dataclass(frozen=True)
class CodeSpec:
    family: Family
    n: int
    b: int
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _validate_structure(self.family, self.n, self.b)
        fields = param_fields(self.family, self.b)
        if len(self.params) != len(fields):
            raise DomainError(
                f"{self.family.value} expects {len(fields)} parameters "
                f"({','.join(fields)}), got {len(self.params)}"
            )
        for name, value, top in zip(fields, self.params, param_ranges(self.family, self.n, self.b)):
            if not 0 <= value <= top:
                raise DomainError(f"parameter {name}={value} outside [0, {top}]")

    def params_by_name(self) -> dict[str, int]:
        return dict(zip(param_fields(self.family, self.b), self.params))


def _validate_structure(family: Family, n: int, b: int) -> None:
    if n < 1:
        raise DomainError("code length must be >= 1")
    fixed = _FIXED_B.get(family)
    if fixed is not None and b != fixed:
        raise DomainError(f"{family.value} has burst parameter fixed at {fixed}")
    if family in (Family.CHENG1, Family.BURST_EXACT):
        if b < (2 if family is Family.BURST_EXACT else 1):
            raise DomainError(f"{family.value} needs a larger burst parameter")
        if n % b != 0 or n // b < 2:
            raise DomainError(f"{family.value} needs b | n and n/b >= 2")
    elif family is Family.CL2:
        if n % 2 != 0 or n < 4:
            raise DomainError("cl2 needs an even length >= 4")
    elif family is Family.AT_MOST_CONSECUTIVE:
        if b < 3:
            raise DomainError("at-most-consecutive is defined for b >= 3 (use cl2 for b = 2)")
        if n % math.factorial(b) != 0:
            raise DomainError(f"at-most-consecutive needs b! = {math.factorial(b)} to divide n")
    elif family is Family.C21:
        if n < 4:
            raise DomainError("c21 needs length >= 4")
    elif family in (Family.NONCONS3, Family.NONCONS4):
        if n % math.factorial(b) != 0:
            raise DomainError(f"{family.value} needs b! = {math.factorial(b)} to divide n")
        if n // 2 < 4 or (family is Family.NONCONS4 and n // 3 < 4):
            raise DomainError(f"{family.value} needs longer words at this b")


def _burst_consts(n: int, b: int) -> tuple[int, int, int]:
    """(row length, row-1 run cap, shifted-VT span) for the burst-exact family."""
    m = n // b
    return m, ceil_log2(2 * m), ceil_log2(m) + 2


def param_fields(family: Family, b: int) -> tuple[str, ...]:
    if family is Family.CHENG1:
        return ()
    if family is Family.BURST_EXACT:
        return ("a", "c", "d")
    if family is Family.CL2:
        return ("a_vt", "a2", "c2", "d2")
    if family is Family.AT_MOST_CONSECUTIVE:
        fields = ["a_vt", "a2", "c2", "d2"]
        for lev in range(3, b + 1):
            fields += [f"a{lev}", f"c{lev}", f"d{lev}"]
        return tuple(fields)
    if family is Family.C21:
        return ("a", "c")
    if family is Family.NONCONS3:
        return ("a1", "a3", "c3", "d3", "h1_a", "h1_c", "h2_a", "h2_c")
    if family is Family.NONCONS4:
        return (
            "a1", "a4", "c4", "d4",
            "h1_a", "h1_c", "h2_a", "h2_c",
            "t1_a", "t1_c", "t2_a", "t2_c", "t3_a", "t3_c",
        )
    raise DomainError(f"unhandled family {family}")


def param_ranges(family: Family, n: int, b: int) -> tuple[int, ...]:
    """Inclusive upper bound of every parameter, in param_fields order."""
    if family is Family.CHENG1:
        return ()
    if family is Family.BURST_EXACT:
        m, _, span = _burst_consts(n, b)
        return (m, span - 1, 1)
    if family is Family.CL2:
        m, _, span = _burst_consts(n, 2)
        return (n, m, span - 1, 1)
    if family is Family.AT_MOST_CONSECUTIVE:
        m2, _, span2 = _burst_consts(n, 2)
        cap = urll_cap(n, b)
        tops = [n, m2, span2 - 1, 1]
        for lev in range(3, b + 1):
            tops += [n // lev, cap, 1]
        return tuple(tops)
    if family is Family.C21:
        return (2 * n - 2, 3)
    if family is Family.NONCONS3:
        m, _, span = _burst_consts(n, 3)
        half = n - 2  # checksum modulus 2(n/2) - 1 = n - 1
        return (n, m, span - 1, 1, half, 3, half, 3)
    if family is Family.NONCONS4:
        m, _, span = _burst_consts(n, 4)
        half = n - 2
        third = 2 * (n // 3) - 2
        return (n, m, span - 1, 1, half, 3, half, 3, third, 3, third, 3, third, 3)
    raise DomainError(f"unhandled family {family}")


# ---------------------------------------------------------------------------
# Signatures: for a packed word (or a numpy chunk of packed words) compute the
# structural-qualification flag plus the parameter tuple the word belongs to.
# A word is a member of spec iff it qualifies and its signature equals
# spec.params.
# ---------------------------------------------------------------------------


def _sig_cheng1(n: int, b: int, v):
    m = n // b
    ok = (v & 0) == 0
    for r in range(1, b + 1):
        ok = ok & (_enum.row_weighted_sum_mod(v, n, b, r, m + 1) == 0)
    return ok, ()


def _sig_burst_exact(n: int, b: int, v):
    m, run_cap, span = _burst_consts(n, b)
    row1 = _enum.row_int(v, n, b, 1)
    ok = _enum.max_run_le(row1, m, run_cap)
    a = _enum.row_weighted_sum_mod(v, n, b, 1, m + 1)
    c = _enum.row_weighted_sum_mod(v, n, b, 2, span)
    d = _enum.row_weight_mod(v, n, b, 2, 2)
    for r in range(3, b + 1):
        ok = ok & (_enum.row_weighted_sum_mod(v, n, b, r, span) == c)
        ok = ok & (_enum.row_weight_mod(v, n, b, r, 2) == d)
    return ok, (a, c, d)


def _sig_cl2(n: int, v):
    ok, (a2, c2, d2) = _sig_burst_exact(n, 2, v)
    a_vt = _enum.weighted_sum_mod(v, n, n + 1)
    return ok, (a_vt, a2, c2, d2)


def _sig_at_most(n: int, b: int, v):
    ok, key2 = _sig_cl2(n, v)
    key = list(key2)
    cap = urll_cap(n, b)
    for lev in range(3, b + 1):
        m = n // lev
        row1 = _enum.row_int(v, n, lev, 1)
        ok = ok & _enum.max_run_le(row1, m, cap)
        key.append(_enum.row_weighted_sum_mod(v, n, lev, 1, m + 1))
        c = _enum.row_weighted_sum_mod(v, n, lev, 2, cap + 1)
        d = _enum.row_weight_mod(v, n, lev, 2, 2)
        for r in range(3, lev + 1):
            ok = ok & (_enum.row_weighted_sum_mod(v, n, lev, r, cap + 1) == c)
            ok = ok & (_enum.row_weight_mod(v, n, lev, r, 2) == d)
        key += [c, d]
    return ok, tuple(key)


def _sig_c21(n: int, v):
    ok = (v & 0) == 0
    a = _enum.weighted_sum_mod(v, n, 2 * n - 1)
    c = _enum.weight_mod(v, n, 4)
    return ok, (a, c)


def _sig_noncons3(n: int, v):
    a1 = _enum.weighted_sum_mod(v, n, n + 1)
    ok, (a3, c3, d3) = _sig_burst_exact(n, 3, v)
    halves = []
    for r in (1, 2):
        halves.append(_enum.row_weighted_sum_mod(v, n, 2, r, n - 1))
        halves.append(_enum.row_weight_mod(v, n, 2, r, 4))
    return ok, (a1, a3, c3, d3, *halves)


def _sig_noncons4(n: int, v):
    a1 = _enum.weighted_sum_mod(v, n, n + 1)
    ok, (a4, c4, d4) = _sig_burst_exact(n, 4, v)
    rows = []
    for r in (1, 2):
        rows.append(_enum.row_weighted_sum_mod(v, n, 2, r, n - 1))
        rows.append(_enum.row_weight_mod(v, n, 2, r, 4))
    third_mod = 2 * (n // 3) - 1
    for r in (1, 2, 3):
        rows.append(_enum.row_weighted_sum_mod(v, n, 3, r, third_mod))
        rows.append(_enum.row_weight_mod(v, n, 3, r, 4))
    return ok, (a1, a4, c4, d4, *rows)


def _signature(family: Family, n: int, b: int, v):
    if family is Family.CHENG1:
        return _sig_cheng1(n, b, v)
    if family is Family.BURST_EXACT:
        return _sig_burst_exact(n, b, v)
    if family is Family.CL2:
        return _sig_cl2(n, v)
    if family is Family.AT_MOST_CONSECUTIVE:
        return _sig_at_most(n, b, v)
    if family is Family.C21:
        return _sig_c21(n, v)
    if family is Family.NONCONS3:
        return _sig_noncons3(n, v)
    if family is Family.NONCONS4:
        return _sig_noncons4(n, v)
    raise DomainError(f"unhandled family {family}")


def member(spec: CodeSpec, x: Word) -> bool:
    """Per-word membership predicate."""
    if len(x) != spec.n:
        raise DomainError(f"expected length {spec.n}, got {len(x)}")
    ok, key = _signature(spec.family, spec.n, spec.b, to_int(x))
    return bool(ok) and tuple(int(k) for k in key) == spec.params


# ---------------------------------------------------------------------------
# Codebooks.
# ---------------------------------------------------------------------------

BUILD_MAX_N = 26


@dataclass(frozen=True)
class Codebook:
    n: int
    words: tuple[Word, ...]
    spec: CodeSpec | None = None

    @property
    def cardinality(self) -> int:
        return len(self.words)

    @property
    def redundancy(self) -> float:
        if not self.words:
            return math.inf
        return self.n - math.log2(len(self.words))

    @property
    def label(self) -> str:
        if self.spec is None:
            return f"adhoc(n={self.n},size={len(self.words)})"
        s = self.spec
        return f"{s.family.value}(n={s.n},b={s.b},params={','.join(map(str, s.params))})"


def codebook_from_words(words: Iterable[Word], n: int, spec: CodeSpec | None = None) -> Codebook:
    uniq = sorted(set(words))
    for w in uniq:
        if len(w) != n:
            raise DomainError("codebook words must share one length")
    return Codebook(n=n, words=tuple(uniq), spec=spec)


def build(spec: CodeSpec) -> Codebook:
    """Enumerate all members of spec by streaming the packed word space."""
    if spec.n > BUILD_MAX_N:
        raise DomainError(f"build capped at n <= {BUILD_MAX_N}")
    found: list[int] = []
    for chunk in _enum.iter_chunks(spec.n):
        ok, key = _signature(spec.family, spec.n, spec.b, chunk)
        mask = ok
        for comp, want in zip(key, spec.params):
            mask = mask & (comp == want)
        found.extend(int(v) for v in chunk[mask])
    words = sorted(from_int(v, spec.n) for v in found)
    return Codebook(n=spec.n, words=tuple(words), spec=spec)


def best_params(family: Family, n: int, b: int) -> CodeSpec:
    """The parameter tuple with the largest class, ties broken by the
    lexicographically smallest tuple. Streams the space once, bucketing words
    by their signature."""
    _validate_structure(family, n, b)
    if n > BUILD_MAX_N:
        raise DomainError(f"search capped at n <= {BUILD_MAX_N}")
    if family is Family.CHENG1:
        return CodeSpec(family, n, b, ())
    widths = [max(1, top.bit_length()) for top in param_ranges(family, n, b)]
    if sum(widths) > 62:
        raise DomainError("parameter space too wide to pack")
    counter: Counter[int] = Counter()
    for chunk in _enum.iter_chunks(n):
        ok, key = _signature(family, n, b, chunk)
        packed = chunk & np.uint64(0)
        for comp, w in zip(key, widths):
            packed = (packed << np.uint64(w)) | comp.astype(np.uint64)
        kept = packed[ok]
        vals, cnt = np.unique(kept, return_counts=True)
        for k, c in zip(vals.tolist(), cnt.tolist()):
            counter[int(k)] += int(c)
    if not counter:
        raise DomainError(f"{family.value} has no non-empty parameter class at n={n}")
    best_key, _ = min(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    params = []
    for w in reversed(widths):
        params.append(best_key & ((1 << w) - 1))
        best_key >>= w
    return CodeSpec(family, n, b, tuple(reversed(params)))


# ---------------------------------------------------------------------------
# Codebook files: one header line, then one word per line, sorted.
# ---------------------------------------------------------------------------


def write_codebook(cb: Codebook, out: IO[str]) -> None:
    if cb.spec is None:
        out.write(f"# family=adhoc n={cb.n} b=0 params=-\n")
    else:
        p = ",".join(map(str, cb.spec.params)) or "-"
        out.write(f"# family={cb.spec.family.value} n={cb.spec.n} b={cb.spec.b} params={p}\n")
    for w in cb.words:
        out.write(format_word(w) + "\n")


def read_codebook(lines: Iterable[str]) -> Codebook:
    it = iter(lines)
    try:
        header = next(it).strip()
    except StopIteration:
        raise DomainError("empty codebook file") from None
    if not header.startswith("#"):
        raise DomainError("codebook file must start with a '# family=...' header")
    kv = dict(part.split("=", 1) for part in header[1:].split())
    n = int(kv["n"])
    spec = None
    if kv.get("family", "adhoc") != "adhoc":
        params = () if kv.get("params", "-") == "-" else tuple(int(t) for t in kv["params"].split(","))
        spec = CodeSpec(parse_family(kv["family"]), n, int(kv["b"]), params)
    words = [parse_word(line.strip()) for line in it if line.strip()]
    return codebook_from_words(words, n, spec)


# ---------------------------------------------------------------------------
# Decoding.
# ---------------------------------------------------------------------------


def _delete_burst(x: Word, start: int, size: int) -> Word:
    return x[: start - 1] + x[start - 1 + size :]


def _burst_reachable(x: Word, y: Word, size: int) -> bool:
    return any(_delete_burst(x, i, size) == y for i in range(1, len(x) - size + 2))


def _decode_array_burst(n: int, b: int, a: int, c: int, d: int, span: int, y: Word) -> DecodeResult:
    """Construction core: VT-decode row 1 to localize the lost column, then
    shifted-VT-decode the other rows inside the localized window."""
    m = n // b
    arr = array_view(y, b)
    first = vt_decode(arr.rows[0], VtParams(m, a))
    j1, j2 = first.window
    u = max(1, j1 - 1)
    rows = [first.word]
    svt_params = SvtParams(m, span, c, d)
    for r in range(2, b + 1):
        rows.append(svt_decode(arr.rows[r - 1], svt_params, u).word)
    x = flatten(ArrayRep(rows=tuple(rows)))
    lo = (max(1, j1 - 1) - 1) * b + 1
    hi = min(j2 * b, n)
    return DecodeResult(
        word=x,
        window=(lo, hi),
        detail={"kind": "burst-deletion", "size": b, "columns": (j1, j2)},
    )


def _rebuild(y: Word, positions: tuple[int, ...], bits: tuple[int, ...]) -> Word:
    fill = dict(zip(positions, bits))
    out: list[int] = []
    yi = 0
    for p in range(1, len(y) + len(positions) + 1):
        if p in fill:
            out.append(fill[p])
        else:
            out.append(y[yi])
            yi += 1
    return tuple(out)


def _unique_survivor(spec: CodeSpec, cands: dict[Word, dict]) -> DecodeResult:
    survivors = sorted(x for x in cands if member(spec, x))
    if not survivors:
        raise DecodeFailure("no codeword explains the received word")
    if len(survivors) > 1:
        raise DecodeFailure(f"{len(survivors)} codewords explain the received word")
    x = survivors[0]
    meta = cands[x]
    return DecodeResult(word=x, window=meta.pop("window"), detail=meta)


def _decode_c21(spec: CodeSpec, y: Word) -> DecodeResult:
    n = spec.n
    cands: dict[Word, dict] = {}
    for t in range(n):
        for v in (0, 1):
            x = y[:t] + (v,) + y[t:]
            cands.setdefault(
                x, {"kind": "single-deletion", "position": t + 1, "window": (t + 1, t + 1)}
            )
    for i in range(1, n):
        for b1, b2 in product((0, 1), repeat=2):
            x = y[: i - 1] + (b1, b2) + y[i:]
            cands.setdefault(
                x, {"kind": "burst-2-1", "position": i, "window": (i, i + 1)}
            )
    return _unique_survivor(spec, cands)


def _decode_windowed(spec: CodeSpec, y: Word, a: int) -> DecodeResult:
    """Reverse every a-deletion pattern confined to a window of b consecutive
    positions and keep the unique member among the reconstructions."""
    n, b = spec.n, spec.b
    cands: dict[Word, dict] = {}
    for first in range(1, n + 1):
        for tail in combinations(range(first + 1, min(first + b, n + 1)), a - 1):
            positions = (first, *tail)
            for bits in product((0, 1), repeat=a):
                x = _rebuild(y, positions, bits)
                cands.setdefault(
                    x,
                    {
                        "kind": "windowed-deletion",
                        "positions": positions,
                        "window": (positions[0], positions[-1]),
                    },
                )
    return _unique_survivor(spec, cands)


def decode(spec: CodeSpec, y: Word) -> DecodeResult:
    """Recover the unique codeword whose target-model ball contains y.

    The number of deletions a = n - |y| follows from the received length;
    a = 0 is a pass-through for codewords.
    """
    n = spec.n
    a = n - len(y)
    if a == 0:
        if member(spec, y):
            return DecodeResult(word=y, window=(1, n), detail={"kind": "none"})
        raise DecodeFailure("length-n input is not a codeword of this code")
    if a < 0:
        raise DecodeFailure("received word longer than the code length")
    fam = spec.family
    p = spec.params_by_name()
    if fam in (Family.CHENG1, Family.BURST_EXACT):
        if a != spec.b:
            raise DecodeFailure(f"{fam.value} expects exactly {spec.b} deletions, got {a}")
        if fam is Family.CHENG1:
            result = _decode_cheng1(spec, y)
        else:
            _, _, span = _burst_consts(n, spec.b)
            result = _decode_array_burst(n, spec.b, p["a"], p["c"], p["d"], span, y)
    elif fam is Family.CL2:
        result = _decode_cl2(n, p, y, a)
    elif fam is Family.AT_MOST_CONSECUTIVE:
        if a > spec.b:
            raise DecodeFailure(f"at most {spec.b} deletions supported, got {a}")
        if a == 1 or a == 2:
            result = _decode_cl2(n, p, y, a)
        else:
            cap = urll_cap(n, spec.b)
            result = _decode_array_burst(
                n, a, p[f"a{a}"], p[f"c{a}"], p[f"d{a}"], cap + 1, y
            )
    elif fam is Family.C21:
        if a != 1:
            raise DecodeFailure(f"c21 expects received length {n - 1}, got {len(y)}")
        return _decode_c21(spec, y)
    elif fam in (Family.NONCONS3, Family.NONCONS4):
        if a > spec.b:
            raise DecodeFailure(f"at most {spec.b} deletions supported, got {a}")
        if a == 1:
            result = vt_decode(y, VtParams(n, p["a1"]))
        elif a == spec.b:
            _, _, span = _burst_consts(n, spec.b)
            result = _decode_array_burst(
                n, spec.b, p[f"a{spec.b}"], p[f"c{spec.b}"], p[f"d{spec.b}"], span, y
            )
        else:
            return _decode_windowed(spec, y, a)
    else:  # pragma: no cover
        raise DomainError(f"unhandled family {fam}")
    if not member(spec, result.word) or not _burst_reachable(result.word, y, a):
        raise DecodeFailure("decoded word does not explain the received word")
    return result


def _decode_cheng1(spec: CodeSpec, y: Word) -> DecodeResult:
    m = spec.n // spec.b
    arr = array_view(y, spec.b)
    rows = [vt_decode(row, VtParams(m, 0)) for row in arr.rows]
    x = flatten(ArrayRep(rows=tuple(r.word for r in rows)))
    lo = min(r.window[0] for r in rows)
    hi = max(r.window[1] for r in rows)
    return DecodeResult(
        word=x,
        window=((lo - 1) * spec.b + 1, min(hi * spec.b, spec.n)),
        detail={"kind": "burst-deletion", "size": spec.b},
    )


def _decode_cl2(n: int, p: dict[str, int], y: Word, a: int) -> DecodeResult:
    if a == 1:
        return vt_decode(y, VtParams(n, p["a_vt"]))
    if a == 2:
        _, _, span = _burst_consts(n, 2)
        return _decode_array_burst(n, 2, p["a2"], p["c2"], p["d2"], span, y)
    raise DecodeFailure(f"at most 2 deletions supported, got {a}")


# ---------------------------------------------------------------------------
# Target models and reporting.
# ---------------------------------------------------------------------------


def target_model(spec: CodeSpec):
    from . import balls

    fam = spec.family
    if fam in (Family.CHENG1, Family.BURST_EXACT):
        return balls.del_exact(spec.b)
    if fam in (Family.CL2, Family.AT_MOST_CONSECUTIVE):
        return balls.del_at_most(spec.b)
    if fam is Family.C21:
        return balls.burst21()
    return balls.del_at_most_noncons(spec.b)


def redundancy_report(cb: Codebook) -> dict:
    """JSON-ready measured-vs-formula redundancy summary for a built codebook."""
    from . import bounds

    spec = cb.spec
    if spec is None:
        raise DomainError("redundancy report needs a family codebook")
    refs = bounds.reference_redundancies(spec.n, spec.b)
    formula_key = {
        Family.CHENG1: "cheng_baseline",
        Family.BURST_EXACT: "burst_exact_bound",
        Family.CL2: "two_burst_reference",
        Family.AT_MOST_CONSECUTIVE: "at_most_consecutive_bound",
        Family.C21: "burst21_bound",
        Family.NONCONS3: "noncons3_bound",
        Family.NONCONS4: "noncons4_bound",
    }[spec.family]
    report = {
        "family": spec.family.value,
        "n": spec.n,
        "b": spec.b,
        "params": list(spec.params),
        "cardinality": cb.cardinality,
        "redundancy_measured": None if not cb.words else round(cb.redundancy, 6),
        "redundancy_formula": refs.get(formula_key),
        "lower_bound": refs.get("lower_bound"),
    }
    if spec.family in (Family.CL2, Family.AT_MOST_CONSECUTIVE):
        report["note"] = (
            "the at-most-2 component is a VT intersection with an exact-2-burst "
            "code, which adds about log2(n) redundancy over the two-adjacent-"
            "deletions code the formula column refers to"
        )
    return report
