import io
import itertools
import math

import pytest

from burstcodes import balls, verify
from burstcodes.bitseq import enumerate_words, parse_word
from burstcodes.codes import (
    BUILD_MAX_N,
    CodeSpec,
    Family,
    best_params,
    build,
    codebook_from_words,
    decode,
    member,
    param_fields,
    param_ranges,
    parse_family,
    read_codebook,
    redundancy_report,
    target_model,
    write_codebook,
)
from burstcodes.errors import DecodeFailure, DomainError


def _delete(x, positions):
    drop = set(positions)
    return tuple(b for i, b in enumerate(x, start=1) if i not in drop)


def _window_patterns(n, b, a):
    for first in range(1, n + 1):
        for tail in itertools.combinations(range(first + 1, min(first + b, n + 1)), a - 1):
            yield (first, *tail)


def test_parse_family_and_structure():
    assert parse_family("burst-exact") is Family.BURST_EXACT
    with pytest.raises(DomainError):
        parse_family("nope")
    with pytest.raises(DomainError):
        CodeSpec(Family.BURST_EXACT, 9, 2, (0, 0, 0))  # 2 does not divide 9
    with pytest.raises(DomainError):
        CodeSpec(Family.NONCONS3, 12, 2, ())  # b fixed at 3
    with pytest.raises(DomainError):
        CodeSpec(Family.AT_MOST_CONSECUTIVE, 12, 4, tuple([0] * 10))  # 24 | 12 fails
    with pytest.raises(DomainError):
        CodeSpec(Family.BURST_EXACT, 8, 2, (9, 0, 0))  # residue out of range


def test_param_fields_and_ranges_agree():
    cases = (
        (Family.CHENG1, 8, 2),
        (Family.BURST_EXACT, 12, 3),
        (Family.CL2, 8, 2),
        (Family.AT_MOST_CONSECUTIVE, 12, 3),
        (Family.C21, 8, 2),
        (Family.NONCONS3, 12, 3),
        (Family.NONCONS4, 24, 4),
    )
    for family, n, b in cases:
        assert len(param_fields(family, b)) == len(param_ranges(family, n, b))


def test_cheng1_membership_and_size():
    spec = CodeSpec(Family.CHENG1, 8, 2)
    cb = build(spec)
    assert cb.cardinality == 16  # 4 choices per row, independent rows
    assert cb.redundancy == 4.0
    for w in cb.words:
        assert member(spec, w)


def test_burst_exact_run_cap_excludes_constant_word():
    x = parse_word("00000000")
    for a in range(5):
        for c in range(4):
            for d in (0, 1):
                assert not member(CodeSpec(Family.BURST_EXACT, 8, 2, (a, c, d)), x)


def test_c21_membership_example():
    # weight 4 = 0 mod 4, weighted sum 18 = 3 mod 15
    assert member(CodeSpec(Family.C21, 8, 2, (3, 0)), parse_word("11000011"))
    assert not member(CodeSpec(Family.C21, 8, 2, (3, 1)), parse_word("11000011"))


@pytest.mark.parametrize(
    "family,n,b",
    [
        (Family.CHENG1, 8, 2),
        (Family.BURST_EXACT, 8, 2),
        (Family.BURST_EXACT, 12, 3),
        (Family.CL2, 8, 2),
        (Family.AT_MOST_CONSECUTIVE, 12, 3),
        (Family.C21, 10, 2),
        (Family.NONCONS3, 12, 3),
    ],
)
def test_build_matches_member_filter(family, n, b):
    spec = best_params(family, n, b)
    cb = build(spec)
    naive = sorted(w for w in enumerate_words(n) if member(spec, w))
    assert list(cb.words) == naive


def test_best_params_matches_naive_sweep():
    # oracle: count every parameter class by scanning the space per class
    n, b = 8, 2
    best = None
    for a in range(5):
        for c in range(4):
            for d in (0, 1):
                spec = CodeSpec(Family.BURST_EXACT, n, b, (a, c, d))
                size = sum(1 for w in enumerate_words(n) if member(spec, w))
                key = (-size, (a, c, d))
                if best is None or key < best:
                    best = key
    got = best_params(Family.BURST_EXACT, n, b)
    assert got.params == best[1]
    assert len(build(got).words) == -best[0]


def test_best_params_c21_pigeonhole():
    spec = best_params(Family.C21, 8, 2)
    cb = build(spec)
    assert cb.cardinality >= math.ceil(256 / (4 * 15))


def test_empty_class_reports_zero():
    # the all-zero parameters of burst-exact at n=8 may or may not be empty;
    # force an empty class instead via a c21 class check
    sizes = {}
    for w in enumerate_words(4):
        a = sum(i * b for i, b in enumerate(w, start=1)) % 7
        c = sum(w) % 4
        sizes[(a, c)] = sizes.get((a, c), 0) + 1
    empty = next(
        (a, c) for a in range(7) for c in range(4) if (a, c) not in sizes
    )
    cb = build(CodeSpec(Family.C21, 4, 2, empty))
    assert cb.cardinality == 0
    assert cb.redundancy == math.inf


def test_decode_identity_and_length_errors():
    spec = best_params(Family.BURST_EXACT, 8, 2)
    cb = build(spec)
    w = cb.words[0]
    res = decode(spec, w)
    assert res.word == w and res.detail["kind"] == "none"
    with pytest.raises(DecodeFailure):
        decode(spec, (0,) * 8 if w != (0,) * 8 else (1,) * 8)
    with pytest.raises(DecodeFailure):
        decode(spec, w + (0,))
    with pytest.raises(DecodeFailure):
        decode(spec, w[:5])  # wrong deletion count


def test_decode_agrees_with_oracle_all_families_small():
    cases = (
        (Family.CHENG1, 8, 2),
        (Family.BURST_EXACT, 8, 2),
        (Family.CL2, 8, 2),
        (Family.AT_MOST_CONSECUTIVE, 12, 3),
        (Family.C21, 8, 2),
        (Family.NONCONS3, 12, 3),
    )
    for family, n, b in cases:
        spec = best_params(family, n, b)
        cb = build(spec)
        model = target_model(spec)
        for w in cb.words:
            for y in sorted(balls.ball(w, model)):
                res = decode(spec, y)
                assert res.word == w
                assert verify.oracle_decode(cb, y, model).word == w


def test_noncons3_gap_patterns_round_trip():
    spec = best_params(Family.NONCONS3, 12, 3)
    cb = build(spec)
    assert cb.cardinality >= 1
    for w in cb.words:
        for a in (1, 2, 3):
            for positions in _window_patterns(12, 3, a):
                y = _delete(w, positions)
                assert decode(spec, y).word == w


def test_insertion_duals_for_composite_families():
    # the deletion-correcting codebooks also verify against the mirrored
    # insertion models
    cases = (
        (Family.AT_MOST_CONSECUTIVE, 12, 3, balls.ins_at_most(3)),
        (Family.NONCONS3, 12, 3, balls.ins_at_most_noncons(3)),
        (Family.CL2, 10, 2, balls.ins_at_most(2)),
    )
    for family, n, b, model in cases:
        cb = build(best_params(family, n, b))
        assert verify.verify_code(cb, model).passed, family


def test_burst_exact_pigeonhole_bound():
    # the best class holds at least its share of the run-cap-qualified words
    n, b = 8, 2
    spec = best_params(Family.BURST_EXACT, n, b)
    m = n // b
    qualified = 0
    from burstcodes.bitseq import array_view
    from burstcodes.rll import ceil_log2, max_run

    for w in enumerate_words(n):
        if max_run(array_view(w, b).rows[0]) <= ceil_log2(2 * m):
            qualified += 1
    classes = (m + 1) * (ceil_log2(m) + 2) * 2
    assert build(spec).cardinality >= qualified / classes


def test_codebook_file_round_trip():
    spec = best_params(Family.BURST_EXACT, 8, 2)
    cb = build(spec)
    buf = io.StringIO()
    write_codebook(cb, buf)
    text = buf.getvalue()
    assert text.startswith("# family=burst-exact n=8 b=2 params=")
    lines = text.splitlines()
    assert lines[1:] == sorted(lines[1:])
    back = read_codebook(io.StringIO(text))
    assert back.words == cb.words
    assert back.spec == spec


def test_codebook_file_adhoc():
    cb = codebook_from_words([parse_word("0000"), parse_word("1111")], 4)
    buf = io.StringIO()
    write_codebook(cb, buf)
    back = read_codebook(io.StringIO(buf.getvalue()))
    assert back.words == cb.words and back.spec is None


def test_redundancy_report_fields():
    spec = best_params(Family.BURST_EXACT, 12, 2)
    cb = build(spec)
    rep = redundancy_report(cb)
    assert rep["family"] == "burst-exact"
    assert rep["cardinality"] == cb.cardinality
    assert rep["redundancy_measured"] == round(cb.redundancy, 6)
    assert rep["lower_bound"] is not None
    assert rep["redundancy_formula"] is not None
    assert "note" not in rep

    spec = best_params(Family.AT_MOST_CONSECUTIVE, 12, 3)
    rep = redundancy_report(build(spec))
    assert "note" in rep  # substituted two-burst component is flagged


def test_build_cap():
    with pytest.raises(DomainError):
        build(CodeSpec(Family.CHENG1, BUILD_MAX_N + 2, 2))


def test_target_models():
    assert target_model(CodeSpec(Family.CHENG1, 8, 2)).kind is balls.ErrorKind.DEL_EXACT
    assert (
        target_model(best_params(Family.C21, 8, 2)).kind is balls.ErrorKind.BURST_2_1
    )
