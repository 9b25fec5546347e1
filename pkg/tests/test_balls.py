import math

import pytest

from burstcodes import balls
from burstcodes.balls import (
    ball,
    ball_ints,
    ball_size_distribution,
    ball_size_formula,
    ball_size_tally,
    burst21,
    del_at_most,
    del_at_most_noncons,
    del_exact,
    ins_at_most,
    ins_at_most_noncons,
    ins_exact,
    restricted_burst21_ball,
    words_with_runs,
)
from burstcodes.bitseq import enumerate_words, format_word, parse_word, to_int
from burstcodes.errors import DomainError


def _strs(ws):
    return sorted(format_word(w) for w in ws)


def test_burst21_worked_example():
    x = parse_word("010010")
    assert _strs(ball(x, burst21())) == _strs(
        map(parse_word, ["00010", "10010", "01010", "01110", "01000", "01001"])
    )


def test_constant_word_balls():
    x = parse_word("000000")
    assert ball(x, del_exact(2)) == {parse_word("0000")}
    assert ball(x, del_at_most(2)) == {parse_word("00000"), parse_word("0000")}


def test_del_exact_matches_formula_small():
    for n, b in ((6, 2), (6, 3), (8, 2), (8, 4), (9, 3), (12, 3)):
        for x in enumerate_words(n):
            assert len(ball(x, del_exact(b))) == ball_size_formula(x, b)


def test_ball_size_formula_bounds_and_edges():
    for x in enumerate_words(8):
        assert 1 <= ball_size_formula(x, 2) <= 7  # n - b + 1
    assert ball_size_formula(parse_word("00000000"), 2) == 1
    assert ball_size_formula(parse_word("0101"), 1) == 4  # alternating, b=1: r(x) = n
    with pytest.raises(DomainError):
        ball_size_formula(parse_word("010"), 2)


def test_length_preconditions():
    with pytest.raises(DomainError):
        ball(parse_word("01"), del_exact(2))
    with pytest.raises(DomainError):
        ball(parse_word("01"), burst21())
    with pytest.raises(DomainError):
        ball(parse_word("011"), del_at_most_noncons(3))


def test_noncons_ball_supersets():
    # at-most-consecutive is a union of exact balls; non-consecutive contains it
    for x in enumerate_words(8):
        exact = ball(x, del_exact(3))
        atmost = ball(x, del_at_most(3))
        noncons = ball(x, del_at_most_noncons(3))
        assert exact <= atmost <= noncons
        assert ball(x, del_exact(1)) <= ball(x, burst21())


def test_insertion_balls_mirror_deletion_balls():
    # y is an insertion outcome of x iff x is the matching deletion outcome of y
    for n, b in ((5, 2), (6, 3)):
        pairs = (
            (ins_exact(b), del_exact(b), (b,)),
            (ins_at_most(b), del_at_most(b), tuple(range(1, b + 1))),
            (ins_at_most_noncons(b), del_at_most_noncons(b), tuple(range(1, b + 1))),
        )
        for ins_model, del_model, sizes in pairs:
            expected: dict[int, set] = {v: set() for v in range(1 << n)}
            for a in sizes:
                for y in enumerate_words(n + a):
                    for m, v in ball_ints(to_int(y), n + a, del_model):
                        if m == n:
                            expected[v].add(y)
            for x in enumerate_words(n):
                assert ball(x, ins_model) == expected[to_int(x)]


def test_monotonicity_under_deletion():
    # any burst deletion can only shrink the exact-burst ball size
    for n, b in ((8, 2), (12, 2), (12, 3), (12, 4)):
        for y in enumerate_words(n):
            size_y = ball_size_formula(y, b)
            for x in ball(y, del_exact(b)):
                assert size_y >= ball_size_formula(x, b)


def test_row_decomposition_of_burst_outputs():
    # each row of the array view of a burst output is one deletion of the
    # corresponding input row
    from burstcodes.bitseq import array_view

    for n, b in ((8, 2), (12, 3), (12, 4)):
        for x in enumerate_words(n):
            rows_x = array_view(x, b).rows
            for y in ball(x, del_exact(b)):
                rows_y = array_view(y, b).rows
                for rx, ry in zip(rows_x, rows_y):
                    assert ry in ball(rx, del_exact(1))


def test_claim1_restricted_burst21_containment():
    for n in range(3, 11):
        for x in enumerate_words(n):
            d1 = ball(x, del_exact(1))
            for b1 in (0, 1):
                for b2 in (0, 1):
                    for a in (0, 1):
                        if (a, b1, b2) in ((1, 0, 0), (0, 1, 1)):
                            continue
                        assert restricted_burst21_ball(x, (b1, b2), a) <= d1


def test_words_with_runs_counts():
    for n in range(1, 13):
        tally = {}
        for x in enumerate_words(n):
            from burstcodes.bitseq import run_count

            r = run_count(x)
            tally[r] = tally.get(r, 0) + 1
        for r in range(1, n + 1):
            assert tally.get(r, 0) == words_with_runs(n, r) == 2 * math.comb(n - 1, r - 1)


def test_distribution_formula_matches_tally():
    dist = ball_size_distribution(8, 2)
    assert dist.counts[1] == 4  # both rows constant: 2 x 2 choices
    assert dist.total() == 256
    for n, b in ((8, 2), (12, 3)):
        dist = ball_size_distribution(n, b)
        assert dist.counts == ball_size_tally(n, b)
        assert dist.total() == 1 << n


def test_distribution_report_shape():
    rep = balls.distribution_report(6, 2)
    assert rep["n"] == 6 and rep["b"] == 2
    assert all(row["formula"] == row["enumerated"] for row in rep["counts"])
    assert sum(row["formula"] for row in rep["counts"]) == 64
