from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import braid_words, load_sample
from tanglekit.errors import SlideError
from tanglekit.invariants import jones, same_poly, tangle_writhe
from tanglekit.isotopy import connected_sum, replay, standardize
from tanglekit.knotaction import (
    figure_eight,
    trefoil,
    twist,
    twist_alternatives,
    twist_power,
    twist_switching_pairs,
)
from tanglekit.sliding import (
    STANDARD_CURL,
    Box,
    Curl,
    MoveLog,
    box_tangle,
    commute_summands,
    curls,
    find_curl,
    fold_top,
    standardize_curls,
    turn_curl,
    with_curl,
)
from tanglekit.tanglecalc import BraidBlock, Dir, Tangle, closure, flip_level, rotate, unit_circle

BOTH = [Dir.UP, Dir.DOWN]


@settings(max_examples=40, deadline=None)
@given(braid_words(3))
def test_rotating_a_braid_twice_gives_it_back(b):
    t = Tangle((BraidBlock(b, (Dir.UP, Dir.DOWN, Dir.UP)),), (Dir.UP, Dir.DOWN, Dir.UP))
    turned = rotate(t)
    assert turned.source == flip_level(reversed(t.target))
    assert rotate(turned) == t


@pytest.mark.parametrize("name", ["trefoil.tgl", "kinked_strand.tgl", "lambda3.tgl"])
def test_rotation_keeps_the_writhe(name):
    t = load_sample(name)
    assert tangle_writhe(rotate(t)) == tangle_writhe(t)
    assert rotate(rotate(t)) == t


def test_fold_top_boxes_the_upper_summand():
    k = connected_sum(trefoil(), figure_eight())
    cut = len(standardize(figure_eight()).items) - 1
    log = MoveLog(k)
    box = fold_top(log, cut)
    assert box == Box(cut, len(k.items) + 1, 1)
    z = box_tangle(log.tangle, box)
    assert z.source == z.target == (Dir.UP,)
    assert replay(k, log.trace) == log.tangle


@pytest.mark.parametrize(
    "first,second",
    [(trefoil, figure_eight), (figure_eight, trefoil), (trefoil, trefoil)],
    ids=["3_1-4_1", "4_1-3_1", "3_1-3_1"],
)
def test_commute_summands(first, second):
    k1, k2 = first(), second()
    start = connected_sum(k1, k2)
    log = commute_summands(start, len(standardize(k2).items) - 1)
    assert log.tangle == connected_sum(k2, k1)
    assert replay(start, log.trace) == log.tangle
    assert all(m.move in {"T1", "T2", "T3", "T4", "T5"} for m in log.trace)


def test_commute_needs_a_standard_knot():
    with pytest.raises(SlideError):
        commute_summands(twist(), 1)
    with pytest.raises(SlideError):
        commute_summands(unit_circle(), 5)


# ---------------------------------------------------------------------------
# curls


def test_curl_shapes_of_the_twist_presentations():
    assert find_curl(twist(Dir.UP), 0) == Curl(0, "a", 0, 1)
    assert find_curl(twist_power(Dir.UP, 1), 0) == Curl(0, "d", 0, 1)
    assert [find_curl(t, 0).shape for t in twist_alternatives(Dir.UP)] == ["b", "c", "d"]
    assert find_curl(twist_power(Dir.UP, 2), 0) is None
    assert find_curl(unit_circle(), 0) is None


@pytest.mark.parametrize("shape", ["a", "b", "c", "d", "e", "q"])
def test_with_curl_draws_every_shape(shape):
    drawn = with_curl(twist(Dir.UP), Curl(0, shape, 0, -1))
    assert find_curl(drawn, 0) == Curl(0, shape, 0, -1)
    assert tangle_writhe(drawn) == -1


@pytest.mark.parametrize("d", BOTH)
def test_every_presentation_reaches_the_standard_curl(d):
    base = standardize_curls(twist(d))
    assert replay(twist(d), base.trace) == base.tangle
    assert find_curl(base.tangle, 0).shape == STANDARD_CURL
    for t in twist_alternatives(d) + [twist_power(d, 1)]:
        log = standardize_curls(t)
        assert log.tangle == base.tangle
        assert replay(t, log.trace) == base.tangle


@pytest.mark.parametrize("writhe", [1, -1])
@pytest.mark.parametrize("shape", ["a", "b", "c", "d", "q"])
def test_standard_curl_keeps_the_framing(shape, writhe):
    drawn = with_curl(twist(Dir.UP), Curl(0, shape, 0, writhe))
    log = standardize_curls(drawn)
    assert log.tangle == with_curl(drawn, Curl(0, STANDARD_CURL, 0, writhe))
    assert tangle_writhe(log.tangle) == writhe
    assert same_poly(jones(closure(log.tangle)), jones(closure(drawn)))


@pytest.mark.parametrize("d", BOTH)
def test_curls_swing_across_cups_and_caps(d):
    for lhs, rhs in twist_switching_pairs(d):
        left, right = standardize_curls(lhs).tangle, standardize_curls(rhs).tangle
        log = turn_curl(left, curls(left)[0])
        assert log is not None
        assert standardize_curls(log.tangle).tangle == right
        assert replay(left, log.trace) == log.tangle


def test_lonely_curl_does_not_turn():
    t = twist(Dir.UP)
    assert turn_curl(t, find_curl(t, 0)) is None
