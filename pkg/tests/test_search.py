from __future__ import annotations

import pytest

from conftest import load_sample
from tanglekit.braidcore import BraidWord
from tanglekit.invariants import format_poly
from tanglekit.isotopy import MoveInstance, connected_sum, creation_annihilation_pairs, replay, standardize, transpose
from tanglekit.knotaction import TwoBridgeForm, figure_eight, mirror, trefoil, two_bridge
from tanglekit.search import (
    Distinct,
    Equal,
    Unknown,
    align_words,
    canonical_key,
    equivalent,
    link_invariants,
    summand_exchange,
)
from tanglekit.tanglecalc import braid_block, identity, parse, unit_circle, validate

CAPS_LEFT_FIRST = parse("A[0,2; >ud] ; A[0,0; >]")
CAPS_RIGHT_FIRST = parse("A[2,0; ud>] ; A[0,0; >]")


def test_canonical_key_ignores_braid_words():
    a = validate([braid_block("s1 s2 s1", "uuu")])
    b = validate([braid_block("s2 s1 s2", "uuu")])
    c = validate([braid_block("s1 s2", "uuu")])
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(c)


def test_align_words_rewrites_into_the_goal():
    a = validate([braid_block("s1 s2 s1", "uuu")])
    b = validate([braid_block("s2 s1 s2", "uuu")])
    moves = align_words(a, b)
    assert [m.move for m in moves] == ["T2", "T1"]
    assert replay(a, moves) == b
    assert align_words(a, a) == []


def test_swapped_caps_are_equal():
    verdict = equivalent(CAPS_LEFT_FIRST, CAPS_RIGHT_FIRST)
    assert isinstance(verdict, Equal)
    assert verdict.trace == (MoveInstance.make("T3", 0, side="right"),)
    assert replay(CAPS_LEFT_FIRST, verdict.trace) == CAPS_RIGHT_FIRST


def test_zero_budget_is_unknown():
    assert equivalent(CAPS_LEFT_FIRST, CAPS_RIGHT_FIRST, budget=0) == Unknown(0, 0)


def test_budget_from_settings(monkeypatch):
    monkeypatch.setenv("TANGLEKIT_BUDGET", "0")
    assert isinstance(equivalent(CAPS_LEFT_FIRST, CAPS_RIGHT_FIRST), Unknown)


def test_kink_is_a_straight_strand():
    kink = load_sample("kinked_strand.tgl")
    verdict = equivalent(kink, identity("u"))
    assert isinstance(verdict, Equal)
    assert replay(kink, verdict.trace) == identity("u")


def test_framed_kink_is_not_a_straight_strand():
    verdict = equivalent(load_sample("kinked_strand.tgl"), identity("u"), framed=True)
    assert verdict == Distinct("writhe", "-1", "0")


def test_boundary_mismatch():
    verdict = equivalent(identity("u"), identity("d"))
    assert verdict == Distinct("boundary", "u -> u", "d -> d")


def test_unknot_and_trefoil_differ():
    verdict = equivalent(unit_circle(), trefoil())
    assert verdict == Distinct("jones", "1", "A^-4 + A^-12 - A^-16")


def test_trefoil_and_mirror_differ_by_jones():
    verdict = equivalent(trefoil(), mirror(trefoil()))
    assert isinstance(verdict, Distinct)
    assert verdict.invariant == "jones"


def test_trivial_two_bridge_is_the_unknot():
    e4 = two_bridge(TwoBridgeForm.from_braid(BraidWord.identity(4)))
    verdict = equivalent(e4, unit_circle())
    assert isinstance(verdict, Equal)
    assert replay(e4, verdict.trace) == unit_circle()


STRANDS = {"strand": lambda: identity("u"), "kink": lambda: load_sample("kinked_strand.tgl")}


@pytest.mark.parametrize("index", range(4))
@pytest.mark.parametrize("name", sorted(STRANDS))
def test_creation_annihilation_pairs_are_equal(name, index):
    lhs, rhs = creation_annihilation_pairs(STRANDS[name]())[index]
    verdict = equivalent(lhs, rhs)
    assert isinstance(verdict, Equal)
    assert replay(lhs, verdict.trace) == rhs


@pytest.mark.parametrize("name", sorted(STRANDS))
def test_double_transpose(name):
    t = STRANDS[name]()
    verdict = equivalent(transpose(transpose(t)), t)
    assert isinstance(verdict, Equal)
    assert replay(transpose(transpose(t)), verdict.trace) == t


SUMMANDS = [trefoil, figure_eight, unit_circle]


@pytest.mark.parametrize("make", SUMMANDS, ids=lambda f: f.__name__)
def test_unit_circle_is_a_unit_for_the_sum(make):
    k = standardize(make())
    for total in (connected_sum(k, unit_circle()), connected_sum(unit_circle(), k)):
        verdict = equivalent(total, k)
        assert isinstance(verdict, Equal)
        assert replay(total, verdict.trace) == k


def test_connected_sum_is_associative():
    k1, k2, k3 = trefoil(), figure_eight(), mirror(trefoil())
    lhs = connected_sum(connected_sum(k1, k2), k3)
    rhs = connected_sum(k1, connected_sum(k2, k3))
    verdict = equivalent(lhs, rhs)
    assert isinstance(verdict, Equal)
    assert replay(lhs, verdict.trace) == rhs


@pytest.mark.parametrize(
    "first,second",
    [(trefoil, figure_eight), (figure_eight, trefoil), (trefoil, lambda: mirror(trefoil()))],
    ids=["3_1-4_1", "4_1-3_1", "3_1-mirror"],
)
def test_connected_sum_commutes(first, second):
    k1, k2 = first(), second()
    lhs, rhs = connected_sum(k1, k2), connected_sum(k2, k1)
    assert len(lhs.items) <= 10
    verdict = equivalent(lhs, rhs)
    assert isinstance(verdict, Equal)
    assert replay(lhs, verdict.trace) == rhs


def test_framed_connected_sum_commutes():
    k1, k2 = trefoil(), figure_eight()
    lhs, rhs = connected_sum(k1, k2, framed=True), connected_sum(k2, k1, framed=True)
    verdict = equivalent(lhs, rhs, framed=True)
    assert isinstance(verdict, Equal)
    assert all(m.move != "T6" for m in verdict.trace)


def test_summand_exchange_needs_matching_summands():
    k1, k2 = trefoil(), figure_eight()
    assert summand_exchange(connected_sum(k1, k2), connected_sum(k1, k1)) is None
    assert summand_exchange(unit_circle(), unit_circle()) is None


def test_link_invariants():
    data = link_invariants(trefoil())
    assert data["components"] == 1
    assert data["writhe"] == 3
    assert format_poly(data["jones"]) == "A^-4 + A^-12 - A^-16"


def test_link_invariants_over_the_cap(monkeypatch):
    monkeypatch.setenv("TANGLEKIT_CROSSING_CAP", "2")
    data = link_invariants(trefoil())
    assert data["bracket"] is None and data["jones"] is None
    assert data["writhe"] == 3
