from __future__ import annotations

import random

import pytest
import sympy

from conftest import load_sample
from tanglekit.errors import CrossingCapExceeded, NotALink
from tanglekit.invariants import (
    DELTA,
    A,
    T,
    crossing_signs,
    format_poly,
    in_t,
    inverted,
    jones,
    kauffman_bracket,
    poly_terms,
    same_poly,
    tangle_writhe,
    writhe,
)
from tanglekit.isotopy import apply_move, legal_moves
from tanglekit.knotaction import figure_eight, hopf_link, mirror, trefoil
from tanglekit.tanglecalc import closure, crossing_count, cup, identity, make_cap, unit_circle, validate

TREFOIL_BRACKET = -A**5 - A**-3 + A**-7
TREFOIL_JONES = A**-4 + A**-12 - A**-16
FIGURE_EIGHT_JONES = A**8 - A**4 + 1 - A**-4 + A**-8


def two_circles():
    outer = cup("", "<")
    inner = cup("du", "<")
    upper = make_cap(inner.target, 2)
    return validate([outer, inner, upper, make_cap(upper.target, 0)])


def test_poly_helpers():
    assert same_poly(A * A**-1, 1)
    assert same_poly(DELTA, -(A**2) - A**-2)
    assert same_poly(DELTA - DELTA, 0)
    assert same_poly(inverted(TREFOIL_BRACKET), -A**-5 - A**3 + A**7)
    assert poly_terms(TREFOIL_BRACKET) == [(5, -1), (-3, -1), (-7, 1)]
    assert poly_terms(sympy.Integer(0)) == []
    with pytest.raises(ValueError):
        poly_terms(T + A)


def test_poly_printing():
    assert format_poly(TREFOIL_BRACKET) == "-A^5 - A^-3 + A^-7"
    assert format_poly(sympy.Integer(0)) == "0"
    assert format_poly(2 * A - 3) == "2A - 3"
    assert in_t(A**-4) == T
    assert sympy.expand(in_t(TREFOIL_JONES) - (T + T**3 - T**4)) == 0


def test_unknot():
    u = unit_circle()
    assert writhe(u) == 0
    assert same_poly(kauffman_bracket(u), 1)
    assert same_poly(jones(u), 1)


def test_split_circles():
    assert same_poly(kauffman_bracket(two_circles()), DELTA)


def test_trefoil_values():
    k = trefoil()
    assert writhe(k) == 3
    assert same_poly(kauffman_bracket(k), TREFOIL_BRACKET)
    assert same_poly(jones(k), TREFOIL_JONES)
    assert same_poly(jones(load_sample("trefoil.tgl")), TREFOIL_JONES)


def test_plat_of_cubed_generator_is_the_trefoil():
    k = load_sample("lambda3.tgl")
    assert writhe(k) == 3
    assert same_poly(jones(k), TREFOIL_JONES)


def test_hopf_link():
    assert same_poly(kauffman_bracket(hopf_link()), -A**4 - A**-4)


def test_figure_eight_is_amphichiral():
    poly = jones(figure_eight())
    assert same_poly(poly, FIGURE_EIGHT_JONES)
    assert same_poly(poly, inverted(poly))
    assert writhe(figure_eight()) == 0


def test_mirror_inverts_the_variable():
    k = trefoil()
    assert same_poly(jones(mirror(k)), inverted(jones(k)))
    assert same_poly(kauffman_bracket(mirror(k)), inverted(kauffman_bracket(k)))


def test_oriented_signs():
    kink = load_sample("kinked_strand.tgl")
    # σ1 joins a downward and an upward strand
    assert crossing_signs(kink) == [-1]
    assert tangle_writhe(kink) == -1
    assert same_poly(jones(closure(kink)), 1)


def test_crossing_cap():
    with pytest.raises(CrossingCapExceeded) as info:
        kauffman_bracket(trefoil(), cap=2)
    assert info.value.crossings == 3


def test_crossing_cap_from_settings(monkeypatch):
    monkeypatch.setenv("TANGLEKIT_CROSSING_CAP", "1")
    from tanglekit.config import get_settings

    get_settings.cache_clear()
    with pytest.raises(CrossingCapExceeded):
        jones(trefoil())


def test_links_only():
    with pytest.raises(NotALink):
        writhe(identity("u"))
    with pytest.raises(NotALink):
        kauffman_bracket(load_sample("kinked_strand.tgl"))


# ---------------------------------------------------------------------------
# random walks through legal moves


def _walk(start, framed, steps, seed):
    rng = random.Random(seed)
    t = start
    for _ in range(steps):
        expanding = len(t.items) < 10 and crossing_count(t) < 10
        moves = legal_moves(t, framed=framed, expanding=expanding) or legal_moves(t, framed=framed)
        t =apply_move(t, rng.choice(moves))
        yield t


WALK_STARTS = [trefoil, figure_eight, hopf_link, unit_circle]


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("start", WALK_STARTS, ids=lambda f: f.__name__)
def test_jones_survives_random_moves(start, seed):
    k = start()
    expected = jones(k)
    for t in _walk(k, framed=False, steps=25, seed=seed):
        assert same_poly(jones(t), expected)


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("start", WALK_STARTS, ids=lambda f: f.__name__)
def test_bracket_and_writhe_survive_framed_moves(start, seed):
    k = start()
    bracket, w = kauffman_bracket(k), writhe(k)
    for t in _walk(k, framed=True, steps=25, seed=seed):
        assert writhe(t) == w
        assert same_poly(kauffman_bracket(t), bracket)
