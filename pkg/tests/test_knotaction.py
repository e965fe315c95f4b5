from __future__ import annotations

import random

import pytest

from conftest import load_sample
from tanglekit.braidcore import BraidWord, parse_braid, random_word
from tanglekit.errors import NotAKnot, TanglekitError
from tanglekit.freewords import GEN_X, GEN_Y, ONE, commutator, random_commutator
from tanglekit.gtcore import COMPLEX_CONJUGATION, IDENTITY, GTPair, compose_gt
from tanglekit.invariants import inverted, jones, kauffman_bracket, same_poly, tangle_writhe
from tanglekit.isotopy import connected_sum, replay, simplify
from tanglekit.knotaction import (
    KnotFraction,
    TwoBridgeForm,
    act_fraction,
    act_knot,
    act_tangle,
    act_two_bridge,
    figure_eight,
    gk_eq,
    gk_inv,
    gk_mul,
    gk_unit,
    hopf_link,
    knot_as_fraction,
    knot_power,
    lambda_f,
    lambda_power,
    mirror,
    trefoil,
    twist,
    twist_alternatives,
    twist_power,
    twist_product,
    twist_switching_pairs,
    two_bridge,
)
from tanglekit.search import Distinct, Equal, equivalent
from tanglekit.tanglecalc import Arc, Dir, alpha, closure, components, is_knot, unit_circle

COMMUTATOR = GTPair(1, commutator(GEN_X, GEN_Y))


def test_identity_pair_fixes_knots():
    assert act_knot(IDENTITY, trefoil()) == knot_as_fraction(trefoil())


def test_complex_conjugation_mirrors():
    fraction = act_knot(COMPLEX_CONJUGATION, trefoil())
    assert fraction.den == unit_circle()
    assert fraction.num == mirror(trefoil())
    assert same_poly(jones(fraction.num), inverted(jones(trefoil())))


def test_nontrivial_f_attaches_lambda_powers():
    assert alpha(trefoil()) == 2
    fraction = act_knot(COMMUTATOR, trefoil())
    assert is_knot(fraction.num)
    assert fraction.den == knot_power(lambda_f(COMMUTATOR.f), 2)
    assert len(fraction.num.items) > len(trefoil().items)


def test_act_tangle_keeps_the_boundary():
    kink = load_sample("kinked_strand.tgl")
    image = act_tangle(COMMUTATOR, kink)
    assert image.source == kink.source and image.target == kink.target


def test_act_fraction_without_f_is_elementwise():
    x = KnotFraction(trefoil(), unit_circle())
    assert act_fraction(COMPLEX_CONJUGATION, x) == KnotFraction(mirror(trefoil()), unit_circle())


def test_act_fraction_crosses_lambda_powers():
    x = KnotFraction(trefoil(), unit_circle())
    y = act_fraction(COMMUTATOR, x)
    f = COMMUTATOR.f
    assert y.num == connected_sum(act_tangle(COMMUTATOR, trefoil()), lambda_f(f))
    assert y.den == connected_sum(unit_circle(), knot_power(lambda_f(f), 2))


def test_lambda_of_trivial_f():
    assert simplify(lambda_f(ONE)) == unit_circle()
    assert lambda_power(ONE, 3) == unit_circle()
    assert is_knot(lambda_f(COMMUTATOR.f))
    with pytest.raises(TanglekitError):
        lambda_f(GEN_X)


def test_lambda_of_trivial_f_is_the_unit_circle():
    verdict = equivalent(lambda_f(ONE), unit_circle())
    assert isinstance(verdict, Equal)
    assert replay(lambda_f(ONE), verdict.trace) == unit_circle()


def test_lambda_of_random_commutators():
    rng = random.Random(10)
    for _ in range(10):
        k = lambda_f(random_commutator(rng))
        assert is_knot(k)
        assert alpha(k) == 2
        assert len(k.items) == 5


def test_knot_power():
    assert knot_power(trefoil(), 0) == unit_circle()
    assert knot_power(trefoil(), 1) == trefoil()
    assert same_poly(jones(knot_power(trefoil(), 2)), jones(trefoil()) ** 2)
    with pytest.raises(TanglekitError):
        knot_power(trefoil(), -1)


def test_fractions_need_knots():
    with pytest.raises(NotAKnot):
        KnotFraction(hopf_link(), unit_circle())


def test_group_of_fractions():
    x = knot_as_fraction(trefoil())
    assert isinstance(gk_eq(x, x), Equal)
    assert isinstance(gk_eq(x, gk_mul(x, gk_unit())), Equal)
    assert gk_inv(gk_inv(x)) == x
    verdict = gk_eq(x, knot_as_fraction(mirror(trefoil())))
    assert isinstance(verdict, Distinct) and verdict.invariant == "jones"


def test_fraction_equality_cross_multiplies():
    # t/t ≈ 1/1
    x = KnotFraction(trefoil(), trefoil())
    assert isinstance(gk_eq(x, gk_unit()), Equal)


@pytest.mark.parametrize("build", [trefoil, figure_eight], ids=["3_1", "4_1"])
def test_inverse_is_an_involution(build):
    x = knot_as_fraction(build())
    assert isinstance(gk_eq(gk_inv(gk_inv(x)), x), Equal)
    assert isinstance(gk_eq(gk_mul(x, gk_inv(x)), gk_unit()), Equal)
    assert isinstance(gk_eq(gk_mul(gk_inv(x), x), gk_unit()), Equal)


HOMOMORPHISM_CASES = [
    (IDENTITY, IDENTITY, trefoil),
    (IDENTITY, COMPLEX_CONJUGATION, trefoil),
    (COMPLEX_CONJUGATION, IDENTITY, figure_eight),
    (COMPLEX_CONJUGATION, COMPLEX_CONJUGATION, trefoil),
    (COMPLEX_CONJUGATION, COMPLEX_CONJUGATION, figure_eight),
    (IDENTITY, COMMUTATOR, trefoil),
    (COMMUTATOR, IDENTITY, trefoil),
]


@pytest.mark.parametrize("p2,p1,build", HOMOMORPHISM_CASES)
def test_action_is_a_homomorphism(p2, p1, build):
    x = knot_as_fraction(build())
    once = act_fraction(compose_gt(p2, p1), x)
    twice = act_fraction(p2, act_fraction(p1, x))
    assert isinstance(gk_eq(once, twice), Equal)


# ---------------------------------------------------------------------------
# two-bridge


def test_two_bridge_identity_orientation():
    form = TwoBridgeForm.from_braid(BraidWord.identity(4))
    assert (form.outer, form.inner) == (Arc.LEFT, Arc.RIGHT)
    assert simplify(two_bridge(form)) == unit_circle()


def test_two_bridge_roundtrip():
    form = TwoBridgeForm.from_plat(parse_braid("s2^3", 4))
    assert form.b4 == parse_braid("s2^2 s3^-1", 4)
    t = two_bridge(form)
    assert t == trefoil()
    assert TwoBridgeForm.from_tangle(t) == form
    with pytest.raises(TanglekitError):
        TwoBridgeForm.from_tangle(unit_circle())
    with pytest.raises(TanglekitError):
        TwoBridgeForm(BraidWord.identity(3), Arc.LEFT, Arc.RIGHT)


def test_hopf_plat_has_two_components():
    assert components(hopf_link()) == 2


def test_act_two_bridge():
    form = TwoBridgeForm.from_tangle(trefoil())
    image, den = act_two_bridge(IDENTITY, form)
    assert image == form and den == unit_circle()
    image, den = act_two_bridge(COMPLEX_CONJUGATION, form)
    assert image.b4.runs == tuple((i, -e) for i, e in form.b4.runs)
    assert same_poly(jones(two_bridge(image)), inverted(jones(trefoil())))
    image, den = act_two_bridge(COMMUTATOR, form)
    assert den == lambda_f(COMMUTATOR.f)
    assert is_knot(two_bridge(image))


def test_two_bridge_images_stay_two_bridge():
    rng = random.Random(4)
    for _ in range(20):
        form = TwoBridgeForm.from_braid(random_word(4, rng.randint(1, 8), rng))
        count = components(two_bridge(form))
        for p in (IDENTITY, COMPLEX_CONJUGATION, COMMUTATOR):
            image, den = act_two_bridge(p, form)
            t = two_bridge(image)
            assert TwoBridgeForm.from_tangle(t) == image
            assert (image.outer, image.inner) == (form.outer, form.inner)
            assert components(t) == count
            assert alpha(t) == 2
            assert is_knot(den)


# ---------------------------------------------------------------------------
# framed twists


@pytest.mark.parametrize("d", [Dir.UP, Dir.DOWN])
def test_twist_presentations_agree(d):
    base = twist(d)
    assert base.source == base.target == (d,)
    assert tangle_writhe(base) == 1
    expected = kauffman_bracket(closure(base))
    for alt in twist_alternatives(d):
        assert alt.source == alt.target == (d,)
        assert tangle_writhe(alt) == 1
        assert same_poly(kauffman_bracket(closure(alt)), expected)


@pytest.mark.parametrize("d", [Dir.UP, Dir.DOWN])
def test_twist_switching_pairs(d):
    for lhs, rhs in twist_switching_pairs(d):
        assert lhs.source == rhs.source and lhs.target == rhs.target
        assert tangle_writhe(lhs) == tangle_writhe(rhs) == 1


def test_twist_powers():
    assert tangle_writhe(twist_power(Dir.UP, 1)) == 1
    assert tangle_writhe(twist_power(Dir.UP, -2)) == -2
    assert tangle_writhe(twist_product(Dir.UP, [1, -1])) == 0
    assert tangle_writhe(twist_product(Dir.DOWN, [2, 1])) == 3


@pytest.mark.parametrize("d", [Dir.UP, Dir.DOWN])
def test_twist_power_one_is_the_twist(d):
    verdict = equivalent(twist_power(d, 1), twist(d), framed=True)
    assert isinstance(verdict, Equal)
    assert replay(twist_power(d, 1), verdict.trace) == twist(d)


@pytest.mark.parametrize("index", range(3))
@pytest.mark.parametrize("d", [Dir.UP, Dir.DOWN])
def test_twist_alternatives_are_framed_equal(d, index):
    alt = twist_alternatives(d)[index]
    verdict = equivalent(alt, twist(d), framed=True)
    assert isinstance(verdict, Equal)
    assert replay(alt, verdict.trace) == twist(d)


@pytest.mark.parametrize("index", range(2))
@pytest.mark.parametrize("d", [Dir.UP, Dir.DOWN])
def test_twist_switching_pairs_are_framed_equal(d, index):
    lhs, rhs = twist_switching_pairs(d)[index]
    verdict = equivalent(lhs, rhs, framed=True)
    assert isinstance(verdict, Equal)
    assert replay(lhs, verdict.trace) == rhs


def test_opposite_twists_differ_when_framed():
    verdict = equivalent(twist_power(Dir.UP, -1), twist(Dir.UP), framed=True)
    assert verdict == Distinct("writhe", "-1", "1")
