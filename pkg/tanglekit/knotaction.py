"""
The group of fractions of knots and the GT action on it.

A pair p = (λ, f) acts on fundamental tangles elementwise: braid blocks go
through the braid action, a cap a_{k,l} gets f_{1⋯k,k+1,k+2} inserted below
it and a cup c_{k,l} gets the inverse inserted above it. The image of a knot
is a knot, but the action only respects cap-cup cancellation up to the
correction knot Λ_f, so knots act as fractions r/s with Λ_f powers attached
crosswise.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import sympy

from .braidcore import BraidWord, compose, inverse, parse_braid, tensor
from .errors import CrossingCapExceeded, TanglekitError
from .freewords import FreeWord2, exp_sums, f_triple
from .gtcore import COMPLEX_CONJUGATION, GTPair, act_on_braid
from .invariants import format_poly, jones, kauffman_bracket, same_poly, writhe
from .isotopy import connected_sum
from .search import Distinct, Verdict, equivalent
from .tanglecalc import (
    Arc,
    BraidBlock,
    Cap,
    Cup,
    Dir,
    Element,
    Level,
    Tangle,
    alpha,
    make_cap,
    make_cup,
    pad,
    require_knot,
    rev,
    unit_circle,
    validate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KnotFraction:
    num: Tangle
    den: Tangle

    def __post_init__(self) -> None:
        require_knot(self.num)
        require_knot(self.den)


def gk_unit() -> KnotFraction:
    return KnotFraction(unit_circle(), unit_circle())


def knot_as_fraction(k: Tangle) -> KnotFraction:
    return KnotFraction(k, unit_circle())


def knot_power(k: Tangle, n: int, framed: bool = False) -> Tangle:
    """k♯k♯⋯♯k, left associated; the 0th power is the unit circle."""
    if n < 0:
        raise TanglekitError(f"connected-sum powers are non-negative, got {n}")
    if n == 0:
        return unit_circle()
    result = k
    for _ in range(n - 1):
        result = connected_sum(result, k, framed)
    return result


# ---------------------------------------------------------------------------
# Λ_f


def lambda_f(f: FreeWord2) -> Tangle:
    """c_{0,0}^{<}, c_{1,1}, e_1⊗f(x_{1,2}, x_{2,3}), a_{0,2}, a_{0,0}^{<}, bottom to top."""
    if exp_sums(f) != (0, 0):
        raise TanglekitError(f"Λ_f needs exponent sums (0, 0), {f} has {exp_sums(f)}")
    outer = Cup((), Arc.LEFT)
    inner = Cup((Dir.DOWN,), Arc.RIGHT, (Dir.UP,))
    block = BraidBlock(tensor(1, f_triple(f, (1,), (2,), (3,), 3), 0), inner.target)
    top = make_cap(block.target, 0)
    return validate([outer, inner, block, top, make_cap(top.target, 0)])


def lambda_power(f: FreeWord2, n: int, framed: bool = False) -> Tangle:
    """Λ_f^{♯n}; Λ_1 simplifies to the unit circle and is replaced by it."""
    if f.is_identity:
        return unit_circle()
    return knot_power(lambda_f(f), n, framed)


# ---------------------------------------------------------------------------
# the action


def _f_block(p: GTPair, g: Element, level: Level) -> Optional[BraidBlock]:
    if g.k == 0 or p.f.is_identity:
        return None
    strands = g.k + g.l + 2
    return BraidBlock(f_triple(p.f, range(1, g.k + 1), (g.k + 1,), (g.k + 2,), strands), level)


def act_fundamental(p: GTPair, g: Element) -> Tangle:
    if isinstance(g, BraidBlock):
        return validate([BraidBlock(act_on_braid(p, g.braid), g.eps)])
    block = _f_block(p, g, g.source if isinstance(g, Cap) else g.target)
    if block is None:
        return validate([g])
    if isinstance(g, Cap):
        return validate([block, g])
    return validate([g, BraidBlock(inverse(block.braid), block.eps)])


def act_tangle(p: GTPair, t: Tangle) -> Tangle:
    """The elementwise image of t, boundary kept."""
    items: List[Element] = []
    for g in t.items:
        items.extend(act_fundamental(p, g).items)
    return Tangle(tuple(items), t.bottom)


def act_knot(p: GTPair, k: Tangle, framed: bool = False) -> KnotFraction:
    require_knot(k)
    numerator = act_tangle(p, k)
    logger.debug("act %s: %d elements -> %d, alpha=%d", p, len(k.items), len(numerator.items), alpha(k))
    return KnotFraction(numerator, lambda_power(p.f, alpha(k), framed))


def act_fraction(p: GTPair, x: KnotFraction, framed: bool = False) -> KnotFraction:
    """σ(r/s) = (σ(r)♯Λ_f^{♯α(s)}) / (σ(s)♯Λ_f^{♯α(r)})."""
    num, den = act_tangle(p, x.num), act_tangle(p, x.den)
    if p.f.is_identity:
        return KnotFraction(num, den)
    return KnotFraction(
        connected_sum(num, knot_power(lambda_f(p.f), alpha(x.den), framed), framed),
        connected_sum(den, knot_power(lambda_f(p.f), alpha(x.num), framed), framed),
    )


def gk_mul(x: KnotFraction, y: KnotFraction, framed: bool = False) -> KnotFraction:
    return KnotFraction(connected_sum(x.num, y.num, framed), connected_sum(x.den, y.den, framed))


def gk_inv(x: KnotFraction) -> KnotFraction:
    return KnotFraction(x.den, x.num)


def _filter_value(k: Tangle, framed: bool) -> Tuple[sympy.Expr, int]:
    if framed:
        return kauffman_bracket(k), writhe(k)
    return jones(k), 0


def gk_eq(x: KnotFraction, y: KnotFraction, budget: Optional[int] = None, framed: bool = False) -> Verdict:
    """x ≈ y iff x.num♯y.den is isotopic to y.num♯x.den."""
    try:
        (p1, w1), (q2, v2) = _filter_value(x.num, framed), _filter_value(y.den, framed)
        (p2, w2), (q1, v1) = _filter_value(y.num, framed), _filter_value(x.den, framed)
    except CrossingCapExceeded as exc:
        logger.warning("skipping the polynomial filter: %s", exc)
    else:
        name = "bracket" if framed else "jones"
        if not same_poly(p1 * q2, p2 * q1):
            return Distinct(name, format_poly(p1 * q2), format_poly(p2 * q1))
        if w1 + v2 != w2 + v1:
            return Distinct("writhe", str(w1 + v2), str(w2 + v1))
    left = connected_sum(x.num, y.den, framed)
    right = connected_sum(y.num, x.den, framed)
    return equivalent(left, right, framed, budget)


# ---------------------------------------------------------------------------
# mirror image


def mirror_tangle(t: Tangle) -> Tangle:
    """Every braid letter inverted."""
    return act_tangle(COMPLEX_CONJUGATION, t)


def mirror(k: Tangle) -> Tangle:
    require_knot(k)
    return mirror_tangle(k)


# ---------------------------------------------------------------------------
# two-bridge knots

_PLAT_ADJUST = BraidWord(4, ((2, -1), (3, -1)))


@dataclass(frozen=True)
class TwoBridgeForm:
    """b4 closed by the cups c_{0,0}, c_{1,1} and the caps a_{0,2}, a_{0,0}."""

    b4: BraidWord
    outer: Arc
    inner: Arc

    def __post_init__(self) -> None:
        if self.b4.strands != 4:
            raise TanglekitError(f"two-bridge braids live in B_4, got {self.b4.strands} strands")

    @classmethod
    def from_braid(cls, b4: BraidWord) -> "TwoBridgeForm":
        """The first cup orientation, in lexicographic order, that closes up."""
        for outer, inner in itertools.product((Arc.LEFT, Arc.RIGHT), repeat=2):
            form = cls(b4, outer, inner)
            try:
                two_bridge(form)
            except TanglekitError:
                continue
            return form
        raise TanglekitError(f"no orientation closes {b4}")  # unreachable for braids

    @classmethod
    def from_plat(cls, word: BraidWord) -> "TwoBridgeForm":
        """From the 4-plat of word, cups and caps both on the pairs (1,2), (3,4)."""
        return cls.from_braid(compose(word, _PLAT_ADJUST))

    @classmethod
    def from_tangle(cls, t: Tangle) -> "TwoBridgeForm":
        if len(t.items) != 5 or t.source:
            raise TanglekitError("a two-bridge presentation has exactly five elements")
        outer, inner, block, cap_inner, cap_outer = t.items
        if not (
            isinstance(outer, Cup)
            and outer.offset == 0
            and isinstance(inner, Cup)
            and (inner.k, inner.l) == (1, 1)
            and isinstance(block, BraidBlock)
            and isinstance(cap_inner, Cap)
            and (cap_inner.k, cap_inner.l) == (0, 2)
            and isinstance(cap_outer, Cap)
        ):
            raise TanglekitError("not of the shape a_{0,0}·a_{0,2}·b_4·c_{1,1}·c_{0,0}")
        return cls(block.braid, outer.arc, inner.arc)


def two_bridge(tb: TwoBridgeForm) -> Tangle:
    outer = Cup((), tb.outer)
    inner = make_cup(outer.target, 1, tb.inner)
    block = BraidBlock(tb.b4, inner.target)
    cap_inner = make_cap(block.target, 0)
    return validate([outer, inner, block, cap_inner, make_cap(cap_inner.target, 0)])


def act_two_bridge(p: GTPair, tb: TwoBridgeForm) -> Tuple[TwoBridgeForm, Tangle]:
    """Numerator braid σ(b4)·f_{1,2,3}^{-1} in the same template, denominator Λ_f."""
    correction = inverse(f_triple(p.f, (1,), (2,), (3,), 4)) if not p.f.is_identity else BraidWord.identity(4)
    image = TwoBridgeForm(compose(act_on_braid(p, tb.b4), correction), tb.outer, tb.inner)
    two_bridge(image)
    return image, lambda_power(p.f, 1)


def trefoil() -> Tangle:
    return two_bridge(TwoBridgeForm.from_plat(parse_braid("s2^3", 4)))


def figure_eight() -> Tangle:
    return two_bridge(TwoBridgeForm.from_plat(parse_braid("s2^2 s1^-1 s2", 4)))


def hopf_link() -> Tangle:
    return two_bridge(TwoBridgeForm.from_plat(parse_braid("s2^2", 4)))


# ---------------------------------------------------------------------------
# framed twists


def twist(d: Dir = Dir.UP) -> Tangle:
    """φ^↑: c_{1,0}^{>} below σ_1^{↑↑↓} below a_{1,0}^{>}; φ^↓ reverses every arrow."""
    if d is Dir.DOWN:
        return rev(twist(Dir.UP))
    up = (Dir.UP,)
    cup = Cup(up, Arc.RIGHT)
    block = BraidBlock(BraidWord.generator(1, 3), cup.target)
    return validate([cup, block, make_cap(block.target, 1)])


def twist_power(d: Dir, c: int) -> Tangle:
    """(φ^d)^c = a_{0,1}·(σ_1^{-c})^{↑↓↑}·c_{1,0}, the cap arc set by the parity of c."""
    if d is Dir.DOWN:
        return rev(twist_power(Dir.UP, c))
    cup = Cup((Dir.UP,), Arc.LEFT)
    block = BraidBlock(BraidWord.generator(1, 3, -c), cup.target)
    return validate([cup, block, make_cap(block.target, 0)])


def twist_alternatives(d: Dir = Dir.UP) -> List[Tangle]:
    """The three other presentations of φ^↑ (arrows reversed for φ^↓)."""
    if d is Dir.DOWN:
        return [rev(t) for t in twist_alternatives(Dir.UP)]
    up = (Dir.UP,)
    shapes = [
        (Cup((), Arc.LEFT, up), BraidWord.generator(2, 3)),
        (Cup(up, Arc.RIGHT), BraidWord.generator(2, 3, -1)),
        (Cup(up, Arc.LEFT), BraidWord.generator(1, 3, -1)),
    ]
    result = []
    for cup, word in shapes:
        block = BraidBlock(word, cup.target)
        result.append(validate([cup, block, make_cap(block.target, 0)]))
    return result


def twist_switching_pairs(d: Dir = Dir.UP) -> List[Tuple[Tangle, Tangle]]:
    """A twist moves across a cup or a cap onto the other leg, changing direction."""
    if d is Dir.DOWN:
        return [(rev(a), rev(b)) for a, b in twist_switching_pairs(Dir.UP)]
    up, down = twist(Dir.UP), twist(Dir.DOWN)
    cup = Cup((), Arc.LEFT)
    cap = Cap((), Arc.RIGHT)
    return [
        (
            validate([cup] + _beside(down, (), (Dir.UP,))),
            validate([cup] + _beside(up, (Dir.DOWN,), ())),
        ),
        (
            validate(_beside(up, (), (Dir.DOWN,)) + [cap], (Dir.UP, Dir.DOWN)),
            validate(_beside(down, (Dir.UP,), ()) + [cap], (Dir.UP, Dir.DOWN)),
        ),
    ]


def _beside(t: Tangle, left: Level, right: Level) -> List[Element]:
    return list(pad(t, left, right).items)


def twist_product(d: Dir, exponents: List[int]) -> Tangle:
    """(φ^d)^{c_1} stacked on ⋯ on (φ^d)^{c_n}, first factor at the bottom."""
    pieces = [twist_power(d, c) for c in exponents]
    items: List[Element] = [g for piece in pieces for g in piece.items]
    return Tangle(tuple(items), (d,))

