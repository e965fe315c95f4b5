"""
Grothendieck–Teichmüller candidate pairs (λ, f).

The three defining relations are checked exactly: 2-cycle and hexagon by free
reduction in F_2, the pentagon by the Garside word problem in B_4. The braid
action is defined for every candidate pair; is_gt gates the contracts that
need it to be well defined on braid classes.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Tuple

from .braidcore import (
    BraidWord,
    block_gen,
    cable_bottom,
    cable_top,
    compose,
    equals,
    inverse,
    normal_word,
    perm,
    power,
    product,
    tensor,
)
from .errors import GTPairError, ParseError
from .freewords import (
    GEN_X,
    GEN_Y,
    ONE,
    X,
    Y,
    FreeWord2,
    exp_sums,
    f_bracketed,
    f_triple,
    parse_free,
    serialize_free,
    substitute,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GTPair:
    lam: int
    f: FreeWord2 = ONE

    def __post_init__(self) -> None:
        if self.lam % 2 == 0:
            raise GTPairError(f"lambda must be odd, got {self.lam}")
        if exp_sums(self.f) != (0, 0):
            raise GTPairError(f"f must lie in the commutator subgroup, {self.f} has exponent sums {exp_sums(self.f)}")

    @property
    def m(self) -> int:
        return (self.lam - 1) // 2

    def __str__(self) -> str:
        return serialize_gt(self)


IDENTITY = GTPair(1)
COMPLEX_CONJUGATION = GTPair(-1)


@dataclass(frozen=True)
class GTReport:
    two_cycle: bool
    hexagon: bool
    pentagon: bool
    two_cycle_witness: str
    hexagon_witness: str
    pentagon_witness: Tuple[str, str]

    @property
    def is_gt(self) -> bool:
        return self.two_cycle and self.hexagon and self.pentagon


def _two_cycle_word(p: GTPair) -> FreeWord2:
    return p.f * substitute(p.f, GEN_Y, GEN_X)


def _hexagon_word(p: GTPair) -> FreeWord2:
    z = FreeWord2((X * Y) ** -1)
    m = p.m
    f = p.f
    return (
        substitute(f, z, GEN_X)
        * FreeWord2(z.element**m)
        * substitute(f, GEN_Y, z)
        * FreeWord2(Y**m)
        * f
        * FreeWord2(X**m)
    )


def _pentagon_sides(p: GTPair) -> Tuple[BraidWord, BraidWord]:
    f = p.f
    lhs = compose(
        f_triple(f, (1,), (2,), (3, 4), 4),
        f_triple(f, (1, 2), (3,), (4,), 4),
    )
    rhs = product(
        [
            f_triple(f, (2,), (3,), (4,), 4),
            f_triple(f, (1,), (2, 3), (4,), 4),
            f_triple(f, (1,), (2,), (3,), 4),
        ],
        4,
    )
    return lhs, rhs


def check_two_cycle(p: GTPair) -> bool:
    """f(x,y)f(y,x) = 1."""
    return _two_cycle_word(p).is_identity


def check_hexagon(p: GTPair) -> bool:
    """f(z,x)z^m f(y,z)y^m f(x,y)x^m = 1 with z = (xy)^{-1}."""
    return _hexagon_word(p).is_identity


def check_pentagon(p: GTPair) -> bool:
    """f_{1,2,34}f_{12,3,4} = f_{2,3,4}f_{1,23,4}f_{1,2,3} in B_4."""
    lhs, rhs = _pentagon_sides(p)
    return equals(lhs, rhs)


def is_gt(p: GTPair) -> bool:
    return check_two_cycle(p) and check_hexagon(p) and check_pentagon(p)


def verify(p: GTPair) -> GTReport:
    lhs, rhs = _pentagon_sides(p)
    report = GTReport(
        two_cycle=check_two_cycle(p),
        hexagon=check_hexagon(p),
        pentagon=equals(lhs, rhs),
        two_cycle_witness=serialize_free(_two_cycle_word(p)),
        hexagon_witness=serialize_free(_hexagon_word(p)),
        pentagon_witness=(str(normal_word(lhs)), str(normal_word(rhs))),
    )
    logger.info("verified %s: 2-cycle=%s hexagon=%s pentagon=%s", p, report.two_cycle, report.hexagon, report.pentagon)
    return report


def compose_gt(p2: GTPair, p1: GTPair) -> GTPair:
    """(λ2, f2)∘(λ1, f1) = (λ2λ1, f2·f1(x^{λ2}, f2^{-1}y^{λ2}f2))."""
    lam2 = p2.lam
    x_image = FreeWord2(X**lam2)
    y_image = p2.f.inverse() * FreeWord2(Y**lam2) * p2.f
    return GTPair(lam2 * p1.lam, p2.f * substitute(p1.f, x_image, y_image))


# ---------------------------------------------------------------------------
# action on braids


def _conjugator(p: GTPair, index: int, strands: int) -> BraidWord:
    """f_{1⋯i-1, i, i+1} in B_strands."""
    if index == 1 or p.f.is_identity:
        return BraidWord.identity(strands)
    return f_triple(p.f, range(1, index), (index,), (index + 1,), strands)


def act_on_braid(p: GTPair, b: BraidWord) -> BraidWord:
    """σ_1 ↦ σ_1^λ, σ_i ↦ f_{1⋯i-1,i,i+1}^{-1} σ_i^λ f_{1⋯i-1,i,i+1}, letterwise."""
    n = b.strands
    pieces = []
    for index, exp in b.runs:
        conj = _conjugator(p, index, n)
        pieces.extend([inverse(conj), BraidWord.generator(index, n, p.lam * exp), conj])
    return product(pieces, n)


def eta_identity(p: GTPair, i: int, n: int) -> bool:
    """σ(σ_1⋯σ_i) = f_{[1],[i],[n-i-1]}^{-1}(σ_1⋯σ_i)x_{1⋯i,i+1}^m."""
    word = BraidWord(n, tuple((k, 1) for k in range(1, i + 1)))
    bracket = f_bracketed(p.f, 1, i, n - i - 1)
    x_block = power(block_gen(1, i - 1, i + 1, 0, n), p.m)
    return equals(act_on_braid(p, word), product([inverse(bracket), word, x_block], n))


def eta_reversed_identity(p: GTPair, i: int, n: int) -> bool:
    """σ(σ_i⋯σ_1) = x_{1⋯i,i+1}^m(σ_i⋯σ_1)f_{[1],[i],[n-i-1]}."""
    word = BraidWord(n, tuple((k, 1) for k in range(i, 0, -1)))
    bracket = f_bracketed(p.f, 1, i, n - i - 1)
    x_block = power(block_gen(1, i - 1, i + 1, 0, n), p.m)
    return equals(act_on_braid(p, word), product([x_block, word, bracket], n))


def basepoint_identity(p: GTPair, b: BraidWord, m1: int, m2: int) -> bool:
    """σ(e_{m1}⊗b⊗e_{m2}) = f_{[m1],[n],[m2]}^{-1}(e_{m1}⊗σ(b)⊗e_{m2})f_{[m1],[n],[m2]}."""
    bracket = f_bracketed(p.f, m1, b.strands, m2)
    lhs = act_on_braid(p, tensor(m1, b, m2))
    rhs = product([inverse(bracket), tensor(m1, act_on_braid(p, b), m2), bracket], bracket.strands)
    return equals(lhs, rhs)


def cabling_identity(p: GTPair, b: BraidWord, k: int, n: int) -> bool:
    """σ(ev_k(b)) = f_{[k'-1],[n],[l-k']}^{-1} ev_k(σ(b)) f_{[k-1],[n],[l-k]}, k' = b(k)."""
    l = b.strands
    k_top = perm(b)(k)
    lhs = act_on_braid(p, cable_bottom(b, k, n))
    rhs = product(
        [
            inverse(f_bracketed(p.f, k_top - 1, n, l - k_top)),
            cable_bottom(act_on_braid(p, b), k, n),
            f_bracketed(p.f, k - 1, n, l - k),
        ],
        l + n - 1,
    )
    return equals(lhs, rhs)


def cabling_top_identity(p: GTPair, b: BraidWord, k_top: int, n: int) -> bool:
    """The same identity indexed by the top end of the string."""
    l = b.strands
    k = perm(b).inverse()(k_top)
    lhs = act_on_braid(p, cable_top(b, k_top, n))
    rhs = product(
        [
            inverse(f_bracketed(p.f, k_top - 1, n, l - k_top)),
            cable_top(act_on_braid(p, b), k_top, n),
            f_bracketed(p.f, k - 1, n, l - k),
        ],
        l + n - 1,
    )
    return equals(lhs, rhs)


def auxiliary_identity(f: FreeWord2, l: int, n: int, i: int) -> bool:
    """(e_{i-1}⊗f_{[1],[n],[0]}⊗e_{l-i-1})·f_{[i-1],[n+1],[l-i-1]} = f_{1⋯i-1,i,i+1⋯i+n}·f_{[i],[n],[l-i-1]}."""
    strands = l + n - 1
    lhs = compose(
        tensor(i - 1, f_bracketed(f, 1, n, 0), l - i - 1),
        f_bracketed(f, i - 1, n + 1, l - i - 1),
    )
    rhs = compose(
        f_triple(f, range(1, i), (i,), range(i + 1, i + n + 1), strands),
        f_bracketed(f, i, n, l - i - 1),
    )
    return equals(lhs, rhs)


# ---------------------------------------------------------------------------
# text syntax

_GT = re.compile(r"^\s*gt\(\s*lambda\s*=\s*(-?\d+)\s*;\s*f\s*=\s*([^)]*)\)\s*$")


def parse_gt(text: str) -> GTPair:
    """Parse `gt(lambda=-1; f=1)` or `gt(lambda=1; f=x y x^-1 y^-1)`."""
    match = _GT.match(text)
    if not match:
        raise ParseError(f"expected gt(lambda=<odd int>; f=<free word>), got {text!r}", 1, 1)
    f = parse_free(match.group(2), offset=match.start(2))
    return GTPair(int(match.group(1)), f)


def serialize_gt(p: GTPair) -> str:
    return f"gt(lambda={p.lam}; f={serialize_free(p.f)})"
