"""
Writhe, Kauffman bracket and the Jones polynomial of link diagrams.

The bracket is evaluated level by level: a state is the perfect matching that
the part of the diagram below the current height induces on the ends of the
current level, together with the number of loops already closed. A crossing
σ_i^{+1} has its A-smoothing vertical and its B-smoothing horizontal; σ_i^{-1}
swaps the two.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, List, Mapping, Optional, Tuple

import sympy

from .config import get_settings
from .errors import CrossingCapExceeded, NotALink
from .tanglecalc import BraidBlock, Cap, Cup, Tangle, crossing_count, require_link

logger = logging.getLogger(__name__)


A = sympy.Symbol("A")
T = sympy.Symbol("t")

# loop value
DELTA = -A**2 - A**-2


def poly_terms(poly: sympy.Expr) -> List[Tuple[int, int]]:
    """(exponent of A, coefficient) of a Laurent polynomial, highest exponent first."""
    coeffs: Dict[int, int] = defaultdict(int)
    for term in sympy.Add.make_args(sympy.expand(poly)):
        coeff, power = term.as_coeff_Mul()
        if power == 1:
            exp = 0
        else:
            base, exp = power.as_base_exp()
            if base != A:
                raise ValueError(f"{term} is not a monomial in A")
        coeffs[int(exp)] += int(coeff)
    return sorted(((e, c) for e, c in coeffs.items() if c), reverse=True)


def same_poly(p: sympy.Expr, q: sympy.Expr) -> bool:
    return sympy.expand(p - q) == 0


def inverted(poly: sympy.Expr) -> sympy.Expr:
    """A ↦ A^{-1}."""
    return sympy.expand(poly.subs(A, 1 / A))


def in_t(poly: sympy.Expr) -> sympy.Expr:
    """The same polynomial written in t = A^{-4}."""
    return sympy.expand(poly.subs(A, T ** sympy.Rational(-1, 4)))


def format_poly(poly: sympy.Expr) -> str:
    """Highest power of A first, e.g. 'A^-4 + A^-12 - A^-16'."""
    terms = poly_terms(poly)
    if not terms:
        return "0"
    parts: List[str] = []
    for index, (e, c) in enumerate(terms):
        magnitude = abs(c)
        if e == 0:
            body = str(magnitude)
        else:
            power = "A" if e == 1 else f"A^{e}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if index == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# writhe


def crossing_signs(t: Tangle) -> List[int]:
    """Oriented sign of every crossing, bottom to top.

    σ_i^{±1} between co-oriented strands counts ±1, between opposite strands ∓1.
    """
    signs: List[int] = []
    for g in t.items:
        if not isinstance(g, BraidBlock):
            continue
        labels = list(g.eps)
        for index, sign in g.braid.letters_bottom_up():
            signs.append(sign if labels[index - 1] == labels[index] else -sign)
            labels[index - 1], labels[index] = labels[index], labels[index - 1]
    return signs


def tangle_writhe(t: Tangle) -> int:
    return sum(crossing_signs(t))


def writhe(link: Tangle) -> int:
    require_link(link)
    return tangle_writhe(link)


# ---------------------------------------------------------------------------
# bracket

Matching = Tuple[int, ...]
State = Tuple[Matching, int]


def _insert_pair(match: Matching, k: int) -> Matching:
    moved = [q if q < k else q + 2 for q in match]
    return tuple(moved[:k] + [k + 1, k] + moved[k:])


def _close_pair(match: Matching, k: int) -> Tuple[Matching, bool]:
    a, b = match[k], match[k + 1]
    closed = a == k + 1
    rest = list(match)
    if not closed:
        rest[a], rest[b] = b, a
    del rest[k:k + 2]
    return tuple(q if q < k else q - 2 for q in rest), closed


def _add(bucket: Dict[State, Dict[int, int]], state: State, poly: Mapping[int, int], shift: int) -> None:
    target = bucket[state]
    for e, c in poly.items():
        target[e + shift] = target.get(e + shift, 0) + c


def kauffman_bracket(link: Tangle, cap: Optional[int] = None) -> sympy.Expr:
    """⟨link⟩ with loop value δ = -A^2 - A^-2 and ⟨unknot⟩ = 1."""
    require_link(link)
    limit = get_settings().crossing_cap if cap is None else cap
    count = crossing_count(link)
    if count > limit:
        logger.warning("bracket refused: %d crossings over the cap of %d", count, limit)
        raise CrossingCapExceeded(count, limit)

    states: Dict[State, Dict[int, int]] = {((), 0): {0: 1}}
    for g in link.items:
        step: Dict[State, Dict[int, int]] = defaultdict(dict)
        if isinstance(g, Cup):
            for (match, loops), poly in states.items():
                _add(step, (_insert_pair(match, g.offset), loops), poly, 0)
            states = step
        elif isinstance(g, Cap):
            for (match, loops), poly in states.items():
                closed_match, closed = _close_pair(match, g.offset)
                _add(step, (closed_match, loops + int(closed)), poly, 0)
            states = step
        else:
            for index, sign in g.braid.letters_bottom_up():
                step = defaultdict(dict)
                k = index - 1
                for (match, loops), poly in states.items():
                    _add(step, (match, loops), poly, sign)
                    closed_match, closed = _close_pair(match, k)
                    _add(step, (_insert_pair(closed_match, k), loops + int(closed)), poly, -sign)
                states = step
        logger.debug("bracket: %d states after %s", len(states), g.kind)

    total = sympy.Integer(0)
    for (match, loops), poly in states.items():
        if loops == 0:
            raise NotALink("the empty diagram has no normalized bracket")
        total += sympy.Add(*(c * A**e for e, c in poly.items())) * DELTA ** (loops - 1)
    return sympy.expand(total)


def jones(link: Tangle, cap: Optional[int] = None) -> sympy.Expr:
    """(-A^3)^{-writhe}·⟨link⟩."""
    w = writhe(link)
    return sympy.expand((-A**3) ** (-w) * kauffman_bracket(link, cap))
