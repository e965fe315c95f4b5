"""
Budgeted equivalence of tangles.

Cheap invariants are compared first and settle Distinct. Otherwise both sides
are simplified and a bidirectional breadth-first search runs over simplified
diagrams, each step being a T3 swap (optionally after peeling one run off a
braid block) or a T4 slide followed by simplification. A meeting point gives
a move trace which is replayed before Equal is reported.

Two constructive shortcuts from the sliding module come first: knots drawn as
c·A·B·a against c·B·A·a are related by carrying the summands around each
other, and framed search redraws every curl in one shape and may swing a curl
around a neighbouring cup or cap as a single step.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Deque, Dict, Hashable, List, Optional, Tuple, Union

import sympy

from .braidcore import BraidWord, normal_form, serialize_braid
from .config import get_settings
from .errors import CrossingCapExceeded, IllegalMove, TanglekitError
from .invariants import format_poly, kauffman_bracket, jones, same_poly, tangle_writhe, writhe
from .isotopy import (
    MoveInstance,
    apply_move,
    invert_trace,
    replay,
    simplify_traced,
    t3_candidates,
    t4_candidates,
)
from .sliding import commute_summands, curls, standardize_curls, turn_curl
from .tanglecalc import Arc, BraidBlock, Cap, Cup, Dir, Tangle, closure, components, dirs_str, is_knot, is_link, levels, serialize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Equal:
    trace: Tuple[MoveInstance, ...] = ()

    kind = "equal"


@dataclass(frozen=True)
class Distinct:
    invariant: str
    left: str
    right: str

    kind = "distinct"


@dataclass(frozen=True)
class Unknown:
    explored: int
    budget: int

    kind = "unknown"


Verdict = Union[Equal, Distinct, Unknown]


def canonical_key(t: Tangle) -> Hashable:
    """Identifies diagrams whose braid blocks agree as group elements."""
    parts: List[Any] = []
    for g in t.items:
        if isinstance(g, BraidBlock):
            parts.append(("B", g.eps, normal_form(g.braid)))
        else:
            parts.append(g)
    return t.bottom, tuple(parts)


def align_words(current: Tangle, goal: Tangle) -> List[MoveInstance]:
    """Rewrite braid words of current into those of goal; the keys must match."""
    moves: List[MoveInstance] = []
    for pos, (g, h) in enumerate(zip(current.items, goal.items)):
        if isinstance(g, BraidBlock) and g.braid.runs != h.braid.runs:
            moves.append(MoveInstance.make("T2", pos, op="split", upper=serialize_braid(h.braid)))
            moves.append(MoveInstance.make("T1", pos, op="drop"))
    return moves


# ---------------------------------------------------------------------------
# invariants


def _invariant_values(t: Tangle, framed: bool) -> List[Tuple[str, Any]]:
    values = [
        ("boundary", f"{dirs_str(t.source)} -> {dirs_str(t.target)}"),
        ("components", str(components(t))),
    ]
    if is_link(t) and t.items:
        closed = t
    elif len(t.source) == 1 and t.source == t.target:
        closed = closure(t)
    else:
        return values
    if framed:
        values.append(("writhe", str(tangle_writhe(closed))))
    try:
        poly = kauffman_bracket(closed) if framed else jones(closed)
    except CrossingCapExceeded:
        return values
    values.append(("bracket" if framed else "jones", poly))
    return values


def compare_invariants(t1: Tangle, t2: Tangle, framed: bool = False) -> Optional[Distinct]:
    if t1.source != t2.source or t1.target != t2.target:
        return Distinct(
            "boundary",
            f"{dirs_str(t1.source)} -> {dirs_str(t1.target)}",
            f"{dirs_str(t2.source)} -> {dirs_str(t2.target)}",
        )
    for (name, left), (_, right) in zip(_invariant_values(t1, framed), _invariant_values(t2, framed)):
        if isinstance(left, sympy.Expr):
            if not same_poly(left, right):
                return Distinct(name, format_poly(left), format_poly(right))
        elif left != right:
            return Distinct(name, left, right)
    return None


# ---------------------------------------------------------------------------
# search


def _peel_swaps(t: Tangle) -> List[List[MoveInstance]]:
    """Split one end run off a braid block and swap it past its neighbour."""
    found: List[List[MoveInstance]] = []
    for pos, g in enumerate(t.items):
        if not isinstance(g, BraidBlock) or len(g.braid.runs) < 2:
            continue
        strands, runs = g.braid.strands, g.braid.runs
        top = MoveInstance.make("T2", pos, op="split", upper=serialize_braid(BraidWord(strands, runs[:1])))
        bottom = MoveInstance.make("T2", pos, op="split", upper=serialize_braid(BraidWord(strands, runs[:-1])))
        for split, swap_at in ((top, pos + 1), (bottom, pos - 1)):
            if swap_at < 0 or swap_at + 1 > len(t.items):
                continue
            peeled = apply_move(t, split)
            for swap in t3_candidates(peeled):
                if swap.position == swap_at:
                    found.append([split, swap])
    return found


def neighbours(t: Tangle, framed: bool) -> List[Tuple[Tangle, List[MoveInstance]]]:
    steps: List[List[MoveInstance]] = [[m] for m in t3_candidates(t) + t4_candidates(t)]
    steps.extend(_peel_swaps(t))
    result = []
    for moves in steps:
        try:
            moved = replay(t, moves)
        except IllegalMove:
            continue
        reduced, tail = simplify_traced(moved, framed)
        result.append((reduced, moves + tail))
    if framed:
        result.extend(_curl_steps(t))
    return result


def _curl_steps(t: Tangle) -> List[Tuple[Tangle, List[MoveInstance]]]:
    """Curls swung onto the other leg of a neighbouring cup or cap, then redrawn."""
    result = []
    for curl in curls(t):
        try:
            log = turn_curl(t, curl)
            if log is None:
                continue
            redrawn = standardize_curls(log.tangle)
        except TanglekitError as exc:
            logger.debug("curl at %d stays: %s", curl.index, exc)
            continue
        reduced, tail = simplify_traced(redrawn.tangle, True)
        result.append((reduced, log.trace + redrawn.trace + tail))
    return result


def _prepared(t: Tangle, framed: bool) -> Tuple[Tangle, List[MoveInstance]]:
    """Simplified, and for framed search with every curl in the standard shape."""
    s, trace = simplify_traced(t, framed)
    if not framed:
        return s, trace
    try:
        log = standardize_curls(s)
    except TanglekitError as exc:
        logger.debug("curls left as drawn: %s", exc)
        return s, trace
    return log.tangle, trace + log.trace


def summand_exchange(t1: Tangle, t2: Tangle) -> Optional[List[MoveInstance]]:
    """Moves from t1 = c·A·B·a to t2 when t2 draws c·B·A·a up to braid words."""
    if not (is_knot(t1) and is_knot(t2) and _standard(t1) and _standard(t2)):
        return None
    goal = canonical_key(t2)
    cut_level = (Dir.DOWN, Dir.UP)
    for cut, level in enumerate(levels(t1)[2:len(t1.items) - 1], start=2):
        if level != cut_level:
            continue
        items = t1.items
        swapped = Tangle((items[0],) + items[cut:-1] + items[1:cut] + (items[-1],), t1.bottom)
        if canonical_key(swapped) != goal:
            continue
        try:
            log = commute_summands(t1, cut)
            trace = log.trace + align_words(log.tangle, t2)
            if replay(t1, trace) == t2:
                return trace
        except TanglekitError as exc:
            logger.debug("summands at %d stay: %s", cut, exc)
    return None


def _standard(t: Tangle) -> bool:
    return t.items[0] == Cup((), Arc.LEFT) and t.items[-1] == Cap((), Arc.LEFT)


@dataclass
class _Side:
    root: Tangle
    nodes: Dict[Hashable, Tuple[Tangle, Optional[Hashable], List[MoveInstance]]] = field(default_factory=dict)
    frontier: Deque[Hashable] = field(default_factory=deque)

    def __post_init__(self) -> None:
        key = canonical_key(self.root)
        self.nodes[key] = (self.root, None, [])
        self.frontier.append(key)

    def path(self, key: Hashable) -> List[MoveInstance]:
        chunks: List[List[MoveInstance]] = []
        while key is not None:
            _, parent, moves = self.nodes[key]
            chunks.append(moves)
            key = parent
        return [m for chunk in reversed(chunks) for m in chunk]


def equivalent(t1: Tangle, t2: Tangle, framed: bool = False, budget: Optional[int] = None) -> Verdict:
    settings = get_settings()
    budget = settings.budget if budget is None else budget

    distinct = compare_invariants(t1, t2, framed)
    if distinct is not None:
        logger.info("distinct by %s: %s vs %s", distinct.invariant, distinct.left, distinct.right)
        return distinct

    exchanged = summand_exchange(t1, t2)
    if exchanged is not None:
        logger.info("equal by exchanging summands, trace of %d moves", len(exchanged))
        return Equal(tuple(exchanged))

    s1, trace1 = _prepared(t1, framed)
    s2, trace2 = _prepared(t2, framed)
    length_cap = 2 * max(len(s1.items), len(s2.items)) + settings.length_slack

    forward, backward = _Side(s1), _Side(s2)
    meet = _meeting(forward, backward, canonical_key(s1))
    explored = 0
    while meet is None and explored < budget and (forward.frontier or backward.frontier):
        side, other = (forward, backward) if _pick_forward(forward, backward) else (backward, forward)
        key = side.frontier.popleft()
        node = side.nodes[key][0]
        explored += 1
        for child, moves in neighbours(node, framed):
            if len(child.items) > length_cap:
                continue
            child_key = canonical_key(child)
            if child_key in side.nodes:
                continue
            side.nodes[child_key] = (child, key, moves)
            side.frontier.append(child_key)
            if child_key in other.nodes:
                meet = child_key
                break
        if explored % 500 == 0:
            logger.debug("search: %d explored, frontiers %d/%d", explored, len(forward.frontier), len(backward.frontier))

    if meet is None:
        logger.warning("no verdict after %d of %d nodes", explored, budget)
        return Unknown(explored, budget)

    forward_path = forward.path(meet)
    backward_path = backward.path(meet)
    reached = replay(s1, forward_path)
    trace = (
        list(trace1)
        + forward_path
        + align_words(reached, backward.nodes[meet][0])
        + invert_trace(s2, backward_path)
        + invert_trace(t2, trace2)
    )
    try:
        end = replay(t1, trace)
    except IllegalMove as exc:
        logger.warning("found path does not replay: %s", exc)
        return Unknown(explored, budget)
    if end != t2:
        logger.warning("found path ends at %s instead of %s", serialize(end), serialize(t2))
        return Unknown(explored, budget)
    logger.info("equal after %d nodes, trace of %d moves", explored, len(trace))
    return Equal(tuple(trace))


def _meeting(forward: _Side, backward: _Side, key: Hashable) -> Optional[Hashable]:
    return key if key in backward.nodes else None


def _pick_forward(forward: _Side, backward: _Side) -> bool:
    if not backward.frontier:
        return True
    if not forward.frontier:
        return False
    return len(forward.frontier) <= len(backward.frontier)


def link_invariants(link: Tangle) -> Dict[str, Any]:
    """Components, writhe, bracket and Jones of a link, skipping polynomials over the cap."""
    data: Dict[str, Any] = {"components": components(link), "writhe": writhe(link)}
    try:
        data["bracket"] = kauffman_bracket(link)
        data["jones"] = jones(link)
    except CrossingCapExceeded as exc:
        logger.warning("%s", exc)
        data["bracket"] = data["jones"] = None
    return data
