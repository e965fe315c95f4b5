"""
Local moves on tangle sequences and the reductions built from them.

Every move is a MoveInstance: a move id, the index of the lowest element it
touches and a small parameter set. apply_move checks the side conditions and
returns the rewritten tangle; inverse_move gives the instance that undoes it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .braidcore import (
    BraidWord,
    cable_bottom,
    cable_top,
    compose,
    equals,
    inverse,
    is_identity,
    parse_braid,
    perm,
    serialize_braid,
)
from .errors import BoundaryError, IllegalMove, TanglekitError
from .tanglecalc import (
    Arc,
    BraidBlock,
    Cap,
    Cup,
    Dir,
    Element,
    Level,
    Tangle,
    dirs_str,
    levels,
    make_cap,
    make_cup,
    pad,
    require_knot,
    validate,
)

logger = logging.getLogger(__name__)

MOVES = ("T1", "T2", "T3", "T4", "T5", "T6", "FT6")
ParamValue = Union[int, str]


@dataclass(frozen=True)
class MoveInstance:
    move: str
    position: int
    params: Tuple[Tuple[str, ParamValue], ...] = ()

    @classmethod
    def make(cls, move: str, position: int, **params: ParamValue) -> "MoveInstance":
        if move not in MOVES:
            raise IllegalMove(move, "unknown move id", position)
        return cls(move, position, tuple(sorted(params.items())))

    def get(self, name: str, default: Optional[ParamValue] = None) -> Any:
        return dict(self.params).get(name, default)

    def to_json(self) -> Dict[str, Any]:
        return {"move": self.move, "position": self.position, "params": dict(self.params)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "MoveInstance":
        return cls.make(data["move"], int(data["position"]), **data.get("params", {}))

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.move}@{self.position}({args})"


def _element(t: Tangle, index: int, move: str, position: int) -> Element:
    if not 0 <= index < len(t.items):
        raise IllegalMove(move, f"no element at index {index}", position)
    return t.items[index]


def _single_run(g: Element) -> Optional[Tuple[int, int]]:
    if isinstance(g, BraidBlock) and len(g.braid.runs) == 1:
        return g.braid.runs[0]
    return None


def _window(g: Element, move: str, position: int) -> Tuple[int, int, int]:
    """(offset, lower width, upper width) of the active part of g."""
    if isinstance(g, Cap):
        return g.offset, 2, 0
    if isinstance(g, Cup):
        return g.offset, 0, 2
    support = g.braid.support()
    if support is None:
        raise IllegalMove(move, "an empty braid block has no active window", position)
    lo, hi = support
    return lo - 1, hi - lo + 2, hi - lo + 2


def _rebuild(g: Element, old_offset: int, new_offset: int, level: Level) -> Element:
    if isinstance(g, Cap):
        return make_cap(level, new_offset)
    if isinstance(g, Cup):
        return make_cup(level, new_offset, g.arc)
    return BraidBlock(g.braid.shifted(new_offset - old_offset, len(level)), level)


# ---------------------------------------------------------------------------
# the moves


def _t1(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    if m.get("op") == "insert":
        if not 0 <= pos <= len(t.items):
            raise IllegalMove("T1", f"no junction {pos}", pos)
        level = levels(t)[pos]
        word = parse_braid(str(m.get("braid", "e")), len(level))
        if not is_identity(word):
            raise IllegalMove("T1", f"{word} is not a trivial braid", pos)
        return t.replaced(pos, pos, [BraidBlock(word, level)])
    g = _element(t, pos, "T1", pos)
    if not isinstance(g, BraidBlock) or not is_identity(g.braid):
        raise IllegalMove("T1", "element is not a trivial braid", pos)
    return t.replaced(pos, pos + 1, [])


def _t2(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    if m.get("op") == "split":
        g = _element(t, pos, "T2", pos)
        if not isinstance(g, BraidBlock):
            raise IllegalMove("T2", "only braid blocks split", pos)
        upper = parse_braid(str(m.get("upper", "e")), g.braid.strands)
        lower = BraidBlock(compose(inverse(upper), g.braid), g.eps)
        return t.replaced(pos, pos + 1, [lower, BraidBlock(upper, lower.target)])
    lower, upper = _element(t, pos, "T2", pos), _element(t, pos + 1, "T2", pos)
    if not isinstance(lower, BraidBlock) or not isinstance(upper, BraidBlock):
        raise IllegalMove("T2", "merge needs two adjacent braid blocks", pos)
    return t.replaced(pos, pos + 2, [BraidBlock(compose(upper.braid, lower.braid), lower.eps)])


def _t3(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    lower, upper = _element(t, pos, "T3", pos), _element(t, pos + 1, "T3", pos)
    gl, gbw, gtw = _window(lower, "T3", pos)
    hl, hbw, htw = _window(upper, "T3", pos)
    base = levels(t)[pos]
    if m.get("side", "right") == "right":
        if gl + gtw > hl:
            raise IllegalMove("T3", "upper element does not lie to the right of the lower one", pos)
        new_lower = _rebuild(upper, hl, hl + gbw - gtw, base)
        new_upper = _rebuild(lower, gl, gl, new_lower.target)
    else:
        if hl + hbw > gl:
            raise IllegalMove("T3", "upper element does not lie to the left of the lower one", pos)
        new_lower = _rebuild(upper, hl, hl, base)
        new_upper = _rebuild(lower, gl, gl + htw - hbw, new_lower.target)
    return t.replaced(pos, pos + 2, [new_lower, new_upper])


def _t4(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    lower, upper = _element(t, pos, "T4", pos), _element(t, pos + 1, "T4", pos)
    strands = int(m.get("strands", 0))
    b = parse_braid(str(m.get("braid", "e")), strands)
    k = int(m.get("k", 0))
    if not 1 <= k <= strands:
        raise IllegalMove("T4", f"marked string {k} does not exist on {strands} strands", pos)
    k_top = perm(b)(k)
    base = levels(t)[pos]

    if isinstance(lower, (Cap, Cup)) and isinstance(upper, BraidBlock):
        above, below = (0, 2) if isinstance(lower, Cap) else (2, 0)
        if lower.offset != k - 1:
            raise IllegalMove("T4", f"the {lower.kind} element is not at string {k}", pos)
        _check_cable(upper.braid, cable_bottom(b, k, above), pos)
        block = BraidBlock(_produced(m, cable_bottom(b, k, below), pos), base)
        slid = (
            make_cap(block.target, k_top - 1)
            if isinstance(lower, Cap)
            else make_cup(block.target, k_top - 1, lower.arc)
        )
        return t.replaced(pos, pos + 2, [block, slid])

    if isinstance(lower, BraidBlock) and isinstance(upper, (Cap, Cup)):
        below, above = (2, 0) if isinstance(upper, Cap) else (0, 2)
        if upper.offset != k_top - 1:
            raise IllegalMove("T4", f"the {upper.kind} element is not at top string {k_top}", pos)
        _check_cable(lower.braid, cable_bottom(b, k, below), pos)
        slid = make_cap(base, k - 1) if isinstance(upper, Cap) else make_cup(base, k - 1, upper.arc)
        block = BraidBlock(_produced(m, cable_bottom(b, k, above), pos), slid.target)
        return t.replaced(pos, pos + 2, [slid, block])

    raise IllegalMove("T4", "needs a cap or cup next to a braid block", pos)


def _check_cable(actual: BraidWord, expected: BraidWord, pos: int) -> None:
    if actual.strands != expected.strands or not equals(actual, expected):
        raise IllegalMove("T4", f"braid {actual} is not the cable {expected}", pos)


def _produced(m: MoveInstance, cable: BraidWord, pos: int) -> BraidWord:
    """The cable, or the explicit word for it when the instance carries one."""
    if m.get("word") is None:
        return cable
    word = parse_braid(str(m.get("word")), cable.strands)
    _check_cable(word, cable, pos)
    return word


def _t5(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    if m.get("op") == "create":
        if not 0 <= pos <= len(t.items):
            raise IllegalMove("T5", f"no junction {pos}", pos)
        level = levels(t)[pos]
        offset = int(m.get("offset", 0))
        if m.get("side", "right") == "right":
            if not 0 <= offset < len(level):
                raise IllegalMove("T5", f"no string right of offset {offset}", pos)
            arc = Arc.from_ends(level[offset], level[offset].flipped)
            new_cup = make_cup(level, offset, arc)
            new_cap = make_cap(new_cup.target, offset + 1)
        else:
            if not 1 <= offset <= len(level):
                raise IllegalMove("T5", f"no string left of offset {offset}", pos)
            arc = Arc.from_ends(level[offset - 1].flipped, level[offset - 1])
            new_cup = make_cup(level, offset, arc)
            new_cap = make_cap(new_cup.target, offset - 1)
        return t.replaced(pos, pos, [new_cup, new_cap])
    lower, upper = _element(t, pos, "T5", pos), _element(t, pos + 1, "T5", pos)
    if not isinstance(lower, Cup) or not isinstance(upper, Cap):
        raise IllegalMove("T5", "cancel needs a cup directly below a cap", pos)
    if abs(upper.offset - lower.offset) != 1:
        raise IllegalMove("T5", "cap and cup do not form a zig-zag", pos)
    return t.replaced(pos, pos + 2, [])


def _t6(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    form = m.get("form", "cup")
    if m.get("op") == "insert":
        c = int(m.get("c", 1))
        g = _element(t, pos, "T6", pos)
        if c == 0:
            raise IllegalMove("T6", "twist exponent must be nonzero", pos)
        if form == "cup":
            if not isinstance(g, Cup):
                raise IllegalMove("T6", "element is not a cup", pos)
            flipped = Cup(g.left, g.arc.flipped if c % 2 else g.arc, g.right)
            twist = BraidBlock(BraidWord.generator(g.offset + 1, len(flipped.target), c), flipped.target)
            return t.replaced(pos, pos + 1, [flipped, twist])
        if not isinstance(g, Cap):
            raise IllegalMove("T6", "element is not a cap", pos)
        twist = BraidBlock(BraidWord.generator(g.offset + 1, len(g.source), c), g.source)
        return t.replaced(pos, pos + 1, [twist, make_cap(twist.target, g.offset)])

    lower, upper = _element(t, pos, "T6", pos), _element(t, pos + 1, "T6", pos)
    if form == "cup":
        run = _single_run(upper)
        if not isinstance(lower, Cup) or run is None or run[0] != lower.offset + 1:
            raise IllegalMove("T6", "needs σ_{k+1}^c directly above c_{k,l}", pos)
        c = run[1]
        return t.replaced(pos, pos + 2, [Cup(lower.left, lower.arc.flipped if c % 2 else lower.arc, lower.right)])
    run = _single_run(lower)
    if not isinstance(upper, Cap) or run is None or run[0] != upper.offset + 1:
        raise IllegalMove("T6", "needs σ_{k+1}^c directly below a_{k,l}", pos)
    return t.replaced(pos, pos + 2, [make_cap(levels(t)[pos], upper.offset)])


# the cap form builds one cup, the cup form two
_FT6_ARCS: Dict[str, Tuple[Tuple[Arc, ...], ...]] = {
    "cup": ((Arc.LEFT, Arc.LEFT), (Arc.LEFT, Arc.RIGHT), (Arc.RIGHT, Arc.LEFT), (Arc.RIGHT, Arc.RIGHT)),
    "cap": ((Arc.LEFT,), (Arc.RIGHT,)),
}


def _ft6(t: Tangle, m: MoveInstance) -> Tangle:
    pos = m.position
    form = m.get("form", "cup")
    if m.get("op") == "insert":
        c = int(m.get("c", 1))
        if c == 0:
            raise IllegalMove("FT6", "twist exponent must be nonzero", pos)
        g = _element(t, pos, "FT6", pos)
        for arcs in _FT6_ARCS["cup" if form == "cup" else "cap"]:
            try:
                chain = _ft6_chain(g, form, c, arcs)
            except TanglekitError:
                continue
            if chain[-1].target == g.target:
                return t.replaced(pos, pos + 1, chain)
        raise IllegalMove("FT6", "no orientation fits the framed kink", pos)

    window = t.items[pos:pos + 5]
    if len(window) != 5:
        raise IllegalMove("FT6", "needs five elements", pos)
    first, twist1, middle, twist2, last = window
    run1, run2 = _single_run(twist1), _single_run(twist2)
    if run1 is None or run2 is None or run1[1] != -run2[1]:
        raise IllegalMove("FT6", "needs opposite twists σ^c and σ^{-c}", pos)
    base = levels(t)[pos]
    if form == "cup":
        if not (isinstance(first, Cup) and isinstance(middle, Cup) and isinstance(last, Cap)):
            raise IllegalMove("FT6", "needs cup, twist, cup, twist, cap", pos)
        k = first.offset
        if (middle.offset, last.offset, run1[0], run2[0]) != (k + 2, k + 1, k + 1, k + 3):
            raise IllegalMove("FT6", "cups, cap and twists are not aligned", pos)
        top = last.target
        return t.replaced(pos, pos + 5, [make_cup(base, k, Arc.from_ends(top[k], top[k + 1]))])
    if not (isinstance(first, Cup) and isinstance(middle, Cap) and isinstance(last, Cap)):
        raise IllegalMove("FT6", "needs cup, twist, cap, twist, cap", pos)
    k = last.offset
    if (first.offset, middle.offset, run1[0], run2[0]) != (k + 1, k + 2, k + 3, k + 1):
        raise IllegalMove("FT6", "cup, caps and twists are not aligned", pos)
    return t.replaced(pos, pos + 5, [make_cap(base, k)])


def _ft6_chain(g: Element, form: str, c: int, arcs: Tuple[Arc, ...]) -> List[Element]:
    base = g.source
    if form == "cup":
        if not isinstance(g, Cup):
            raise IllegalMove("FT6", "element is not a cup")
        k = g.offset
        first = make_cup(base, k, arcs[0])
        twist1 = BraidBlock(BraidWord.generator(k + 1, len(first.target), c), first.target)
        middle = make_cup(twist1.target, k + 2, arcs[1])
        twist2 = BraidBlock(BraidWord.generator(k + 3, len(middle.target), -c), middle.target)
        return [first, twist1, middle, twist2, make_cap(twist2.target, k + 1)]
    if not isinstance(g, Cap):
        raise IllegalMove("FT6", "element is not a cap")
    k = g.offset
    first = make_cup(base, k + 1, arcs[0])
    twist1 = BraidBlock(BraidWord.generator(k + 3, len(first.target), c), first.target)
    middle = make_cap(twist1.target, k + 2)
    twist2 = BraidBlock(BraidWord.generator(k + 1, len(middle.target), -c), middle.target)
    return [first, twist1, middle, twist2, make_cap(twist2.target, k)]


_APPLY: Dict[str, Callable[[Tangle, MoveInstance], Tangle]] = {
    "T1": _t1,
    "T2": _t2,
    "T3": _t3,
    "T4": _t4,
    "T5": _t5,
    "T6": _t6,
    "FT6": _ft6,
}


def apply_move(t: Tangle, m: MoveInstance) -> Tangle:
    handler = _APPLY.get(m.move)
    if handler is None:
        raise IllegalMove(m.move, "unknown move id", m.position)
    try:
        result = handler(t, m)
    except IllegalMove:
        raise
    except TanglekitError as exc:
        raise IllegalMove(m.move, str(exc), m.position) from exc
    if result.source != t.source or result.target != t.target:
        raise IllegalMove(m.move, "boundary changed", m.position)
    logger.debug("applied %s: %d -> %d elements", m, len(t.items), len(result.items))
    return result


def inverse_move(t: Tangle, m: MoveInstance) -> MoveInstance:
    """The instance that takes apply_move(t, m) back to t."""
    pos = m.position
    if m.move == "T1":
        if m.get("op") == "insert":
            return MoveInstance.make("T1", pos, op="drop")
        return MoveInstance.make("T1", pos, op="insert", braid=serialize_braid(t.items[pos].braid))
    if m.move == "T2":
        if m.get("op") == "split":
            return MoveInstance.make("T2", pos, op="merge")
        return MoveInstance.make("T2", pos, op="split", upper=serialize_braid(t.items[pos + 1].braid))
    if m.move == "T3":
        return MoveInstance.make("T3", pos, side="left" if m.get("side", "right") == "right" else "right")
    if m.move == "T4":
        block = t.items[pos] if isinstance(t.items[pos], BraidBlock) else t.items[pos + 1]
        params = dict(m.params)
        params["word"] = serialize_braid(block.braid)
        return MoveInstance.make("T4", pos, **params)
    if m.move == "T5":
        if m.get("op") == "create":
            return MoveInstance.make("T5", pos, op="cancel")
        lower, upper = t.items[pos], t.items[pos + 1]
        side = "right" if upper.offset == lower.offset + 1 else "left"
        return MoveInstance.make("T5", pos, op="create", offset=lower.offset, side=side)
    form = m.get("form", "cup")
    if m.get("op") == "insert":
        return MoveInstance.make(m.move, pos, op="remove", form=form)
    if m.move == "T6":
        block = t.items[pos + 1] if form == "cup" else t.items[pos]
    else:
        block = t.items[pos + 1]
    return MoveInstance.make(m.move, pos, op="insert", form=form, c=block.braid.runs[0][1])


def replay(t: Tangle, trace: Iterable[MoveInstance]) -> Tangle:
    for m in trace:
        t = apply_move(t, m)
    return t


def replay_states(t: Tangle, trace: Sequence[MoveInstance]) -> List[Tangle]:
    states = [t]
    for m in trace:
        states.append(apply_move(states[-1], m))
    return states


def invert_trace(start: Tangle, trace: Sequence[MoveInstance]) -> List[MoveInstance]:
    """Moves leading from replay(start, trace) back to start."""
    states = replay_states(start, trace)
    return [inverse_move(states[j], trace[j]) for j in range(len(trace) - 1, -1, -1)]


# ---------------------------------------------------------------------------
# enumeration


def _try(t: Tangle, m: MoveInstance) -> bool:
    try:
        apply_move(t, m)
    except IllegalMove:
        return False
    return True


def t3_candidates(t: Tangle) -> List[MoveInstance]:
    return [
        MoveInstance.make("T3", pos, side=side)
        for pos in range(len(t.items) - 1)
        for side in ("right", "left")
        if _try(t, MoveInstance.make("T3", pos, side=side))
    ]


def t4_candidates(t: Tangle) -> List[MoveInstance]:
    """Slides of caps and cups through the braid block next to them.

    Cup upwards and cap downwards remove one string of the cable; the two
    other directions grow a new string parallel to a neighbouring one.
    """
    found: List[MoveInstance] = []
    for pos in range(len(t.items) - 1):
        lower, upper = t.items[pos], t.items[pos + 1]
        options: List[Tuple[BraidWord, int]] = []
        if isinstance(lower, (Cap, Cup)) and isinstance(upper, BraidBlock):
            beta, k = upper.braid, lower.offset + 1
            if isinstance(lower, Cup):
                options.append((cable_bottom(beta, k, 0), k))
            elif beta.strands == 0:
                options.append((BraidWord.identity(1), 1))
            else:
                if k - 1 >= 1:
                    options.append((cable_bottom(beta, k - 1, 2), k))
                if k <= beta.strands:
                    options.append((cable_bottom(beta, k, 2), k))
        elif isinstance(lower, BraidBlock) and isinstance(upper, (Cap, Cup)):
            beta, k_top = lower.braid, upper.offset + 1
            candidates: List[BraidWord] = []
            if isinstance(upper, Cap):
                candidates.append(cable_top(beta, k_top, 0))
            elif beta.strands == 0:
                candidates.append(BraidWord.identity(1))
            else:
                if k_top - 1 >= 1:
                    candidates.append(cable_top(beta, k_top - 1, 2))
                if k_top <= beta.strands:
                    candidates.append(cable_top(beta, k_top, 2))
            options.extend((b, perm(b).inverse()(k_top)) for b in candidates if 1 <= k_top <= b.strands)
        for b, k in options:
            m = MoveInstance.make("T4", pos, braid=serialize_braid(b), strands=b.strands, k=k)
            if _try(t, m):
                found.append(m)
    return found


def legal_moves(t: Tangle, framed: bool = False, expanding: bool = True) -> List[MoveInstance]:
    """Concrete legal instances; expanding adds the length-increasing directions."""
    found: List[MoveInstance] = []
    items = t.items
    for pos, g in enumerate(items):
        if isinstance(g, BraidBlock) and is_identity(g.braid):
            found.append(MoveInstance.make("T1", pos, op="drop"))
        if pos + 1 < len(items):
            upper = items[pos + 1]
            if isinstance(g, BraidBlock) and isinstance(upper, BraidBlock):
                found.append(MoveInstance.make("T2", pos, op="merge"))
            if isinstance(g, Cup) and isinstance(upper, Cap) and abs(upper.offset - g.offset) == 1:
                found.append(MoveInstance.make("T5", pos, op="cancel"))
        for form in ("cup", "cap"):
            candidate = MoveInstance.make("FT6" if framed else "T6", pos, op="remove", form=form)
            if _try(t, candidate):
                found.append(candidate)
    found.extend(t3_candidates(t))
    found.extend(t4_candidates(t))
    if not expanding:
        return found

    heights = levels(t)
    for pos in range(len(items) + 1):
        found.append(MoveInstance.make("T1", pos, op="insert"))
        for offset in range(len(heights[pos]) + 1):
            for side in ("right", "left"):
                candidate = MoveInstance.make("T5", pos, op="create", offset=offset, side=side)
                if _try(t, candidate):
                    found.append(candidate)
    for pos, g in enumerate(items):
        if isinstance(g, BraidBlock) and len(g.braid.runs) > 1:
            for cut in range(1, len(g.braid.runs)):
                upper = BraidWord(g.braid.strands, g.braid.runs[:cut])
                found.append(MoveInstance.make("T2", pos, op="split", upper=serialize_braid(upper)))
        if isinstance(g, (Cap, Cup)):
            form = "cap" if isinstance(g, Cap) else "cup"
            if framed:
                exponents: Tuple[int, ...] = (1, -1)
                move = "FT6"
            else:
                exponents = (1, -1, 2, -2)
                move = "T6"
            for c in exponents:
                candidate = MoveInstance.make(move, pos, op="insert", form=form, c=c)
                if _try(t, candidate):
                    found.append(candidate)
    return found


# ---------------------------------------------------------------------------
# simplification


def _next_reduction(t: Tangle, framed: bool) -> Optional[List[MoveInstance]]:
    items = t.items
    for pos, g in enumerate(items):
        upper = items[pos + 1] if pos + 1 < len(items) else None
        if isinstance(g, BraidBlock) and is_identity(g.braid):
            return [MoveInstance.make("T1", pos, op="drop")]
        if isinstance(g, BraidBlock) and isinstance(upper, BraidBlock):
            return [MoveInstance.make("T2", pos, op="merge")]
        if isinstance(g, Cup) and isinstance(upper, Cap) and abs(upper.offset - g.offset) == 1:
            return [MoveInstance.make("T5", pos, op="cancel")]
        if framed:
            for form in ("cup", "cap"):
                candidate = MoveInstance.make("FT6", pos, op="remove", form=form)
                if _try(t, candidate):
                    return [candidate]
            continue
        if isinstance(g, Cup) and isinstance(upper, BraidBlock) and upper.braid.runs:
            if upper.braid.runs[-1][0] == g.offset + 1:
                steps = []
                if len(upper.braid.runs) > 1:
                    rest = BraidWord(upper.braid.strands, upper.braid.runs[:-1])
                    steps.append(MoveInstance.make("T2", pos + 1, op="split", upper=serialize_braid(rest)))
                steps.append(MoveInstance.make("T6", pos, op="remove", form="cup"))
                return steps
        if isinstance(g, BraidBlock) and isinstance(upper, Cap) and g.braid.runs:
            if g.braid.runs[0][0] == upper.offset + 1:
                steps = []
                at = pos
                if len(g.braid.runs) > 1:
                    top = BraidWord(g.braid.strands, g.braid.runs[:1])
                    steps.append(MoveInstance.make("T2", pos, op="split", upper=serialize_braid(top)))
                    at = pos + 1
                steps.append(MoveInstance.make("T6", at, op="remove", form="cap"))
                return steps
    return None


def simplify_traced(t: Tangle, framed: bool = False) -> Tuple[Tangle, List[MoveInstance]]:
    """Apply reducing moves, lowest position first, until none applies."""
    trace: List[MoveInstance] = []
    while True:
        steps = _next_reduction(t, framed)
        if steps is None:
            return t, trace
        for m in steps:
            t = apply_move(t, m)
            trace.append(m)


def simplify(t: Tangle, framed: bool = False) -> Tangle:
    return simplify_traced(t, framed)[0]


# ---------------------------------------------------------------------------
# knots: standard form, connected sum, transpose


def standardize_traced(k: Tangle, framed: bool = False) -> Tuple[Tangle, List[MoveInstance]]:
    """Make the bottom element c_{0,0}^{<} and the top one a_{0,0}^{<}."""
    require_knot(k)
    move = "FT6" if framed else "T6"
    trace: List[MoveInstance] = []
    if k.items[0].arc is not Arc.LEFT:
        m = MoveInstance.make(move, 0, op="insert", form="cup", c=1)
        k = apply_move(k, m)
        trace.append(m)
    if k.items[-1].arc is not Arc.LEFT:
        m = MoveInstance.make(move, len(k.items) - 1, op="insert", form="cap", c=1)
        k = apply_move(k, m)
        trace.append(m)
    return k, trace


def standardize(k: Tangle, framed: bool = False) -> Tangle:
    return standardize_traced(k, framed)[0]


def connected_sum(k1: Tangle, k2: Tangle, framed: bool = False) -> Tangle:
    """k1 ♯ k2: k2 below without its top cap, k1 above without its bottom cup."""
    s1, s2 = standardize(k1, framed), standardize(k2, framed)
    return validate(list(s2.items[:-1]) + list(s1.items[1:]))


def transpose(t: Tangle) -> Tangle:
    """a_{0,1}·(e_1⊗T⊗e_1)·c_{1,0} for a tangle with one end at each side."""
    d = _single_end(t)
    e = d.flipped
    return validate(
        [Cup((e,), Arc.from_ends(d, e))] + list(pad(t, (e,), (e,)).items) + [Cap((), Arc.from_ends(e, d), (e,))]
    )


def transpose_alt(t: Tangle) -> Tangle:
    """a_{1,0}·(e_1⊗T⊗e_1)·c_{0,1}, the mirror-image construction of the transpose."""
    d = _single_end(t)
    e = d.flipped
    return validate(
        [Cup((), Arc.from_ends(e, d), (e,))] + list(pad(t, (e,), (e,)).items) + [Cap((e,), Arc.from_ends(d, e))]
    )


def _single_end(t: Tangle) -> Dir:
    if len(t.source) != 1 or t.source != t.target:
        raise BoundaryError(
            f"transpose needs s(T) = t(T) of one string, got {dirs_str(t.source)!r} -> {dirs_str(t.target)!r}"
        )
    return t.source[0]


def creation_annihilation_pairs(t: Tangle) -> List[Tuple[Tangle, Tangle]]:
    """Sliding T around a cup or a cap turns it into its transpose on the other leg."""
    d = _single_end(t)
    e = d.flipped
    tt = transpose(t)
    arc = Arc.from_ends(d, e)
    pairs = []
    cup_lhs = validate([Cup((), arc)] + list(pad(t, (), (e,)).items))
    cup_rhs = validate([Cup((), arc)] + list(pad(tt, (d,), ()).items))
    pairs.append((cup_lhs, cup_rhs))
    flipped_arc = Arc.from_ends(e, d)
    cup2_lhs = validate([Cup((), flipped_arc)] + list(pad(t, (e,), ()).items))
    cup2_rhs = validate([Cup((), flipped_arc)] + list(pad(tt, (), (d,)).items))
    pairs.append((cup2_lhs, cup2_rhs))
    cap_lhs = validate(list(pad(t, (), (e,)).items) + [Cap((), arc)], (d, e))
    cap_rhs = validate(list(pad(tt, (d,), ()).items) + [Cap((), arc)], (d, e))
    pairs.append((cap_lhs, cap_rhs))
    cap2_lhs = validate(list(pad(t, (e,), ()).items) + [Cap((), flipped_arc)], (e, d))
    cap2_rhs = validate(list(pad(tt, (), (d,)).items) + [Cap((), flipped_arc)], (e, d))
    pairs.append((cap2_lhs, cap2_rhs))
    return pairs
