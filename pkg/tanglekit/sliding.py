"""
Constructive isotopies that move a whole piece of a diagram at once.

A box is a run of elements items[start:stop] confined to a bundle of
neighbouring strands that begins at `position` and is one strand wide at its
bottom and top. A box travels along its strand: past elements away from the
strand by T3, through braid blocks by cabling them (T2 and T4), and around a
cap or a cup by carrying it across one element at a time over a nest of caps
or cups. Every step goes through apply_move, so the traces built here always
replay.

On top of that sit the moves on knots in standard form [c, A, B, a]: folding a
summand into a box, carrying it around the knot, and commuting connected
summands. The last section rewrites framed curls into one fixed shape.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .braidcore import BraidWord, cable_bottom, perm, serialize_braid
from .errors import SlideError, TanglekitError
from .isotopy import MoveInstance, apply_move, invert_trace
from .tanglecalc import (
    Arc,
    BraidBlock,
    Cap,
    Cup,
    Element,
    Level,
    Tangle,
    is_knot,
    levels,
    make_cap,
    pad,
    rotate,
    validate,
)

logger = logging.getLogger(__name__)

UP, DOWN = "up", "down"
LEFT, RIGHT = "left", "right"


@dataclass
class MoveLog:
    """A tangle and the moves that lead to it from start."""

    start: Tangle
    tangle: Tangle = field(init=False)
    trace: List[MoveInstance] = field(default_factory=list, init=False)

    def __post_init__(self) -> None:
        self.tangle = self.start

    def apply(self, move: str, position: int, **params) -> None:
        m = MoveInstance.make(move, position, **params)
        self.tangle = apply_move(self.tangle, m)
        self.trace.append(m)

    def extend(self, moves: Sequence[MoveInstance]) -> None:
        for m in moves:
            self.tangle = apply_move(self.tangle, m)
            self.trace.append(m)

    def swap(self, pos: int, side: str) -> None:
        self.apply("T3", pos, side=side)

    def split(self, pos: int, upper: BraidWord) -> None:
        self.apply("T2", pos, op="split", upper=serialize_braid(upper))

    def merge(self, pos: int) -> None:
        self.apply("T2", pos, op="merge")

    def drop(self, pos: int) -> None:
        self.apply("T1", pos, op="drop")

    def slide(self, pos: int, braid: BraidWord, k: int) -> None:
        self.apply("T4", pos, braid=serialize_braid(braid), strands=braid.strands, k=k)

    def set_word(self, pos: int, word: BraidWord) -> None:
        """Rewrite the braid block at pos into an equal word."""
        if self.tangle.items[pos].braid.runs == word.runs:
            return
        self.split(pos, word)
        self.drop(pos)

    def expect(self, goal: Tangle, what: str) -> None:
        if self.tangle != goal:
            raise SlideError(f"{what} did not end in the expected diagram")


def reversed_by(log: MoveLog, goal: Tangle, forward: Callable[[MoveLog], object], what: str) -> None:
    """Reach goal from log.tangle by running forward from goal and undoing it."""
    replica = MoveLog(goal)
    forward(replica)
    replica.expect(log.tangle, what)
    log.extend(invert_trace(goal, replica.trace))


# ---------------------------------------------------------------------------
# boxes


@dataclass(frozen=True)
class Box:
    start: int
    stop: int
    position: int

    def __len__(self) -> int:
        return self.stop - self.start


def _span(g: Element) -> Tuple[int, int, int]:
    """(offset, lower width, upper width) of the active part of g."""
    if isinstance(g, Cap):
        return g.offset, 2, 0
    if isinstance(g, Cup):
        return g.offset, 0, 2
    support = g.braid.support()
    if support is None:
        raise SlideError("an empty braid block has no place relative to a strand")
    lo, hi = support
    return lo - 1, hi - lo + 2, hi - lo + 2


def _growth(g: Element) -> int:
    if isinstance(g, BraidBlock):
        return 0
    _, below, above = _span(g)
    return above - below


def _unpad(g: Element, left: int, right: int) -> Element:
    if isinstance(g, BraidBlock):
        strands = g.braid.strands - left - right
        return BraidBlock(g.braid.shifted(-left, strands), g.eps[left:len(g.eps) - right])
    if len(g.left) < left or len(g.right) < right:
        raise SlideError(f"{g.kind} element leaves the bundle")
    return type(g)(g.left[left:], g.arc, g.right[:len(g.right) - right])


def box_tangle(t: Tangle, box: Box) -> Tangle:
    """The box as a tangle on its own bundle."""
    level = levels(t)[box.start]
    right = len(level) - box.position - 1
    try:
        items = [_unpad(g, box.position, right) for g in t.items[box.start:box.stop]]
    except TanglekitError as exc:
        raise SlideError(f"elements {box.start}..{box.stop} are not a box on strand {box.position}: {exc}") from exc
    return Tangle(tuple(items), level[box.position:box.position + 1])


def embed(z: Tangle, left: Level, right: Level) -> List[Element]:
    return list(pad(z, left, right).items)


def _letters(b: BraidWord) -> int:
    return sum(abs(e) for _, e in b.runs)


def _regroup(log: MoveLog, start: int, goal: Sequence[Element]) -> None:
    """Merge the single letters starting at start into the blocks of goal."""
    index = start
    for g in goal:
        if isinstance(g, BraidBlock):
            for _ in range(_letters(g.braid) - 1):
                log.merge(index)
        index += 1


def _relation(g: Element, p: int, touching_bottom: bool) -> Optional[str]:
    """Side of g relative to strand p at the level g shares with the box."""
    offset, below, above = _span(g)
    width = below if touching_bottom else above
    if offset + width <= p:
        return LEFT
    if offset >= p + 1:
        return RIGHT
    return None


def _opposite(side: str) -> str:
    return LEFT if side == RIGHT else RIGHT


def _widths(t: Tangle, box: Box) -> List[int]:
    """Bundle width at every level from box.start to box.stop."""
    widths = [1]
    for g in t.items[box.start:box.stop]:
        widths.append(widths[-1] + _growth(g))
    return widths


def pass_up(log: MoveLog, box: Box, side: str) -> Box:
    """Move the element just above the box, lying on `side` of it, below the box."""
    g = log.tangle.items[box.stop]
    for pos in range(box.stop - 1, box.start - 1, -1):
        log.swap(pos, side)
    shift = _growth(g) if side == LEFT else 0
    return Box(box.start + 1, box.stop + 1, box.position + shift)


def pass_down(log: MoveLog, box: Box, side: str) -> Box:
    """Move the element just below the box, lying on `side` of it, above the box."""
    g = log.tangle.items[box.start - 1]
    for pos in range(box.start - 1, box.stop - 1):
        log.swap(pos, _opposite(side))
    shift = -_growth(g) if side == LEFT else 0
    return Box(box.start - 1, box.stop - 1, box.position + shift)


def through_block_up(log: MoveLog, box: Box) -> Box:
    """Carry the box up through the braid block right above it.

    The block is cabled along the box strand; each box element is taken from
    the top and pushed through: braid elements by T2, caps and cups by T4.
    """
    beta = log.tangle.items[box.stop].braid
    k = box.position + 1
    k_top = perm(beta)(k)
    widths = _widths(log.tangle, box)
    for index in range(box.stop - 1, box.start - 1, -1):
        x = log.tangle.items[index]
        below = widths[index - box.start]
        if isinstance(x, BraidBlock):
            log.merge(index)
            log.split(index, x.braid.shifted(k_top - k, x.braid.strands))
            log.set_word(index, cable_bottom(beta, k, below))
        elif isinstance(x, Cap):
            log.slide(index, cable_bottom(beta, k, below - 1), x.offset + 1)
        else:
            log.slide(index, cable_bottom(beta, k, below + 1), x.offset + 1)
    log.set_word(box.start, beta)
    return Box(box.start + 1, box.stop + 1, k_top - 1)


def through_block_down(log: MoveLog, box: Box) -> Box:
    t = log.tangle
    block = t.items[box.start - 1]
    k = perm(block.braid).inverse()(box.position + 1)
    level = levels(t)[box.start - 1]
    lower = embed(box_tangle(t, box), level[:k - 1], level[k:])
    top = lower[-1].target if lower else level
    goal = t.replaced(box.start - 1, box.stop, lower + [BraidBlock(block.braid, top)])
    target = Box(box.start - 1, box.stop - 1, k - 1)
    reversed_by(log, goal, lambda replica: through_block_up(replica, target), "braid passage")
    return target


# ---------------------------------------------------------------------------
# turning around caps


def _letter_over_caps(log: MoveLog, at: int, p: int, width: int) -> int:
    """σ_i^e on the left legs of `width` nested caps becomes σ_{width-i}^e on the right legs."""
    (gen, e), = log.tangle.items[at].braid.runs
    n = log.tangle.items[at].braid.strands
    i = gen - p
    log.split(at, BraidWord(n, ((gen, e), (p + 2 * width - i, -e))))
    log.split(at + 1, BraidWord.generator(gen, n, e))
    inner = width - i - 1
    for m in range(inner):
        log.swap(at + 2 + m, RIGHT)
        log.swap(at + 1 + m, LEFT)
    pos = at + 1 + inner
    log.merge(pos)
    a = gen - 1
    n = log.tangle.items[pos].braid.strands
    turned = BraidWord.generator(a + 1, n - 1, e)
    log.split(pos, cable_bottom(turned, a + 1, 2))
    log.slide(pos + 1, turned, a + 1)
    log.drop(pos + 2)
    log.swap(pos + 1, RIGHT)
    log.slide(pos, BraidWord.generator(a + 2, n - 1, -e), a + 2)
    log.drop(pos + 1)
    return width


def _cap_over_caps(log: MoveLog, at: int, j: int, p: int, width: int) -> int:
    for m in range(width - j):
        log.swap(at + m, RIGHT)
    top = at + width - j
    log.apply("T5", top, op="create", offset=p + j + 2, side="left")
    for m in range(width - j):
        log.swap(top - 1 - m, RIGHT)
    return width + 2


def _cup_over_caps(log: MoveLog, at: int, j: int, width: int) -> int:
    inner = width - j - 2
    for m in range(inner):
        log.swap(at + m, RIGHT)
    log.apply("T5", at + inner, op="cancel")
    for m in range(inner):
        log.swap(at + inner - 1 - m, RIGHT)
    return width - 2


def turn_over_cap(log: MoveLog, box: Box) -> Box:
    """Box on the left leg of the cap above it -> its half turn on the right leg."""
    s, p = box.start, box.position
    t = log.tangle
    z = box_tangle(t, box)
    level = levels(t)[s]
    cap = t.items[box.stop]
    if not isinstance(cap, Cap) or cap.offset != p:
        raise SlideError(f"no cap over strand {p} above the box")
    expected = embed(rotate(z), level[:p + 1], level[p + 2:])
    goal = t.replaced(s, box.stop + 1, expected + [make_cap(expected[-1].target if expected else level, p)])

    left, right, width = len(box), 0, 1
    while left:
        top = s + left - 1
        g = log.tangle.items[top]
        if isinstance(g, BraidBlock) and _letters(g.braid) > 1:
            index, exp = g.braid.runs[0]
            log.split(top, BraidWord.generator(index, g.braid.strands, 1 if exp > 0 else -1))
            left += 1
            top += 1
            g = log.tangle.items[top]
        for pos in range(top, top + right):
            log.swap(pos, RIGHT)
        left -= 1
        at = s + left + right
        if isinstance(g, Cap):
            width = _cap_over_caps(log, at, g.offset - p, p, width)
        elif isinstance(g, Cup):
            width = _cup_over_caps(log, at, g.offset - p, width)
        else:
            width = _letter_over_caps(log, at, p, width)
        right += 1
    _regroup(log, s, expected)
    log.expect(goal, "turn over a cap")
    return Box(s, s + len(expected), p + 1)


def turn_back_over_cap(log: MoveLog, box: Box) -> Box:
    """Box on the right leg of the cap above it -> its half turn on the left leg."""
    t = log.tangle
    p = box.position - 1
    cap = t.items[box.stop]
    if not isinstance(cap, Cap) or cap.offset != p:
        raise SlideError(f"no cap over strand {box.position} above the box")
    level = levels(t)[box.start]
    expected = embed(rotate(box_tangle(t, box)), level[:p], level[p + 1:])
    goal = t.replaced(box.start, box.stop + 1, expected + [make_cap(expected[-1].target if expected else level, p)])
    target = Box(box.start, box.start + len(expected), p)
    reversed_by(log, goal, lambda replica: turn_over_cap(replica, target), "turn back over a cap")
    return target


# ---------------------------------------------------------------------------
# turning around cups


def _letter_under_cups(log: MoveLog, at: int, q: int, width: int) -> int:
    """σ_i^e on the right legs of `width` nested cups becomes σ_{width-i}^e on the left legs."""
    (gen, e), = log.tangle.items[at].braid.runs
    n = log.tangle.items[at].braid.strands
    i = gen - q - width
    mirror = q + width - i
    log.split(at, BraidWord.generator(mirror, n, e))
    log.split(at, BraidWord.generator(mirror, n, -e))
    inner = i - 1
    for m in range(inner):
        log.swap(at - 1 - m, RIGHT)
        log.swap(at - m, LEFT)
    pos = at - inner
    log.merge(pos)
    a = q + width - i - 1
    n = log.tangle.items[pos].braid.strands
    turned = BraidWord.generator(a + 1, n - 1, -e)
    log.split(pos, cable_bottom(turned, a + 1, 2))
    log.slide(pos - 1, BraidWord.generator(a + 2, n - 1, e), a + 2)
    log.drop(pos - 1)
    log.swap(pos - 2, RIGHT)
    log.slide(pos - 1, turned, a + 1)
    log.drop(pos - 1)
    return width


def _cup_under_cups(log: MoveLog, at: int, j: int, width: int) -> int:
    for m in range(j):
        log.swap(at - 1 - m, RIGHT)
    low = at - j
    log.apply("T5", low + 1, op="create", offset=log.tangle.items[low].offset + 1, side="left")
    for m in range(j):
        log.swap(low + 2 + m, RIGHT)
    return width + 2


def _cap_under_cups(log: MoveLog, at: int, j: int, width: int) -> int:
    for m in range(j):
        log.swap(at - 1 - m, RIGHT)
    low = at - j
    log.apply("T5", low - 1, op="cancel")
    for m in range(j):
        log.swap(low - 2 + m, RIGHT)
    return width - 2


def turn_under_cup(log: MoveLog, box: Box) -> Box:
    """Box on the right leg of the cup below it -> its half turn on the left leg."""
    base, q = box.start - 1, box.position - 1
    t = log.tangle
    cup = t.items[base]
    if not isinstance(cup, Cup) or cup.offset != q:
        raise SlideError(f"no cup under strand {box.position} below the box")
    z = box_tangle(t, box)
    level = levels(t)[box.start]
    expected = embed(rotate(z), level[:q], level[q + 1:])
    goal = t.replaced(box.start, box.stop, expected)

    width, done, rest = 1, 0, len(box)
    while rest:
        low = base + width + done
        g = log.tangle.items[low]
        if isinstance(g, BraidBlock) and _letters(g.braid) > 1:
            index, exp = g.braid.runs[-1]
            sign = 1 if exp > 0 else -1
            log.split(low, BraidWord(g.braid.strands, g.braid.runs[:-1] + ((index, exp - sign),)))
            rest += 1
            g = log.tangle.items[low]
        for pos in range(low - 1, low - 1 - done, -1):
            log.swap(pos, RIGHT)
        rest -= 1
        at = base + width
        if isinstance(g, Cup):
            width = _cup_under_cups(log, at, g.offset - q - width, width)
        elif isinstance(g, Cap):
            width = _cap_under_cups(log, at, g.offset - q - width, width)
        else:
            width = _letter_under_cups(log, at, q, width)
        done += 1
    _regroup(log, box.start, expected)
    log.expect(goal, "turn under a cup")
    return Box(box.start, box.start + len(expected), q)


def turn_back_under_cup(log: MoveLog, box: Box) -> Box:
    """Box on the left leg of the cup below it -> its half turn on the right leg."""
    t = log.tangle
    q = box.position
    cup = t.items[box.start - 1]
    if not isinstance(cup, Cup) or cup.offset != q:
        raise SlideError(f"no cup under strand {q} below the box")
    level = levels(t)[box.start]
    expected = embed(rotate(box_tangle(t, box)), level[:q + 1], level[q + 2:])
    goal = t.replaced(box.start, box.stop, expected)
    target = Box(box.start, box.start + len(expected), q + 1)
    reversed_by(log, goal, lambda replica: turn_under_cup(replica, target), "turn back under a cup")
    return target


# ---------------------------------------------------------------------------
# following the strand


def step(log: MoveLog, box: Box, direction: str) -> Tuple[Box, str]:
    """Move the box past the next element along its strand; turns reverse the direction."""
    items = log.tangle.items
    p = box.position
    if direction == UP:
        g = items[box.stop]
        side = _relation(g, p, touching_bottom=True)
        if side is not None:
            return pass_up(log, box, side), UP
        if isinstance(g, BraidBlock):
            return through_block_up(log, box), UP
        if g.offset == p:
            return turn_over_cap(log, box), DOWN
        return turn_back_over_cap(log, box), DOWN
    g = items[box.start - 1]
    side = _relation(g, p, touching_bottom=False)
    if side is not None:
        return pass_down(log, box, side), DOWN
    if isinstance(g, BraidBlock):
        return through_block_down(log, box), DOWN
    if g.offset + 1 == p:
        return turn_under_cup(log, box), UP
    return turn_back_under_cup(log, box), UP


# ---------------------------------------------------------------------------
# knots in standard form [c, A, B, a]


def _require_standard(t: Tangle) -> None:
    if not (
        is_knot(t)
        and len(t.items) >= 2
        and t.items[0] == Cup((), Arc.LEFT)
        and t.items[-1] == Cap((), Arc.LEFT)
    ):
        raise SlideError("expected a knot c_{0,0}^< ⋯ a_{0,0}^<")


def fold_top(log: MoveLog, first: int) -> Box:
    """[X, a] -> [c_{1,0}, X on strands 2, 3, a_{2,0}, a] with X = items[first:-1].

    The three middle pieces form a box on strand 1.
    """
    last = len(log.tangle.items) - 1
    log.apply("T5", first, op="create", offset=1, side="left")
    for pos in range(first + 1, last + 1):
        log.swap(pos, RIGHT)
    log.swap(last + 1, RIGHT)
    return Box(first, last + 2, 1)


def fold_bottom(log: MoveLog, count: int) -> Box:
    """[c, X] -> [c, c_{0,1}, X, a_{1,0}] with X = items[1:1 + count].

    The old bottom cup, X and the new cap form a box on strand 0.
    """
    log.apply("T5", count + 1, op="create", offset=2, side="left")
    for pos in range(count, -1, -1):
        log.swap(pos, RIGHT)
    return Box(1, count + 3, 0)


def unfold_bottom(log: MoveLog, box: Box) -> None:
    """Undo fold_bottom for a box on strand 0 right above the bottom cup."""
    t = log.tangle
    if box.start != 1 or box.position != 0 or len(box) < 2:
        raise SlideError("no folded box above the bottom cup")
    middle = [_unpad(g, 0, 2) for g in t.items[2:box.stop - 1]]
    goal = validate([t.items[0]] + middle + list(t.items[box.stop:]))
    reversed_by(log, goal, lambda replica: fold_bottom(replica, len(middle)), "unfold")


def carry_summand(log: MoveLog, cut: int) -> None:
    """[c, A, B, a] -> [c, rotate(B), A, a] where B = items[cut:-1].

    B is folded into a box under the top cap, carried down the right strand of
    A, turned around the bottom cup and unfolded there.
    """
    _require_standard(log.tangle)
    n = len(log.tangle.items)
    if not 1 <= cut <= n - 1:
        raise SlideError(f"no summand starts at {cut}")
    box, direction = fold_top(log, cut), DOWN
    limit = 4 * n * n + 8
    while not (box.start == 1 and box.position == 0 and direction == UP):
        box, direction = step(log, box, direction)
        limit -= 1
        if limit < 0:
            raise SlideError("box does not come back to the bottom cup")
    unfold_bottom(log, box)


def commute_summands(t: Tangle, cut: int) -> MoveLog:
    """[c, A, B, a] -> [c, B, A, a] where B = items[cut:-1], both of boundary ↓↑."""
    log = MoveLog(t)
    head, body_a, body_b, tail = t.items[0], t.items[1:cut], t.items[cut:-1], t.items[-1]
    carry_summand(log, cut)
    carry_summand(log, 1 + len(body_b))
    carry_summand(log, 1)
    log.expect(validate([head] + list(body_b) + list(body_a) + [tail]), "summand exchange")
    logger.debug("summands exchanged in %d moves", len(log.trace))
    return log


# ---------------------------------------------------------------------------
# framed curls
#
# A curl is cup, one crossing, cap on a strand at offset m. Shapes are keyed by
# (cup offset, generator, cap offset) relative to m and the factor turning the
# crossing sign into the writhe e of the curl.

CURL_SHAPES: Dict[str, Tuple[int, int, int, int]] = {
    "a": (1, 1, 1, 1),
    "b": (0, 2, 0, 1),
    "c": (1, 2, 0, -1),
    "d": (1, 1, 0, -1),
    "e": (0, 1, 1, -1),
    "q": (0, 2, 1, -1),
}
STANDARD_CURL = "e"


@dataclass(frozen=True)
class Curl:
    index: int
    shape: str
    strand: int
    writhe: int


def find_curl(t: Tangle, index: int) -> Optional[Curl]:
    window = t.items[index:index + 3]
    if len(window) != 3:
        return None
    cup, block, cap = window
    if not (isinstance(cup, Cup) and isinstance(block, BraidBlock) and isinstance(cap, Cap)):
        return None
    if len(block.braid.runs) != 1 or abs(block.braid.runs[0][1]) != 1:
        return None
    (gen, sign), = block.braid.runs
    for shape, (du, dg, dv, factor) in CURL_SHAPES.items():
        m = cup.offset - du
        if m >= 0 and gen == m + dg and cap.offset == m + dv:
            return Curl(index, shape, m, factor * sign)
    return None


def curls(t: Tangle) -> List[Curl]:
    return [c for c in (find_curl(t, i) for i in range(len(t.items))) if c is not None]


def curl_box(curl: Curl) -> Box:
    return Box(curl.index, curl.index + 3, curl.strand)


def with_curl(t: Tangle, curl: Curl) -> Tangle:
    """t with the three elements at curl.index redrawn in the shape of curl."""
    du, dg, dv, factor = CURL_SHAPES[curl.shape]
    m, level = curl.strand, levels(t)[curl.index]
    for arc in (Arc.LEFT, Arc.RIGHT):
        try:
            cup = Cup(level[:m + du], arc, level[m + du:])
            block = BraidBlock(BraidWord.generator(m + dg, len(cup.target), factor * curl.writhe), cup.target)
            return validate(list(t.items[:curl.index]) + [cup, block, make_cap(block.target, m + dv)]
                            + list(t.items[curl.index + 3:]), t.bottom)
        except TanglekitError:
            continue
    raise SlideError(f"no curl of shape {curl.shape} on strand {m}")


def _strands(log: MoveLog, curl: Curl) -> int:
    return log.tangle.items[curl.index + 1].braid.strands


def _d_to_b(log: MoveLog, curl: Curl) -> None:
    i, m, e, n = curl.index, curl.strand, curl.writhe, _strands(log, curl)
    log.split(i + 1, BraidWord.generator(m + 2, n, e))
    log.slide(i, BraidWord.generator(m + 1, n - 1, -e), m + 2)
    log.drop(i)


def _b_to_e(log: MoveLog, curl: Curl) -> None:
    i, m, e, n = curl.index, curl.strand, curl.writhe, _strands(log, curl)
    crossing = BraidWord.generator(m + 1, n - 1, e)
    log.split(i + 1, cable_bottom(crossing, m + 2, 2))
    log.slide(i + 2, crossing, m + 2)
    log.drop(i + 3)
    log.set_word(i + 1, BraidWord.generator(m + 1, n, -e))


def _a_to_c(log: MoveLog, curl: Curl) -> None:
    i, m, e, n = curl.index, curl.strand, curl.writhe, _strands(log, curl)
    crossing = BraidWord.generator(m + 1, n - 1, e)
    log.split(i + 1, cable_bottom(crossing, m + 1, 2))
    log.slide(i + 2, crossing, m + 1)
    log.drop(i + 3)
    log.set_word(i + 1, BraidWord.generator(m + 2, n, -e))


def _a_to_q(log: MoveLog, curl: Curl) -> None:
    i, m, e, n = curl.index, curl.strand, curl.writhe, _strands(log, curl)
    log.split(i + 1, BraidWord.generator(m + 2, n, -e))
    log.slide(i, BraidWord.generator(m + 1, n - 1, e), m + 2)
    log.drop(i)


def _a_to_e(log: MoveLog, curl: Curl) -> None:
    """Hang a framed kink off the cap and swing it around the cup."""
    i, m, e, n = curl.index, curl.strand, curl.writhe, _strands(log, curl)
    log.apply("FT6", i + 2, op="insert", form="cap", c=-e)
    box = pass_down(log, Box(i + 2, i + 5, m + 2), LEFT)
    box = turn_under_cup(log, box)
    log.merge(box.stop)
    box = through_block_up(log, box)
    pass_up(log, box, RIGHT)
    log.slide(i, BraidWord.generator(m + 1, n - 1, e), m + 2)
    log.drop(i)
    log.apply("T5", i, op="cancel")


def _via_a(log: MoveLog, curl: Curl, forward: Callable[[MoveLog, Curl], None]) -> None:
    """Rewrite the curl into shape a by undoing forward from shape a."""
    bent = Curl(curl.index, "a", curl.strand, curl.writhe)
    reversed_by(log, with_curl(log.tangle, bent), lambda replica: forward(replica, bent), "curl straightening")


def standardize_curl(log: MoveLog, curl: Curl) -> None:
    """Redraw the curl at curl.index in the standard shape, keeping its writhe."""
    goal = with_curl(log.tangle, Curl(curl.index, STANDARD_CURL, curl.strand, curl.writhe))
    if curl.shape == "d":
        _d_to_b(log, curl)
        curl = Curl(curl.index, "b", curl.strand, curl.writhe)
    if curl.shape == "b":
        _b_to_e(log, curl)
    elif curl.shape in ("c", "q"):
        _via_a(log, curl, _a_to_c if curl.shape == "c" else _a_to_q)
        curl = Curl(curl.index, "a", curl.strand, curl.writhe)
    if curl.shape == "a":
        _a_to_e(log, curl)
    log.expect(goal, f"curl of shape {curl.shape}")


def standardize_curls(t: Tangle) -> MoveLog:
    """Every curl of t in the standard shape."""
    log = MoveLog(t)
    index = 0
    while index < len(log.tangle.items):
        curl = find_curl(log.tangle, index)
        if curl is not None and curl.shape != STANDARD_CURL:
            standardize_curl(log, curl)
        index += 1
    return log


def turn_curl(t: Tangle, curl: Curl) -> Optional[MoveLog]:
    """Swing the curl around the cup below or the cap above it onto the other leg."""
    log = MoveLog(t)
    box = curl_box(curl)
    below = t.items[box.start - 1] if box.start > 0 else None
    above = t.items[box.stop] if box.stop < len(t.items) else None
    if isinstance(below, Cup) and below.offset + 1 == box.position:
        turn_under_cup(log, box)
    elif isinstance(below, Cup) and below.offset == box.position:
        turn_back_under_cup(log, box)
    elif isinstance(above, Cap) and above.offset == box.position:
        turn_over_cap(log, box)
    elif isinstance(above, Cap) and above.offset + 1 == box.position:
        turn_back_over_cap(log, box)
    else:
        return None
    return log
