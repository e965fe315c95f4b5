"""
Tangles as consistent bottom-to-top sequences of fundamental tangles.

A fundamental tangle is a cap (A), a braid block (B) or a cup (C). Every
element carries the orientation labels of its lower and upper ends; two
neighbours are consistent when the upper labels of the lower one equal the
lower labels of the upper one.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .braidcore import BraidWord, crossing_count as braid_crossings, parse_braid, perm, serialize_braid
from .errors import BoundaryError, InconsistentTangle, NotAKnot, NotALink, ParseError, TanglekitError
from .utils import UnionFind, line_column

logger = logging.getLogger(__name__)


class Dir(str, Enum):
    UP = "u"
    DOWN = "d"

    @property
    def flipped(self) -> "Dir":
        return Dir.DOWN if self is Dir.UP else Dir.UP

    @property
    def arrow(self) -> str:
        return "↑" if self is Dir.UP else "↓"


class Arc(str, Enum):
    """Arc orientation of a cap or cup, named by the labels of its two ends.

    RIGHT is the cap ↷ (ends ↑↓) and the cup whose ends read ↑↓; LEFT is
    ↶ and the cup whose ends read ↓↑.
    """

    RIGHT = ">"
    LEFT = "<"

    @property
    def ends(self) -> Tuple[Dir, Dir]:
        return (Dir.UP, Dir.DOWN) if self is Arc.RIGHT else (Dir.DOWN, Dir.UP)

    @property
    def flipped(self) -> "Arc":
        return Arc.LEFT if self is Arc.RIGHT else Arc.RIGHT

    @classmethod
    def from_ends(cls, first: Dir, second: Dir) -> "Arc":
        if first == second:
            raise TanglekitError(f"an arc cannot join two {first.arrow} ends")
        return cls.RIGHT if first is Dir.UP else cls.LEFT


Level = Tuple[Dir, ...]


def dirs(text: str) -> Level:
    return tuple(Dir(ch) for ch in text if not ch.isspace())


def dirs_str(level: Iterable[Dir]) -> str:
    return "".join(d.value for d in level)


def flip_level(level: Iterable[Dir]) -> Level:
    return tuple(d.flipped for d in level)


# ---------------------------------------------------------------------------
# fundamental tangles


@dataclass(frozen=True)
class Cap:
    """a_{k,l}: joins the ends k+1, k+2 of its lower level."""

    left: Level
    arc: Arc
    right: Level = ()

    kind = "A"

    @property
    def k(self) -> int:
        return len(self.left)

    @property
    def l(self) -> int:
        return len(self.right)

    @property
    def offset(self) -> int:
        return len(self.left)

    @property
    def source(self) -> Level:
        return self.left + self.arc.ends + self.right

    @property
    def target(self) -> Level:
        return self.left + self.right


@dataclass(frozen=True)
class Cup:
    """c_{k,l}: creates the ends k+1, k+2 of its upper level."""

    left: Level
    arc: Arc
    right: Level = ()

    kind = "C"

    @property
    def k(self) -> int:
        return len(self.left)

    @property
    def l(self) -> int:
        return len(self.right)

    @property
    def offset(self) -> int:
        return len(self.left)

    @property
    def source(self) -> Level:
        return self.left + self.right

    @property
    def target(self) -> Level:
        return self.left + self.arc.ends + self.right


@dataclass(frozen=True)
class BraidBlock:
    braid: BraidWord
    eps: Level

    kind = "B"

    def __post_init__(self) -> None:
        if len(self.eps) != self.braid.strands:
            raise TanglekitError(
                f"braid on {self.braid.strands} strands labelled with {len(self.eps)} directions"
            )

    @property
    def source(self) -> Level:
        return self.eps

    @cached_property
    def target(self) -> Level:
        images = perm(self.braid)
        top: List[Dir] = list(self.eps)
        for k, label in enumerate(self.eps, start=1):
            top[images(k) - 1] = label
        return tuple(top)


Element = Union[Cap, BraidBlock, Cup]


def boundary(g: Element) -> Tuple[Level, Level]:
    return g.source, g.target


# ---------------------------------------------------------------------------
# tangles


@dataclass(frozen=True)
class Tangle:
    """items[0] is the bottom element; bottom is the source level."""

    items: Tuple[Element, ...] = ()
    bottom: Level = ()

    def __post_init__(self) -> None:
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        if items and items[0].source != self.bottom:
            raise InconsistentTangle(-1, dirs_str(self.bottom), dirs_str(items[0].source))
        for index in range(len(items) - 1):
            below, above = items[index].target, items[index + 1].source
            if below != above:
                raise InconsistentTangle(index, dirs_str(below), dirs_str(above))

    @property
    def source(self) -> Level:
        return self.bottom

    @property
    def target(self) -> Level:
        return self.items[-1].target if self.items else self.bottom

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        return serialize(self)

    def replaced(self, start: int, stop: int, elements: Sequence[Element]) -> "Tangle":
        """items[start:stop] swapped for elements, same source."""
        return Tangle(self.items[:start] + tuple(elements) + self.items[stop:], self.bottom)


def validate(seq: Sequence[Element], source: Optional[Level] = None) -> Tangle:
    if source is None:
        source = seq[0].source if seq else ()
    return Tangle(tuple(seq), tuple(source))


def levels(t: Tangle) -> List[Level]:
    """The labels at every height; levels[i] lies below items[i]."""
    result = [t.bottom]
    for g in t.items:
        result.append(g.target)
    return result


def skeleton(t: Tangle) -> UnionFind:
    """Union-find over the ends (height, position) joined by the skeleton."""
    heights = levels(t)
    uf = UnionFind((h, p) for h, level in enumerate(heights) for p in range(len(level)))
    for h, g in enumerate(t.items):
        width = len(heights[h])
        if isinstance(g, Cap):
            k = g.offset
            uf.union((h, k), (h, k + 1))
            for p in range(width):
                if p < k:
                    uf.union((h, p), (h + 1, p))
                elif p >= k + 2:
                    uf.union((h, p), (h + 1, p - 2))
        elif isinstance(g, Cup):
            k = g.offset
            uf.union((h + 1, k), (h + 1, k + 1))
            for p in range(width):
                uf.union((h, p), (h + 1, p if p < k else p + 2))
        else:
            images = perm(g.braid)
            for p in range(width):
                uf.union((h, p), (h + 1, images(p + 1) - 1))
    return uf


def components(t: Tangle) -> int:
    return skeleton(t).count()


def is_link(t: Tangle) -> bool:
    return not t.source and not t.target


def is_knot(t: Tangle) -> bool:
    return is_link(t) and bool(t.items) and components(t) == 1


def require_link(t: Tangle) -> None:
    if not is_link(t):
        raise NotALink(f"expected empty boundary, got {dirs_str(t.source)!r} -> {dirs_str(t.target)!r}")


def require_knot(t: Tangle) -> None:
    require_link(t)
    count = components(t)
    if count != 1:
        raise NotAKnot(f"expected one component, got {count}")


def crossing_count(t: Tangle) -> int:
    return sum(braid_crossings(g.braid) for g in t.items if isinstance(g, BraidBlock))


def alpha(t: Tangle) -> int:
    """Number of caps."""
    return sum(1 for g in t.items if isinstance(g, Cap))


# ---------------------------------------------------------------------------
# constructors


def cap(left: Union[str, Level], arc: Union[str, Arc], right: Union[str, Level] = ()) -> Cap:
    return Cap(_level(left), Arc(arc), _level(right))


def cup(left: Union[str, Level], arc: Union[str, Arc], right: Union[str, Level] = ()) -> Cup:
    return Cup(_level(left), Arc(arc), _level(right))


def braid_block(braid: Union[str, BraidWord], eps: Union[str, Level]) -> BraidBlock:
    eps = _level(eps)
    if isinstance(braid, str):
        braid = parse_braid(braid, len(eps))
    return BraidBlock(braid, eps)


def _level(value: Union[str, Level]) -> Level:
    return dirs(value) if isinstance(value, str) else tuple(value)


def unit_circle() -> Tangle:
    """The oriented circle c_{0,0}^{<} then a_{0,0}^{<}."""
    return validate([cup((), Arc.LEFT), cap((), Arc.LEFT)])


def identity(eps: Union[str, Level]) -> Tangle:
    return Tangle((), _level(eps))


def compose(upper: Tangle, lower: Tangle) -> Tangle:
    """upper·lower: lower sits below."""
    if lower.target != upper.source:
        raise BoundaryError(
            f"cannot stack {dirs_str(upper.source)!r} on top of {dirs_str(lower.target)!r}"
        )
    return Tangle(lower.items + upper.items, lower.source)


def pad_element(g: Element, left: Level, right: Level) -> Element:
    """e^{left} ⊗ g ⊗ e^{right}."""
    if isinstance(g, Cap):
        return Cap(left + g.left, g.arc, g.right + right)
    if isinstance(g, Cup):
        return Cup(left + g.left, g.arc, g.right + right)
    strands = len(left) + g.braid.strands + len(right)
    return BraidBlock(g.braid.shifted(len(left), strands), left + g.eps + right)


def pad(t: Tangle, left: Union[str, Level] = (), right: Union[str, Level] = ()) -> Tangle:
    left, right = _level(left), _level(right)
    return Tangle(tuple(pad_element(g, left, right) for g in t.items), left + t.bottom + right)


def rev(t: Tangle) -> Tangle:
    """Every orientation reversed, crossings kept."""
    items: List[Element] = []
    for g in t.items:
        if isinstance(g, Cap):
            items.append(Cap(flip_level(g.left), g.arc.flipped, flip_level(g.right)))
        elif isinstance(g, Cup):
            items.append(Cup(flip_level(g.left), g.arc.flipped, flip_level(g.right)))
        else:
            items.append(BraidBlock(g.braid, flip_level(g.eps)))
    return Tangle(tuple(items), flip_level(t.bottom))


def rotate(t: Tangle) -> Tangle:
    """The picture turned by a half turn in the plane.

    Element order and positions are reversed, caps and cups trade places and
    every arrow flips; σ_i on n strands becomes σ_{n-i} with its sign kept.
    """
    items: List[Element] = []
    for g in reversed(t.items):
        if isinstance(g, Cap):
            items.append(Cup(flip_level(reversed(g.right)), g.arc, flip_level(reversed(g.left))))
        elif isinstance(g, Cup):
            items.append(Cap(flip_level(reversed(g.right)), g.arc, flip_level(reversed(g.left))))
        else:
            n = g.braid.strands
            word = BraidWord(n, tuple((n - i, e) for i, e in reversed(g.braid.runs)))
            items.append(BraidBlock(word, flip_level(reversed(g.target))))
    return Tangle(tuple(items), flip_level(reversed(t.target)))


def make_cap(level: Level, offset: int) -> Cap:
    """The cap joining ends offset+1, offset+2 of level, arc read off the labels."""
    if not 0 <= offset <= len(level) - 2:
        raise TanglekitError(f"no cap at offset {offset} on {len(level)} ends")
    arc = Arc.from_ends(level[offset], level[offset + 1])
    return Cap(level[:offset], arc, level[offset + 2:])


def make_cup(level: Level, offset: int, arc: Arc) -> Cup:
    if not 0 <= offset <= len(level):
        raise TanglekitError(f"no cup at offset {offset} on {len(level)} ends")
    return Cup(level[:offset], arc, level[offset:])


def closure(t: Tangle) -> Tangle:
    """Close a tangle with one end at each side by an arc on the right."""
    if len(t.source) != 1 or t.source != t.target:
        raise BoundaryError(
            f"closure needs one end at each side with equal labels, got {dirs_str(t.source)!r} -> {dirs_str(t.target)!r}"
        )
    arc = Arc.RIGHT if t.source[0] is Dir.UP else Arc.LEFT
    ret = (t.source[0].flipped,)
    return validate([Cup((), arc)] + list(pad(t, (), ret).items) + [Cap((), arc)])


def plat(b: BraidWord) -> Tangle:
    """Plat closure of b on 2m strands: m side-by-side cups, b, m caps.

    The cup arcs are the first choice, in lexicographic order, that orients
    the closure consistently.
    """
    if b.strands % 2:
        raise TanglekitError(f"plat closure needs an even strand count, got {b.strands}")
    bridges = b.strands // 2
    for arcs in itertools.product((Arc.LEFT, Arc.RIGHT), repeat=bridges):
        items: List[Element] = []
        level: Level = ()
        for arc in arcs:
            items.append(make_cup(level, len(level), arc))
            level = items[-1].target
        block = BraidBlock(b, level)
        level = block.target
        if any(level[2 * j] == level[2 * j + 1] for j in range(bridges)):
            continue
        items.append(block)
        for j in range(bridges - 1, -1, -1):
            items.append(make_cap(level, 2 * j))
            level = items[-1].target
        return validate(items)
    raise TanglekitError(f"no orientation closes the plat of {b}")  # unreachable for braids


# ---------------------------------------------------------------------------
# text syntax

_ITEM = re.compile(r"([ABCE])\s*\[([^\]]*)\]")
_ARC_BODY = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*;\s*([ud\s]*)([<>])([ud\s]*)$")


def _strip_comments(text: str) -> str:
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def parse(text: str) -> Tangle:
    """Parse `C[0,0; <] ; A[0,0; <]`, items listed bottom to top."""
    body = _strip_comments(text)
    items: List[Element] = []
    empty_source: Optional[Level] = None
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body):
            break
        match = _ITEM.match(body, pos)
        if not match:
            raise ParseError(f"expected A[..], B[..], C[..] or E[..], found {body[pos:pos + 12]!r}", *line_column(text, pos))
        kind, inner = match.group(1), match.group(2)
        inner_at = match.start(2)
        if kind == "E":
            if items or empty_source is not None:
                raise ParseError("E[..] must be the only item", *line_column(text, match.start()))
            empty_source = dirs(_check_dirs(text, inner, inner_at))
        elif kind == "B":
            items.append(_parse_braid_item(text, inner, inner_at))
        else:
            items.append(_parse_arc_item(text, kind, inner, inner_at))
        pos = match.end()
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos < len(body):
            if body[pos] != ";":
                raise ParseError(f"expected ';' between items, found {body[pos]!r}", *line_column(text, pos))
            pos += 1
            if empty_source is not None and body[pos:].strip():
                raise ParseError("E[..] must be the only item", *line_column(text, pos))
    if empty_source is not None:
        return Tangle((), empty_source)
    return validate(items)


def _check_dirs(text: str, chunk: str, at: int) -> str:
    for i, ch in enumerate(chunk):
        if ch not in "ud" and not ch.isspace():
            raise ParseError(f"orientation labels are u or d, found {ch!r}", *line_column(text, at + i))
    return chunk


def _parse_arc_item(text: str, kind: str, inner: str, at: int) -> Element:
    match = _ARC_BODY.match(inner)
    if not match:
        raise ParseError(f"{kind}[..] expects 'k,l; dirs <|> dirs', got {inner!r}", *line_column(text, at))
    k, l = int(match.group(1)), int(match.group(2))
    left, right = dirs(match.group(3)), dirs(match.group(5))
    if len(left) != k or len(right) != l:
        raise ParseError(
            f"{kind}[{k},{l}; ..] needs {k} labels on the left and {l} on the right",
            *line_column(text, at + match.start(3)),
        )
    arc = Arc(match.group(4))
    return Cap(left, arc, right) if kind == "A" else Cup(left, arc, right)


def _parse_braid_item(text: str, inner: str, at: int) -> BraidBlock:
    split = inner.rfind(";")
    if split < 0:
        raise ParseError(f"B[..] expects 'braid; dirs', got {inner!r}", *line_column(text, at))
    eps = dirs(_check_dirs(text, inner[split + 1:], at + split + 1))
    try:
        braid = parse_braid(inner[:split], len(eps))
    except ParseError as exc:
        raise ParseError(exc.reason, *line_column(text, at + exc.column - 1)) from exc
    return BraidBlock(braid, eps)


def serialize_element(g: Element) -> str:
    if isinstance(g, BraidBlock):
        return f"B[{serialize_braid(g.braid)}; {dirs_str(g.eps)}]"
    return f"{g.kind}[{g.k},{g.l}; {dirs_str(g.left)}{g.arc.value}{dirs_str(g.right)}]"


def serialize(t: Tangle) -> str:
    if not t.items:
        return f"E[{dirs_str(t.bottom)}]"
    return " ; ".join(serialize_element(g) for g in t.items)


def to_json(t: Tangle) -> Dict[str, Any]:
    items: List[Dict[str, Any]] = []
    for g in t.items:
        if isinstance(g, BraidBlock):
            items.append({"kind": "B", "braid": serialize_braid(g.braid), "eps": dirs_str(g.eps)})
        else:
            items.append({"kind": g.kind, "left": dirs_str(g.left), "arc": g.arc.value, "right": dirs_str(g.right)})
    return {"source": dirs_str(t.source), "target": dirs_str(t.target), "items": items}


def from_json(data: Dict[str, Any]) -> Tangle:
    items: List[Element] = []
    for entry in data.get("items", []):
        kind = entry["kind"]
        if kind == "B":
            items.append(braid_block(entry["braid"], entry["eps"]))
        elif kind == "A":
            items.append(cap(entry["left"], entry["arc"], entry["right"]))
        elif kind == "C":
            items.append(cup(entry["left"], entry["arc"], entry["right"]))
        else:
            raise TanglekitError(f"unknown element kind {kind!r}")
    return validate(items, dirs(data.get("source", "")))
