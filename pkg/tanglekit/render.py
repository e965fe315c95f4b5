"""
ASCII pictures of tangle sequences, top of the picture first.

Strands sit in columns three characters apart and are drawn as `^` or `v`
following their orientation. A crossing σ_i^{±1} is drawn between columns
i and i+1 as `\\+ /` or `\\- /`; caps and cups are drawn as `.--.` and `'--'`.
Strands to the right of a cap or cup jump columns on the next row.
"""

from __future__ import annotations

from typing import List

from .tanglecalc import BraidBlock, Cap, Level, Tangle, dirs_str, levels

_SPACING = 3


def _strands(level: Level) -> List[str]:
    width = max(1, _SPACING * len(level) - 2)
    row = [" "] * width
    for p, d in enumerate(level):
        row[_SPACING * p] = "^" if d.value == "u" else "v"
    return row


def _crossing_row(level: Level, index: int, sign: int) -> str:
    row = _strands(level)
    start = _SPACING * (index - 1)
    row[start:start + _SPACING + 1] = list("\\+ /" if sign > 0 else "\\- /")
    return "".join(row).rstrip()


def _arc_row(level: Level, offset: int, glyph: str) -> str:
    row = _strands(level)
    start = _SPACING * offset
    row[start:start + _SPACING + 1] = list(glyph)
    return "".join(row).rstrip()


def render(t: Tangle) -> str:
    heights = levels(t)
    rows: List[str] = [f"  {dirs_str(t.target) or '(empty)'}"]
    for h in range(len(t.items) - 1, -1, -1):
        g = t.items[h]
        if isinstance(g, BraidBlock):
            labels = list(g.eps)
            block_rows = []
            for index, sign in g.braid.letters_bottom_up():
                block_rows.append("  " + _crossing_row(tuple(labels), index, sign))
                labels[index - 1], labels[index] = labels[index], labels[index - 1]
            rows.extend(reversed(block_rows))
            if g.braid.is_empty:
                rows.append("  " + "".join(_strands(g.eps)).rstrip())
        elif isinstance(g, Cap):
            rows.append("  " + _arc_row(heights[h], g.offset, ".--."))
        else:
            rows.append("  " + _arc_row(heights[h + 1], g.offset, "'--'"))
    rows.append(f"  {dirs_str(t.source) or '(empty)'}")
    return "\n".join(rows) + "\n"
