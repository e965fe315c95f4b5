"""
Reduced words in the free group F_2 = <x, y> and their substitution into braid groups.

Words are backed by sympy's free group, which keeps them freely reduced.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.combinatorics.free_groups import FreeGroupElement, free_group

from .braidcore import BraidWord, block_gen, inverse, power, product
from .errors import FreeWordError, ParseError
from .utils import superscript

F2, X, Y = free_group("x, y")

Block = Tuple[int, ...]


@dataclass(frozen=True)
class FreeWord2:
    element: FreeGroupElement = F2.identity

    @classmethod
    def from_letters(cls, letters: Sequence[Tuple[str, int]]) -> "FreeWord2":
        result = F2.identity
        for symbol, exp in letters:
            if symbol == "x":
                result = result * X**exp
            elif symbol == "y":
                result = result * Y**exp
            else:
                raise FreeWordError(f"unknown letter {symbol!r}")
        return cls(result)

    @property
    def letters(self) -> Tuple[Tuple[str, int], ...]:
        return tuple((str(sym), int(exp)) for sym, exp in self.element.array_form)

    @property
    def is_identity(self) -> bool:
        return self.element == F2.identity

    def inverse(self) -> "FreeWord2":
        return FreeWord2(self.element**-1)

    def __mul__(self, other: "FreeWord2") -> "FreeWord2":
        return FreeWord2(self.element * other.element)

    def __str__(self) -> str:
        return serialize_free(self)


ONE = FreeWord2()
GEN_X = FreeWord2(X)
GEN_Y = FreeWord2(Y)


def reduce(w: FreeWord2) -> FreeWord2:
    # sympy elements are always freely reduced
    return FreeWord2.from_letters(w.letters)


def exp_sums(w: FreeWord2) -> Tuple[int, int]:
    return int(w.element.exponent_sum(X)), int(w.element.exponent_sum(Y))


def commutator(a: FreeWord2, b: FreeWord2) -> FreeWord2:
    """aba^{-1}b^{-1}."""
    return a * b * a.inverse() * b.inverse()


def substitute(w: FreeWord2, x_image: FreeWord2, y_image: FreeWord2) -> FreeWord2:
    """Image of w under the endomorphism x ↦ x_image, y ↦ y_image of F_2."""
    result = F2.identity
    for symbol, exp in w.letters:
        image = x_image if symbol == "x" else y_image
        result = result * image.element**exp
    return FreeWord2(result)


def subst(w: FreeWord2, x_braid: BraidWord, y_braid: BraidWord) -> BraidWord:
    """Image of w under x ↦ x_braid, y ↦ y_braid."""
    if x_braid.strands != y_braid.strands:
        raise FreeWordError(
            f"substituted braids live on {x_braid.strands} and {y_braid.strands} strands"
        )
    n = x_braid.strands
    return product(
        [power(x_braid if symbol == "x" else y_braid, exp) for symbol, exp in w.letters],
        n,
    )


def _block_pair(first: Block, second: Block, n: int) -> BraidWord:
    if not first or not second:
        return BraidWord.identity(n)
    return block_gen(first[0], len(first) - 1, second[0], len(second) - 1, n)


def _check_block(block: Block, n: int) -> None:
    if not block:
        return
    if list(block) != list(range(block[0], block[0] + len(block))):
        raise FreeWordError(f"block {block} is not an interval")
    if not (1 <= block[0] and block[-1] <= n):
        raise FreeWordError(f"block {block} does not fit in 1..{n}")


def f_triple(f: FreeWord2, block_a: Sequence[int], block_b: Sequence[int], block_c: Sequence[int], n: int) -> BraidWord:
    """f(x_{A,B}, x_{B,C}) in B_n, written f_{A,B,C}."""
    a, b, c = tuple(block_a), tuple(block_b), tuple(block_c)
    for block in (a, b, c):
        _check_block(block, n)
    nonempty = [blk for blk in (a, b, c) if blk]
    for left, right in zip(nonempty, nonempty[1:]):
        if left[-1] >= right[0]:
            raise FreeWordError(f"blocks {left} and {right} overlap or are out of order")
    if (not a or not b or not c) and exp_sums(f) != (0, 0):
        raise FreeWordError(f"empty block needs exponent sums (0, 0), {f} has {exp_sums(f)}")
    return subst(f, _block_pair(a, b, n), _block_pair(b, c, n))


def f_bracketed(f: FreeWord2, m1: int, n: int, m2: int) -> BraidWord:
    """f_{[m1],[n],[m2]} = f_{1⋯m1, m1+1⋯m1+n-1, m1+n} ⋯ f_{1⋯m1, m1+1, m1+2}."""
    if m1 < 0 or m2 < 0 or n < 1:
        raise FreeWordError(f"bad bracket sizes [{m1}],[{n}],[{m2}]")
    if m1 == 0 and exp_sums(f) != (0, 0):
        raise FreeWordError(f"empty first block needs exponent sums (0, 0), {f} has {exp_sums(f)}")
    strands = m1 + n + m2
    first = tuple(range(1, m1 + 1))
    factors: List[BraidWord] = []
    for top in range(m1 + n, m1 + 1, -1):
        factors.append(f_triple(f, first, range(m1 + 1, top), (top,), strands))
    return product(factors, strands)


def f_bracketed_inverse(f: FreeWord2, m1: int, n: int, m2: int) -> BraidWord:
    return inverse(f_bracketed(f, m1, n, m2))


# ---------------------------------------------------------------------------
# text syntax

_TOKEN = re.compile(r"([xy])(?:\^(-?\d+))?$")


def parse_free(text: str, line: int = 1, offset: int = 0) -> FreeWord2:
    """Parse `x y^-1 x^3`; `1` or an empty string is the identity."""
    letters: List[Tuple[str, int]] = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        if token == "1":
            continue
        parsed = _TOKEN.match(token)
        if not parsed:
            raise ParseError(f"unexpected free-group token {token!r}", line, offset + match.start() + 1)
        exp = int(parsed.group(2)) if parsed.group(2) is not None else 1
        letters.append((parsed.group(1), exp))
    return FreeWord2.from_letters(letters)


def serialize_free(w: FreeWord2) -> str:
    if w.is_identity:
        return "1"
    return " ".join(f"{sym}{superscript(exp)}" for sym, exp in w.letters)


def random_commutator(rng: random.Random, depth: int = 2, max_exp: int = 2) -> FreeWord2:
    """A random element of [F_2, F_2] built as a product of commutators."""

    def random_word(length: int) -> FreeWord2:
        letters = [(rng.choice("xy"), rng.choice([e for e in range(-max_exp, max_exp + 1) if e])) for _ in range(length)]
        return FreeWord2.from_letters(letters)

    result: Optional[FreeWord2] = None
    for _ in range(depth):
        term = commutator(random_word(rng.randint(1, 2)), random_word(rng.randint(1, 2)))
        result = term if result is None else result * term
    return result or ONE
