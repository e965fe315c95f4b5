"""
Exact computation in the Artin braid groups B_n.

A braid is kept as a word of compressed runs (i, e) meaning σ_i^e. Words are
read left to right as a product, so the rightmost run sits at the bottom of
the picture: compose(b, b2) puts b2 below b and perm(b·b2) = perm(b)∘perm(b2).
σ_i is the crossing where the strand entering at bottom position i passes
over the strand at position i+1.

The word problem is decided through the left Garside normal form
Δ^p A_1 ⋯ A_r, where the A_j are permutation braids, stored as permutations,
with R(A_j) ⊇ L(A_{j+1}) for the right and left descent sets.
"""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from sympy.combinatorics.free_groups import FreeGroupElement, free_group

from .errors import BraidError, ParseError
from .utils import superscript

logger = logging.getLogger(__name__)

Run = Tuple[int, int]


def _merge_runs(runs: Sequence[Run]) -> Tuple[Run, ...]:
    stack: List[Run] = []
    for index, exp in runs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == index:
            total = stack[-1][1] + exp
            stack.pop()
            if total != 0:
                stack.append((index, total))
        else:
            stack.append((index, exp))
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    runs: Tuple[Run, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 0:
            raise BraidError(f"strand count must be non-negative, got {self.strands}")
        for index, _ in self.runs:
            if not 1 <= index < self.strands:
                raise BraidError(f"generator s{index} does not exist in B_{self.strands}")
        object.__setattr__(self, "runs", _merge_runs(tuple((int(i), int(e)) for i, e in self.runs)))

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def generator(cls, index: int, strands: int, exp: int = 1) -> "BraidWord":
        return cls(strands, ((index, exp),))

    @property
    def is_empty(self) -> bool:
        return not self.runs

    def letters(self) -> Iterator[Tuple[int, int]]:
        """Unit letters (index, ±1) in word order, top of the picture first."""
        for index, exp in self.runs:
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield index, sign

    def letters_bottom_up(self) -> Iterator[Tuple[int, int]]:
        for index, exp in reversed(self.runs):
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield index, sign

    def support(self) -> Optional[Tuple[int, int]]:
        """Smallest and largest generator index used, or None for the empty word."""
        if not self.runs:
            return None
        indices = [i for i, _ in self.runs]
        return min(indices), max(indices)

    def shifted(self, offset: int, strands: int) -> "BraidWord":
        return BraidWord(strands, tuple((i + offset, e) for i, e in self.runs))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __str__(self) -> str:
        return serialize_braid(self)


def compose(b: BraidWord, b2: BraidWord) -> BraidWord:
    """b·b2 with b2 on the bottom."""
    if b.strands != b2.strands:
        raise BraidError(f"cannot compose braids on {b.strands} and {b2.strands} strands")
    return BraidWord(b.strands, b.runs + b2.runs)


def product(words: Sequence[BraidWord], strands: int) -> BraidWord:
    runs: List[Run] = []
    for w in words:
        if w.strands != strands:
            raise BraidError(f"cannot compose braids on {w.strands} and {strands} strands")
        runs.extend(w.runs)
    return BraidWord(strands, tuple(runs))


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple((i, -e) for i, e in reversed(b.runs)))


def power(b: BraidWord, exp: int) -> BraidWord:
    if exp < 0:
        return power(inverse(b), -exp)
    return BraidWord(b.strands, b.runs * exp)


def crossing_count(b: BraidWord) -> int:
    return sum(abs(e) for _, e in b.runs)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n}; images[k-1] is the image of k."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, n: int) -> "Perm":
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def longest(cls, n: int) -> "Perm":
        return cls(tuple(range(n, 0, -1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: "Perm") -> "Perm":
        """self∘other: apply other first."""
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.size
        for k, image in enumerate(self.images, start=1):
            inv[image - 1] = k
        return Perm(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def right_descents(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, self.size) if self.images[i - 1] > self.images[i])

    def left_descents(self) -> FrozenSet[int]:
        return self.inverse().right_descents()

    def length(self) -> int:
        imgs = self.images
        return sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])

    def reduced_word(self) -> Tuple[int, ...]:
        """A positive word s_{i1}⋯s_{ik} of minimal length for this permutation."""
        word: List[int] = []
        current = self
        while not current.is_identity:
            i = min(current.right_descents())
            word.append(i)
            current = current.compose(Perm.transposition(i, self.size))
        return tuple(reversed(word))


def perm(b: BraidWord) -> Perm:
    result = Perm.identity(b.strands)
    for index, exp in b.runs:
        if exp % 2:
            result = result.compose(Perm.transposition(index, b.strands))
    return result


# ---------------------------------------------------------------------------
# Garside normal form


@dataclass(frozen=True)
class GarsideForm:
    strands: int
    delta: int
    factors: Tuple[Perm, ...] = field(default=())

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def _tau(p: Perm, w0: Perm) -> Perm:
    return w0.compose(p).compose(w0)


def _left_weight(factors: List[Perm]) -> None:
    n = factors[0].size if factors else 0
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            left, right = factors[j], factors[j + 1]
            moving = right.left_descents() - left.right_descents()
            while moving:
                s = Perm.transposition(min(moving), n)
                left, right = left.compose(s), s.compose(right)
                moving = right.left_descents() - left.right_descents()
                changed = True
            factors[j], factors[j + 1] = left, right


def normal_form(b: BraidWord) -> GarsideForm:
    n = b.strands
    if n <= 1:
        return GarsideForm(n, 0, ())
    w0 = Perm.longest(n)
    factors: List[Perm] = []
    delta = 0
    for index, sign in b.letters():
        s = Perm.transposition(index, n)
        if sign > 0:
            factors.append(s)
        else:
            # σ_i^{-1} = (σ_i^{-1}Δ)Δ^{-1}; the Δ^{-1} travels to the front
            factors = [_tau(f, w0) for f in factors]
            factors.append(_tau(s.compose(w0), w0))
            delta -= 1
    while True:
        _left_weight(factors)
        while factors and factors[0] == w0:
            factors.pop(0)
            delta += 1
        while factors and factors[-1].is_identity:
            factors.pop()
        if all(not f.is_identity and f != w0 for f in factors):
            break
        factors = [f for f in factors if not f.is_identity]
    return GarsideForm(n, delta, tuple(factors))


def normal_word(b: BraidWord) -> BraidWord:
    """A word spelling the Garside normal form of b."""
    form = normal_form(b)
    n = form.strands
    if n <= 1:
        return BraidWord.identity(n)
    delta_word = BraidWord(n, tuple((i, 1) for i in Perm.longest(n).reduced_word()))
    runs: List[Run] = list(power(delta_word, form.delta).runs)
    for factor in form.factors:
        runs.extend((i, 1) for i in factor.reduced_word())
    return BraidWord(n, tuple(runs))


def equals(b: BraidWord, b2: BraidWord) -> bool:
    if b.strands != b2.strands:
        raise BraidError(f"cannot compare braids on {b.strands} and {b2.strands} strands")
    if b.runs == b2.runs:
        return True
    return normal_form(b) == normal_form(b2)


def is_identity(b: BraidWord) -> bool:
    return b.is_empty or normal_form(b) == GarsideForm(b.strands, 0, ())


# ---------------------------------------------------------------------------
# Artin action on the free group


@lru_cache(maxsize=None)
def _free_group(n: int):
    return free_group(", ".join(f"g{i}" for i in range(1, n + 1)))


def artin_action(b: BraidWord) -> List[FreeGroupElement]:
    """Images of g_1..g_n under the automorphism determined by b."""
    n = b.strands
    if n == 0:
        return []
    _, *gens = _free_group(n)
    images = list(gens)
    for index, sign in b.letters():
        a, c = images[index - 1], images[index]
        if sign > 0:
            images[index - 1], images[index] = a * c * a**-1, a
        else:
            images[index - 1], images[index] = c, c**-1 * a * c
    return images


def artin_trivial(b: BraidWord) -> bool:
    if b.strands == 0:
        return True
    _, *gens = _free_group(b.strands)
    return artin_action(b) == list(gens)


# ---------------------------------------------------------------------------
# pure braids and embeddings


def pure_gen(i: int, j: int, n: int) -> BraidWord:
    """x_{i,j} = (σ_{j-1}⋯σ_{i+1}) σ_i² (σ_{j-1}⋯σ_{i+1})^{-1}."""
    if not 1 <= i < j <= n:
        raise BraidError(f"x_{{{i},{j}}} needs 1 <= i < j <= {n}")
    conj = [(k, 1) for k in range(j - 1, i, -1)]
    back = [(k, -1) for k in range(i + 1, j)]
    return BraidWord(n, tuple(conj + [(i, 2)] + back))


def block_gen(a: int, alpha: int, b: int, beta: int, n: int) -> BraidWord:
    """x_{a⋯a+α, b⋯b+β}: rows a..a+α, each the product x_{row,b}⋯x_{row,b+β}."""
    if alpha < 0 or beta < 0 or not (1 <= a and a + alpha < b and b + beta <= n):
        raise BraidError(f"block ({a}+{alpha}, {b}+{beta}) does not fit in B_{n}")
    return product(
        [pure_gen(row, col, n) for row in range(a, a + alpha + 1) for col in range(b, b + beta + 1)],
        n,
    )


def tensor(m1: int, b: BraidWord, m2: int) -> BraidWord:
    """e_{m1} ⊗ b ⊗ e_{m2}."""
    if m1 < 0 or m2 < 0:
        raise BraidError("padding must be non-negative")
    return b.shifted(m1, m1 + b.strands + m2)


def cable_bottom(b: BraidWord, k: int, n: int) -> BraidWord:
    """Replace the string starting at bottom position k by n parallel strings.

    n = 0 deletes the string.
    """
    if not 1 <= k <= b.strands:
        raise BraidError(f"no string at position {k} in B_{b.strands}")
    if n < 0:
        raise BraidError("cable width must be non-negative")
    strands = b.strands + n - 1
    position = k
    bottom_up: List[Run] = []
    for index, sign in b.letters_bottom_up():
        if index == position:
            bottom_up.extend((index + t, sign) for t in range(n - 1, -1, -1))
            position = index + 1
        elif index + 1 == position:
            bottom_up.extend((index + t, sign) for t in range(n))
            position = index
        elif index + 1 < position:
            bottom_up.append((index, sign))
        else:
            bottom_up.append((index + n - 1, sign))
    return BraidWord(strands, tuple(reversed(bottom_up)))


def cable_top(b: BraidWord, k: int, n: int) -> BraidWord:
    """Replace the string ending at top position k by n parallel strings."""
    if not 1 <= k <= b.strands:
        raise BraidError(f"no string at position {k} in B_{b.strands}")
    return cable_bottom(b, perm(b).inverse()(k), n)


def cabled_pure_gen(i: int, j: int, l: int, k: int, n: int) -> BraidWord:
    """Closed form of cable_bottom(x_{i,j}, k, n) for x_{i,j} in P_l."""
    strands = l + n - 1
    if k < i:
        return pure_gen(i + n - 1, j + n - 1, strands)
    if k == i:
        return block_gen(i, n - 1, j + n - 1, 0, strands)
    if k < j:
        return pure_gen(i, j + n - 1, strands)
    if k == j:
        return block_gen(i, 0, j, n - 1, strands)
    return pure_gen(i, j, strands)


# ---------------------------------------------------------------------------
# text syntax

_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str, strands: Optional[int] = None) -> BraidWord:
    """Parse `s1 s2^-1 s3^5`; `e` or an empty string is the identity."""
    runs: List[Run] = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        if token in ("e", "1"):
            continue
        parsed = _TOKEN.match(token)
        if not parsed:
            raise ParseError(f"unexpected braid token {token!r}", 1, match.start() + 1)
        exp = int(parsed.group(2)) if parsed.group(2) is not None else 1
        runs.append((int(parsed.group(1)), exp))
    needed = max(i for i, _ in runs) + 1 if runs else 0
    if strands is None:
        strands = needed
    elif strands < needed:
        raise ParseError(f"generator s{needed - 1} does not exist on {strands} strands", 1, 1)
    return BraidWord(strands, tuple(runs))


def serialize_braid(b: BraidWord) -> str:
    if not b.runs:
        return "e"
    return " ".join(f"s{i}{superscript(e)}" for i, e in b.runs)


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    if n < 2:
        return BraidWord.identity(n)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))
