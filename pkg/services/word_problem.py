"""Equality of braids: Garside left normal form and a Burau cross-check.

A normal form is ``Delta^k A_1 ... A_r`` where every ``A_i`` is a permutation
braid other than 1 and Delta, stored by its permutation, and every adjacent
pair is left-weighted.  Two words are equal in B_N exactly when their normal
forms coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Tuple

import numpy as np

from services.braid_core import (
    BraidWord,
    StrandMismatchError,
    concat,
    exponent_sum,
    half_twist,
    identity,
    inverse,
    permutation_of,
    positive_word_of_permutation,
)
from services.permutation import Permutation


@dataclass(frozen=True)
class NormalForm:
    strands: int
    delta_power: int = 0
    factors: Tuple[Permutation, ...] = field(default_factory=tuple)

    @property
    def infimum(self) -> int:
        return self.delta_power

    @property
    def supremum(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_record(self) -> Dict[str, Any]:
        return {
            "strands": self.strands,
            "delta_power": self.delta_power,
            "factors": [f.one_line() for f in self.factors],
        }


def starting_set(perm: Permutation) -> FrozenSet[int]:
    """Generators that can be pulled off the bottom of the permutation braid."""
    return frozenset(i for i in range(1, perm.degree) if perm(i) > perm(i + 1))


def finishing_set(perm: Permutation) -> FrozenSet[int]:
    """Generators that can be pulled off the top of the permutation braid."""
    return frozenset(
        i for i in range(1, perm.degree) if perm.preimage(i) > perm.preimage(i + 1)
    )


def is_left_weighted(first: Permutation, second: Permutation) -> bool:
    return starting_set(second) <= finishing_set(first)


def _left_weight_pair(factors: List[Permutation], k: int) -> bool:
    """Slide crossings from ``factors[k + 1]`` into ``factors[k]``; report whether anything moved."""
    first, second = factors[k], factors[k + 1]
    moved = False
    while True:
        movable = starting_set(second) - finishing_set(first)
        if not movable:
            break
        i = min(movable)
        first = first.swap_values(i)
        second = second.swap_positions(i)
        moved = True
    factors[k], factors[k + 1] = first, second
    return moved


def left_normal_form(word: BraidWord) -> NormalForm:
    n = word.strands
    if n == 1:
        return NormalForm(1, 0, ())

    delta = Permutation.reversal(n)
    delta_power = 0
    factors: List[Permutation] = []

    for letter in word.letters:
        if letter.sign > 0:
            factors.append(Permutation.transposition(n, letter.index))
        else:
            # sigma_i^-1 = Delta^-1 X with X = Delta sigma_i^-1
            factors = [f.conjugate_by_reversal() for f in factors]
            delta_power -= 1
            factors.append(delta.swap_values(letter.index))
        for k in range(len(factors) - 2, -1, -1):
            if not _left_weight_pair(factors, k):
                break

    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            if _left_weight_pair(factors, k):
                changed = True

    while factors and factors[0] == delta:
        factors.pop(0)
        delta_power += 1
    factors = [f for f in factors if not f.is_identity()]
    return NormalForm(n, delta_power, tuple(factors))


def normal_form_to_word(nf: NormalForm) -> BraidWord:
    twist = half_twist(nf.strands)
    pieces: List[BraidWord] = [identity(nf.strands)]
    if nf.delta_power >= 0:
        pieces.extend([twist] * nf.delta_power)
    else:
        pieces.extend([inverse(twist)] * -nf.delta_power)
    pieces.extend(positive_word_of_permutation(f) for f in nf.factors)
    return concat(*pieces)


def _check_strands(w1: BraidWord, w2: BraidWord) -> None:
    if w1.strands != w2.strands:
        raise StrandMismatchError(
            f"Cannot compare braids on {w1.strands} and {w2.strands} strands"
        )


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    _check_strands(w1, w2)
    if exponent_sum(w1) != exponent_sum(w2):
        return False
    if permutation_of(w1) != permutation_of(w2):
        return False
    return left_normal_form(w1) == left_normal_form(w2)


def is_trivial(word: BraidWord) -> bool:
    return equal(word, identity(word.strands))


# ----------------------------------------------------------------------
# Burau representation at t = -1
# ----------------------------------------------------------------------
_BURAU_BLOCK = {1: ((2, -1), (1, 0)), -1: ((0, 1), (-1, 2))}


def _identity_matrix(n: int) -> np.ndarray:
    return np.array([[1 if r == c else 0 for c in range(n)] for r in range(n)], dtype=object)


def burau_matrix(word: BraidWord) -> np.ndarray:
    """Exact integer image of the word under the unreduced Burau representation at t = -1."""
    n = word.strands
    result = _identity_matrix(n)
    for letter in word.letters:
        gen = _identity_matrix(n)
        i = letter.index - 1
        gen[i : i + 2, i : i + 2] = np.array(_BURAU_BLOCK[letter.sign], dtype=object)
        result = np.dot(result, gen)
    return result


def cross_check(w1: BraidWord, w2: BraidWord) -> bool:
    """False only when the words are provably different braids."""
    _check_strands(w1, w2)
    return bool(np.array_equal(burau_matrix(w1), burau_matrix(w2)))
