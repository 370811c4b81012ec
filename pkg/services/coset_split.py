"""Cosets of B_{m,n} in B_{m+n} determined by a fixed braid on the first m strands.

A braid ``A`` on m+n strands lies in the coset of ``B`` when its first m
strands form a sub-braid equal to ``B``.  Such an ``A`` factors as
``alpha . B`` with ``alpha`` in B_{m,n} (``alpha`` below, ``B`` on top).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from services.braid_core import (
    BraidWord,
    StrandDeletionError,
    StrandMismatchError,
    concat,
    delete_strands,
    free_reduce,
    inverse,
    lift,
    permutation_of,
    positive_word_of_permutation,
    shift_embed,
)
from services.combing import extract_kernel_word
from services.mixed_braid import MixedContext, PureGen, is_member
from services.word_problem import equal

logger = logging.getLogger("mixedbraid.coset_split")


class CosetError(ValueError):
    """Raised when a braid is not in the coset it is split against."""


@dataclass(frozen=True)
class FixedBraid:
    braid: BraidWord

    @property
    def strands(self) -> int:
        return self.braid.strands


@dataclass(frozen=True)
class CombingSplit:
    alpha: BraidWord
    loops: Tuple[Tuple[int, Tuple[PureGen, ...]], ...]
    completion: BraidWord


def _check(word: BraidWord, fixed: FixedBraid, ctx: MixedContext) -> None:
    if fixed.strands != ctx.m:
        raise StrandMismatchError(
            f"Fixed braid has {fixed.strands} strands but the context fixes {ctx.m}"
        )
    if word.strands != ctx.strands:
        raise StrandMismatchError(
            f"Braid has {word.strands} strands but the context needs {ctx.strands}"
        )


def embed_fixed(fixed: FixedBraid, ctx: MixedContext) -> BraidWord:
    if fixed.strands != ctx.m:
        raise StrandMismatchError(
            f"Fixed braid has {fixed.strands} strands but the context fixes {ctx.m}"
        )
    return shift_embed(fixed.braid, 0, ctx.strands)


def fixed_subbraid(word: BraidWord, ctx: MixedContext) -> BraidWord:
    """The braid formed by the first m strands once the moving ones are erased."""
    try:
        return delete_strands(word, ctx.fixed)
    except StrandDeletionError as exc:
        raise CosetError(f"The first {ctx.m} strands of {word} do not form a sub-braid") from exc


def is_in_coset(word: BraidWord, fixed: FixedBraid, ctx: MixedContext) -> bool:
    _check(word, fixed, ctx)
    if not permutation_of(word).preserves(ctx.fixed):
        return False
    return equal(delete_strands(word, ctx.fixed), fixed.braid)


def split(word: BraidWord, fixed: FixedBraid, ctx: MixedContext) -> BraidWord:
    """Return ``alpha`` in B_{m,n} with ``word = alpha . B``."""
    if not is_in_coset(word, fixed, ctx):
        raise CosetError(f"{word} is not in the coset of {fixed.braid}")
    embedded = embed_fixed(fixed, ctx)
    alpha = free_reduce(concat(word, inverse(embedded)))
    if not is_member(alpha, ctx) or not equal(word, concat(alpha, embedded)):
        raise CosetError(f"Split of {word} failed certification")
    return alpha


def split_via_combing(word: BraidWord, fixed: FixedBraid, ctx: MixedContext) -> CombingSplit:
    """Split by completing to a pure braid and combing from the last strand.

    ``word`` is multiplied on top by minimal permutation braids on each block
    of strands; the strands m+n, ..., m+1 are then peeled off one at a time,
    each leaving a loop of that strand alone.
    """
    if not is_in_coset(word, fixed, ctx):
        raise CosetError(f"{word} is not in the coset of {fixed.braid}")
    n_total = ctx.strands
    perm = permutation_of(word)
    fixed_fix = positive_word_of_permutation(perm.restricted(ctx.fixed).inverse())
    moving_fix = positive_word_of_permutation(perm.restricted(ctx.moving).inverse())
    moving_embedded = shift_embed(moving_fix, ctx.m, n_total)
    completion = concat(shift_embed(fixed_fix, 0, n_total), moving_embedded)

    current = concat(word, completion)
    kernels = []
    loops = []
    for j in range(n_total, ctx.m, -1):
        rest = delete_strands(current, range(1, j))
        kernel = free_reduce(concat(current, inverse(lift(rest, j))))
        loops.append((j, extract_kernel_word(kernel, j)))
        kernels.append(lift(kernel, n_total))
        current = rest

    alpha = free_reduce(concat(*kernels, inverse(moving_embedded)))
    if not equal(alpha, split(word, fixed, ctx)):
        raise CosetError(f"Combing split of {word} disagrees with the algebraic split")
    logger.debug("combing split used %d kernel loops", len(loops))
    return CombingSplit(alpha, tuple(loops), completion)
