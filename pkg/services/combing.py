"""Combed (Artin canonical) form of pure mixed braids.

A pure braid of P_{m,n} factors uniquely as ``V_{m+1} V_{m+2} ... V_{m+n}``
where ``V_j`` is a freely reduced word in the loops ``a[i,j]`` (i < j) of
strand ``j`` around the strands to its left.  Strands are combed from the
last one down; each peeled strand leaves a kernel braid in which only that
strand moves, read off as a free group word through the Artin action.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from services.braid_core import (
    BraidWord,
    concat,
    delete_strands,
    free_reduce,
    identity,
    inverse,
    lift,
    permutation_of,
)
from services.free_group import artin_act, reduce_word, split_conjugate
from services.mixed_braid import MixedContext, PureGen, expand_pure_gen, is_pure_member
from services.word_problem import is_trivial

logger = logging.getLogger("mixedbraid.combing")


class NotPureError(ValueError):
    """Raised when combing is asked for a braid outside P_{m,n}."""


class KernelWordError(ValueError):
    """Raised when a braid is not a loop of a single strand."""


@dataclass(frozen=True)
class CombedFactor:
    strand: int
    letters: Tuple[PureGen, ...] = ()

    def to_record(self) -> Dict[str, Any]:
        return {
            "strand": self.strand,
            "word": [[g.i, g.j, g.sign] for g in self.letters],
        }


@dataclass(frozen=True)
class CombedForm:
    ctx: MixedContext
    factors: Tuple[CombedFactor, ...]

    def factor(self, strand: int) -> Tuple[PureGen, ...]:
        for f in self.factors:
            if f.strand == strand:
                return f.letters
        raise KeyError(strand)

    def is_identity(self) -> bool:
        return all(not f.letters for f in self.factors)

    def to_record(self) -> Dict[str, Any]:
        return {
            "m": self.ctx.m,
            "n": self.ctx.n,
            "factors": [f.to_record() for f in self.factors],
        }


def _loop_word(kernel: BraidWord, j: int) -> Tuple[PureGen, ...]:
    image = artin_act((j,), ((g.index, g.sign) for g in kernel.letters))
    try:
        conjugator = split_conjugate(image, j)
    except ValueError as exc:
        raise KernelWordError(f"Braid {kernel} moves more than strand {j}") from exc
    loop = reduce_word(x for x in conjugator if abs(x) != j)
    return tuple(PureGen(abs(x), j, 1 if x > 0 else -1) for x in loop)


def extract_kernel_word(kernel: BraidWord, j: int) -> Tuple[PureGen, ...]:
    """Write a braid in which only strand ``j`` moves as a reduced word in a[i,j]."""
    if not 2 <= j <= kernel.strands:
        raise KernelWordError(f"Strand {j} is not a movable strand of {kernel.strands}")
    if kernel.strands > j:
        if any(g.index >= j for g in kernel.letters):
            raise KernelWordError(f"Strands beyond {j} are not straight in {kernel}")
        kernel = BraidWord(j, kernel.letters)
    if not permutation_of(kernel).is_identity():
        raise KernelWordError(f"Braid {kernel} is not pure")
    if not is_trivial(delete_strands(kernel, range(1, j))):
        raise KernelWordError(f"Strands 1..{j - 1} of {kernel} are braided")
    return _loop_word(kernel, j)


def comb(word: BraidWord, ctx: MixedContext) -> CombedForm:
    """Comb a pure braid into ``V_{m+1} .. V_{m+n}``.

    Each loop word is read off the Artin action on x_j, whose intermediate
    images can grow exponentially with the Artin length of ``word``. Words of
    a few dozen letters comb in well under a second; much longer inputs are
    better compared with :func:`services.word_problem.equal`.
    """
    if not is_pure_member(word, ctx):
        raise NotPureError(f"Braid {word} is not in P_{{{ctx.m},{ctx.n}}}")

    current = word
    factors: List[CombedFactor] = []
    for j in range(ctx.strands, ctx.m, -1):
        rest = delete_strands(current, range(1, j))
        kernel = free_reduce(concat(inverse(lift(rest, j)), current))
        letters = _loop_word(kernel, j)
        logger.debug("strand %d combed to %d letters", j, len(letters))
        factors.append(CombedFactor(j, letters))
        current = rest
    factors.reverse()
    return CombedForm(ctx, tuple(factors))


def combed_to_word(form: CombedForm) -> BraidWord:
    n = form.ctx.strands
    pieces = [
        expand_pure_gen(g.i, g.j, n, g.sign)
        for factor in form.factors
        for g in factor.letters
    ]
    return concat(identity(n), *pieces)


def equal_via_combing(w1: BraidWord, w2: BraidWord, ctx: MixedContext) -> bool:
    return comb(w1, ctx).factors == comb(w2, ctx).factors
