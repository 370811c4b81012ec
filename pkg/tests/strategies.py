"""Hypothesis strategies for braid words."""

from typing import Optional

from hypothesis import strategies as st

from services.braid_core import BraidWord
from services.mixed_braid import (
    CrossGen,
    LoopGen,
    MixedContext,
    MixedWord,
    PureGen,
    expand_letter,
    expand_mixed,
)
from services.presentations import enumerate_generators

# sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}, read as a relator
_BRAID_RELATOR = (1, 2, 1, -2, -1, -2)


def artin_words(strands: int, max_size: int = 12):
    alphabet = [s * i for i in range(1, strands) for s in (1, -1)]
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(
        lambda xs: BraidWord.from_ints(strands, xs)
    )


def mixed_words(ctx: MixedContext, max_size: int = 8):
    """Words in loops and crossings only, i.e. arbitrary elements of B_{m,n}."""
    alphabet = [LoopGen(i, s) for i in ctx.fixed for s in (1, -1)]
    alphabet += [CrossGen(k, s) for k in range(1, ctx.n) for s in (1, -1)]
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(
        lambda xs: MixedWord(ctx, tuple(xs))
    )


def pure_mixed_words(ctx: MixedContext, max_size: int = 6):
    alphabet = [PureGen(i, j, s) for i, j in enumerate_generators(ctx.m, ctx.n) for s in (1, -1)]
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(
        lambda xs: MixedWord(ctx, tuple(xs))
    )


@st.composite
def pure_members(draw, ctx: MixedContext, max_size: int = 6, max_letters: Optional[int] = None):
    """Expanded pure braids; with ``max_letters`` the generator list is cut to fit."""
    word = draw(pure_mixed_words(ctx, max_size))
    if max_letters is None:
        return expand_mixed(word)
    kept = []
    total = 0
    for letter in word.letters:
        total += len(expand_letter(letter, ctx))
        if total > max_letters:
            break
        kept.append(letter)
    return expand_mixed(MixedWord(ctx, tuple(kept)))


@st.composite
def perturbed(draw, word: BraidWord):
    """Insert a trivial relator somewhere in ``word``."""
    letters = word.to_ints()
    position = draw(st.integers(0, len(letters)))
    if word.strands >= 3:
        shift = draw(st.integers(0, word.strands - 3))
        relator = [x + shift if x > 0 else x - shift for x in _BRAID_RELATOR]
    else:
        relator = [1, -1]
    if draw(st.booleans()):
        relator = [-x for x in reversed(relator)]
    return BraidWord.from_ints(word.strands, letters[:position] + relator + letters[position:])

