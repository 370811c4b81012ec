"""Mixed braid groups B_{m,n} inside B_{m+n}.

The first ``m`` strands are fixed; the last ``n`` move.  Words over the mixed
alphabet use loop generators ``a_i`` (strand m+1 around fixed strand i),
crossings ``s_k`` of moving strands (Artin ``sigma_{m+k}``) and pure
generators ``a[i,j]``.  Everything expands into Artin words on m+n strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from services.braid_core import (
    ArtinGen,
    BraidWord,
    StrandMismatchError,
    concat,
    delete_strands,
    identity,
    permutation_of,
)
from services.permutation import Permutation
from services.word_problem import is_trivial


class MixedLetterError(ValueError):
    """Raised when a mixed letter does not fit its context."""


class MembershipError(ValueError):
    """Raised when a braid is not in B_{m,n} but has to be."""


@dataclass(frozen=True)
class MixedContext:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"Need m >= 1 and n >= 1, got m={self.m}, n={self.n}")

    @property
    def strands(self) -> int:
        return self.m + self.n

    @property
    def fixed(self) -> range:
        return range(1, self.m + 1)

    @property
    def moving(self) -> range:
        return range(self.m + 1, self.m + self.n + 1)

    def __str__(self) -> str:
        return f"B_{{{self.m},{self.n}}}"


@dataclass(frozen=True)
class LoopGen:
    i: int
    sign: int = 1


@dataclass(frozen=True)
class CrossGen:
    k: int
    sign: int = 1


@dataclass(frozen=True)
class PureGen:
    i: int
    j: int
    sign: int = 1


MixedGen = Union[LoopGen, CrossGen, PureGen]


def invert_letter(letter: MixedGen) -> MixedGen:
    if isinstance(letter, LoopGen):
        return LoopGen(letter.i, -letter.sign)
    if isinstance(letter, CrossGen):
        return CrossGen(letter.k, -letter.sign)
    return PureGen(letter.i, letter.j, -letter.sign)


def check_letter(letter: MixedGen, ctx: MixedContext) -> None:
    if letter.sign not in (1, -1):
        raise MixedLetterError(f"Sign must be +1 or -1 in {letter!r}")
    if isinstance(letter, LoopGen):
        if not 1 <= letter.i <= ctx.m:
            raise MixedLetterError(f"a{letter.i} needs 1 <= i <= {ctx.m}")
    elif isinstance(letter, CrossGen):
        if not 1 <= letter.k <= ctx.n - 1:
            if ctx.n == 1:
                raise MixedLetterError(f"s{letter.k}: there are no crossings when n = 1")
            raise MixedLetterError(f"s{letter.k} needs 1 <= k <= {ctx.n - 1}")
    elif isinstance(letter, PureGen):
        if not (1 <= letter.i < letter.j and ctx.m + 1 <= letter.j <= ctx.strands):
            raise MixedLetterError(
                f"a[{letter.i},{letter.j}] needs i < j and {ctx.m + 1} <= j <= {ctx.strands}"
            )
    else:
        raise MixedLetterError(f"Not a mixed generator: {letter!r}")


@dataclass(frozen=True)
class MixedWord:
    ctx: MixedContext
    letters: Tuple[MixedGen, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        for letter in letters:
            check_letter(letter, self.ctx)
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def mixed_inverse(word: MixedWord) -> MixedWord:
    return MixedWord(word.ctx, tuple(invert_letter(g) for g in reversed(word.letters)))


def mixed_concat(*words: MixedWord) -> MixedWord:
    if not words:
        raise ValueError("mixed_concat needs at least one word")
    ctx = words[0].ctx
    letters: List[MixedGen] = []
    for word in words:
        if word.ctx != ctx:
            raise StrandMismatchError(f"Cannot concatenate words of {ctx} and {word.ctx}")
        letters.extend(word.letters)
    return MixedWord(ctx, tuple(letters))


def irredundant_alphabet_size(ctx: MixedContext) -> int:
    return ctx.m + ctx.n - 1


def extension_alphabet_size(ctx: MixedContext) -> int:
    """Generators a_{i,m+j} and sigma_{m+k} of the presentation before elimination."""
    return ctx.m * ctx.n + ctx.n - 1


def is_irredundant(word: MixedWord) -> bool:
    return all(isinstance(g, (LoopGen, CrossGen)) for g in word.letters)


# ----------------------------------------------------------------------
# Expansion into Artin words
# ----------------------------------------------------------------------
def expand_pure_gen(i: int, j: int, strands: int, sign: int = 1, form: int = 2) -> BraidWord:
    """The elementary loop a_{ij} of strand j around strand i as an Artin word.

    Form 2 is ``s_{j-1}..s_{i+1} s_i^2 s_{i+1}^-1..s_{j-1}^-1``; form 1 is
    ``s_i^-1..s_{j-2}^-1 s_{j-1}^2 s_{j-2}..s_i``.  A negative sign inverts
    the central square only.
    """
    if not 1 <= i < j <= strands:
        raise MixedLetterError(f"a[{i},{j}] needs 1 <= i < j <= {strands}")
    if sign not in (1, -1):
        raise MixedLetterError(f"Sign must be +1 or -1, got {sign}")
    if form == 2:
        conjugator = [ArtinGen(k, 1) for k in range(j - 1, i, -1)]
        core = [ArtinGen(i, sign)] * 2
    elif form == 1:
        conjugator = [ArtinGen(k, -1) for k in range(i, j - 1)]
        core = [ArtinGen(j - 1, sign)] * 2
    else:
        raise ValueError(f"Unknown closed form {form}; expected 1 or 2")
    closing = [g.inverse() for g in reversed(conjugator)]
    return BraidWord(strands, tuple(conjugator + core + closing))


def expand_letter(letter: MixedGen, ctx: MixedContext) -> BraidWord:
    check_letter(letter, ctx)
    if isinstance(letter, LoopGen):
        return expand_pure_gen(letter.i, ctx.m + 1, ctx.strands, letter.sign)
    if isinstance(letter, CrossGen):
        return BraidWord(ctx.strands, (ArtinGen(ctx.m + letter.k, letter.sign),))
    return expand_pure_gen(letter.i, letter.j, ctx.strands, letter.sign)


def expand_mixed(word: MixedWord) -> BraidWord:
    return concat(identity(word.ctx.strands), *(expand_letter(g, word.ctx) for g in word.letters))


# ----------------------------------------------------------------------
# Defining words for the redundant generators
# ----------------------------------------------------------------------
def _conjugated(ctx: MixedContext, conjugator: Sequence[int], core: Sequence[MixedGen]) -> MixedWord:
    head = [CrossGen(k, 1) for k in conjugator]
    tail = [CrossGen(k, -1) for k in reversed(conjugator)]
    return MixedWord(ctx, tuple(head) + tuple(core) + tuple(tail))


def express_aij_irredundant(i: int, j: int, ctx: MixedContext, sign: int = 1) -> MixedWord:
    """a_{i,m+k} = s_{k-1}..s_1 a_i s_1^-1..s_{k-1}^-1 for a fixed strand i."""
    if not (1 <= i <= ctx.m and ctx.m + 1 <= j <= ctx.strands):
        raise MixedLetterError(
            f"a[{i},{j}] is not a loop around a fixed strand in {ctx}"
        )
    k = j - ctx.m
    return _conjugated(ctx, range(k - 1, 0, -1), [LoopGen(i, sign)])


def express_moving_aij(i: int, j: int, ctx: MixedContext, sign: int = 1) -> MixedWord:
    """a_{ij} between two moving strands as a word in the crossings alone."""
    if not ctx.m + 1 <= i < j <= ctx.strands:
        raise MixedLetterError(f"a[{i},{j}] does not join two moving strands in {ctx}")
    lo, hi = i - ctx.m, j - ctx.m
    return _conjugated(ctx, range(hi - 1, lo, -1), [CrossGen(lo, sign)] * 2)


def rewrite_irredundant(word: MixedWord) -> MixedWord:
    """Replace every pure generator by its defining word over {a_i, s_k}."""
    ctx = word.ctx
    letters: List[MixedGen] = []
    for g in word.letters:
        if isinstance(g, PureGen):
            if g.i <= ctx.m:
                letters.extend(express_aij_irredundant(g.i, g.j, ctx, g.sign).letters)
            else:
                letters.extend(express_moving_aij(g.i, g.j, ctx, g.sign).letters)
        else:
            letters.append(g)
    return MixedWord(ctx, tuple(letters))


# ----------------------------------------------------------------------
# Membership and the map onto S_n
# ----------------------------------------------------------------------
def _check_ctx_strands(word: BraidWord, ctx: MixedContext) -> None:
    if word.strands != ctx.strands:
        raise StrandMismatchError(
            f"{ctx} lives on {ctx.strands} strands, word has {word.strands}"
        )


def is_member(word: BraidWord, ctx: MixedContext) -> bool:
    _check_ctx_strands(word, ctx)
    if not permutation_of(word).fixes_pointwise(ctx.fixed):
        return False
    return is_trivial(delete_strands(word, ctx.fixed))


def is_pure_member(word: BraidWord, ctx: MixedContext) -> bool:
    _check_ctx_strands(word, ctx)
    return permutation_of(word).is_identity() and is_member(word, ctx)


def moving_permutation(word: BraidWord, ctx: MixedContext) -> Permutation:
    if not is_member(word, ctx):
        raise MembershipError(f"Braid {word} is not in {ctx}")
    return permutation_of(word).restricted(ctx.moving)
