"""Artin braid words over B_N.

Letters are read bottom-to-top: the first letter of a word is the lowest
crossing and acts first.  Strand positions are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from services.free_group import invert_word, reduce_word
from services.permutation import Permutation


class StrandMismatchError(ValueError):
    """Raised when words on different strand counts are combined."""


class GeneratorIndexError(ValueError):
    """Raised when a generator index does not fit the strand count."""


class StrandDeletionError(ValueError):
    """Raised when the kept strands are not carried onto themselves."""


@dataclass(frozen=True)
class ArtinGen:
    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.index < 1:
            raise GeneratorIndexError(f"Generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"Generator sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "ArtinGen":
        return ArtinGen(self.index, -self.sign)

    def signed(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[ArtinGen, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"A braid needs at least one strand, got {self.strands}")
        letters = tuple(self.letters)
        for letter in letters:
            if letter.index >= self.strands:
                raise GeneratorIndexError(
                    f"sigma_{letter.index} does not exist on {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, strands: int, signed: Iterable[int]) -> "BraidWord":
        """Build a word from signed indices, e.g. ``[1, -2]`` for sigma_1 sigma_2^-1."""
        letters = []
        for value in signed:
            if value == 0:
                raise GeneratorIndexError("0 is not a generator index")
            letters.append(ArtinGen(abs(value), 1 if value > 0 else -1))
        return cls(strands, tuple(letters))

    def to_ints(self) -> List[int]:
        return [letter.signed() for letter in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(
            f"s{g.index}" if g.sign > 0 else f"s{g.index}^-1" for g in self.letters
        )


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def free_reduce(word: BraidWord) -> BraidWord:
    return BraidWord.from_ints(word.strands, reduce_word(word.to_ints()))


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord.from_ints(word.strands, invert_word(word.to_ints()))


def concat(*words: BraidWord) -> BraidWord:
    """Juxtapose words; the first argument is the bottom of the result."""
    if not words:
        raise ValueError("concat needs at least one word")
    strands = words[0].strands
    letters: List[ArtinGen] = []
    for word in words:
        if word.strands != strands:
            raise StrandMismatchError(
                f"Cannot concatenate braids on {strands} and {word.strands} strands"
            )
        letters.extend(word.letters)
    return BraidWord(strands, tuple(letters))


def permutation_of(word: BraidWord) -> Permutation:
    perm = Permutation.identity(word.strands)
    for letter in word.letters:
        perm = perm.swap_values(letter.index)
    return perm


def exponent_sum(word: BraidWord) -> int:
    return sum(letter.sign for letter in word.letters)


def delete_strands(word: BraidWord, kept: Iterable[int]) -> BraidWord:
    """Erase every strand not in ``kept`` and re-read the rest on ``len(kept)`` strands.

    The strands starting at the kept positions must end at kept positions.
    """
    kept_set = set(kept)
    if not kept_set:
        raise StrandDeletionError("At least one strand must be kept")
    if min(kept_set) < 1 or max(kept_set) > word.strands:
        raise StrandDeletionError(
            f"Kept strands {sorted(kept_set)} are outside 1..{word.strands}"
        )
    if not permutation_of(word).preserves(kept_set):
        raise StrandDeletionError(
            f"Strands {sorted(kept_set)} are not carried onto themselves by {word}"
        )

    # occupant[p - 1] is the starting position of the strand now at position p
    occupant = list(range(1, word.strands + 1))
    out: List[ArtinGen] = []
    for letter in word.letters:
        i = letter.index
        left, right = occupant[i - 1], occupant[i]
        if left in kept_set and right in kept_set:
            reindexed = sum(1 for p in occupant[:i] if p in kept_set)
            out.append(ArtinGen(reindexed, letter.sign))
        occupant[i - 1], occupant[i] = right, left
    return BraidWord(len(kept_set), tuple(out))


def shift_embed(word: BraidWord, offset: int, new_strands: int) -> BraidWord:
    if offset < 0:
        raise GeneratorIndexError(f"Offset must be non-negative, got {offset}")
    if offset + word.strands > new_strands:
        raise GeneratorIndexError(
            f"A braid on {word.strands} strands shifted by {offset} does not fit on {new_strands}"
        )
    return BraidWord(
        new_strands,
        tuple(ArtinGen(g.index + offset, g.sign) for g in word.letters),
    )


def lift(word: BraidWord, new_strands: int) -> BraidWord:
    """Read the same letters on more strands; the added strands stay straight."""
    return shift_embed(word, 0, new_strands)


def positive_word_of_permutation(perm: Permutation) -> BraidWord:
    """The permutation braid of ``perm``: positive, each strand pair crossing at most once."""
    letters: List[int] = []
    current = perm
    while not current.is_identity():
        # peel the smallest crossing that can sit on top
        i = next(
            i
            for i in range(1, current.degree)
            if current.preimage(i) > current.preimage(i + 1)
        )
        letters.append(i)
        current = current.swap_values(i)
    letters.reverse()
    return BraidWord.from_ints(perm.degree, letters)


def half_twist(strands: int) -> BraidWord:
    return positive_word_of_permutation(Permutation.reversal(strands))
