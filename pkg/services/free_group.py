"""Reduced words in a free group and the Artin action of braids on it.

Free group letters are nonzero signed integers: ``k`` is the generator
``x_k`` and ``-k`` its inverse.
"""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

FreeWord = Tuple[int, ...]


def reduce_word(letters: Iterable[int]) -> FreeWord:
    """Cancel adjacent ``x x^-1`` pairs until none remain."""
    stack: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("0 is not a free group letter")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_word(word: Sequence[int]) -> FreeWord:
    return tuple(-letter for letter in reversed(word))


def substitute(word: Sequence[int], images: Dict[int, FreeWord]) -> FreeWord:
    """Apply the endomorphism ``x_k -> images[k]``; unlisted generators are fixed."""
    out: list[int] = []
    for letter in word:
        gen = abs(letter)
        image = images.get(gen, (gen,))
        out.extend(image if letter > 0 else invert_word(image))
    return reduce_word(out)


def artin_images(index: int, sign: int) -> Dict[int, FreeWord]:
    """Generator images of the Artin automorphism of sigma_index^sign."""
    k, k1 = index, index + 1
    if sign > 0:
        return {k: (k, k1, -k), k1: (k,)}
    return {k: (k1,), k1: (-k1, k, k1)}


def artin_act(word: Sequence[int], letters: Iterable[Tuple[int, int]]) -> FreeWord:
    """Act on ``word`` by braid letters ``(index, sign)`` taken in reading order.

    The first letter is applied first, so the action is a right action:
    acting by ``u`` then ``v`` equals acting by the concatenation ``uv``.
    """
    current = reduce_word(word)
    for index, sign in letters:
        current = substitute(current, artin_images(index, sign))
    return current


def split_conjugate(word: Sequence[int], core: int) -> FreeWord:
    """Return ``W`` when ``word`` is literally ``W x_core W^-1`` (reduced), else raise."""
    reduced = reduce_word(word)
    length = len(reduced)
    if length % 2 == 0 or reduced[length // 2] != core:
        raise ValueError(f"Word is not a conjugate of x_{core}: {reduced!r}")
    half = reduced[: length // 2]
    if reduced[length // 2 + 1 :] != invert_word(half):
        raise ValueError(f"Word is not a conjugate of x_{core}: {reduced!r}")
    return half
