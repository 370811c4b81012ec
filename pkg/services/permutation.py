"""Permutations of strand positions {1..N}.

A permutation is stored in one-line notation: ``images[p - 1]`` is the top
endpoint of the strand that enters at bottom position ``p``.  Braid letters are
read bottom-to-top, so the permutation of a word is obtained by applying the
transpositions of its letters in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(images)}: {images!r}")
        object.__setattr__(self, "images", images)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def reversal(cls, degree: int) -> "Permutation":
        """The permutation of the half twist: p -> N + 1 - p."""
        return cls(tuple(range(degree, 0, -1)))

    @classmethod
    def transposition(cls, degree: int, i: int) -> "Permutation":
        return cls.identity(degree).swap_positions(i)

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def preimage(self, point: int) -> int:
        return self.images.index(point) + 1

    def is_identity(self) -> bool:
        return all(img == pos for pos, img in enumerate(self.images, start=1))

    def inversions(self) -> int:
        n = self.degree
        return sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if self.images[a] > self.images[b]
        )

    def fixes_pointwise(self, points: Iterable[int]) -> bool:
        return all(self(p) == p for p in points)

    def preserves(self, points: Iterable[int]) -> bool:
        block = set(points)
        return {self(p) for p in block} == block

    # ------------------------------------------------------------------
    # Group operations
    # ------------------------------------------------------------------
    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other`` (the permutation of a concatenation)."""
        if other.degree != self.degree:
            raise ValueError("Permutations of different degree cannot be composed")
        return Permutation(tuple(other(self(p)) for p in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for pos, img in enumerate(self.images, start=1):
            inv[img - 1] = pos
        return Permutation(tuple(inv))

    def swap_values(self, i: int) -> "Permutation":
        """Follow ``self`` by the transposition (i i+1), i.e. append a crossing on top."""
        swapped = []
        for img in self.images:
            if img == i:
                swapped.append(i + 1)
            elif img == i + 1:
                swapped.append(i)
            else:
                swapped.append(img)
        return Permutation(tuple(swapped))

    def swap_positions(self, i: int) -> "Permutation":
        """Precede ``self`` by the transposition (i i+1), i.e. prepend a crossing at the bottom."""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def conjugate_by_reversal(self) -> "Permutation":
        n = self.degree
        return Permutation(tuple(n + 1 - self(n + 1 - p) for p in range(1, n + 1)))

    def restricted(self, points: Iterable[int]) -> "Permutation":
        """Restrict to an invariant block of points, relabelled order-preservingly to 1..k."""
        block = sorted(set(points))
        if not self.preserves(block):
            raise ValueError(f"Block {block} is not invariant under {self.one_line()}")
        relabel = {p: idx for idx, p in enumerate(block, start=1)}
        return Permutation(tuple(relabel[self(p)] for p in block))

    # ------------------------------------------------------------------
    # Notation
    # ------------------------------------------------------------------
    def one_line(self) -> List[int]:
        return list(self.images)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its smallest point."""
        seen: set[int] = set()
        result: List[Tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            result.append(tuple(cycle))
        return result

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)


def compose(first: Permutation, second: Permutation) -> Permutation:
    return first.then(second)
