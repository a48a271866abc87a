"""Permutations of {1..n} in one-line notation."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence


class DegreeMismatch(ValueError):
    pass


class Permutation:
    """A bijection of ``{1..n}`` stored in one-line notation.

    ``Permutation([2, 1, 3])`` maps 1->2, 2->1, 3->3. Composition reads right
    to left: ``(f * g)(x) == f(g(x))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {list(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexError(f"{i} outside 1..{len(self.images)}")
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        return invert(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        if isinstance(other, (list, tuple)):
            return self.images == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def to_list(self) -> list[int]:
        return list(self.images)


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return ``f o g``, i.e. ``x -> f(g(x))``."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree} differ")
    return Permutation(f.images[x - 1] for x in g.images)


def invert(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, v in enumerate(p.images, 1):
        out[v - 1] = i
    return Permutation(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n, lexicographic in one-line notation."""
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


def as_permutation(p: Permutation | Sequence[int]) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(p)
