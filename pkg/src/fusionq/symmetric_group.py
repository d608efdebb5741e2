"""
Permutations of {1, ..., n} in one-line notation.

Composition is function composition, ``(s * t)(i) = s(t(i))``. Multiplying
by the adjacent transposition sigma_i on the right swaps positions i and
i+1 of the one-line notation; on the left it swaps the values i and i+1.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

__all__ = [
    "Permutation", "perm_compose", "perm_length_and_word", "longest_element",
    "all_permutations", "from_word", "inversions",
]


class Permutation(tuple):
    """A permutation as the tuple of images (1-based)."""

    def __new__(cls, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return super().__new__(cls, range(1, n + 1))

    @classmethod
    def _trusted(cls, images) -> Permutation:
        return super().__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return perm_compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for pos, v in enumerate(self, 1):
            inv[v - 1] = pos
        return Permutation._trusted(inv)

    def length(self) -> int:
        return inversions(self)

    def reduced_word(self) -> list[int]:
        return perm_length_and_word(self)[1]

    def __repr__(self):
        return f"Permutation({list(self)})"


def inversions(s: Sequence[int]) -> int:
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def perm_compose(s: Sequence[int], t: Sequence[int]) -> Permutation:
    """(s o t)(i) = s(t(i))."""
    if len(s) != len(t):
        raise ValueError(f"cannot compose permutations of sizes {len(s)} and {len(t)}")
    return Permutation._trusted(s[v - 1] for v in t)


def perm_length_and_word(s: Sequence[int]) -> tuple[int, list[int]]:
    """Inversion count and a reduced word ``[i_1, ..., i_l]`` with s = sigma_{i_1}...sigma_{i_l}.

    Repeatedly pick the smallest right descent i (s(i) > s(i+1)) and replace
    s by s*sigma_i; the recorded descents, read backwards, form the word.
    """
    cur = list(s)
    recorded = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                recorded.append(i + 1)
                break
        else:
            break
    recorded.reverse()
    return len(recorded), recorded


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("the longest element needs n >= 1")
    return Permutation._trusted(range(n, 0, -1))


def from_word(word: Sequence[int], n: int) -> Permutation:
    """The product sigma_{w_1} ... sigma_{w_k} in S_n."""
    cur = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range for n={n}")
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return Permutation._trusted(cur)


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    for p in permutations(range(1, n + 1)):
        yield Permutation._trusted(p)
