"""Reduced words in G_k, the free product of k+1 copies of Z/2.

Vertices of the Cayley tree of order k are identified with reduced words
over the involutive generators a_1, ..., a_{k+1} (right representation:
the neighbours of x are x*a_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidGeneratorError, NoParentError, ParseError


@dataclass(frozen=True, order=True)
class GroupWord:
    """A reduced word; ``letters`` holds generator indices, first letter first.

    Construct through :func:`reduce` (or :meth:`parse`) unless the letters
    are already known to be reduced.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for u, v in zip(self.letters, self.letters[1:]):
            if u == v:
                raise ValueError(f"not a reduced word: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return multiply(self, other)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def last(self) -> int | None:
        return self.letters[-1] if self.letters else None

    def inverse(self) -> "GroupWord":
        return GroupWord(self.letters[::-1])

    def count(self, j: int) -> int:
        """w_j(x): number of occurrences of a_j."""
        return self.letters.count(j)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return ".".join(str(i) for i in self.letters)

    def __repr__(self) -> str:
        return f"GroupWord({str(self)!r})"

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "GroupWord":
        """Inverse of ``str``: ``"e"`` or dot-separated indices such as ``"1.2.1"``."""
        text = text.strip()
        if text == "e":
            return cls()
        try:
            letters = [int(tok) for tok in text.split(".")]
        except ValueError:
            raise ParseError(f"malformed word {text!r}") from None
        word = reduce(letters, k)
        if word.letters != tuple(letters):
            raise ParseError(f"word {text!r} is not reduced")
        return word


IDENTITY = GroupWord()


def generator(j: int) -> GroupWord:
    return GroupWord((j,))


def _check(letters: Iterable[int], k: int | None) -> None:
    for i in letters:
        if not isinstance(i, int) or i < 1 or (k is not None and i > k + 1):
            bound = "k+1" if k is None else str(k + 1)
            raise InvalidGeneratorError(f"generator index {i!r} outside 1..{bound}")


def reduce(letters: Sequence[int], k: int | None = None) -> GroupWord:
    """Cancel adjacent equal letters until none remain (a_i a_i = e).

    >>> str(reduce([2, 1, 1, 2, 3]))
    '3'
    """
    _check(letters, k)
    stack: list[int] = []
    for i in letters:
        if stack and stack[-1] == i:
            stack.pop()
        else:
            stack.append(i)
    return GroupWord(tuple(stack))


def multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    # only the junction can cancel since both inputs are reduced
    a, b = u.letters, v.letters
    n = 0
    while n < min(len(a), len(b)) and a[len(a) - 1 - n] == b[n]:
        n += 1
    return GroupWord(a[: len(a) - n] + b[n:])


def parent(x: GroupWord) -> GroupWord:
    """x with its last letter removed (the unique neighbour closer to e)."""
    if x.is_identity:
        raise NoParentError("the root e has no parent")
    return GroupWord(x.letters[:-1])


def neighbors(x: GroupWord, k: int) -> list[GroupWord]:
    """The k+1 neighbours x*a_j, j = 1..k+1, in generator order."""
    _check(x.letters, k)
    return [multiply(x, generator(j)) for j in range(1, k + 2)]


def children(x: GroupWord, k: int) -> list[GroupWord]:
    return [GroupWord(x.letters + (j,)) for j in range(1, k + 2) if j != x.last]


def adjacent(x: GroupWord, y: GroupWord) -> bool:
    lx, ly = x.letters, y.letters
    if len(lx) == len(ly) + 1:
        return lx[:-1] == ly
    if len(ly) == len(lx) + 1:
        return ly[:-1] == lx
    return False


@dataclass(frozen=True)
class SubgroupDescriptor:
    """The index-two subgroup H_A = {x : sum_{j in A} w_j(x) is even}."""

    A: frozenset[int]

    def __init__(self, A: Iterable[int], k: int | None = None) -> None:
        A = frozenset(A)
        if not A:
            raise ValueError("A must be nonempty")
        _check(A, k)
        object.__setattr__(self, "A", A)

    def __str__(self) -> str:
        return "{" + ",".join(str(j) for j in sorted(self.A)) + "}"


def coset(x: GroupWord, A: SubgroupDescriptor) -> int:
    """0 if x lies in H_0 = H_A, else 1."""
    return sum(1 for i in x.letters if i in A.A) % 2


def translate_left(g: GroupWord, x: GroupWord) -> GroupWord:
    """Left shift T_g(x) = g x, a tree automorphism in the right representation."""
    return multiply(g, x)
