"""Finite pieces of the Cayley tree: vertex shells, unit balls, local coset patterns."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, EmptyInteriorError, UnsupportedRegimeError
from .group_words import (
    IDENTITY,
    GroupWord,
    SubgroupDescriptor,
    children,
    coset,
    neighbors,
    parent,
)

DEPTH_CAP_ENV = "LAMBDATREE_MAX_DEPTH"
DEFAULT_DEPTH_CAP = 14
PATTERN_SCAN_DEPTH = 6


def depth_cap() -> int:
    return int(os.environ.get(DEPTH_CAP_ENV, DEFAULT_DEPTH_CAP))


def _check_depth(n: int) -> None:
    if n < 0:
        raise ValueError(f"depth must be nonnegative, got {n}")
    cap = depth_cap()
    if n > cap:
        raise CapacityError(f"depth {n} exceeds cap {cap} (set {DEPTH_CAP_ENV} to raise it)")


@lru_cache(maxsize=None)
def _shells(n: int, k: int) -> tuple[tuple[GroupWord, ...], ...]:
    shells = [(IDENTITY,)]
    for _ in range(n):
        shells.append(tuple(c for x in shells[-1] for c in children(x, k)))
    return tuple(shells)


def sphere(m: int, k: int) -> tuple[GroupWord, ...]:
    """W_m: words of length exactly m, in lexicographic generation order."""
    _check_depth(m)
    return _shells(m, k)[m]


def vertices_up_to(n: int, k: int) -> tuple[GroupWord, ...]:
    """V_n, ordered by length and then lexicographically."""
    _check_depth(n)
    return tuple(x for shell in _shells(n, k) for x in shell)


def edges_up_to(n: int, k: int) -> list[tuple[GroupWord, GroupWord]]:
    """L_n as (parent, child) pairs."""
    return [(parent(x), x) for x in vertices_up_to(n, k) if not x.is_identity]


@dataclass(frozen=True)
class Ball:
    center: GroupWord
    neighbor_list: tuple[GroupWord, ...]


def unit_ball(x: GroupWord, k: int) -> Ball:
    return Ball(x, tuple(neighbors(x, k)))


def interior_centers(n: int, k: int) -> tuple[GroupWord, ...]:
    """Vertices with 2 <= |x| <= n-1: grandparent exists and the whole ball lies in V_n."""
    if n < 3:
        raise EmptyInteriorError(f"depth {n} has no interior centers (need n >= 3)")
    return tuple(x for x in vertices_up_to(n, k) if 2 <= len(x) <= n - 1)


@dataclass(frozen=True, order=True)
class LocalPattern:
    """Cosets of x↓↓, x↓, x and of x's children (sorted)."""

    c_g: int
    c_p: int
    c_x: int
    child_cosets: tuple[int, ...]

    def __str__(self) -> str:
        kids = ",".join(map(str, self.child_cosets))
        return f"({self.c_g},{self.c_p},{self.c_x}|{{{kids}}})"


def local_pattern(x: GroupWord, A: SubgroupDescriptor, k: int) -> LocalPattern:
    p = parent(x)
    g = parent(p)
    kids = tuple(sorted(coset(c, A) for c in children(x, k)))
    return LocalPattern(coset(g, A), coset(p, A), coset(x, A), kids)


def _check_regime(A: SubgroupDescriptor, k: int) -> None:
    if k != 2 or len(A.A) != 1:
        raise UnsupportedRegimeError(f"only k=2, |A|=1 is supported (got k={k}, A={A})")


def scan_patterns(A: SubgroupDescriptor, k: int, depth: int) -> dict[LocalPattern, GroupWord]:
    """Every local pattern seen at vertices of V_depth with |x| >= 2, with its first witness.

    Child cosets are read off the words, so the children need not lie in V_depth.
    """
    found: dict[LocalPattern, GroupWord] = {}
    for x in vertices_up_to(depth, k):
        if len(x) >= 2:
            found.setdefault(local_pattern(x, A, k), x)
    return found


@lru_cache(maxsize=None)
def _realizable(A: SubgroupDescriptor, k: int, depth: int) -> tuple[tuple[LocalPattern, GroupWord], ...]:
    return tuple(sorted(scan_patterns(A, k, depth).items()))


def realizable_patterns(
    A: SubgroupDescriptor, k: int = 2, depth: int = PATTERN_SCAN_DEPTH
) -> frozenset[LocalPattern]:
    """Local patterns realized somewhere in the infinite tree.

    Obtained by scanning a finite tree; the set is stable from depth 4 on.
    """
    _check_regime(A, k)
    if depth < 4:
        raise ValueError("pattern scan needs depth >= 4")
    return frozenset(p for p, _ in _realizable(A, k, depth))


def pattern_witnesses(
    A: SubgroupDescriptor, k: int = 2, depth: int = PATTERN_SCAN_DEPTH
) -> dict[LocalPattern, GroupWord]:
    _check_regime(A, k)
    return dict(_realizable(A, k, depth))
