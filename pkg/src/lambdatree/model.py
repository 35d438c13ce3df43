"""Energies of the λ-model with three spin values, and the parameter regions A_m.

Couplings: λ(i, j) = a if |i-j| = 2, b if |i-j| = 1, c if i = j.
All verification arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import ParseError

SPINS = (1, 2, 3)
SYMBOLS = ("a", "b", "c")

Number = Union[int, Fraction, str]


def to_fraction(x: Number) -> Fraction:
    """Exact conversion; decimal strings map to their exact value ("0.1" -> 1/10).

    Floats are converted through ``repr`` so that 0.1 also becomes 1/10
    rather than the nearest binary double.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a coupling value")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        x = repr(x)
    try:
        value = Fraction(x.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ParseError(f"cannot parse {x!r} as an exact number") from None
    return value


@dataclass(frozen=True)
class LambdaParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: Number, b: Number, c: Number) -> None:
        object.__setattr__(self, "a", to_fraction(a))
        object.__setattr__(self, "b", to_fraction(b))
        object.__setattr__(self, "c", to_fraction(c))

    def __getitem__(self, symbol: str) -> Fraction:
        return getattr(self, symbol)

    def astuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def minimum(self) -> Fraction:
        return min(self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def check_spin(s: int) -> int:
    if s not in SPINS:
        raise ValueError(f"spin must be one of {SPINS}, got {s!r}")
    return s


def coupling_symbol(i: int, j: int) -> str:
    return SYMBOLS[2 - abs(check_spin(i) - check_spin(j))]


def lambda_value(i: int, j: int, p: LambdaParams) -> Fraction:
    return p[coupling_symbol(i, j)]


@dataclass(frozen=True)
class BallConfig:
    """Spins on a unit ball; neighbour spins are kept as a sorted multiset."""

    center_spin: int
    neighbor_spins: tuple[int, ...]

    def __init__(self, center_spin: int, neighbor_spins: Iterable[int]) -> None:
        spins = tuple(sorted(check_spin(s) for s in neighbor_spins))
        if len(spins) != 3:
            raise ValueError(f"a unit ball has 3 neighbours, got {len(spins)}")
        object.__setattr__(self, "center_spin", check_spin(center_spin))
        object.__setattr__(self, "neighbor_spins", spins)

    def counts(self) -> dict[int, int]:
        """B^{(i)} for i = 1, 2, 3."""
        c = Counter(self.neighbor_spins)
        return {i: c[i] for i in SPINS}

    def __str__(self) -> str:
        return f"{self.center_spin}|{''.join(map(str, self.neighbor_spins))}"


def all_ball_configs() -> list[BallConfig]:
    """The 30 distinct ball shapes: 3 centres times 10 neighbour multisets."""
    return [
        BallConfig(s, ns)
        for s in SPINS
        for ns in itertools.combinations_with_replacement(SPINS, 3)
    ]


def ball_energy(cfg: BallConfig, p: LambdaParams) -> Fraction:
    return sum((lambda_value(cfg.center_spin, s, p) for s in cfg.neighbor_spins), Fraction(0)) / 2


# U_1..U_10 as multisets of the three incident couplings
CLASS_SYMBOLS: dict[int, tuple[str, str, str]] = {
    1: ("a", "a", "a"),
    2: ("b", "b", "b"),
    3: ("c", "c", "c"),
    4: ("a", "b", "b"),
    5: ("a", "c", "c"),
    6: ("a", "a", "b"),
    7: ("b", "c", "c"),
    8: ("a", "a", "c"),
    9: ("b", "b", "c"),
    10: ("a", "b", "c"),
}
_CLASS_OF_MULTISET = {syms: m for m, syms in CLASS_SYMBOLS.items()}
CLASSES = tuple(CLASS_SYMBOLS)


def class_name(m: int) -> str:
    return f"C{m}"


def class_label(m: int) -> str:
    return f"C{m}{{{','.join(CLASS_SYMBOLS[m])}}}"


def ball_class(cfg: BallConfig) -> int:
    """Class index decided symbolically from the coupling multiset, never numerically."""
    syms = tuple(sorted(coupling_symbol(cfg.center_spin, s) for s in cfg.neighbor_spins))
    return _CLASS_OF_MULTISET[syms]


def class_energy(m: int, p: LambdaParams) -> Fraction:
    if m not in CLASS_SYMBOLS:
        raise ValueError(f"class index must be in 1..10, got {m!r}")
    x, y, z = CLASS_SYMBOLS[m]
    return (p[x] + p[y] + p[z]) / 2


@lru_cache(maxsize=4096)
def class_energies(p: LambdaParams) -> tuple[Fraction, ...]:
    """(U_1, ..., U_10) at p."""
    return tuple(class_energy(m, p) for m in CLASSES)


def min_energy(p: LambdaParams) -> Fraction:
    return min(class_energies(p))


def region_membership_Am(m: int, p: LambdaParams) -> bool:
    """p ∈ A_m, i.e. U_m attains the minimum of U_1..U_10 (exact comparison)."""
    energies = class_energies(p)
    return energies[m - 1] == min(energies)


@dataclass(frozen=True)
class Region:
    """Parameters where every coupling in ``forced_min`` equals min(a, b, c)."""

    forced_min: frozenset[str]

    def __init__(self, forced_min: Iterable[str]) -> None:
        T = frozenset(forced_min)
        if not T or not T <= set(SYMBOLS):
            raise ValueError(f"forced_min must be a nonempty subset of {{a,b,c}}, got {sorted(T)}")
        object.__setattr__(self, "forced_min", T)

    @property
    def key(self) -> str:
        return "".join(s for s in SYMBOLS if s in self.forced_min)

    def paper_names(self) -> list[str]:
        return [f"A{m}" for m in CLASSES if set(CLASS_SYMBOLS[m]) == self.forced_min]

    def condition(self) -> str:
        T = [s for s in SYMBOLS if s in self.forced_min]
        rest = [s for s in SYMBOLS if s not in self.forced_min]
        eq = "=".join(T)
        if not rest:
            return eq
        return ", ".join(f"{eq}<={r}" for r in rest)

    def canonical(self) -> str:
        return "T={" + ",".join(s for s in SYMBOLS if s in self.forced_min) + "}"

    def label(self) -> str:
        return f"{'='.join(self.paper_names())} {{{self.condition()}}}"

    def __str__(self) -> str:
        return f"{self.canonical()} ({self.label()})"

    def __lt__(self, other: "Region") -> bool:
        return (len(self.forced_min), self.key) < (len(other.forced_min), other.key)


ALL_REGIONS = tuple(
    sorted(Region(T) for r in (1, 2, 3) for T in itertools.combinations(SYMBOLS, r))
)
DIAGONAL = Region(SYMBOLS)


def region_of_classes(S: Iterable[int]) -> Region:
    """Intersection of A_m over m in S, in canonical forced-min form."""
    S = list(S)
    if not S:
        raise ValueError("class set must be nonempty")
    return Region(s for m in S for s in CLASS_SYMBOLS[m])


def region_Am(m: int) -> Region:
    return region_of_classes([m])


def region_contains(r: Region, p: LambdaParams) -> bool:
    lo = p.minimum()
    return all(p[s] == lo for s in r.forced_min)


def region_equal(r1: Region, r2: Region) -> bool:
    return r1.forced_min == r2.forced_min


def region_subset(r1: Region, r2: Region) -> bool:
    """r1 ⊆ r2 as parameter sets (more forced equalities means a smaller set)."""
    return r2.forced_min <= r1.forced_min


def order_type_points() -> list[LambdaParams]:
    """One small-integer representative for each of the 13 weak orders of (a, b, c)."""
    points = [LambdaParams(*perm) for perm in itertools.permutations((1, 2, 3))]
    for i in range(3):
        for tied, other in ((1, 2), (2, 1)):
            v = [tied] * 3
            v[i] = other
            points.append(LambdaParams(*v))
    points.append(LambdaParams(2, 2, 2))
    return points


def region_representatives(r: Region) -> tuple[LambdaParams, LambdaParams]:
    """A point inside ``r`` and one outside it.

    Inside: forced couplings at 1, the others at 2. Outside: the same point
    with the first forced coupling raised to 3, so it is no longer minimal.
    """
    inside = [2, 2, 2]
    for i, s in enumerate(SYMBOLS):
        if s in r.forced_min:
            inside[i] = 1
    outside = list(inside)
    first = SYMBOLS.index(min(r.forced_min))
    outside[first] = 3
    return LambdaParams(*inside), LambdaParams(*outside)
