"""Periodic and weakly periodic configurations for an index-two subgroup H_A."""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass

from .errors import ParseError
from .group_words import GroupWord, SubgroupDescriptor, coset, parent
from .model import SPINS, Region, check_spin
from .tree import vertices_up_to


class SpecKind(str, enum.Enum):
    TRANSLATION_INVARIANT = "translation-invariant"
    PERIODIC = "periodic-non-TI"
    WEAKLY_PERIODIC = "weakly-periodic-strict"


class RootConvention(str, enum.Enum):
    """Coset assigned to the (nonexistent) parent of the root e."""

    PARENT_IN_H0 = "virtual-parent-in-H0"
    PARENT_IN_H1 = "virtual-parent-in-H1"

    @property
    def parent_coset(self) -> int:
        return 0 if self is RootConvention.PARENT_IN_H0 else 1


@dataclass(frozen=True, order=True)
class PeriodicSpec:
    """sigma0 on H_0, sigma1 on H_1."""

    sigma0: int
    sigma1: int

    def __post_init__(self) -> None:
        check_spin(self.sigma0)
        check_spin(self.sigma1)

    def __str__(self) -> str:
        return f"p:{self.sigma0}{self.sigma1}"

    def as_weakly_periodic(self) -> "WeaklyPeriodicSpec":
        return WeaklyPeriodicSpec(self.sigma0, self.sigma1, self.sigma0, self.sigma1)


@dataclass(frozen=True, order=True)
class WeaklyPeriodicSpec:
    """sigma_ij is the spin at x when x↓ ∈ H_i and x ∈ H_j."""

    sigma00: int
    sigma01: int
    sigma10: int
    sigma11: int

    def __post_init__(self) -> None:
        for s in self.values:
            check_spin(s)

    @property
    def values(self) -> tuple[int, int, int, int]:
        return (self.sigma00, self.sigma01, self.sigma10, self.sigma11)

    def value(self, i: int, j: int) -> int:
        return self.values[2 * i + j]

    def __str__(self) -> str:
        return "wp:" + "".join(map(str, self.values))

    def mirror(self) -> "WeaklyPeriodicSpec":
        """Swap the roles of H_0 and H_1."""
        return WeaklyPeriodicSpec(self.sigma11, self.sigma10, self.sigma01, self.sigma00)

    def reflect(self) -> "WeaklyPeriodicSpec":
        """Spin reflection v -> 4 - v."""
        return WeaklyPeriodicSpec(*(4 - s for s in self.values))


_SPEC_RE = re.compile(r"^(wp|p):([123]+)$")


def parse_spec(text: str) -> WeaklyPeriodicSpec | PeriodicSpec:
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed spec {text!r}; expected 'wp:DDDD' or 'p:DD' with digits 1-3")
    kind, digits = m.groups()
    spins = [int(d) for d in digits]
    if kind == "wp" and len(spins) == 4:
        return WeaklyPeriodicSpec(*spins)
    if kind == "p" and len(spins) == 2:
        return PeriodicSpec(*spins)
    raise ParseError(f"spec {text!r} has the wrong number of spins")


def all_weakly_periodic_specs() -> list[WeaklyPeriodicSpec]:
    return [WeaklyPeriodicSpec(*v) for v in itertools.product(SPINS, repeat=4)]


def all_periodic_specs() -> list[PeriodicSpec]:
    return [PeriodicSpec(*v) for v in itertools.product(SPINS, repeat=2)]


def classify_spec(s: WeaklyPeriodicSpec) -> SpecKind:
    if len(set(s.values)) == 1:
        return SpecKind.TRANSLATION_INVARIANT
    if s.sigma00 == s.sigma10 and s.sigma01 == s.sigma11:
        return SpecKind.PERIODIC
    return SpecKind.WEAKLY_PERIODIC


def periodic_value(s: PeriodicSpec, x: GroupWord, A: SubgroupDescriptor) -> int:
    return s.sigma1 if coset(x, A) else s.sigma0


def weakly_periodic_value(
    s: WeaklyPeriodicSpec,
    x: GroupWord,
    A: SubgroupDescriptor,
    root_rule: RootConvention = RootConvention.PARENT_IN_H0,
) -> int:
    i = root_rule.parent_coset if x.is_identity else coset(parent(x), A)
    return s.value(i, coset(x, A))


def realize(
    s: WeaklyPeriodicSpec,
    n: int,
    A: SubgroupDescriptor,
    root_rule: RootConvention = RootConvention.PARENT_IN_H0,
    k: int = 2,
) -> dict[GroupWord, int]:
    """Spin assignment on V_n."""
    if n < 1:
        raise ValueError("realize needs n >= 1")
    spins: dict[GroupWord, int] = {}
    cosets: dict[GroupWord, int] = {}
    for x in vertices_up_to(n, k):
        cx = coset(x, A)
        cosets[x] = cx
        i = root_rule.parent_coset if x.is_identity else cosets[parent(x)]
        spins[x] = s.value(i, cx)
    return spins


@dataclass(frozen=True)
class PaperConfiguration:
    index: int
    spec: WeaklyPeriodicSpec
    claimed_region: Region
    citation: str

    @property
    def name(self) -> str:
        return f"phi_{self.index}"


_A9 = Region("bc")
_A5 = Region("ac")

# Transcribed tables; claims from the weakly periodic ground-state theorem
# (I: phi_1..phi_14 on A_9, II: phi_15..phi_20 on A_5).
_PAPER_TABLE = {
    1: "1122", 2: "1221", 3: "1223", 4: "2111", 5: "2122",
    6: "2132", 7: "2212", 8: "2221", 9: "2223", 10: "2232",
    11: "2211", 12: "3332", 13: "1112", 14: "1222",
    15: "1333", 16: "3113", 17: "3311", 18: "3313", 19: "3331", 20: "1331",
}

PAPER_CONFIGURATIONS: tuple[PaperConfiguration, ...] = tuple(
    PaperConfiguration(
        i,
        WeaklyPeriodicSpec(*(int(d) for d in digits)),
        _A9 if i <= 14 else _A5,
        "assertion I: ground state iff (a,b,c) in A_9" if i <= 14
        else "assertion II: ground state iff (a,b,c) in A_5",
    )
    for i, digits in _PAPER_TABLE.items()
)

PAPER_BY_SPEC = {pc.spec: pc for pc in PAPER_CONFIGURATIONS}


def paper_phi(i: int) -> WeaklyPeriodicSpec:
    return PAPER_CONFIGURATIONS[i - 1].spec

# The spec worked through for assertion III
ASSERTION_III_EXAMPLE = WeaklyPeriodicSpec(3, 1, 3, 3)
