"""Exact periodic and weakly periodic ground states of the λ-model on the Cayley tree of order two."""

from .analysis import (
    class_set,
    enumerate_all,
    ground_state_region,
    oracle_ground_state_check,
    periodic_class_set,
    relative_hamiltonian,
    verify_all,
    verify_theorem_periodic,
    verify_theorem_weakly_periodic,
)
from .configurations import (
    PAPER_CONFIGURATIONS,
    PeriodicSpec,
    RootConvention,
    SpecKind,
    WeaklyPeriodicSpec,
    classify_spec,
    parse_spec,
    realize,
)
from .group_words import GroupWord, SubgroupDescriptor, coset, multiply, reduce
from .model import BallConfig, LambdaParams, Region, ball_class, ball_energy, class_energy

__version__ = "0.1.0"
