"""
Periodic ground states
======================

A periodic configuration takes one spin on H_0 and another on H_1. Its
ground-state region depends only on the spin gap |sigma0 - sigma1|.
"""

from lambdatree.analysis import oracle_ground_state_check, periodic_class_set, verify_theorem_periodic
from lambdatree.configurations import PeriodicSpec
from lambdatree.model import LambdaParams

for s in [PeriodicSpec(2, 2), PeriodicSpec(1, 2), PeriodicSpec(1, 3)]:
    res = periodic_class_set(s)
    print(f"{s}: classes {sorted(res.classes)} -> {res.region}")

# the brute-force oracle on a depth-6 tree agrees
s = PeriodicSpec(1, 3).as_weakly_periodic()
print("\np:13 at (1,2,1):", bool(oracle_ground_state_check(s, LambdaParams(1, 2, 1))))
bad = oracle_ground_state_check(s, LambdaParams(1, 2, 3))
print("p:13 at (1,2,3):", bool(bad), "- fails at", bad.center, "ball", bad.ball, "class", bad.cls)

report = verify_theorem_periodic()
print("\n", report.summary())
