"""
Ball energies and parameter regions
===================================

A unit ball has three edges, so its energy is half the sum of three
couplings drawn from {a, b, c}: ten possible classes. The region where
class m is minimal reduces to "every coupling in m equals min(a, b, c)".
"""

from lambdatree.model import (
    ALL_REGIONS,
    CLASSES,
    BallConfig,
    LambdaParams,
    ball_class,
    ball_energy,
    class_energy,
    class_label,
    region_membership_Am,
    region_of_classes,
)

p = LambdaParams("3", "1", "1")
print("(a,b,c) =", p)
for m in CLASSES:
    star = "*" if region_membership_Am(m, p) else " "
    print(f"  {star} U{m:<2} = {class_energy(m, p)!s:>4}   {class_label(m)}")

ball = BallConfig(2, [1, 2, 3])
print("\nball", ball, "is class", ball_class(ball), "with energy", ball_energy(ball, p))

# A_4/A_6, A_5/A_8, A_7/A_9 coincide: same forced-minimum set
for pair in [(4, 6), (5, 8), (7, 9)]:
    print(f"A{pair[0]} vs A{pair[1]}:", region_of_classes([pair[0]]), "|", region_of_classes([pair[1]]))

print("\nthe seven canonical regions:")
for r in ALL_REGIONS:
    print("  ", r)

# exact arithmetic: "0.1" is exactly 1/10, so ties are not lost to rounding
q = LambdaParams("0.1", "0.1", "0.3")
print("\nat", q, "minimal classes:", [m for m in CLASSES if region_membership_Am(m, q)])
