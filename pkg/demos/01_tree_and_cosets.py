"""
Vertices, cosets and local patterns
===================================

Vertices of the Cayley tree of order two are reduced words in three
involutions a_1, a_2, a_3. Fixing A = {1} splits the tree into two cosets
by the parity of the number of a_1 letters.
"""

from lambdatree.group_words import GroupWord, SubgroupDescriptor, coset, multiply, neighbors, parent
from lambdatree.tree import pattern_witnesses, realizable_patterns, vertices_up_to

A = SubgroupDescriptor({1})

# a word, its parent, and its three neighbours
x = GroupWord.parse("1.2")
print("x =", x, " parent:", parent(x), " neighbours:", [str(y) for y in neighbors(x, 2)])
print("a1a2a1 * a1a2a1 =", multiply(GroupWord.parse("1.2.1"), GroupWord.parse("1.2.1")))

# shell sizes 1, 3, 6, 12, ...
print("|V_n| for n = 0..6:", [len(vertices_up_to(n, 2)) for n in range(7)])

# cosets of the first few vertices
for v in vertices_up_to(2, 2):
    print(f"  {str(v):>5}  coset H_{coset(v, A)}")

# Only six (grandparent, parent, self | children) coset patterns ever occur.
# (0,1,0) is impossible: crossing into H_1 uses up the single a_1 edge.
print("\nrealizable patterns and the first vertex showing each:")
for pat, w in sorted(pattern_witnesses(A).items()):
    print(f"  {pat}  at {w}")
assert len(realizable_patterns(A)) == 6
