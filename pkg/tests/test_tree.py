import pytest

from lambdatree.errors import CapacityError, EmptyInteriorError, UnsupportedRegimeError
from lambdatree.group_words import GroupWord, SubgroupDescriptor, coset, neighbors
from lambdatree.tree import (
    LocalPattern,
    interior_centers,
    local_pattern,
    pattern_witnesses,
    realizable_patterns,
    scan_patterns,
    sphere,
    unit_ball,
    vertices_up_to,
)

A1 = SubgroupDescriptor({1})


def brute_words(n, k=2):
    # every sequence over the generators, reduced ones kept
    import itertools

    out = set()
    for m in range(n + 1):
        for seq in itertools.product(range(1, k + 2), repeat=m):
            if all(a != b for a, b in zip(seq, seq[1:])):
                out.add(seq)
    return out


def test_small_shells():
    assert [str(x) for x in vertices_up_to(0, 2)] == ["e"]
    assert {str(x) for x in vertices_up_to(1, 2)} == {"e", "1", "2", "3"}


@pytest.mark.parametrize("n", range(0, 7))
def test_vertex_count_matches_generation(n):
    vs = vertices_up_to(n, 2)
    assert {x.letters for x in vs} == brute_words(n)
    assert len(vs) == (1 if n == 0 else 1 + 3 * (2**n - 1))


def test_depth_six_count():
    assert len(vertices_up_to(6, 2)) == 190


def test_sphere_sizes():
    assert [len(sphere(m, 2)) for m in range(5)] == [1, 3, 6, 12, 24]


def test_capacity(monkeypatch):
    monkeypatch.setenv("LAMBDATREE_MAX_DEPTH", "5")
    with pytest.raises(CapacityError):
        vertices_up_to(6, 2)


def test_unit_ball():
    b = unit_ball(GroupWord((1, 2)), 2)
    assert b.center == GroupWord((1, 2))
    assert {str(y) for y in b.neighbor_list} == {"1", "1.2.1", "1.2.3"}
    assert {str(y) for y in unit_ball(GroupWord(), 2).neighbor_list} == {"1", "2", "3"}


def test_interior_centers():
    assert set(interior_centers(3, 2)) == set(sphere(2, 2))
    assert len(interior_centers(4, 2)) == 18
    assert len(interior_centers(6, 2)) == 6 + 12 + 24 + 48
    with pytest.raises(EmptyInteriorError):
        interior_centers(2, 2)


EXPECTED_PATTERNS = {
    LocalPattern(0, 0, 0, (0, 1)),
    LocalPattern(0, 0, 1, (1, 1)),
    LocalPattern(0, 1, 1, (0, 1)),
    LocalPattern(1, 0, 0, (0, 1)),
    LocalPattern(1, 1, 0, (0, 0)),
    LocalPattern(1, 1, 1, (0, 1)),
}


@pytest.mark.parametrize("j", [1, 2, 3])
def test_realizable_patterns(j):
    pats = realizable_patterns(SubgroupDescriptor({j}), 2)
    assert pats == EXPECTED_PATTERNS
    assert not any(p.c_g == 0 and p.c_p == 1 and p.c_x == 0 for p in pats)


def test_pattern_stability_across_depths():
    sets = [realizable_patterns(A1, 2, d) for d in (4, 5, 6)]
    assert sets[0] == sets[1] == sets[2]


def test_witnesses_in_v5_and_no_other_pattern_in_v8():
    wit = pattern_witnesses(A1, 2, 6)
    assert all(len(x) <= 5 for x in wit.values())
    assert set(scan_patterns(A1, 2, 8)) == EXPECTED_PATTERNS


def test_pattern_invariants():
    for p in EXPECTED_PATTERNS:
        if p.c_g != p.c_p:
            assert p.c_x == p.c_p
        if p.c_p != p.c_x:
            assert p.child_cosets == (p.c_x, p.c_x)
        else:
            assert p.child_cosets == (0, 1)


def test_one_flipped_neighbor_per_vertex():
    for x in vertices_up_to(6, 2):
        cx = coset(x, A1)
        assert sum(coset(y, A1) != cx for y in neighbors(x, 2)) == 1


def test_unsupported_regime():
    with pytest.raises(UnsupportedRegimeError):
        realizable_patterns(SubgroupDescriptor({1, 2}), 2)
    with pytest.raises(UnsupportedRegimeError):
        realizable_patterns(A1, 3)


def test_local_pattern_of_vertex():
    # a_1 a_2: grandparent e (0), parent a_1 (1), self (1); children a_1a_2a_1 (0), a_1a_2a_3 (1)
    assert local_pattern(GroupWord((1, 2)), A1, 2) == LocalPattern(0, 1, 1, (0, 1))
