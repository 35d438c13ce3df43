import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambdatree.errors import ParseError
from lambdatree.model import (
    ALL_REGIONS,
    CLASSES,
    SPINS,
    BallConfig,
    LambdaParams,
    Region,
    all_ball_configs,
    ball_class,
    ball_energy,
    class_energy,
    lambda_value,
    min_energy,
    order_type_points,
    region_contains,
    region_equal,
    region_membership_Am,
    region_of_classes,
    region_representatives,
    to_fraction,
)

P = LambdaParams(1, 2, 3)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
params = st.builds(LambdaParams, rationals, rationals, rationals)


def symbolic_params():
    # distinct primes keep every U_m distinct, so energies identify classes
    return LambdaParams(Fraction(2), Fraction(3), Fraction(7))


# U_1..U_10 exactly as printed, as functions of (a, b, c)
PRINTED_U = {
    1: lambda a, b, c: 3 * a / 2,
    2: lambda a, b, c: 3 * b / 2,
    3: lambda a, b, c: 3 * c / 2,
    4: lambda a, b, c: a / 2 + b,
    5: lambda a, b, c: a / 2 + c,
    6: lambda a, b, c: b / 2 + a,
    7: lambda a, b, c: b / 2 + c,
    8: lambda a, b, c: c / 2 + a,
    9: lambda a, b, c: c / 2 + b,
    10: lambda a, b, c: (a + b + c) / 2,
}


@pytest.mark.parametrize("i, j, sym", [(1, 3, "a"), (2, 2, "c"), (3, 2, "b"), (3, 1, "a"), (1, 2, "b")])
def test_lambda_value(i, j, sym):
    assert lambda_value(i, j, P) == P[sym]
    assert lambda_value(j, i, P) == P[sym]


def test_ball_energy_examples():
    a, b, c = Fraction(5), Fraction(-2), Fraction(11, 3)
    p = LambdaParams(a, b, c)
    assert ball_energy(BallConfig(2, [2, 2, 2]), p) == 3 * c / 2
    assert ball_energy(BallConfig(1, [3, 3, 3]), p) == 3 * a / 2
    assert ball_energy(BallConfig(2, [1, 2, 3]), P) == Fraction(7, 2)


@pytest.mark.parametrize(
    "center, nbrs, m",
    [(2, [1, 2, 3], 9), (1, [1, 1, 1], 3), (1, [3, 3, 1], 8), (3, [1, 3, 3], 5), (1, [3, 3, 3], 1)],
)
def test_ball_class_examples(center, nbrs, m):
    cfg = BallConfig(center, nbrs)
    assert ball_class(cfg) == m
    # oracle: energies at a generic point single out the printed U_m
    q = symbolic_params()
    u = ball_energy(cfg, q)
    assert [n for n, f in PRINTED_U.items() if f(q.a, q.b, q.c) == u] == [m]


def test_class_energy_matches_printed_table():
    for p in [P, symbolic_params(), LambdaParams("0.5", "-1.25", "7")]:
        for m in CLASSES:
            assert class_energy(m, p) == PRINTED_U[m](p.a, p.b, p.c)
    assert class_energy(10, P) == 3


def test_class_energy_rejects_bad_index():
    with pytest.raises(ValueError):
        class_energy(11, P)


def test_ball_config_validation():
    with pytest.raises(ValueError):
        BallConfig(1, [1, 2])
    with pytest.raises(ValueError):
        BallConfig(4, [1, 2, 3])
    assert BallConfig(2, [3, 1, 1]).counts() == {1: 2, 2: 0, 3: 1}


def test_thirty_ball_shapes_cover_ten_classes():
    cfgs = all_ball_configs()
    assert len(cfgs) == len(set(cfgs)) == 30
    assert {ball_class(c) for c in cfgs} == set(CLASSES)


@given(st.sampled_from(SPINS), st.lists(st.sampled_from(SPINS), min_size=3, max_size=3), params)
def test_ball_energy_equals_class_energy(center, nbrs, p):
    cfg = BallConfig(center, nbrs)
    assert ball_energy(cfg, p) == class_energy(ball_class(cfg), p)


@given(params)
def test_min_energy_formula(p):
    assert min_energy(p) == Fraction(3, 2) * p.minimum()


@given(params)
def test_some_region_contains_every_point(p):
    assert any(region_membership_Am(m, p) for m in CLASSES)


@pytest.mark.parametrize(
    "m, p",
    [(3, LambdaParams(3, 2, 1)), (1, LambdaParams(1, 2, 3)), (5, LambdaParams(1, 2, 1))],
)
def test_region_membership_examples(m, p):
    assert region_membership_Am(m, p)


def brute_membership(m, p):
    values = [PRINTED_U[n](p.a, p.b, p.c) for n in CLASSES]
    return PRINTED_U[m](p.a, p.b, p.c) == min(values)


@pytest.mark.parametrize("p", order_type_points(), ids=str)
def test_canonical_regions_match_printed_definitions(p):
    a, b, c = p.astuple()
    printed = {
        1: a <= b <= c or a <= c <= b,
        2: b <= c <= a or b <= a <= c,
        3: c <= b <= a or c <= a <= b,
        4: a == b <= c,
        5: a == c <= b,
        6: a == b <= c,
        7: b == c <= a,
        8: a == c <= b,
        9: b == c <= a,
        10: a == b == c,
    }
    for m in CLASSES:
        assert region_membership_Am(m, p) == brute_membership(m, p) == printed[m]
        assert region_contains(region_of_classes([m]), p) == printed[m]


def test_order_type_points_are_thirteen_distinct_types():
    def pattern(p):
        v = p.astuple()
        return tuple((v[i] > v[j]) - (v[i] < v[j]) for i, j in itertools.combinations(range(3), 2))

    pts = order_type_points()
    assert len(pts) == 13
    assert len({pattern(p) for p in pts}) == 13


@pytest.mark.parametrize(
    "S, T",
    [({3}, "c"), ({3, 7, 9}, "bc"), ({1, 3, 5}, "ac"), ({10}, "abc"), ({4, 6}, "ab")],
)
def test_region_of_classes_examples(S, T):
    assert region_equal(region_of_classes(S), Region(T))


@pytest.mark.parametrize("S", [{3}, {3, 7, 9}, {1, 3, 5}, {2, 7}, {1, 2}, {6, 9}, {10, 1}])
def test_region_of_classes_is_intersection(S):
    for p in order_type_points():
        assert region_contains(region_of_classes(S), p) == all(region_membership_Am(m, p) for m in S)


def test_region_contains_examples():
    assert region_contains(Region("bc"), LambdaParams(3, 1, 1))
    assert not region_contains(Region("bc"), LambdaParams(1, 1, 3))
    assert region_contains(Region("abc"), LambdaParams(2, 2, 2))


def test_region_equal_agrees_with_pointwise_membership():
    pts = order_type_points()
    for r1, r2 in itertools.product(ALL_REGIONS, repeat=2):
        same = all(region_contains(r1, p) == region_contains(r2, p) for p in pts)
        assert region_equal(r1, r2) == same
    assert not region_contains(Region("c"), P) and region_contains(Region("a"), P)


def test_duplicate_region_pairs():
    rng = random.Random(7)
    for _ in range(2000):
        p = LambdaParams(*(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)))
        for m, n in [(4, 6), (5, 8), (7, 9)]:
            assert region_membership_Am(m, p) == region_membership_Am(n, p)


def test_region_labels():
    assert Region("bc").canonical() == "T={b,c}"
    assert Region("bc").label() == "A7=A9 {b=c<=a}"
    assert Region("abc").label() == "A10 {a=b=c}"
    assert Region("c").paper_names() == ["A3"]
    assert len(ALL_REGIONS) == 7


@pytest.mark.parametrize("r", ALL_REGIONS, ids=str)
def test_region_representatives(r):
    inside, outside = region_representatives(r)
    assert region_contains(r, inside)
    assert not region_contains(r, outside)


@pytest.mark.parametrize("text, value", [("0.1", Fraction(1, 10)), ("-2.5", Fraction(-5, 2)), ("3/7", Fraction(3, 7)), ("1e-3", Fraction(1, 1000))])
def test_exact_decimal_parsing(text, value):
    assert to_fraction(text) == value


def test_float_input_uses_shortest_decimal():
    assert to_fraction(0.1) == Fraction(1, 10)


def test_bad_number():
    with pytest.raises(ParseError):
        LambdaParams("x", 1, 2)
