from fractions import Fraction as F
from itertools import combinations

import pytest

from newton_segre import (AmbientTooSmall, NonPositiveParameter,
                          TruncatedSeries, evaluate, integrate_piece,
                          make_ideal, make_piece, segre_class)
from tests.conftest import random_ideal


def divisor_pushforward(d: int, top: int) -> tuple:
    """d*H / (1 + d*H) truncated: coefficients d, -d^2, d^3, ..."""
    return tuple(F(d) * F(-d) ** (k - 1) for k in range(1, top + 1))


def test_pure_power_series_both_embeddings():
    for ell in range(1, 5):
        one_var = segre_class(make_ideal(1, [(ell,)]), ambient_dim=4)
        two_var = segre_class(make_ideal(2, [(ell, 0)]), ambient_dim=4)
        assert one_var.pushforward == divisor_pushforward(ell, 4)
        assert two_var.pushforward == one_var.pushforward


def test_segment_expansion_matches_geometric_series():
    result = segre_class(make_ideal(1, [(2,)]), ambient_dim=5)
    assert [result.multivariate.coefficient((k,)) for k in range(6)] == \
        [0, 2, -4, 8, -16, 32]


def test_diagonal_closed_form():
    l1, l2, top = 2, 3, 5
    result = segre_class(make_ideal(2, [(l1, 0), (0, l2)]), ambient_dim=top)
    expected = (TruncatedSeries.monomial(2, top, (1, 1), l1 * l2)
                * TruncatedSeries.one_plus_linear(2, top, (l1, 0)).inverse()
                * TruncatedSeries.one_plus_linear(2, top, (0, l2)).inverse())
    assert result.multivariate == expected


def test_crossing_divisor_multivariate():
    # (x1 x2): (X1 + X2)/(1 + X1 + X2), pushforward 2H/(1+2H)
    top = 3
    result = segre_class(make_ideal(2, [(1, 1)]), ambient_dim=top)
    expected = ((TruncatedSeries.monomial(2, top, (1, 0))
                 + TruncatedSeries.monomial(2, top, (0, 1)))
                * TruncatedSeries.one_plus_linear(2, top, (1, 1)).inverse())
    assert result.multivariate == expected
    assert result.pushforward == divisor_pushforward(2, top)


def test_divisor_law_random_principal(rng):
    for _ in range(20):
        n = rng.randint(1, 3)
        vec = tuple(rng.randint(0, 10) for _ in range(n))
        if not any(vec):
            continue
        d = sum(vec)
        result = segre_class(make_ideal(n, [vec]), ambient_dim=4)
        assert result.pushforward == divisor_pushforward(d, 4)


def test_orthant_normalization_for_principal_ideals(rng):
    """Region pieces plus the polyhedron piece integrate to exactly 1."""
    for _ in range(15):
        n = rng.randint(1, 3)
        vec = tuple(rng.randint(0, 6) for _ in range(n))
        if not any(vec):
            continue
        bound = 6
        result = segre_class(make_ideal(n, [vec]), ambient_dim=bound)
        # for (x^v) the polyhedron itself is v + orthant: one ray-only piece
        poly_piece = make_piece([tuple(F(e) for e in vec)], list(range(n)))
        total = result.multivariate + integrate_piece(poly_piece, n, bound)
        assert total == TruncatedSeries.constant(n, bound, 1)


def test_region_and_polyhedron_partition_unity():
    """The region pieces and a triangulation of the polyhedron itself must
    integrate to exactly 1 together: two different decompositions feeding
    the same closed form, checked at rational parameters."""
    from newton_segre.cones import pull_triangulation
    from newton_segre.polyhedron import newton_polyhedron
    from newton_segre.segre import piece_value

    cases = [
        (2, [(3, 0), (0, 2)]),
        (2, [(2, 0), (1, 1)]),
        (3, [(2, 0, 0), (1, 1, 0), (0, 0, 3)]),
        (4, [(2, 0, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 2, 2)]),
    ]
    for n, gens in cases:
        ideal = make_ideal(n, gens)
        poly = newton_polyhedron(ideal)
        X = [F(1, k + 2) for k in range(n)]

        homog = [tuple(F(e) for e in v) + (F(1),) for v in poly.extreme_points]
        for axis in range(n):
            ray = [F(0)] * (n + 1)
            ray[axis] = F(1)
            homog.append(tuple(ray))
        over_polyhedron = F(0)
        for idx in pull_triangulation(homog):
            verts = [poly.extreme_points[i] for i in idx
                     if i < len(poly.extreme_points)]
            rays = [i - len(poly.extreme_points) for i in idx
                    if i >= len(poly.extreme_points)]
            piece = make_piece([tuple(F(c) for c in v) for v in verts], rays)
            over_polyhedron += piece_value(piece, X)

        over_region = evaluate(segre_class(ideal, ambient_dim=n), X)
        assert over_region + over_polyhedron == 1


def test_evaluate_examples():
    result = segre_class(make_ideal(1, [(2,)]), ambient_dim=3)
    assert evaluate(result, [F(1, 2)]) == F(1, 2)

    crossing = segre_class(make_ideal(2, [(1, 1)]), ambient_dim=3)
    assert evaluate(crossing, [F(1), F(1)]) == F(2, 3)

    tiny = evaluate(crossing, [F(1, 10 ** 6), F(1, 10 ** 6)])
    assert 0 < tiny < F(1, 100_000)  # no constant term: vanishes at X -> 0


def test_evaluate_series_is_approximate_only():
    result = segre_class(make_ideal(1, [(1,)]), ambient_dim=3)
    exact = evaluate(result, [F(1, 10)])
    truncated = evaluate(result.multivariate, [F(1, 10)])
    assert exact == F(1, 11)
    assert truncated == F(1, 10) - F(1, 100) + F(1, 1000)


def test_evaluate_rejects_nonpositive():
    result = segre_class(make_ideal(1, [(1,)]), ambient_dim=2)
    with pytest.raises(NonPositiveParameter):
        evaluate(result, [F(0)])
    with pytest.raises(NonPositiveParameter):
        evaluate(result.multivariate, [-1.0])


def test_ambient_too_small():
    with pytest.raises(AmbientTooSmall):
        segre_class(make_ideal(3, [(1, 1, 1)]), ambient_dim=1)


def test_constant_term_always_zero(rng):
    for _ in range(20):
        ideal = random_ideal(rng)
        result = segre_class(ideal, ambient_dim=ideal.n + 1)
        assert result.multivariate.coefficient((0,) * ideal.n) == 0


def brute_force_height(ideal) -> int:
    """Smallest set of variables meeting every generator's support."""
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.generators]
    for size in range(1, ideal.n + 1):
        for cover in combinations(range(ideal.n), size):
            if all(s & set(cover) for s in supports):
                return size
    raise AssertionError("no cover found")


def test_lowest_degree_equals_height(rng):
    for _ in range(30):
        ideal = random_ideal(rng)
        result = segre_class(ideal, ambient_dim=ideal.n + 1)
        lowest = next(k + 1 for k, c in enumerate(result.pushforward) if c != 0)
        assert lowest == brute_force_height(ideal)


def test_threads_do_not_change_result():
    ideal = make_ideal(3, [(2, 0, 0), (1, 1, 0), (0, 0, 3)])
    a = segre_class(ideal, ambient_dim=4, threads=1)
    b = segre_class(ideal, ambient_dim=4, threads=4)
    assert a.multivariate == b.multivariate
    assert a.pushforward == b.pushforward
