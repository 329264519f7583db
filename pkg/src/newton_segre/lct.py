"""Log canonical thresholds of monomial ideals via the diagonal criterion.

For a monomial ideal the threshold is the reciprocal of the parameter at
which the main diagonal t*(1,...,1) first enters the Newton polyhedron.
That exit parameter sigma is the internal primitive here (it avoids
reciprocal churn); the threshold itself is a view on it.

sigma is computed two ways on every call -- an exact simplex LP over the
extreme points, and the maximum of c / <w, (1,..,1)> over diagram facets --
and the two must agree, which keeps the LP solver and the facet enumeration
honest against each other.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .ideals import MonomialIdeal, stretch
from .polyhedron import NewtonPolyhedron, newton_polyhedron
from .simplex import LpProblem, solve_lp


def diagonal_exit(poly: NewtonPolyhedron) -> Fraction:
    """min { s >= 0 : s*(1,...,1) lies in the polyhedron }, exactly."""
    k = len(poly.extreme_points)
    # variables: s, lambda_1..lambda_k
    prob = LpProblem(objective=(Fraction(1),) + (Fraction(0),) * k)
    for coord in range(poly.n):
        coeffs = [Fraction(-1)] + [Fraction(v[coord]) for v in poly.extreme_points]
        prob.add(coeffs, "<=", 0)
    prob.add([0] + [1] * k, "=", 1)
    outcome = solve_lp(prob)
    assert outcome.is_optimal, "diagonal exit LP cannot be infeasible or unbounded"
    via_lp = outcome.value

    via_facets = max(
        f.offset / sum(f.normal) for f in poly.diagram_facets
    )
    assert via_lp == via_facets, (
        f"diagonal exit mismatch: LP says {via_lp}, facets say {via_facets}")
    return via_lp


@lru_cache(maxsize=4096)
def lct(ideal: MonomialIdeal) -> Fraction:
    """Log canonical threshold: 1 / diagonal_exit of the Newton polyhedron."""
    return 1 / diagonal_exit(newton_polyhedron(ideal))


def cross_stretch_factors(direction: Sequence[int]) -> tuple[int, ...]:
    """(prod_{j != 1} a_j, ..., prod_{j != n} a_j) for a lattice direction a."""
    total = math.prod(direction)
    return tuple(total // a_i for a_i in direction)


def _validated(ideal: MonomialIdeal, direction: Sequence[int], m: int) -> tuple[int, ...]:
    a = tuple(int(x) for x in direction)
    if len(a) != ideal.n:
        raise ValueError(f"direction {a} has length {len(a)}, expected {ideal.n}")
    if any(x < 1 for x in a):
        raise ValueError("direction entries must be positive integers")
    if m < 1:
        raise ValueError("m must be a positive integer")
    return a


def lct_condition(ideal: MonomialIdeal, direction: Sequence[int], m: int) -> bool:
    """lct of the cross-stretched ideal >= m / (a_1 ... a_n), exactly.

    This is the summation condition of the lattice estimator: stretch each
    variable by the product of the other direction entries, then compare the
    threshold against m over the full product.
    """
    a = _validated(ideal, direction, m)
    stretched = stretch(ideal, cross_stretch_factors(a))
    return lct(stretched) >= Fraction(m, math.prod(a))


def region_condition_via_lct(ideal: MonomialIdeal, direction: Sequence[int], m: int) -> bool:
    """(a_1 ... a_n) * lct(cross-stretched ideal) <= m, exactly.

    The threshold-side membership test for (a/m) lying in the Newton region;
    the non-strict comparison matches the region being a closure, so diagram
    boundary points satisfy both this and lct_condition.
    """
    a = _validated(ideal, direction, m)
    stretched = stretch(ideal, cross_stretch_factors(a))
    return math.prod(a) * lct(stretched) <= m
