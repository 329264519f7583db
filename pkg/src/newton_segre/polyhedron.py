"""Newton polyhedron of a monomial ideal, with exact membership tests.

The polyhedron P = conv(generators) + R^n_{>=0} is stored by its extreme
points (a subset of the generators) and its facet inequalities <w, a> >= c
with componentwise non-negative normals. Facets with offset c > 0 face the
origin and form the Newton diagram ("staircase boundary"); facets with
c = 0 lie on coordinate hyperplanes. The Newton region -- the closure of the
complement of P inside the positive orthant -- is represented implicitly:
a non-negative point belongs to it iff it satisfies <w, p> <= c for some
diagram facet.

Everything here is exact rational arithmetic; membership and facet decisions
are sign decisions and must not depend on tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cones import cone_facets
from .errors import DimensionMismatch, NegativeCoordinate
from .ideals import ExponentVector, MonomialIdeal
from .linalg import dot
from .simplex import feasible

RationalPoint = tuple[Fraction, ...]


@dataclass(frozen=True)
class Facet:
    """Inequality <normal, a> >= offset; entries are coprime integers."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    @property
    def is_diagram(self) -> bool:
        return self.offset > 0

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, point)


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    extreme_points: tuple[ExponentVector, ...]
    facets: tuple[Facet, ...]

    @property
    def diagram_facets(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.is_diagram)

    @property
    def coordinate_facets(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets if not f.is_diagram)


def _is_extreme(candidate: ExponentVector, others: Sequence[ExponentVector]) -> bool:
    """candidate is extreme iff it is not in conv(others) + orthant.

    Tested as infeasibility of: lambda >= 0, sum lambda = 1,
    sum lambda_j v_j <= candidate componentwise.
    """
    if not others:
        return True
    k = len(others)
    constraints = []
    for coord in range(len(candidate)):
        constraints.append(([v[coord] for v in others], "<=", candidate[coord]))
    constraints.append(([1] * k, "=", 1))
    return not feasible(constraints, k)


@lru_cache(maxsize=512)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Extreme points and complete facet description of conv(gens) + orthant.

    Facets are enumerated exhaustively on the homogenization: generators
    (v, 1) for extreme points v together with the axis rays (e_i, 0) span a
    pointed full-dimensional cone in R^(n+1) whose facets, apart from the
    hyperplane at infinity, are exactly the facets of the polyhedron.
    """
    n = ideal.n
    gens = ideal.generators
    extremes = tuple(
        v for v in gens if _is_extreme(v, [u for u in gens if u != v])
    )

    homog: list[tuple[Fraction, ...]] = [
        tuple(Fraction(e) for e in v) + (Fraction(1),) for v in extremes
    ]
    for axis in range(n):
        ray = [Fraction(0)] * (n + 1)
        ray[axis] = Fraction(1)
        homog.append(tuple(ray))

    facets = []
    for normal, _incidence in cone_facets(homog):
        w = normal[:n]
        if not any(w):
            continue  # hyperplane at infinity, not a facet of the polyhedron
        facets.append(Facet(normal=w, offset=-normal[n]))
    facets.sort(key=lambda f: (f.normal, f.offset))

    poly = NewtonPolyhedron(n, extremes, tuple(facets))
    for v in extremes:  # cheap sanity; a failure means the enumeration is wrong
        assert all(f.value(v) >= f.offset for f in poly.facets)
    return poly


def _check_point(n: int, point: Sequence[Fraction | int]) -> RationalPoint:
    p = tuple(Fraction(x) for x in point)
    if len(p) != n:
        raise DimensionMismatch(f"point has {len(p)} coordinates, expected {n}")
    return p


def contains(poly: NewtonPolyhedron, point: Sequence[Fraction | int]) -> bool:
    """Membership in the Newton polyhedron, via the facet inequalities."""
    p = _check_point(poly.n, point)
    return all(f.value(p) >= f.offset for f in poly.facets)


def contains_lp(poly: NewtonPolyhedron, point: Sequence[Fraction | int]) -> bool:
    """Same membership decided by LP: point in conv(extreme points) + orthant.

    Kept alongside the facet route on purpose; the two must agree and the
    test suite checks that they do.
    """
    p = _check_point(poly.n, point)
    k = len(poly.extreme_points)
    constraints = []
    for coord in range(poly.n):
        constraints.append(
            ([v[coord] for v in poly.extreme_points], "<=", p[coord]))
    constraints.append(([1] * k, "=", 1))
    return feasible(constraints, k)


def in_newton_region(ideal: MonomialIdeal | NewtonPolyhedron,
                     point: Sequence[Fraction | int]) -> bool:
    """Membership in the closed complement of the polyhedron in the orthant.

    Boundary points of the diagram belong to both the region and the
    polyhedron (the region is a closure), so ties count as inside.
    """
    poly = ideal if isinstance(ideal, NewtonPolyhedron) else newton_polyhedron(ideal)
    p = _check_point(poly.n, point)
    if any(x < 0 for x in p):
        raise NegativeCoordinate(f"point {p} leaves the positive orthant")
    return any(f.value(p) <= f.offset for f in poly.diagram_facets)


def _fraction_str(x: Fraction) -> str:
    return str(x)


def polyhedron_to_json(poly: NewtonPolyhedron) -> dict:
    """JSON-ready dump: diagram facets are scaled to offset 1 for readability."""
    facets = []
    for f in poly.facets:
        if f.is_diagram:
            normal = [_fraction_str(x / f.offset) for x in f.normal]
            offset = "1"
        else:
            normal = [_fraction_str(x) for x in f.normal]
            offset = "0"
        facets.append({"normal": normal, "offset": offset, "diagram": f.is_diagram})
    return {
        "n": poly.n,
        "extreme_points": [list(v) for v in poly.extreme_points],
        "facets": facets,
    }
