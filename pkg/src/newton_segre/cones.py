"""Exact machinery for pointed rational polyhedral cones.

Cones are given by finite generator lists (tuples of Fractions). Facets are
found by exhaustive search over (d-1)-subsets of generators, which is simple
and robust at the desk scale this package targets (dimension <= 5, at most a
dozen or so generators). The triangulation is a "pulling" triangulation:
cone from the first generator in the supplied order over the triangulated
facets that do not contain it. That recursion is insensitive to degenerate
vertex configurations (e.g. four coplanar vertices on a 2-face) and is
canonical once the generator order is fixed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .linalg import dot, kernel_basis, rref

Vector = tuple[Fraction, ...]


def span_basis(gens: Sequence[Vector]) -> list[Vector]:
    """Basis of the linear span of the generators."""
    reduced, pivots = rref([list(g) for g in gens])
    return [tuple(reduced[i]) for i in range(len(pivots))]


def canonical_normal(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale to coprime integers; the caller fixes the sign."""
    denom_lcm = 1
    for x in v:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in v]
    g = 0
    for i in ints:
        g = gcd(g, abs(i))
    if g > 1:
        ints = [i // g for i in ints]
    return tuple(Fraction(i) for i in ints)


def cone_facets(gens: Sequence[Vector]) -> list[tuple[Vector, frozenset[int]]]:
    """Facets of the pointed cone spanned by gens, within their linear span.

    Returns (normal, incidence) pairs: the normal is a coprime integer vector
    with dot(normal, g) >= 0 for every generator, and incidence is the set of
    generator indices lying on the facet hyperplane. Facets of the cone
    relative to its own span, so a full-dimensional input behaves as usual.
    """
    basis = span_basis(gens)
    d = len(basis)
    if d <= 1:
        return []
    found: dict[frozenset[int], Vector] = {}
    for subset in combinations(range(len(gens)), d - 1):
        rows = [[dot(basis[k], gens[s]) for k in range(d)] for s in subset]
        ker = kernel_basis(rows)
        if len(ker) != 1:
            continue
        y = ker[0]
        normal = tuple(
            sum((y[k] * basis[k][j] for k in range(d)), Fraction(0))
            for j in range(len(gens[0]))
        )
        sides = [dot(normal, g) for g in gens]
        if all(s >= 0 for s in sides):
            pass
        elif all(s <= 0 for s in sides):
            normal = tuple(-x for x in normal)
            sides = [-s for s in sides]
        else:
            continue
        incidence = frozenset(i for i, s in enumerate(sides) if s == 0)
        if incidence not in found:
            found[incidence] = canonical_normal(normal)
    return [
        (normal, inc)
        for inc, normal in sorted(found.items(), key=lambda kv: sorted(kv[0]))
    ]


def pull_triangulation(gens: Sequence[Vector]) -> list[list[int]]:
    """Triangulate a pointed cone into simplicial subcones on its generators.

    Returns index lists into gens; each list is linearly independent and the
    subcones cover the cone with pairwise disjoint interiors. The result
    depends only on the order of gens (the first generator of each sub-cone
    is the pulling pivot), so permuting the input permutes the decomposition.
    """
    def recurse(indices: list[int]) -> list[list[int]]:
        sub = [gens[i] for i in indices]
        d = len(span_basis(sub))
        if d == 0:
            return []
        if d == 1:
            return [[indices[0]]]
        pivot = indices[0]
        pieces: list[list[int]] = []
        for _normal, incidence in cone_facets(sub):
            if 0 in incidence:  # facet contains the pivot generator
                continue
            face = [indices[j] for j in range(len(indices)) if j in incidence]
            for tau in recurse(face):
                pieces.append(tau + [pivot])
        return pieces

    return recurse(list(range(len(gens))))
