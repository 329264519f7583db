"""Finite lattice-sum estimator for the Segre-class value at positive X.

The estimator at refinement m sums the kernel

    m * n! * X_1...X_n / (m + a_1 X_1 + ... + a_n X_n)^(n+1)

over lattice points a >= 1 with a/m inside the Newton region. Summing over
the region rather than over its complement keeps the index set finite
whenever the region is bounded; the full-orthant sum tends to 1, so the two
formulations agree in the m -> infinity limit and the finite-m difference is
folded into the reported bias. Points on the diagram boundary are included
(the region is a closure).

Along axes where the region is unbounded the sum is truncated at a cutoff
(default 10*m^2, far below the leading bias). In two variables the rows and
columns that extend to the cutoff are summed through exact partial-fraction
identities for sums of inverse cubes (see polygamma.sum_inverse_cubes), so
the cost stays O(m^2) regardless of the cutoff.

Two membership backends exist: "membership_based" evaluates the facet
inequalities of the region; "lct_based" rebuilds, for every lattice point,
the cross-stretched ideal and compares m against the product times its log
canonical threshold. They must index the same set away from points with
some a_i = 1; mode_agreement_report measures exactly that.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import CutoffTooSmall, NonPositiveParameter
from .ideals import MonomialIdeal
from .lct import region_condition_via_lct
from .polyhedron import NewtonPolyhedron, newton_polyhedron

MEMBERSHIP = "membership_based"
LCT_BASED = "lct_based"
EXACT = "exact_rational"
FLOAT64 = "float64"

_CHUNK = 1 << 20


@dataclass
class EstimatorConfig:
    m: int
    X: tuple
    condition_mode: str = MEMBERSHIP
    ray_cutoff: int | None = None
    arithmetic: str = FLOAT64
    tail_tolerance: float | None = None
    threads: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        self.X = tuple(self.X)
        if any((x <= 0) for x in self.X):
            raise NonPositiveParameter(f"estimator parameters must be positive: {self.X}")
        if self.condition_mode not in (MEMBERSHIP, LCT_BASED):
            raise ValueError(f"unknown condition mode {self.condition_mode!r}")
        if self.arithmetic not in (EXACT, FLOAT64):
            raise ValueError(f"unknown arithmetic {self.arithmetic!r}")
        if self.ray_cutoff is None:
            self.ray_cutoff = 10 * self.m * self.m
        if self.ray_cutoff < self.m:
            raise ValueError("ray_cutoff must be at least m")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    estimate: float
    exact_value: float
    abs_error: float
    elapsed_time: float


@dataclass(frozen=True)
class ModeAgreement:
    m: int
    points_covered: int
    lct_evaluations: int
    interior_mismatches: int
    edge_mismatches: int
    spot_checks: int


def kernel_term(a: Sequence[int], m: int, X: Sequence):
    """One summand of the estimator; exact when X is rational, float otherwise."""
    n = len(a)
    if len(X) != n:
        raise ValueError("a and X must have the same length")
    if m < 1 or any(ai < 1 for ai in a):
        raise ValueError("kernel is defined for m >= 1 and a_i >= 1")
    if any(x <= 0 for x in X):
        raise NonPositiveParameter(f"kernel parameters must be positive: {tuple(X)}")
    exact = all(isinstance(x, (Fraction, int)) for x in X)
    if exact:
        xs = [Fraction(x) for x in X]
        num = m * math.factorial(n) * math.prod(xs)
        den = (m + sum(ai * x for ai, x in zip(a, xs))) ** (n + 1)
        return num / den
    num = m * math.factorial(n) * math.prod(float(x) for x in X)
    den = (m + sum(ai * float(x) for ai, x in zip(a, X))) ** (n + 1)
    return num / den


# ---------------------------------------------------------------------------
# facet geometry helpers (integer form)
# ---------------------------------------------------------------------------

def _int_facets(poly: NewtonPolyhedron) -> tuple[np.ndarray, np.ndarray]:
    """Diagram facets as integer arrays (W, C): member iff some W.a <= C*m."""
    W = np.array([[int(x) for x in f.normal] for f in poly.diagram_facets],
                 dtype=np.int64)
    C = np.array([int(f.offset) for f in poly.diagram_facets], dtype=np.int64)
    return W, C


def _axis_bound(W: np.ndarray, C: np.ndarray, axis: int, m: int) -> int | None:
    """Largest a_axis of any member point, or None when the axis is unbounded."""
    if np.any(W[:, axis] == 0):
        return None
    return max(int(C[f]) * m // int(W[f, axis]) for f in range(W.shape[0]))


def _bounded_thresholds(W: np.ndarray, C: np.ndarray, m: int) -> list[int]:
    """Per axis: largest coordinate reachable through facets that see the axis.

    Beyond this threshold a member point can only satisfy facets whose normal
    vanishes on the axis, i.e. it lies in a full row/column of the region.
    """
    out = []
    for axis in range(W.shape[1]):
        vals = [int(C[f]) * m // int(W[f, axis])
                for f in range(W.shape[0]) if W[f, axis] > 0]
        out.append(max(vals) if vals else 0)
    return out


def _box_limits(poly: NewtonPolyhedron, m: int, cutoff: int) -> list[int]:
    W, C = _int_facets(poly)
    limits = []
    for axis in range(poly.n):
        bound = _axis_bound(W, C, axis, m)
        limits.append(min(bound, cutoff) if bound is not None else cutoff)
    return limits


def _member_mask(W: np.ndarray, C: np.ndarray, m: int,
                 grids: Sequence[np.ndarray]) -> np.ndarray:
    """Boolean mask of region membership on a meshgrid of lattice points."""
    mask = None
    for f in range(W.shape[0]):
        value = np.zeros_like(grids[0], dtype=np.int64)
        for axis, g in enumerate(grids):
            if W[f, axis]:
                value = value + W[f, axis] * g
        this = value <= C[f] * m
        mask = this if mask is None else (mask | this)
    return mask


# ---------------------------------------------------------------------------
# the estimator
# ---------------------------------------------------------------------------

def estimate(ideal: MonomialIdeal, cfg: EstimatorConfig):
    """Finite-m estimator of the Segre-class value at cfg.X.

    Exact rational output in exact_rational mode (the truncated sum itself),
    float in float64 mode.
    """
    poly = newton_polyhedron(ideal)
    if cfg.condition_mode == LCT_BASED:
        return _estimate_bruteforce(ideal, poly, cfg)
    if cfg.tail_tolerance is not None:
        _check_tail(poly, cfg)
    if cfg.arithmetic == EXACT:
        return _estimate_exact(poly, cfg)
    if poly.n == 2:
        return _estimate_float_2d(poly, cfg)
    return _estimate_float_box(poly, cfg)


def _check_tail(poly: NewtonPolyhedron, cfg: EstimatorConfig) -> None:
    """Crude rigorous bound for the part beyond the cutoff on unbounded axes."""
    W, C = _int_facets(poly)
    m, n = cfg.m, poly.n
    xs = [float(x) for x in cfg.X]
    limits = _box_limits(poly, m, cfg.ray_cutoff)
    total = 0.0
    for axis in range(n):
        if _axis_bound(W, C, axis, m) is not None:
            continue
        cross = math.prod(limits[i] for i in range(n) if i != axis)
        shift = sum(xs[i] for i in range(n) if i != axis)
        bound = (cross * m * math.factorial(n) * math.prod(xs)
                 / (n * xs[axis] * (m + cfg.ray_cutoff * xs[axis] + shift) ** n))
        total += bound
    if total > cfg.tail_tolerance:
        raise CutoffTooSmall(
            f"estimated tail {total:.3e} beyond cutoff {cfg.ray_cutoff} exceeds "
            f"tolerance {cfg.tail_tolerance:.3e}")


def _chunks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split [lo, hi] into at most `parts` contiguous integer ranges."""
    width = hi - lo + 1
    if width <= 0:
        return []
    parts = min(parts, width)
    step = -(-width // parts)
    return [(a, min(a + step - 1, hi)) for a in range(lo, hi + 1, step)]


def _masked_box_sum(W: np.ndarray, C: np.ndarray, m: int, xs: list[float],
                    limits: Sequence[int], threads: int) -> float:
    """Masked kernel sum over the integer box [1, limits_1] x ... (float64)."""
    n = len(limits)
    if any(limit < 1 for limit in limits):
        return 0.0
    scale = m * math.factorial(n) * math.prod(xs)
    rest = math.prod(limits[1:]) if n > 1 else 1
    slab_rows = max(1, _CHUNK // max(rest, 1))

    def slab_sum(bounds: tuple[int, int]) -> float:
        lo, hi = bounds
        total = 0.0
        for start in range(lo, hi + 1, slab_rows):
            stop = min(start + slab_rows - 1, hi)
            axes = [np.arange(start, stop + 1, dtype=np.int64)]
            axes += [np.arange(1, limits[i] + 1, dtype=np.int64) for i in range(1, n)]
            grids = np.meshgrid(*axes, indexing="ij")
            mask = _member_mask(W, C, m, grids)
            den = np.full(grids[0].shape, float(m))
            for axis, g in enumerate(grids):
                den += g * xs[axis]
            total += float(np.sum((scale / den ** (n + 1))[mask]))
        return total

    slabs = _chunks(1, limits[0], threads)
    if threads == 1 or len(slabs) <= 1:
        partials = [slab_sum(s) for s in slabs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(slab_sum, slabs))
    return math.fsum(partials)


def _estimate_float_box(poly: NewtonPolyhedron, cfg: EstimatorConfig) -> float:
    """Plain masked sum over the truncated bounding box (any n)."""
    W, C = _int_facets(poly)
    xs = [float(x) for x in cfg.X]
    limits = _box_limits(poly, cfg.m, cfg.ray_cutoff)
    return _masked_box_sum(W, C, cfg.m, xs, limits, cfg.threads)


def _estimate_float_2d(poly: NewtonPolyhedron, cfg: EstimatorConfig) -> float:
    """Bounded box part plus closed-form row/column tails to the cutoff.

    Beyond the per-axis thresholds only facets blind to that axis can hold,
    so membership there is a full row (or column) and the inner sums are
    partial sums of inverse cubes with a closed form. The result is exactly
    the truncated lattice sum, just evaluated without enumerating the tails.
    """
    from .polygamma import sum_inverse_cubes

    W, C = _int_facets(poly)
    m = cfg.m
    x1, x2 = (float(x) for x in cfg.X)
    cut = cfg.ray_cutoff
    r1, r2 = _bounded_thresholds(W, C, m)
    b1, b2 = min(r1, cut), min(r2, cut)
    parts = [_masked_box_sum(W, C, m, [x1, x2], [b1, b2], cfg.threads)]

    scale = 2.0 * m * x1 * x2

    # rows that stay members for every a1: facets with w1 = 0 give a2 <= c*m/w2
    full_rows = [int(C[f]) * m // int(W[f, 1])
                 for f in range(W.shape[0]) if W[f, 0] == 0]
    if full_rows and b1 < cut:
        top = min(max(full_rows), b2)
        for a2 in range(1, top + 1):
            y = (m + a2 * x2) / x1
            parts.append(scale / x1 ** 3 * sum_inverse_cubes(b1 + 1, cut, y))

    full_cols = [int(C[f]) * m // int(W[f, 0])
                 for f in range(W.shape[0]) if W[f, 1] == 0]
    if full_cols and b2 < cut:
        top = min(max(full_cols), b1)
        for a1 in range(1, top + 1):
            y = (m + a1 * x1) / x2
            parts.append(scale / x2 ** 3 * sum_inverse_cubes(b2 + 1, cut, y))

    return math.fsum(parts)


def _estimate_exact(poly: NewtonPolyhedron, cfg: EstimatorConfig) -> Fraction:
    """Exact rational value of the truncated sum.

    Denominators (m + a.X)^(n+1) are collected by their integer value
    L*m + a.(L*X) with L the common denominator of X, so the exact sum runs
    over distinct denominator values instead of over lattice points.
    """
    if not all(isinstance(x, (Fraction, int)) for x in cfg.X):
        raise ValueError("exact_rational arithmetic needs rational X")
    W, C = _int_facets(poly)
    m, n = cfg.m, poly.n
    xs = [Fraction(x) for x in cfg.X]
    L = 1
    for x in xs:
        L = L * x.denominator // math.gcd(L, x.denominator)
    lx = [int(x * L) for x in xs]
    limits = _box_limits(poly, m, cfg.ray_cutoff)
    if any(limit < 1 for limit in limits):
        return Fraction(0)

    rest = math.prod(limits[1:]) if n > 1 else 1
    slab_rows = max(1, _CHUNK // max(rest, 1))
    counts: dict[int, int] = {}
    for start in range(1, limits[0] + 1, slab_rows):
        stop = min(start + slab_rows - 1, limits[0])
        axes = [np.arange(start, stop + 1, dtype=np.int64)]
        axes += [np.arange(1, limits[i] + 1, dtype=np.int64) for i in range(1, n)]
        grids = np.meshgrid(*axes, indexing="ij")
        mask = _member_mask(W, C, m, grids)
        k = np.full(grids[0].shape, L * m, dtype=np.int64)
        for axis, g in enumerate(grids):
            k = k + lx[axis] * g
        values, reps = np.unique(k[mask], return_counts=True)
        for v, c in zip(values.tolist(), reps.tolist()):
            counts[v] = counts.get(v, 0) + c

    front = Fraction(m * math.factorial(n) * math.prod(xs)) * Fraction(L) ** (n + 1)
    total = Fraction(0)
    for k in sorted(counts):
        total += Fraction(counts[k], k ** (n + 1))
    return front * total


def _estimate_bruteforce(ideal: MonomialIdeal, poly: NewtonPolyhedron,
                         cfg: EstimatorConfig):
    """Literal per-point pipeline for lct_based mode (slow; a stress test).

    Membership of each lattice point is decided by rebuilding the
    cross-stretched ideal and comparing its threshold against m.
    """
    m, n = cfg.m, poly.n
    limits = _box_limits(poly, m, cfg.ray_cutoff)
    points = math.prod(max(limit, 0) for limit in limits)
    if points > 200_000:
        raise ValueError(
            f"lct_based mode would rebuild {points} stretched ideals; lower m "
            "or ray_cutoff, or use membership_based mode")
    exact = cfg.arithmetic == EXACT
    total = Fraction(0) if exact else 0.0
    xs = [Fraction(x) for x in cfg.X] if exact else [float(x) for x in cfg.X]
    for a in _iter_box(limits):
        if region_condition_via_lct(ideal, a, m):
            total += kernel_term(a, m, xs)
    return total


def _iter_box(limits: Sequence[int]):
    if any(limit < 1 for limit in limits):
        return
    idx = [1] * len(limits)
    while True:
        yield tuple(idx)
        axis = len(limits) - 1
        while axis >= 0:
            idx[axis] += 1
            if idx[axis] <= limits[axis]:
                break
            idx[axis] = 1
            axis -= 1
        if axis < 0:
            return


def convergence_report(ideal: MonomialIdeal, X: Sequence, m_list: Sequence[int],
                       condition_mode: str = MEMBERSHIP,
                       arithmetic: str = FLOAT64,
                       ray_cutoff: Callable[[int], int] | None = None,
                       threads: int = 1) -> list[ConvergenceRow]:
    """Estimates along increasing m with the exact value and absolute errors."""
    if list(m_list) != sorted(m_list):
        raise ValueError("m_list must be increasing")
    from .segre import evaluate, segre_class

    result = segre_class(ideal, ambient_dim=max(ideal.n, 1))
    exact_X = [Fraction(x) if isinstance(x, (Fraction, int)) else x for x in X]
    exact_value = float(evaluate(result, exact_X))
    rows = []
    for m in m_list:
        cfg = EstimatorConfig(
            m=m, X=tuple(X), condition_mode=condition_mode,
            ray_cutoff=None if ray_cutoff is None else ray_cutoff(m),
            arithmetic=arithmetic, threads=threads)
        start = time.perf_counter()
        value = float(estimate(ideal, cfg))
        elapsed = time.perf_counter() - start
        rows.append(ConvergenceRow(
            m=m, estimate=value, exact_value=exact_value,
            abs_error=abs(value - exact_value), elapsed_time=elapsed))
    return rows


# ---------------------------------------------------------------------------
# membership-mode vs lct-mode agreement
# ---------------------------------------------------------------------------

def _membership_threshold(W: np.ndarray, C: np.ndarray, m: int,
                          a2: int, b1: int) -> int:
    """Largest a1 <= b1 with (a1, a2) a member, from the facet inequalities."""
    best = 0
    for f in range(W.shape[0]):
        w1, w2 = int(W[f, 0]), int(W[f, 1])
        c = int(C[f]) * m
        if w1 == 0:
            if w2 * a2 <= c:
                return b1
        else:
            best = max(best, (c - w2 * a2) // w1)
    return min(max(best, 0), b1)


def _lct_threshold(ideal: MonomialIdeal, m: int, a2: int, b1: int,
                   guess: int, counter: list[int]) -> int:
    """Largest a1 <= b1 satisfying the threshold-side membership test.

    The predicate is down-closed in a1 (scaling a point outward along an
    axis can only leave the region), so a bracketed search is sound. Starts
    from the previous row's threshold, which makes consecutive rows cheap.
    """
    def pred(a1: int) -> bool:
        if a1 < 1:
            return True
        if a1 > b1:
            return False
        counter[0] += 1
        return region_condition_via_lct(ideal, (a1, a2), m)

    lo = min(max(guess, 0), b1)
    if pred(lo):
        step = 1
        hi = lo + 1
        while pred(hi):
            lo = hi
            step *= 2
            hi = min(hi + step, b1 + 1)
            if lo == b1:
                return b1
    else:
        step = 1
        hi = lo
        lo = max(hi - 1, 0)
        while not pred(lo):
            hi = lo
            step *= 2
            lo = max(lo - step, 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return lo


def mode_agreement_report(ideal: MonomialIdeal, m: int,
                          scan_cutoff: int | None = None,
                          spot_checks: int = 50,
                          rng_seed: int = 0) -> ModeAgreement:
    """Compare the membership and lct index sets over the truncated box.

    For two variables the sets are row-wise intervals [1, T(a_2)], so the
    comparison reduces to comparing thresholds per row; mismatched points
    are classified as interior (all a_i > 1) or edge (some a_i = 1).
    Additionally spot-checks random points through both literal pipelines.
    """
    import random

    poly = newton_polyhedron(ideal)
    W, C = _int_facets(poly)
    cutoff = scan_cutoff if scan_cutoff is not None else 4 * m
    limits = _box_limits(poly, m, cutoff)
    counter = [0]
    interior = 0
    edge = 0

    from .polyhedron import in_newton_region

    def member(a: tuple[int, ...]) -> bool:
        return in_newton_region(poly, tuple(Fraction(ai, m) for ai in a))

    if poly.n == 2:
        b1, b2 = limits
        guess = b1
        for a2 in range(1, b2 + 1):
            t_mem = _membership_threshold(W, C, m, a2, b1)
            t_lct = _lct_threshold(ideal, m, a2, b1, guess, counter)
            guess = t_lct
            if t_mem != t_lct:
                lo, hi = sorted((t_mem, t_lct))
                for a1 in range(lo + 1, hi + 1):
                    if a1 == 1 or a2 == 1:
                        edge += 1
                    else:
                        interior += 1
        covered = b1 * b2
    else:
        covered = 0
        for a in _iter_box(limits):
            covered += 1
            counter[0] += 1
            if member(a) != region_condition_via_lct(ideal, a, m):
                if any(ai == 1 for ai in a):
                    edge += 1
                else:
                    interior += 1

    rng = random.Random(rng_seed)
    checked = 0
    if all(limit >= 1 for limit in limits):
        for _ in range(spot_checks):
            a = tuple(rng.randint(1, limit) for limit in limits)
            counter[0] += 1
            checked += 1
            if member(a) != region_condition_via_lct(ideal, a, m):
                if any(ai == 1 for ai in a):
                    edge += 1
                else:
                    interior += 1

    return ModeAgreement(
        m=m, points_covered=covered, lct_evaluations=counter[0],
        interior_mismatches=interior, edge_mismatches=edge,
        spot_checks=checked)
