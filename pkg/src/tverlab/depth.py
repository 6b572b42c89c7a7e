"""Tukey depth, centerpoints, Tverberg partitions, and the prime lift.

Everything is exact: depth is n minus the size of the largest subset
strictly separable from the query point (subset enumeration plus an exact
separation LP), Tverberg partitions come from a canonical brute-force
scan with an LP feasibility check per candidate, and the reduction to a
prime number of parts duplicates each point k times, partitions the
lifted cloud, and certifies the projected common point by hull
membership over every small subset.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .exactlp import (
    VPolytope,
    common_point_with_weights,
    in_convex_hull,
    strict_separator,
)
from .rationals import Point, rat, rat_str
from .rng import SplitMix64


@dataclass(frozen=True)
class PointConfig:
    """A labeled list of exact rational points in R^d (labels 0..n-1)."""

    d: int
    points: Tuple[Point, ...]

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.d:
                raise ValueError("point dimension mismatch")

    @property
    def n(self) -> int:
        return len(self.points)

    def subset(self, labels: Sequence[int]) -> List[Point]:
        return [self.points[i] for i in labels]

    def to_json(self) -> str:
        return json.dumps(
            {"d": self.d, "points": [[rat_str(c) for c in p] for p in self.points]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "PointConfig":
        data = json.loads(text)
        return cls(
            data["d"], tuple(tuple(rat(c) for c in p) for p in data["points"])
        )


def point_config(d: int, points: Sequence[Sequence]) -> PointConfig:
    return PointConfig(d, tuple(tuple(rat(c) for c in p) for p in points))


def random_point_config(
    d: int, n: int, rng: SplitMix64, num_bound: int = 9, den_bound: int = 4
) -> PointConfig:
    return PointConfig(
        d, tuple(rng.rational_point(d, num_bound, den_bound) for _ in range(n))
    )


@dataclass(frozen=True)
class DepthCertificate:
    """x, its exact Tukey depth, and a closed halfspace
    {y : coeffs.y + offset >= 0} containing x together with exactly
    `depth` points of the configuration."""

    point: Point
    depth: int
    halfspace_coeffs: Point
    halfspace_offset: Fraction


@dataclass(frozen=True)
class TverbergCertificate:
    """A partition of the labels into blocks whose hulls share `point`,
    with exact convex weights per block writing the point."""

    blocks: Tuple[Tuple[int, ...], ...]
    point: Point
    weights: Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ReductionPlan:
    """Parameters of the prime lift: R = k(r-1)+1 prime, each point taken
    k times, so an R-part partition upstairs forces the depth bound for r
    parts downstairs."""

    r: int
    d: int
    k: int
    R: int
    m: int
    M: int


def check_depth_certificate(cert: DepthCertificate, config: PointConfig) -> bool:
    lam = lambda p: sum(c * v for c, v in zip(cert.halfspace_coeffs, p))
    if lam(cert.point) + cert.halfspace_offset < 0:
        return False
    inside = sum(1 for p in config.points if lam(p) + cert.halfspace_offset >= 0)
    return inside == cert.depth


def tukey_depth(x: Sequence, config: PointConfig) -> DepthCertificate:
    """Exact halfspace depth of x in the configuration.

    Scans subsets by decreasing size for the largest one strictly separable
    from x; the separating functional, flipped, is the witness halfspace.
    Exponential in n, which is the intended regime (n <= 14 or so).
    """
    xx = tuple(rat(c) for c in x)
    n = config.n
    labels = range(n)
    for size in range(n, 0, -1):
        for subset in itertools.combinations(labels, size):
            sep = strict_separator(config.subset(subset), xx)
            if sep is not None:
                a, a0, _ = sep
                cert = DepthCertificate(
                    point=xx,
                    depth=n - size,
                    halfspace_coeffs=tuple(-c for c in a),
                    halfspace_offset=-a0,
                )
                if not check_depth_certificate(cert, config):
                    raise RuntimeError("depth certificate failed verification")
                return cert
    cert = DepthCertificate(
        point=xx,
        depth=n,
        halfspace_coeffs=tuple([Fraction(0)] * config.d),
        halfspace_offset=Fraction(1),
    )
    if not check_depth_certificate(cert, config):
        raise RuntimeError("depth certificate failed verification")
    return cert


def hull_membership_depth(x: Sequence, config: PointConfig, q: int) -> bool:
    """Is x in the convex hull of every q-point subset of the configuration?

    Equivalent to tukey_depth(x) >= n - q + 1; this is the Hahn-Banach
    restatement that the tests exercise from both sides.
    """
    if not 1 <= q <= config.n:
        raise ValueError("subset size out of range")
    xx = tuple(rat(c) for c in x)
    for subset in itertools.combinations(range(config.n), q):
        if not in_convex_hull(xx, config.subset(subset)).inside:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical partition enumeration
# ---------------------------------------------------------------------------

def iter_partitions(n: int, r: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """All partitions of 0..n-1 into exactly r nonempty blocks, in canonical
    (restricted-growth-string, lexicographic) order.

    Block lists come out sorted by smallest element, which the RGS encoding
    guarantees."""
    if r < 1 or r > n:
        return
    a = [0] * n

    def rec(i: int, used: int):
        if i == n:
            if used == r:
                blocks: List[List[int]] = [[] for _ in range(r)]
                for idx, b in enumerate(a):
                    blocks[b].append(idx)
                yield tuple(tuple(b) for b in blocks)
            return
        remaining = n - i
        for b in range(min(used + 1, r)):
            # feasibility prune: can we still reach exactly r blocks?
            new_used = used + (1 if b == used else 0)
            if new_used + (remaining - 1) >= r:
                a[i] = b
                yield from rec(i + 1, new_used)

    yield from rec(1, 1) if n else iter(())


def _bbox_reject(blocks_points: Sequence[Sequence[Point]], d: int) -> bool:
    """Cheap necessary condition: per coordinate, the blocks' ranges must
    share a point."""
    for i in range(d):
        lo = max(min(p[i] for p in block) for block in blocks_points)
        hi = min(max(p[i] for p in block) for block in blocks_points)
        if lo > hi:
            return True
    return False


def tverberg_partition(config: PointConfig, r: int) -> Optional[TverbergCertificate]:
    """First (canonical order) partition into r blocks whose hulls intersect.

    Exhaustive over set partitions; each candidate is screened by a
    bounding-box test and settled by an exact LP.  Returns None when no
    partition works (possible below the guaranteed size)."""
    if r < 1:
        raise ValueError("need at least one block")
    if r > config.n:
        return None
    d = config.d
    for blocks in iter_partitions(config.n, r):
        pts = [config.subset(b) for b in blocks]
        if _bbox_reject(pts, d):
            continue
        polys = [VPolytope(d, tuple(p)) for p in pts]
        found = common_point_with_weights(polys)
        if found is not None:
            point, weights = found
            return TverbergCertificate(blocks=blocks, point=point, weights=weights)
    return None


def check_tverberg_certificate(cert: TverbergCertificate, config: PointConfig) -> bool:
    labels = sorted(l for b in cert.blocks for l in b)
    if labels != list(range(config.n)):
        return False
    for block, ws in zip(cert.blocks, cert.weights):
        if len(block) != len(ws) or any(w < 0 for w in ws) or sum(ws) != 1:
            return False
        combo = tuple(
            sum(w * config.points[l][i] for w, l in zip(ws, block))
            for i in range(config.d)
        )
        if combo != cert.point:
            return False
    return True


def guaranteed_size(d: int, r: int) -> int:
    return (d + 1) * (r - 1) + 1


def centerpoint(config: PointConfig, r: int) -> Optional[DepthCertificate]:
    """A point of Tukey depth >= r, taken as the common point of a Tverberg
    partition.  None only if the partition search fails, which cannot
    happen at n >= (d+1)(r-1)+1."""
    cert = tverberg_partition(config, r)
    if cert is None:
        return None
    depth = tukey_depth(cert.point, config)
    if depth.depth < r:
        raise RuntimeError(
            "common point of a Tverberg partition must have depth >= r"
        )
    return depth


# ---------------------------------------------------------------------------
# the prime lift
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def reduction_plan(r: int, d: int) -> ReductionPlan:
    """Smallest k >= 1 making R = k(r-1)+1 prime, with the bookkeeping
    identities the counting argument rests on."""
    if r < 2:
        raise ValueError("reduction needs r >= 2")
    if d < 1:
        raise ValueError("dimension must be positive")
    k = 1
    while not _is_prime(k * (r - 1) + 1):
        k += 1
    R = k * (r - 1) + 1
    m = (d + 1) * (r - 1)
    M = (R - 1) * (d + 1) + k - 1
    plan = ReductionPlan(r=r, d=d, k=k, R=R, m=m, M=M)
    if M + 1 != k * (m + 1):
        raise RuntimeError("lift size identity failed")
    if k * (r - 1) * d + k + R != M + 2:
        raise RuntimeError("counting identity failed")
    return plan


def _lifted_partition_1d(
    points: Sequence[Point], R: int
) -> Tuple[Tuple[int, ...], ...]:
    """An R-part Tverberg partition on a line: pair the i-th smallest with
    the i-th largest for i < R, and pool the middle.  Every block's hull
    contains the median, so the hulls intersect."""
    order = sorted(range(len(points)), key=lambda i: (points[i][0], i))
    blocks = []
    for i in range(R - 1):
        blocks.append(tuple(sorted((order[i], order[len(points) - 1 - i]))))
    middle = tuple(sorted(order[R - 1: len(points) - (R - 1)]))
    blocks.append(middle)
    return tuple(sorted(blocks))


def reduce_central_from_tverberg(config: PointConfig, r: int) -> DepthCertificate:
    """Depth >= r certificate via an R-part partition of the k-fold lift.

    Duplicates each point k times (distinct labels, identical coordinates),
    finds a Tverberg partition of the lifted cloud into R = k(r-1)+1 prime
    parts, and projects: the counting argument forces a whole block inside
    the lift of every subset of d(r-1)+1 original points, so the common
    point lies in all those hulls.  That membership is re-verified
    exhaustively before the depth certificate is computed."""
    d = config.d
    plan = reduction_plan(r, d)
    if config.n != plan.m + 1:
        raise ValueError(
            f"reduction expects exactly m+1 = {plan.m + 1} points, got {config.n}"
        )
    if plan.k == 1:
        cert = tverberg_partition(config, r)
        if cert is None:
            raise RuntimeError("partition search failed at the guaranteed size")
        x = cert.point
    else:
        lifted = [config.points[i // plan.k] for i in range(plan.k * config.n)]
        if d == 1:
            blocks = _lifted_partition_1d(lifted, plan.R)
        else:
            lifted_config = PointConfig(d, tuple(lifted))
            found = tverberg_partition(lifted_config, plan.R)
            if found is None:
                raise RuntimeError("lifted partition search failed")
            blocks = found.blocks
        polys = [VPolytope(d, tuple(lifted[i] for i in b)) for b in blocks]
        found_common = common_point_with_weights(polys)
        if found_common is None:
            raise RuntimeError("lifted blocks do not share a point")
        x = found_common[0]
    q = d * (r - 1) + 1
    if not hull_membership_depth(x, config, q):
        raise RuntimeError(
            "projected point misses a small hull; the counting argument failed"
        )
    cert = tukey_depth(x, config)
    if cert.depth < r:
        raise RuntimeError("reduced point has depth below r")
    return cert
