"""Homothety covering radius: smallest delta with S inside delta*K + t.

K is a bounded H-polytope {y : Ay <= b}; for delta >= 0 the scaled copy is
exactly {y : Ay <= delta b}, so covering a finite S is the exact LP

    minimize delta  s.t.  A(s - t) <= delta b   for every s in S

over (delta, t).  The certificate records the optimum, a witness
translate, and the tight rows.  The standard n-simplex ships in a
centered full-dimensional H-form; sets given in barycentric coordinates
are mapped to it by dropping the last coordinate and recentering, which
changes nothing about covering radii (they are affine invariants).
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .complexes import (
    PLMapSpec,
    barycentric_subdivision,
    full_simplex,
    pl_value,
    realize_standard,
    realize_subdivision,
)
from .exactlp import LinearSystem, le, lp_minimize
from .rationals import Point, rat, rat_str


class UnboundedBodyError(ValueError):
    """The H-polytope has a recession direction, so homothety covering is
    meaningless."""


@dataclass(frozen=True)
class HPolytopeBody:
    """A bounded body {y : rows . y <= rhs}, checked bounded on creation."""

    ambient_dim: int
    rows: Tuple[Tuple[Point, Fraction], ...]
    origin_interior: bool = False

    def __post_init__(self):
        for coeffs, _ in self.rows:
            if len(coeffs) != self.ambient_dim:
                raise ValueError("row dimension mismatch")
        if self.origin_interior and any(rhs <= 0 for _, rhs in self.rows):
            raise ValueError(
                "origin-interior flag requires strictly positive right-hand sides"
            )
        _check_bounded(self)


def _check_bounded(body: HPolytopeBody) -> None:
    n = body.ambient_dim
    constraints = [le(coeffs, rhs) for coeffs, rhs in body.rows]
    system = LinearSystem(n, constraints)
    for i in range(n):
        for sign in (1, -1):
            objective = [Fraction(0)] * n
            objective[i] = Fraction(sign)
            out = lp_minimize(system, objective)
            if out.status == "unbounded":
                raise UnboundedBodyError(
                    f"body is unbounded along coordinate {i}"
                )
            if out.status == "infeasible":
                raise ValueError("body is empty")


def h_polytope(
    rows: Sequence[Tuple[Sequence, object]], origin_interior: bool = False
) -> HPolytopeBody:
    rows = tuple((tuple(rat(c) for c in coeffs), rat(rhs)) for coeffs, rhs in rows)
    if not rows:
        raise ValueError("need at least one row")
    return HPolytopeBody(len(rows[0][0]), rows, origin_interior)


def interval_body() -> HPolytopeBody:
    """K = [0, 1] in R^1."""
    return h_polytope([((-1,), 0), ((1,), 1)])


def standard_simplex_body(n: int) -> HPolytopeBody:
    """The standard n-simplex translated so its barycenter is the origin.

    In these coordinates y_i >= -1/(n+1) and sum y_i <= 1/(n+1); the
    origin is interior, and covering radii agree with the barycentric
    picture because translation does not change them."""
    if n < 1:
        raise ValueError("need n >= 1")
    c = Fraction(1, n + 1)
    rows = []
    for i in range(n):
        coeffs = [Fraction(0)] * n
        coeffs[i] = Fraction(-1)
        rows.append((tuple(coeffs), c))
    rows.append((tuple([Fraction(1)] * n), c))
    return HPolytopeBody(n, tuple(rows), origin_interior=True)


def barycentric_to_centered(p: Sequence) -> Point:
    """Map a barycentric point of the standard simplex (n+1 coordinates,
    nonnegative, summing to one) into the centered body's coordinates."""
    pp = tuple(rat(c) for c in p)
    n = len(pp) - 1
    if n < 1:
        raise ValueError("need at least two barycentric coordinates")
    if any(c < 0 for c in pp) or sum(pp) != 1:
        raise ValueError("not a barycentric point of the standard simplex")
    c = Fraction(1, n + 1)
    return tuple(pp[i] - c for i in range(n))


@dataclass(frozen=True)
class CoverCertificate:
    delta: Fraction
    translate: Point
    tight: Tuple[Tuple[int, int], ...]  # (point index, body row index) pairs

    def to_record(self) -> dict:
        return {
            "delta": rat_str(self.delta),
            "translate": [rat_str(c) for c in self.translate],
            "tight": [list(t) for t in self.tight],
        }


def min_cover_homothety(
    points: Sequence[Sequence], body: HPolytopeBody
) -> CoverCertificate:
    """Exact smallest delta >= 0 with every point in delta*body + t."""
    pts = [tuple(rat(c) for c in p) for p in points]
    if not pts:
        raise ValueError("need at least one point to cover")
    n = body.ambient_dim
    for p in pts:
        if len(p) != n:
            raise ValueError("point dimension mismatch")
    # variables: (delta, t_1..t_n)
    constraints = []
    for p in pts:
        for coeffs, rhs in body.rows:
            row = [-rhs] + [-c for c in coeffs]
            value = -sum(c * v for c, v in zip(coeffs, p))
            constraints.append(le(row, value))
    objective = [Fraction(1)] + [Fraction(0)] * n
    out = lp_minimize(LinearSystem(n + 1, constraints), objective)
    if out.status != "optimal":
        raise RuntimeError("cover LP must have an optimum for a bounded body")
    delta = out.witness[0]
    t = out.witness[1:]
    tight = []
    for pi, p in enumerate(pts):
        for ri, (coeffs, rhs) in enumerate(body.rows):
            lhs = sum(c * (v - tv) for c, v, tv in zip(coeffs, p, t))
            if lhs > delta * rhs:
                raise RuntimeError("cover certificate violates a row")
            if lhs == delta * rhs:
                tight.append((pi, ri))
    return CoverCertificate(delta=delta, translate=t, tight=tuple(tight))


def facet_touching_check(points_barycentric: Sequence[Sequence]) -> bool:
    """Does the set (in barycentric coordinates) touch every facet of the
    simplex, i.e. does every coordinate vanish somewhere?  When it does,
    no strictly smaller homothet can cover, and this is asserted exactly:
    min_cover_homothety >= 1."""
    pts = [tuple(rat(c) for c in p) for p in points_barycentric]
    if not pts:
        raise ValueError("need at least one point")
    width = {len(p) for p in pts}
    if len(width) != 1:
        raise ValueError("mixed dimensions")
    (w,) = width
    n = w - 1
    touches = all(any(p[i] == 0 for p in pts) for i in range(n + 1))
    if touches:
        cert = min_cover_homothety(
            [barycentric_to_centered(p) for p in pts], standard_simplex_body(n)
        )
        if cert.delta < 1:
            raise RuntimeError(
                "facet-touching set covered by a strictly smaller homothet"
            )
    return touches


# ---------------------------------------------------------------------------
# fiber-width exploration (inexact by design: sampled evidence only)
# ---------------------------------------------------------------------------

@dataclass
class FiberCell:
    cell: Tuple[int, ...]
    count: int
    certificate: CoverCertificate

    def to_record(self) -> dict:
        rec = {"cell": list(self.cell), "count": self.count}
        rec.update(self.certificate.to_record())
        return rec


@dataclass
class FiberReport:
    source_dim: int
    density: int
    label: str
    cells: List[FiberCell]

    @property
    def max_delta(self) -> Fraction:
        return max(c.certificate.delta for c in self.cells)

    def to_json_lines(self) -> str:
        lines = [
            json.dumps(
                {
                    "evidence": self.label,
                    "source_dim": self.source_dim,
                    "density": self.density,
                    "max_delta": rat_str(self.max_delta),
                },
                sort_keys=True,
            )
        ]
        lines.extend(
            json.dumps(c.to_record(), sort_keys=True) for c in self.cells
        )
        return "\n".join(lines)


def _subdivided_map(n: int, image_of_point) -> PLMapSpec:
    base = full_simplex(n)
    base_points = realize_standard(n)
    bc = barycentric_subdivision(base)
    sub_points = realize_subdivision(bc, base_points)
    images = {v: image_of_point(sub_points.point(v)) for v in bc.complex.vertices}
    return PLMapSpec(source=bc, source_points=sub_points, vertex_images=images)


def coordinate_projection_map(n: int) -> PLMapSpec:
    """First barycentric coordinate of the n-simplex, onto [0, 1].

    The projection is globally affine, so its extension over the
    subdivision is the projection itself."""
    return _subdivided_map(n, lambda p: (p[0],))


def constant_map(n: int) -> PLMapSpec:
    """Everything to a single point; the lone fiber is the whole simplex."""
    return _subdivided_map(n, lambda p: (Fraction(0),))


def grid_points_in_simplex(n: int, density: int) -> List[Point]:
    """All rational points of the standard n-simplex with denominator
    `density` (compositions of density into n+1 parts)."""
    if density < 1:
        raise ValueError("density must be positive")
    pts = []
    for cut in itertools.combinations(range(density + n), n):
        parts = []
        prev = -1
        for c in cut:
            parts.append(c - prev - 1)
            prev = c
        parts.append(density + n - 1 - prev)
        pts.append(tuple(Fraction(p, density) for p in parts))
    return pts


def fiber_width_demo(spec: PLMapSpec, density: int, label: str = "sampled fibers") -> FiberReport:
    """Sampled lower-bound evidence for the width of the map's fibers.

    Rational grid points of the source simplex are bucketed by the grid
    cell of their image; each bucket gets an exact covering-radius
    certificate against the source simplex.  This is exploratory: results
    are labeled evidence, not verified claims about true fibers."""
    m = spec.source.base.dim
    buckets: Dict[Tuple[int, ...], List[Point]] = {}
    for p in grid_points_in_simplex(m, density):
        y = pl_value(spec, p)
        cell = tuple(math.floor(c * density) for c in y)
        buckets.setdefault(cell, []).append(p)
    cells = []
    for cell in sorted(buckets):
        pts = buckets[cell]
        cert = min_cover_homothety(
            [barycentric_to_centered(p) for p in pts], standard_simplex_body(m)
        )
        cells.append(FiberCell(cell=cell, count=len(pts), certificate=cert))
    return FiberReport(source_dim=m, density=density, label=label, cells=cells)
