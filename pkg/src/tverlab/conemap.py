"""The cone-over-skeleton map and its disjoint-face intersection checks.

For m = (d+1)r - 2 the map f on the subdivided m-simplex that fixes the
barycenters of faces of dimension <= d-1 and sends every higher
barycenter to the global barycenter c has the property that among any r
pairwise disjoint faces, at least one (any one of dimension <= d-1, and
by counting there always is one) has image disjoint from the images of
the others.  This module builds f exactly, enumerates all disjoint
r-tuples, and verifies the isolation claim geometrically (LP emptiness
of polytope pairs) against the combinatorial criterion; the two must
agree.

One dimension higher, at m = (d+1)r - 1, the same map admits r disjoint
faces with intersecting images (all of dimension >= d, every image owns
c); the probe finds such a witness by brute force.
"""
from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .complexes import (
    BarycentricComplex,
    PLMapSpec,
    Realization,
    SimplicialComplex,
    Simplex,
    barycentric_subdivision,
    cone,
    full_simplex,
    pl_image_of_face,
    realize_standard,
    realize_subdivision,
    skeleton,
    standard_center,
)
from .exactlp import VPolytope, common_point_with_weights, lp_feasible, _common_point_system
from .rationals import Point, rat_str


class IsolationFailure(AssertionError):
    """A disjoint tuple whose predicted-isolated face is not isolated."""


@dataclass
class CounterexampleSpec:
    """The construction data at m = (d+1)r - 2 (or the probe's m + 1)."""

    d: int
    r: int
    m: int
    base: SimplicialComplex
    subdivision: BarycentricComplex
    cone_complex: SimplicialComplex
    cone_points: Realization
    apex: int
    apex_point: Point
    map_spec: PLMapSpec


def _build_map(d: int, r: int, m: int) -> CounterexampleSpec:
    base = full_simplex(m)
    base_points = realize_standard(m)
    skel = skeleton(base, d - 1)
    apex = m + 1
    W = cone(skel, apex)
    c = standard_center(m)
    cone_points = Realization(
        m + 1, {**base_points.points, apex: c}
    )
    bc = barycentric_subdivision(base)
    sub_points = realize_subdivision(bc, base_points)
    images: Dict[int, Point] = {}
    for v, face in bc.face_of_vertex.items():
        if len(face) - 1 <= d - 1:
            images[v] = sub_points.point(v)
        else:
            images[v] = c
    spec = PLMapSpec(
        source=bc,
        source_points=sub_points,
        vertex_images=images,
        target=W,
        target_points=cone_points,
    )
    return CounterexampleSpec(
        d=d,
        r=r,
        m=m,
        base=base,
        subdivision=bc,
        cone_complex=W,
        cone_points=cone_points,
        apex=apex,
        apex_point=c,
        map_spec=spec,
    )


def build_counterexample(d: int, r: int) -> CounterexampleSpec:
    """The construction at the critical dimension m = (d+1)r - 2."""
    if d < 1 or r < 2:
        raise ValueError("need d >= 1 and r >= 2")
    return _build_map(d, r, (d + 1) * r - 2)


def enumerate_disjoint_tuples(m: int, r: int) -> List[Tuple[Simplex, ...]]:
    """Unordered r-tuples of pairwise disjoint nonempty faces of the
    m-simplex, canonical order (faces ordered by dimension then lex)."""
    faces = []
    for k in range(1, m + 2):
        faces.extend(itertools.combinations(range(m + 1), k))
    faces.sort(key=lambda f: (len(f), f))
    out: List[Tuple[Simplex, ...]] = []

    def rec(start: int, chosen: List[Simplex], used: set):
        if len(chosen) == r:
            out.append(tuple(chosen))
            return
        for idx in range(start, len(faces)):
            f = faces[idx]
            if used.isdisjoint(f):
                chosen.append(f)
                rec(idx + 1, chosen, used | set(f))
                chosen.pop()

    rec(0, [], set())
    return out


def _pair_disjoint(P: VPolytope, Q: VPolytope):
    """None if the polytopes meet, else the Farkas certificate of emptiness."""
    system, _ = _common_point_system([P, Q])
    out = lp_feasible(system)
    if out.status == "optimal":
        return None
    return out.farkas


def _digest(farkas) -> str:
    payload = json.dumps([rat_str(v) for v in farkas.multipliers]).encode()
    return hashlib.sha256(payload).hexdigest()[:12]


@dataclass
class IsolationRow:
    faces: Tuple[Simplex, ...]
    isolated_index: int
    small_indices: Tuple[int, ...]
    pair_checks: int
    certificate_digests: Tuple[str, ...]

    def to_record(self) -> dict:
        return {
            "faces": [list(f) for f in self.faces],
            "isolated_index": self.isolated_index,
            "small_indices": list(self.small_indices),
            "pair_checks": self.pair_checks,
            "certificate_digests": list(self.certificate_digests),
        }


@dataclass
class IsolationReport:
    d: int
    r: int
    m: int
    rows: List[IsolationRow]

    def to_json_lines(self) -> str:
        return "\n".join(
            json.dumps(row.to_record(), sort_keys=True) for row in self.rows
        )


def verify_isolation(spec: CounterexampleSpec) -> IsolationReport:
    """Check every disjoint r-tuple for an isolated face, two ways.

    Combinatorially, any face of dimension <= d-1 in the tuple is isolated
    (it maps to itself inside the boundary, which the other images only
    meet inside their own faces).  Geometrically, isolation of each such
    face is established by exact LP emptiness against every polytope of
    every other image.  A tuple where the two criteria disagree raises
    IsolationFailure with the offending tuple."""
    tuples = enumerate_disjoint_tuples(spec.m, spec.r)
    image_cache: Dict[Simplex, List[VPolytope]] = {}

    def image(f: Simplex) -> List[VPolytope]:
        if f not in image_cache:
            image_cache[f] = pl_image_of_face(spec.map_spec, f)
        return image_cache[f]

    rows = []
    for faces in tuples:
        small = tuple(
            i for i, f in enumerate(faces) if len(f) - 1 <= spec.d - 1
        )
        if not small:
            raise IsolationFailure(
                f"tuple {faces} has no face of dimension <= {spec.d - 1}; "
                "the counting bound is violated"
            )
        digests = []
        checks = 0
        for i in small:
            for j, g in enumerate(faces):
                if j == i:
                    continue
                for P in image(faces[i]):
                    for Q in image(g):
                        cert = _pair_disjoint(P, Q)
                        checks += 1
                        if cert is None:
                            raise IsolationFailure(
                                f"tuple {faces}: predicted-isolated face "
                                f"{faces[i]} meets the image of {g}"
                            )
                        digests.append(_digest(cert))
        rows.append(
            IsolationRow(
                faces=faces,
                isolated_index=small[0],
                small_indices=small,
                pair_checks=checks,
                certificate_digests=tuple(digests),
            )
        )
    return IsolationReport(d=spec.d, r=spec.r, m=spec.m, rows=rows)


@dataclass
class ProbeResult:
    found: bool
    faces: Optional[Tuple[Simplex, ...]] = None
    point: Optional[Point] = None
    tuples_scanned: int = 0

    def to_record(self) -> dict:
        return {
            "found": self.found,
            "faces": None if self.faces is None else [list(f) for f in self.faces],
            "point": None if self.point is None else [rat_str(c) for c in self.point],
            "tuples_scanned": self.tuples_scanned,
        }


def probe_tverberg_plus_one(d: int, r: int) -> ProbeResult:
    """Search one dimension above the counterexample, m = (d+1)r - 1, for r
    disjoint faces whose images share a point.

    Tuples containing a face of dimension <= d-1 cannot succeed (that
    image is the face itself, and the other images only meet the boundary
    inside their own disjoint faces), so the scan skips them; remaining
    tuples are settled by LP over one polytope chosen from each image."""
    if d < 1 or r < 2:
        raise ValueError("need d >= 1 and r >= 2")
    m = (d + 1) * r - 1
    spec = _build_map(d, r, m)
    image_cache: Dict[Simplex, List[VPolytope]] = {}

    def image(f: Simplex) -> List[VPolytope]:
        if f not in image_cache:
            image_cache[f] = pl_image_of_face(spec.map_spec, f)
        return image_cache[f]

    scanned = 0
    for faces in enumerate_disjoint_tuples(m, r):
        scanned += 1
        if any(len(f) - 1 <= d - 1 for f in faces):
            continue
        for choice in itertools.product(*(image(f) for f in faces)):
            found = common_point_with_weights(list(choice))
            if found is not None:
                return ProbeResult(
                    found=True,
                    faces=faces,
                    point=found[0],
                    tuples_scanned=scanned,
                )
    return ProbeResult(found=False, tuples_scanned=scanned)
