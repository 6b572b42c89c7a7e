#!/usr/bin/env python3
# How large a homothet of the simplex does a point set need?
#
# The covering radius delta* is an exact LP value.  A set touching every
# facet of the simplex forces delta* >= 1: shrinking is impossible once
# every coordinate vanishes somewhere in the set.

from fractions import Fraction as F

from tverlab import (
    barycentric_to_centered,
    constant_map,
    coordinate_projection_map,
    facet_touching_check,
    fiber_width_demo,
    interval_body,
    min_cover_homothety,
    standard_simplex_body,
)

# two points in the unit interval: the smallest covering interval
cert = min_cover_homothety([(F(1, 4),), (F(3, 4),)], interval_body())
print(f"[1/4, 3/4] inside [0,1]: delta* = {cert.delta}, translate {cert.translate}")

# midpoints of the triangle's edges touch all three facets
mids = [(F(1, 2), F(1, 2), F(0)), (F(0), F(1, 2), F(1, 2)), (F(1, 2), F(0), F(1, 2))]
print("edge midpoints touch all facets:", facet_touching_check(mids))
cert = min_cover_homothety(
    [barycentric_to_centered(p) for p in mids], standard_simplex_body(2)
)
print("  delta* =", cert.delta)  # exactly 1, despite the set looking small

# a set clear of one facet shrinks below 1
inner = [(F(1, 2), F(1, 4), F(1, 4)), (F(1, 4), F(1, 2), F(1, 4))]
cert = min_cover_homothety(
    [barycentric_to_centered(p) for p in inner], standard_simplex_body(2)
)
print("set avoiding facet 2: delta* =", cert.delta)

# sampled fibers of two maps off the triangle; exact cover per fiber cell
for label, spec in (
    ("first coordinate", coordinate_projection_map(2)),
    ("constant", constant_map(2)),
):
    report = fiber_width_demo(spec, 3, label=label)
    print(f"{label} map: {len(report.cells)} sampled fiber cells,"
          f" max delta* = {report.max_delta}")
