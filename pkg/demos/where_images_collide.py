#!/usr/bin/env python3
"""A PL map whose disjoint faces keep disjoint images -- until m grows by one.

At m = (d+1)r - 2, collapsing every barycenter of dimension >= d to the
center c leaves, in every r-tuple of pairwise disjoint faces, at least one
low-dimensional face whose image avoids all the others.  The verifier
proves this twice per tuple: by the combinatorial criterion and by exact
LP emptiness with Farkas certificates.

At m = (d+1)r - 1 the counting argument breaks: r disjoint faces of
dimension >= d fit into the simplex, and all of their images own c.
"""
from tverlab import build_counterexample, probe_tverberg_plus_one, verify_isolation

for d, r in ((1, 2), (1, 3), (2, 2)):
    spec = build_counterexample(d, r)
    report = verify_isolation(spec)
    print(f"d={d} r={r}: m={spec.m}, {len(report.rows)} disjoint tuples, "
          "every one has an isolated face")

# one of the six tuples for the smallest case, in detail
spec = build_counterexample(1, 2)
row = verify_isolation(spec).rows[-1]
print("sample tuple:", row.faces, "-> isolated face index", row.isolated_index)
print("  emptiness certificates:", list(row.certificate_digests))

# one dimension up the probe finds the collision the counting argument predicts
for d, r in ((1, 2), (2, 2)):
    result = probe_tverberg_plus_one(d, r)
    print(f"d={d} r={r} at m={(d + 1) * r - 1}: faces {result.faces} "
          f"share the point {result.point}")
