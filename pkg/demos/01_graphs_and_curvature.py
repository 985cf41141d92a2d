"""Build a weighted graph by hand and walk through its curvature data.

Run with: python3 demos/01_graphs_and_curvature.py
"""

from curvegraph import (
    average_curvature,
    curvature_profile,
    format_rational,
    inner_curvature,
    inner_outer,
    rooted_decomposition,
    sphere_boundary,
    sphere_measure,
    validate_graph,
)

# A small tree with one heavy leaf. Measures and weights are rationals;
# strings like "1/2" are fine anywhere a number is expected.
g = validate_graph(
    [("hub", 1), ("a", 1), ("b", "1/2"), ("leaf", 3)],
    [("hub", "a", 1), ("hub", "b", 1), ("a", "leaf", "3/2")],
)

decomp = rooted_decomposition(g, "hub")
print(f"root: {decomp.root}, horizon: {decomp.horizon}")
for r in range(decomp.horizon + 1):
    print(f"  sphere {r}: {decomp.sphere(r)}")

print()
print("per-vertex curvature (inner, outer):")
for r in range(decomp.horizon + 1):
    for v in decomp.sphere(r):
        if r < decomp.horizon:
            k_minus, k_plus = inner_outer(g, decomp, v)
            print(f"  {v}: ({format_rational(k_minus)}, {format_rational(k_plus)})")
        else:
            # the outermost sphere has no next sphere, so the outer side
            # does not exist there
            k_minus = inner_curvature(g, decomp, v)
            print(f"  {v}: ({format_rational(k_minus)}, -)")

print()
print("averaged curvature and the volume identity:")
for r in range(decomp.horizon):
    vol = sphere_measure(g, decomp, r)
    avg_out = average_curvature(g, decomp, r, "outer")
    boundary = sphere_boundary(g, decomp, r)
    print(
        f"  r={r}: m(S_r)={format_rational(vol)}"
        f"  avg outer={format_rational(avg_out)}"
        f"  boundary={format_rational(boundary)}"
    )
    # the boundary weight is exactly volume times averaged outer curvature
    assert vol * avg_out == boundary

print()
print("the same data in one object, with the averaged curvature gap:")
profile = curvature_profile(g, decomp)
for row in profile.per_radius:
    outer = "-" if row.avg_outer is None else format_rational(row.avg_outer)
    print(
        f"  r={row.radius}: avg inner {format_rational(row.avg_inner)},"
        f" avg outer {outer}, volume {format_rational(row.sphere_volume)}"
    )
print(f"gap at radius 0: {format_rational(profile.gap(0))}")
