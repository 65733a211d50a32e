"""Complete facet censuses of the reduced polytopes.

Double description over the rationals turns the 2^n reduced vertices
into the full, irredundant facet list.  The census records how many
vertices sit on each facet, the per-vertex incidence (provably constant
here), and the facet orbits under part relabelings and in-part swaps.
"""

from omegapoly import census_to_json, facet_census

for n in (2, 3, 4):
    report = facet_census(n)
    sizes = sorted(o.size for o in report.orbits)
    on = sorted({rec.vertices_on for rec in report.facets})
    print("n = %d: %3d facets, vertices per facet %s, "
          "each vertex on %d facets, orbit sizes %s"
          % (n, report.facet_count, on, report.per_vertex_incidence, sizes))

# the n = 3 census in detail: 16 facets, each an inequality over the
# six reduced coordinates (y11, y22, y33, y12, y13, y23)
report = facet_census(3)
print("\nn = 3 facets, coefficients . y >= rhs:")
for rec in report.facets:
    coeffs = " ".join("%2s" % c for c in rec.form.coeffs)
    tight = ", ".join(str(a) for a in rec.tight[:3])
    print("  [%s] >= %2s   on %d vertices (%s, ...)"
          % (coeffs, rec.form.rhs, rec.vertices_on, tight))

print("\nJSON form of the n = 2 census:")
print(census_to_json(facet_census(2)))
