# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Very well-covered graphs stay very well-covered under jets
#
# A graph on 2n vertices is very well-covered when every minimal vertex cover
# has n elements.  The report also lists the perfect matchings and whether each
# one satisfies Favaron's condition (P).

from jetcover import covers, jets
from jetcover.gallery import complete_bipartite, cycle, favaron_g1, whisker

g1 = favaron_g1()
report = covers.very_well_covered_report(g1)
print(report.very_well_covered, report.cover_sizes)
for m in report.matchings:
    print(sorted(map(sorted, m.matching)), m.property_p)

# Jet covers of a very well-covered graph all have size n(s+1).

for g in (g1, complete_bipartite(2), complete_bipartite(3), whisker(cycle(3))):
    n = len(g.vertices) // 2
    for s in range(3):
        sizes = {len(w) for w in covers.minimal_vertex_covers(jets.jet_clutter(g, s).clutter)}
        print(f"{len(g.vertices):2d} vertices, s={s}: cover sizes {sorted(sizes)}, expected {n * (s + 1)}")

# Odd cycles are well-covered but have no perfect matching.

c5 = cycle(5)
print(covers.is_well_covered(c5), covers.is_very_well_covered(c5))
