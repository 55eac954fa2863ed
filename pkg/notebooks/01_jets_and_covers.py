# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Jets of a clutter and their vertex covers
#
# Start from the path x - y - z.  Its edge ideal is <xy, yz>.

from jetcover import covers, jets
from jetcover.gallery import path_graph, path_ideal, triangle_with_tail

g = path_graph()
print(g)

# Substituting x -> x_0 + x_1 t + x_2 t^2 (and likewise for y, z) and reading off
# the coefficients of 1, t, t^2 gives six generators of the ideal of 2-jets.

for poly in jets.jet_ideal_generators(path_ideal(), 2).polynomials():
    print(poly)

# Splitting every sum into its monomials gives the jet clutter: all lifts of an
# edge whose indices add up to at most s.

jc = jets.jet_clutter(g, 2)
print(len(jc.edges), "edges on", len(jc.vertices), "vertices")

# Minimal covers of the jet clutter, computed two ways: directly as transversals,
# and by polarizing the generators of a symbolic power of the cover ideal.

direct = set(covers.minimal_vertex_covers(jc.clutter))
polarized = set(covers.jet_covers_via_polarization(g, 2))
assert direct == polarized
for w in sorted(polarized, key=len):
    print(sorted(w))

# Every cover is a staircase: if x_i is in it, so are x_0 .. x_{i-1}.  That is
# what lets a cover be recorded as a weight vector on the base vertices.

print(covers.symbolic_power(g, 3))

# A less symmetric example: a path attached to a triangle.

t = triangle_with_tail()
print(covers.minimal_vertex_covers(t))
print([str(m) for m in covers.irreducible_two_covers(t)])
