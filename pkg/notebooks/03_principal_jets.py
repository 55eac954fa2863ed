# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Principal jets
#
# Principal jets of an edge ideal keep every lift of every edge, with indices
# chosen independently.  They decompose as the intersection of the primes
# generated by the lifted minimal covers.

from jetcover import jets
from jetcover.gallery import path_graph, triangle_with_tail

g = path_graph()
p1 = jets.principal_jet_ideal(g, 1)
print(p1)
print(jets.principal_jet_decomposition(g, 1))

# Compared with the jet edge ideal, the principal jets add x_1*y_1 and y_1*z_1.

extra = set(p1.generators) - set(jets.jet_edge_ideal(g, 1).generators)
print(sorted(map(str, extra)))

# The same ideal is a colon: jets of the edge ideal divided by the ideal cutting
# out pairwise intersections of components in the base.

for s in range(3):
    h = triangle_with_tail()
    assert jets.principal_jet_via_colon(h, s) == jets.principal_jet_ideal(h, s)
print("colon construction agrees for s = 0, 1, 2")
