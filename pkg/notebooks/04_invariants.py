# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Invariants of principal jets from invariants of the base
#
# The lifting matrix L_s records how many k-subsets of jet vertices sit over a
# given j-subset of base vertices.  Multiplying by it turns f-vectors and Betti
# tables of a Stanley-Reisner ring into those of its principal jets.

import numpy as np

from jetcover import invariants
from jetcover.clutter import clutter_of_ideal, complex_from_ideal, f_vector
from jetcover.gallery import mixed_ideal
from jetcover.jets import principal_jet_ideal

print(np.array(invariants.lifting_matrix(1, 3).tolist()))

# Take <vwx, xy, yz>.  Its complex has f-vector (1, 5, 8, 4).

i = mixed_ideal()
delta = complex_from_ideal(i)
f = f_vector(delta)
for s in (1, 2):
    g = invariants.transform_f_vector(f, s)
    print(s, tuple(g), invariants.dimension_and_multiplicity(g), invariants.hilbert_series(g))

# Betti numbers via Hochster's formula: one reduced homology computation for
# every induced subcomplex.

base = invariants.betti_numbers_hochster(delta)
print(base.diagram())
lifted = invariants.transform_betti(base, 1)
print(lifted.diagram())

# The transform can be checked against a direct computation on the 10-vertex
# jet complex; the regularity does not change.

gamma1 = complex_from_ideal(principal_jet_ideal(clutter_of_ideal(i), 1))
assert invariants.betti_numbers_hochster(gamma1) == lifted
print("regularity", base.regularity, lifted.regularity)

# Linear resolutions are preserved too; for edge ideals they detect cochordal graphs.

from jetcover.gallery import cycle, path_graph
from jetcover.clutter import edge_ideal

for g in (path_graph(), cycle(4), cycle(5)):
    print(g.vertices, invariants.is_cochordal(g), invariants.has_linear_resolution(edge_ideal(g)))
