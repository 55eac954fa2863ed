import random
from itertools import combinations

import numpy as np
import pytest

from jetcover.clutter import Graph, SimplicialComplex, clutter_of_ideal, complex_from_ideal, edge_ideal, f_vector
from jetcover.errors import DomainError, ResourceLimitError
from jetcover.gallery import cycle, mixed_ideal, path, path_graph, path_ideal, triangle_with_tail
from jetcover.ideals import MonomialIdeal
from jetcover.invariants import (
    BettiTable,
    HilbertSeries,
    betti_numbers_hochster,
    dimension_and_multiplicity,
    has_linear_resolution,
    hilbert_series,
    is_cochordal,
    is_cochordal_by_resolution,
    lifting_function,
    lifting_function_closed_form,
    lifting_matrix,
    regularity,
    transform_betti,
    transform_f_vector,
)
from jetcover.jets import principal_jet_ideal

from oracles import divides, has_long_induced_cycle, lift_count, monomials_of_degree

L1 = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 2, 1, 0, 0, 0, 0],
    [0, 0, 4, 4, 1, 0, 0],
    [0, 0, 0, 8, 12, 6, 1],
]
L2 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 3, 3, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 9, 18, 15, 6, 1, 0, 0, 0],
    [0, 0, 0, 27, 81, 108, 81, 36, 9, 1],
]
BASE_BETTI = [[1, 0, 0, 0, 0], [0, 0, 2, 1, 0], [0, 0, 0, 1, 1]]
GAMMA1_BETTI = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 8, 16, 14, 6, 1, 0, 0],
    [0, 0, 0, 8, 28, 38, 25, 8, 1],
]
GAMMA2_BETTI = [
    [1] + [0] * 12,
    [0, 0, 18, 63, 111, 120, 83, 36, 9, 1, 0, 0, 0],
    [0, 0, 0, 27, 162, 432, 675, 684, 468, 217, 66, 12, 1],
]


class TestLiftingFunction:
    def test_values(self):
        assert lifting_function(1, 2, 3) == 4
        assert lifting_function(2, 2, 4) == 15
        assert lifting_function(0, 3, 3) == 1

    @pytest.mark.parametrize("s", range(4))
    def test_boundaries(self, s):
        for j in range(6):
            assert lifting_function(s, j, (s + 1) * j) == 1
            assert lifting_function(s, j, j) == (s + 1) ** j
            assert lifting_function(s, j, j - 1) == 0 if j else True
            assert lifting_function(s, j, (s + 1) * j + 1) == 0

    @pytest.mark.parametrize("s", range(4))
    def test_row_sums(self, s):
        for j in range(6):
            assert sum(lifting_function(s, j, k) for k in range((s + 1) * j + 1)) == (2 ** (s + 1) - 1) ** j

    def test_closed_form(self):
        for s in range(4):
            for j in range(6):
                for k in range(4 * (s + 1) + 1):
                    assert lifting_function(s, j, k) == lifting_function_closed_form(s, j, k)

    def test_counts_subsets_of_jets(self):
        for s in range(4):
            for j in range(6):
                if (s + 1) * j > 16:
                    continue
                for k in range((s + 1) * j + 2):
                    assert lifting_function(s, j, k) == lift_count(s, j, k), (s, j, k)

    def test_negative(self):
        with pytest.raises(DomainError):
            lifting_function(-1, 1, 1)


class TestLiftingMatrix:
    def test_l1(self):
        assert lifting_matrix(1, 3).tolist() == L1

    def test_l2(self):
        assert lifting_matrix(2, 3).tolist() == L2

    def test_fourth_rows(self):
        assert lifting_matrix(1, 4).tolist()[4] == [0, 0, 0, 0, 16, 32, 24, 8, 1]
        assert lifting_matrix(2, 4).tolist()[4] == [0, 0, 0, 0, 81, 324, 594, 648, 459, 216, 66, 12, 1]

    def test_s0_is_identity(self):
        assert lifting_matrix(0, 4).tolist() == np.eye(5, dtype=int).tolist()

    def test_shape(self):
        m = lifting_matrix(3, 2)
        assert m.max_j == 2 and m.entries.shape == (3, 9)

    def test_composition_is_monoid(self):
        # lifting by s then t equals lifting by (s+1)(t+1)-1
        a = lifting_matrix(1, 3).entries
        b = lifting_matrix(2, 6).entries
        c = lifting_matrix(5, 3).entries
        assert (a.dot(b[:7, :]) == c[:, : a.dot(b[:7, :]).shape[1]]).all()


class TestFVectorsAndHilbert:
    def test_transform(self):
        f = f_vector(complex_from_ideal(mixed_ideal()))
        assert tuple(f) == (1, 5, 8, 4)
        assert tuple(transform_f_vector(f, 1)) == (1, 10, 37, 64, 56, 24, 4)
        assert tuple(transform_f_vector(f, 2)) == (1, 15, 87, 257, 444, 480, 332, 144, 36, 4)

    def test_dimension_and_multiplicity(self):
        f = f_vector(complex_from_ideal(mixed_ideal()))
        assert dimension_and_multiplicity(transform_f_vector(f, 1)) == (6, 4)
        assert dimension_and_multiplicity(transform_f_vector(f, 2)) == (9, 4)
        assert dimension_and_multiplicity(f) == (3, 4)

    def test_transform_against_direct(self):
        rng = random.Random(8)
        for _ in range(15):
            vs = "abcde"[: rng.randint(2, 5)]
            gens = {"*".join(sorted(rng.sample(vs, rng.randint(1, len(vs))))) for _ in range(rng.randint(1, 3))}
            i = MonomialIdeal(tuple(vs), sorted(gens))
            f = f_vector(complex_from_ideal(i))
            for s in (1, 2):
                if len(vs) * (s + 1) > 12:
                    continue
                direct = f_vector(complex_from_ideal(principal_jet_ideal(clutter_of_ideal(i), s)))
                assert tuple(transform_f_vector(f, s)) == tuple(direct)

    def test_hilbert_path(self):
        h = hilbert_series(f_vector(complex_from_ideal(path_ideal())))
        assert h.to_json() == {"numerator": [1, 1, -1], "denomExp": 2}

    def test_hilbert_mixed(self):
        h = hilbert_series(f_vector(complex_from_ideal(mixed_ideal())))
        assert h.to_json() == {"numerator": [1, 2, 1], "denomExp": 3}
        assert str(h) == "(1 + 2*t + t^2) / (1 - t)^3"
        assert HilbertSeries.from_json(h.to_json()) == h

    def test_hilbert_negative_coefficient_rendering(self):
        h = hilbert_series(transform_f_vector(f_vector(complex_from_ideal(mixed_ideal())), 1))
        assert str(h) == "(1 + 4*t + 2*t^2 - 4*t^3 + t^4) / (1 - t)^6"

    def test_hilbert_counts_standard_monomials(self):
        for i in [path_ideal(), mixed_ideal(), edge_ideal(triangle_with_tail()), MonomialIdeal(("x", "y"), ["x*y", "x"])]:
            h = hilbert_series(f_vector(complex_from_ideal(i)))
            gens = [g.as_dict() for g in i.generators]
            for n, coeff in enumerate(h.coefficients(6)):
                standard = sum(1 for m in monomials_of_degree(i.universe, n) if not any(divides(g, m) for g in gens))
                assert coeff == standard, (i, n)

    def test_void_complex(self):
        with pytest.raises(DomainError):
            hilbert_series([])


class TestBetti:
    def test_base_table(self):
        b = betti_numbers_hochster(complex_from_ideal(mixed_ideal()))
        assert b.matrix().tolist() == BASE_BETTI
        assert b.totals() == [1, 3, 2]
        assert b.regularity == 2

    def test_gamma1_by_transform_and_directly(self):
        base = betti_numbers_hochster(complex_from_ideal(mixed_ideal()))
        t = transform_betti(base, 1)
        assert t.matrix().tolist() == GAMMA1_BETTI
        assert t.totals() == [1, 16, 44, 52, 31, 9, 1]
        p1 = principal_jet_ideal(clutter_of_ideal(mixed_ideal()), 1)
        assert betti_numbers_hochster(complex_from_ideal(p1)) == t
        assert betti_numbers_hochster(complex_from_ideal(p1), collapse=False) == t

    def test_gamma2_by_transform(self):
        t = transform_betti(betti_numbers_hochster(complex_from_ideal(mixed_ideal())), 2)
        assert t.matrix().tolist() == GAMMA2_BETTI
        assert t.totals() == [1, 45, 225, 543, 795, 767, 504, 226, 67, 12, 1]

    @pytest.mark.slow
    def test_gamma2_directly(self):
        p2 = principal_jet_ideal(clutter_of_ideal(mixed_ideal()), 2)
        assert betti_numbers_hochster(complex_from_ideal(p2)).matrix().tolist() == GAMMA2_BETTI

    def test_m2_diagram(self):
        t = transform_betti(betti_numbers_hochster(complex_from_ideal(mixed_ideal())), 1)
        assert t.diagram() == "\n".join([
            "       0  1  2  3  4 5 6",
            "total: 1 16 44 52 31 9 1",
            "    0: 1  .  .  .  . . .",
            "    1: .  8 16 14  6 1 .",
            "    2: .  8 28 38 25 8 1",
        ])

    def test_json_round_trip(self):
        b = betti_numbers_hochster(complex_from_ideal(mixed_ideal()), "Fp:2")
        assert b.field == "Fp:2"
        assert b.to_json()["betti"]["1,2"] == 2
        assert BettiTable.from_json(b.dumps()) == b

    def test_validation(self):
        with pytest.raises(DomainError):
            BettiTable({(0, 0): -1})
        with pytest.raises(DomainError):
            BettiTable({(2, 1): 1})

    def test_euler_characteristic_gives_hilbert_numerator(self):
        rng = random.Random(6)
        for _ in range(30):
            n = rng.randint(2, 6)
            vs = tuple("abcdef"[:n])
            gens = {"*".join(sorted(rng.sample(vs, rng.randint(1, min(3, n))))) for _ in range(rng.randint(1, 4))}
            i = MonomialIdeal(vs, sorted(gens))
            b = betti_numbers_hochster(complex_from_ideal(i))
            k = [0] * (n + 1)
            for (a, j), v in b.entries.items():
                k[j] += (-1) ** a * v
            h = hilbert_series(f_vector(complex_from_ideal(i)))
            # numerator over (1-t)^d times (1-t)^(n-d) is the K-polynomial over (1-t)^n
            num = list(h.numerator)
            for _ in range(n - h.denom_exp):
                num = [x - y for x, y in zip(num + [0], [0] + num)]
            assert num + [0] * (n + 1 - len(num)) == k

    def test_field_dependence(self):
        # the Stanley-Reisner ideal of the 6-vertex projective plane
        rp2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
        d = SimplicialComplex.from_facets(tuple("123456"), [frozenset(map(str, f)) for f in rp2])
        q, f2 = betti_numbers_hochster(d), betti_numbers_hochster(d, "Fp:2")
        assert q != f2
        assert q.regularity == 2 and f2.regularity == 3

    def test_resource_limit(self):
        big = SimplicialComplex.full_simplex(tuple(f"v{i}" for i in range(6)))
        with pytest.raises(ResourceLimitError):
            betti_numbers_hochster(big, max_vertices=5)

    def test_regularity_function(self):
        assert regularity(BettiTable.from_matrix(GAMMA1_BETTI)) == 2


class TestLinearResolutions:
    def test_examples(self):
        assert has_linear_resolution(edge_ideal(path_graph()))
        assert not has_linear_resolution(mixed_ideal())
        assert not has_linear_resolution(edge_ideal(cycle(5)))
        assert has_linear_resolution(MonomialIdeal(("x", "y", "z"), ["x*y*z"]))

    def test_zero_and_unit(self):
        assert not has_linear_resolution(MonomialIdeal.zero(("x",)))
        with pytest.raises(DomainError):
            has_linear_resolution(MonomialIdeal.unit(("x",)))

    def test_cochordal(self):
        assert is_cochordal(path_graph())
        assert is_cochordal(cycle(4))
        assert not is_cochordal(cycle(5))
        assert is_cochordal(path(5).complement())
        assert not is_cochordal(cycle(6))

    def test_froberg(self):
        rng = random.Random(13)
        checked = 0
        while checked < 60:
            n = rng.randint(2, 8)
            vs = tuple(f"v{i}" for i in range(n))
            edges = [frozenset(e) for e in combinations(vs, 2) if rng.random() < 0.5]
            if not edges:
                continue
            g = Graph(vs, tuple(edges))
            comp = g.complement()
            oracle = not has_long_induced_cycle(comp.vertices, comp.edges)
            assert is_cochordal(g) == oracle
            assert is_cochordal_by_resolution(g) == oracle, g
            checked += 1
