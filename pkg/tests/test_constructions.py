from itertools import combinations

import networkx as nx
import pytest

from bowtiesat.constructions import (
    FANO_LINES, ConstructionError, complete, disjoint_union, dual_hypergraph, fano_complement,
    sat2_construction, sat3_construction, sat4_construction, sharpcon, wsat4_construction,
)
from bowtiesat.graphs import SimpleGraph, efficient_dominating_sets, girth, load_fixture
from bowtiesat.hypercore import Hypergraph, is_connected, phi_total, twin_pairs
from bowtiesat.saturation import closed_form, is_saturated, is_semi_saturated

from conftest import ref_bowtie_free, ref_semi_saturated


def _k33():
    return SimpleGraph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


@pytest.mark.parametrize("m, k, size", [(4, 4, 1), (5, 4, 5), (6, 4, 15), (3, 3, 1)])
def test_complete(m, k, size):
    assert len(complete(m, k)) == size


def test_complete_rejects_small_m():
    with pytest.raises(ConstructionError):
        complete(3, 4)


class TestDisjointUnion:
    def test_k4_k5(self):
        h = disjoint_union(complete(4, 4), complete(5, 4))
        assert (h.n, len(h)) == (9, 6) and is_saturated(h)

    def test_k4_fano(self):
        h = disjoint_union(complete(4, 4), fano_complement())
        assert (h.n, len(h)) == (11, 8) and is_saturated(h)

    def test_empty_is_identity(self):
        assert disjoint_union(fano_complement(), None) == fano_complement()

    def test_mixed_uniformity(self):
        with pytest.raises(ConstructionError):
            disjoint_union(complete(3, 3), complete(4, 4))


class TestFano:
    def test_lines_form_a_steiner_triple_system(self):
        pairs = [p for line in FANO_LINES for p in combinations(line, 2)]
        assert sorted(pairs) == list(combinations(range(1, 8), 2))

    def test_complement(self):
        h = fano_complement()
        assert (4, 5, 6, 7) in h and len(h) == 7
        assert is_saturated(h)
        assert {len(set(a) & set(b)) for a, b in combinations(h.edges, 2)} == {2}


class TestSat4:
    def test_n8(self):
        expected = {(1, 2, 3, 4), (5, 6, 7, 8)} | {(i, j, 5, 6) for i, j in combinations(range(1, 5), 2)}
        assert set(sat4_construction(8).edges) == expected

    def test_n10(self):
        expected = ({(i, j, 4, 5) for i, j in combinations(range(1, 4), 2)} | {(4, 5, 6, 7)}
                    | {(6, 7, i, j) for i, j in combinations((8, 9, 10), 2)})
        assert set(sat4_construction(10).edges) == expected

    def test_n12_default(self):
        h = sat4_construction(12)
        assert set(h.edges) == set(sat4_construction(10).edges) | {(8, 9, 10, 11), (8, 9, 10, 12)}
        assert len(h) == 9

    @pytest.mark.parametrize("V", [[11, 12], [11, 12, 13, 14], [13, 14]])
    def test_any_valid_split(self, V):
        h = sat4_construction(16, V=V)
        assert is_saturated(h) and len(h) == 13

    @pytest.mark.parametrize("V, W", [([11], None), ([11, 12], [12, 13, 14]), ([11, 12], [13])])
    def test_invalid_split(self, V, W):
        with pytest.raises(ConstructionError):
            sat4_construction(14, V=V, W=W)

    @pytest.mark.parametrize("n", range(4, 21))
    def test_saturated_with_closed_form_size(self, n):
        h = sat4_construction(n)
        assert len(h) == closed_form(n, 4, "sat").value
        assert is_saturated(h) and ref_bowtie_free(h) and ref_semi_saturated(h)

    def test_too_small(self):
        with pytest.raises(ConstructionError):
            sat4_construction(3)


class TestSmallUniformities:
    def test_sat3_seven(self):
        assert len(sat3_construction(7)) == 5

    def test_sat3_eight(self):
        assert len(sat3_construction(8)) == 4

    @pytest.mark.parametrize("n", range(3, 16))
    def test_sat3_family(self, n):
        h = sat3_construction(n)
        assert len(h) == closed_form(n, 3, "sat").value and is_saturated(h)

    @pytest.mark.parametrize("n", range(2, 12))
    def test_sat2_family(self, n):
        h = sat2_construction(n)
        assert len(h) == n // 2 and is_saturated(h)


class TestDual:
    def test_k33(self):
        h = dual_hypergraph(_k33(), 3)
        assert (h.n, len(h)) == (9, 6) and is_semi_saturated(h)
        assert len(h) * 3 == 2 * h.n

    def test_robertson(self):
        h = dual_hypergraph(load_fixture("robertson"), 4)
        assert (h.n, len(h)) == (38, 19) and is_semi_saturated(h)
        assert len(h) * 4 == 2 * h.n

    def test_petersen(self):
        g = nx.convert_node_labels_to_integers(nx.petersen_graph())
        h = dual_hypergraph(SimpleGraph.from_edges(10, g.edges()), 3)
        assert (h.n, len(h)) == (15, 10) and ref_semi_saturated(h)

    def test_requires_regularity(self):
        with pytest.raises(ConstructionError):
            dual_hypergraph(SimpleGraph.from_edges(3, [(0, 1), (1, 2)]), 2)

    def test_requires_girth(self):
        k4 = SimpleGraph.from_edges(4, list(combinations(range(4), 2)))
        with pytest.raises(ConstructionError):
            dual_hypergraph(k4, 3)


@pytest.fixture(scope="module")
def built():
    return sharpcon(load_fixture("hog50403"))


class TestSharpCon:
    def test_shape(self, built):
        h = built.hypergraph
        assert (h.n, len(h)) == (52, 24)
        assert is_semi_saturated(h) and is_connected(h) and twin_pairs(h) == []

    def test_degree_profile(self, built):
        degs = sorted(built.hypergraph.degrees().values())
        assert degs.count(2) == 44 and degs.count(1) == 8 and len(degs) == 52

    def test_modified_graph(self, built):
        gp = built.modified_graph
        assert (gp.n, gp.num_edges()) == (24, 44)
        assert girth(gp) >= 5
        assert all(gp.degree(v) == 3 for pair in built.split_vertices for v in pair)

    @pytest.mark.parametrize("split", range(3))
    def test_every_pair_split(self, built, split):
        g = load_fixture("hog50403")
        c = built.centers[0]
        nb = sorted(g.adj[c])
        other = [x for x in nb[1:] if x != nb[split + 1]]
        h = sharpcon(g, built.centers, {c: ((nb[0], nb[split + 1]), tuple(other))}).hypergraph
        assert (h.n, len(h)) == (52, 24)
        assert ref_semi_saturated(h)

    @pytest.mark.parametrize("name, r", [("hog1138", 5), ("hog33766", 6)])
    def test_larger_fixtures(self, name, r):
        h = sharpcon(load_fixture(name)).hypergraph
        assert (h.n, len(h)) == (13 * r, 6 * r)
        assert is_semi_saturated(h) and is_connected(h) and twin_pairs(h) == []

    def test_rejects_non_code(self):
        g = load_fixture("hog50403")
        with pytest.raises(ConstructionError):
            sharpcon(g, centers=(0, 1, 2, 3))

    def test_rejects_bad_split(self, built):
        g = load_fixture("hog50403")
        c = built.centers[0]
        with pytest.raises(ConstructionError):
            sharpcon(g, built.centers, {c: ((c, 1), (2, 3))})

    def test_rejects_graph_without_code(self):
        with pytest.raises(ConstructionError):
            sharpcon(SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))

    def test_chosen_code_is_a_perfect_code(self, built):
        assert built.centers in efficient_dominating_sets(load_fixture("hog50403"))


class TestWsat4:
    @pytest.mark.parametrize("n, size", [(56, 25), (108, 49)])
    def test_sizes(self, n, size):
        h = wsat4_construction(n)
        assert h.n == n and len(h) == size == (6 * n - 11) // 13
        assert is_semi_saturated(h)
        assert phi_total(h) == n - len(h.isolated_vertices())

    @pytest.mark.parametrize("n", [43, 30, 17])
    def test_invalid(self, n):
        with pytest.raises(ConstructionError):
            wsat4_construction(n)


@pytest.mark.parametrize("h", [
    fano_complement(), sat4_construction(15), sat3_construction(11),
    dual_hypergraph(_k33(), 3), Hypergraph(9, 4, ((1, 2, 3, 4),)),
], ids=["fano", "sat4-15", "sat3-11", "dual-k33", "one-edge"])
def test_phi_identity(h):
    assert phi_total(h) == h.n - len(h.isolated_vertices())
