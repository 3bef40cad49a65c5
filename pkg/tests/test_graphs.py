"""Architecture graph construction and distances."""
import itertools

import pytest

from qroute.graphs import (ArchitectureGraph, build_architecture, complete_graph,
                           grid_graph, hierarchical_product, induced_subgraph,
                           modular_graph, parse_hier_file, path_graph)


class TestBuilders:
    def test_path(self):
        g = path_graph(3)
        assert g.edges == {(0, 1), (1, 2)}

    def test_hier_two_paths(self):
        # two P3 copies plus vertical links at positions 0 and 2
        g = hierarchical_product(path_graph(2), path_graph(3), (1, 0, 1))
        assert g.edges == {(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (2, 5)}

    def test_modular_2x2(self):
        g = modular_graph(2, 2)
        assert g.edges == {(0, 1), (2, 3), (0, 2)}

    def test_grid_is_cartesian_product(self):
        g = grid_graph(2, 2)
        assert g.edges == {(0, 1), (2, 3), (0, 2), (1, 3)}

    def test_hier_adjacency_matches_definition(self):
        g1, g2, vec = path_graph(3), complete_graph(3), (0, 1, 1)
        g = hierarchical_product(g1, g2, vec)
        n2 = g2.n
        for (i, j), (ip, jp) in itertools.combinations(
                itertools.product(range(g1.n), range(n2)), 2):
            expect = (i == ip and g2.has_edge(j, jp)) or \
                     (j == jp and vec[j] == 1 and g1.has_edge(i, ip))
            assert g.has_edge(i * n2 + j, ip * n2 + jp) == expect

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            hierarchical_product(path_graph(2), path_graph(2), (0, 0))

    def test_spec_strings(self):
        assert build_architecture("path:4").kind == "path"
        assert build_architecture("complete:3").kind == "complete"
        assert build_architecture("grid:2x3").n == 6
        assert build_architecture("modular:3x2").kind == "modular"
        with pytest.raises(ValueError):
            build_architecture("ring:5")

    def test_hier_file(self):
        text = """
        # two rungs
        n1 2
        n2 3
        v 1 0 1
        e1 0 1
        e2 0 1
        e2 1 2
        """
        g = parse_hier_file(text)
        assert g.n == 6 and len(g.edges) == 6
        assert g.factor1.kind == "path" and g.factor2.kind == "path"


class TestDistances:
    def test_path_endpoints(self):
        assert path_graph(4).distances()[0, 3] == 3

    def test_complete_all_ones(self):
        d = complete_graph(5).distances()
        for u in range(5):
            for v in range(5):
                assert d[u, v] == (0 if u == v else 1)

    def test_modular_cross_module(self):
        # non-communicator (0,1)=1 to non-communicator (1,1)=3 goes via both hubs
        assert modular_graph(2, 2).distances()[1, 3] == 3

    def test_triangle_inequality(self):
        g = grid_graph(3, 3)
        d = g.distances()
        for u, v, w in itertools.product(range(g.n), repeat=3):
            assert d[u, w] <= d[u, v] + d[v, w]

    def test_disconnected_rejected(self):
        g = ArchitectureGraph(3, {(0, 1)})
        with pytest.raises(ValueError):
            g.distances()

    def test_shortest_path_prefers_low_index(self):
        g = grid_graph(2, 2)
        assert g.shortest_path(0, 3) == [0, 1, 3]


class TestInducedSubgraph:
    def test_full_vertex_set(self):
        g = grid_graph(2, 2)
        sub, idx = induced_subgraph(g, set(range(4)))
        assert sub.edges == g.edges and idx == [0, 1, 2, 3]

    def test_isolated_vertices(self):
        sub, idx = induced_subgraph(path_graph(3), {0, 2})
        assert sub.n == 2 and sub.edges == set()

    def test_grid_corner(self):
        sub, idx = induced_subgraph(grid_graph(2, 2), {0, 1, 2})
        assert sub.edges == {(0, 1), (0, 2)}  # a path of 3 vertices
