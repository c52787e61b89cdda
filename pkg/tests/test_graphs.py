import pytest

from properwalk import (Digraph, EdgeColoring, Graph, GraphFormatError, Walk,
                        bowtie_digraph, complete, cycle, cycle_with_feet,
                        directed_cycle, emit_graph, generate, parse_coloring,
                        parse_graph, path_graph, random_connected, star, theta,
                        two_triangles_shared_vertex)


class TestParse:
    def test_plain_edge_lines(self):
        g = parse_graph("0 1\n1 2")
        assert g.n == 3 and g.edges == ((0, 1), (1, 2))

    def test_triangle(self):
        g = parse_graph("0 1\n1 2\n2 0")
        assert g == cycle(3)

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="loop"):
            parse_graph("0 0")

    def test_duplicate_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph("0 1\n1 0")

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="two integers"):
            parse_graph("0 1\n1 two")
        with pytest.raises(GraphFormatError, match="two integers"):
            parse_graph("0 1 2")

    def test_header_detected(self):
        g = parse_graph("3 3\n0 1\n0 2\n1 2")
        assert g == cycle(3)

    def test_header_declares_isolated_vertices(self):
        g = parse_graph("5 2\n0 1\n1 2")
        assert g.n == 5 and g.m == 2

    def test_header_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="declares"):
            parse_graph("3 3\n0 1")

    def test_header_id_overflow(self):
        with pytest.raises(GraphFormatError, match="inconsistent"):
            parse_graph("3 2\n0 1\n4 5")

    def test_single_vertex_header(self):
        g = parse_graph("1 0")
        assert g.n == 1 and g.m == 0

    def test_comments_and_blanks(self):
        g = parse_graph("# a triangle\n\n0 1\n# middle\n1 2\n2 0\n")
        assert g == cycle(3)

    def test_directed(self):
        d = parse_graph("0 1\n1 0\n1 2", directed=True)
        assert isinstance(d, Digraph)
        assert d.arcs == ((0, 1), (1, 0), (1, 2))


class TestEmit:
    def test_triangle_edgelist(self):
        assert emit_graph(cycle(3)) == "3 3\n0 1\n0 2\n1 2\n"

    def test_dot_with_coloring(self):
        g = cycle(3)
        col = EdgeColoring(1, {e: 1 for e in g.edges})
        dot = emit_graph(g, col, fmt="dot")
        assert dot.count("--") == 3
        assert dot.count('label="1"') == 3
        assert 'color="red"' in dot

    def test_coloring_file_roundtrip(self):
        g = path_graph(3)
        col = EdgeColoring(2, {(0, 1): 1, (1, 2): 2})
        text = emit_graph(g, col)
        back = parse_coloring(text)
        assert back == col

    def test_absent_edge_rejected(self):
        g = path_graph(3)
        col = EdgeColoring(1, {(0, 1): 1, (0, 2): 1})
        with pytest.raises(ValueError):
            emit_graph(g, col)

    def test_roundtrip_seeded_random_graphs(self):
        for seed in range(100):
            g = random_connected(2 + seed % 9, 0.4, seed=seed)
            assert parse_graph(emit_graph(g)) == g

    def test_directed_roundtrip(self):
        d = bowtie_digraph()
        assert parse_graph(emit_graph(d), directed=True) == d


class TestGenerators:
    def test_cycle_regular(self):
        g = cycle(5)
        assert g.n == 5 and g.m == 5
        assert all(g.degree(v) == 2 for v in range(5))

    def test_theta_2_2_1(self):
        g = theta(2, 2, 1)
        assert g.n == 4 and g.m == 5
        assert g.has_edge(0, 2)  # chord between antipodal junctions

    def test_theta_parity_rejected(self):
        with pytest.raises(ValueError, match="parity|nonbipartite"):
            theta(2, 2, 2)

    def test_theta_parallel_rejected(self):
        with pytest.raises(ValueError):
            theta(1, 1, 2)

    def test_cycle_with_feet_counts(self):
        g = cycle_with_feet(3, [2, 2, 0])
        assert g.n == 7 and g.m == 7
        for n, feet in ((3, [1, 0, 0]), (5, [0, 2, 0, 1, 0])):
            g = cycle_with_feet(n, feet)
            assert g.n == n + sum(feet) and g.m == n + sum(feet)

    def test_cycle_with_feet_validation(self):
        with pytest.raises(ValueError):
            cycle_with_feet(4, [0, 0, 0, 0])
        with pytest.raises(ValueError):
            cycle_with_feet(3, [1, 2])

    def test_bowtie(self):
        d = bowtie_digraph()
        assert d.n == 5 and d.m == 6
        assert set(d.arcs) == {(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)}
        assert d.is_strongly_connected()

    def test_directed_cycle(self):
        d = directed_cycle(5)
        assert d.m == 5 and d.is_strongly_connected()

    def test_two_triangles(self):
        g = two_triangles_shared_vertex()
        assert g.n == 5 and g.m == 6 and g.degree(0) == 4

    def test_random_connected_deterministic(self):
        a = random_connected(8, 0.3, seed=42)
        b = random_connected(8, 0.3, seed=42)
        assert a == b and a.is_connected()
        c = random_connected(8, 0.3, seed=43)
        assert a != c  # overwhelmingly likely under different seeds

    def test_theta_two_connected_nonbipartite(self):
        from properwalk import bipartition, blocks, bridges
        for params in ((2, 2, 1), (1, 3, 2), (3, 5, 2), (4, 4, 3), (2, 4, 5)):
            g = theta(*params)
            assert not bridges(g)
            assert len(blocks(g)) == 1
            assert bipartition(g) is None

    def test_generate_dispatch(self):
        assert generate("cycle", 5) == cycle(5)
        assert generate("complete", 4) == complete(4)
        assert generate("star", 4) == star(4)
        assert generate("cycle_with_feet", 3, 2, 2, 0) == cycle_with_feet(3, [2, 2, 0])
        with pytest.raises(ValueError, match="unknown family"):
            generate("mystery", 3)


class TestTypes:
    def test_graph_invariants(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 5)])

    def test_digraph_antiparallel_ok(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert d.m == 2
        with pytest.raises(ValueError):
            Digraph(2, [(0, 1), (0, 1)])

    def test_coloring_range(self):
        with pytest.raises(ValueError):
            EdgeColoring(2, {(0, 1): 3})
        with pytest.raises(ValueError):
            EdgeColoring(0, {})

    def test_coloring_validate_for(self):
        g = path_graph(3)
        EdgeColoring(1, {(0, 1): 1, (1, 2): 1}).validate_for(g)
        with pytest.raises(ValueError):
            EdgeColoring(1, {(0, 1): 1}).validate_for(g)

    def test_walk_properly_colored(self):
        col = EdgeColoring(2, {(0, 1): 1, (1, 2): 2})
        assert Walk((0, 1, 2)).is_properly_colored(col)
        assert not Walk((0, 1, 0, 1)).is_properly_colored(col)
        assert Walk((0, 1, 2)).num_edges == 2
