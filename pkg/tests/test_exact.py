from itertools import product

import pytest

from properwalk import (BudgetExceededError, EdgeColoring, Graph,
                        bowtie_digraph, canonical_colorings, complete,
                        connected_bipartite_graphs, connected_graphs, cycle,
                        cycle_with_feet, directed_cycle, exact_directed,
                        exact_pp, exact_pw, labeled_trees, path_graph, star,
                        theta, verify_all_pairs, verify_all_pairs_directed)


def unpruned_minimum(g, max_k):
    """Independent oracle: try every coloring (no symmetry reduction)."""
    for k in range(1, max_k + 1):
        for colors in product(range(1, k + 1), repeat=g.m):
            col = EdgeColoring(k, dict(zip(g.edges, colors)))
            if verify_all_pairs(g, col)[0]:
                return k
    return None


class TestCanonicalEnumeration:
    def test_two_color_count(self):
        for m in range(1, 10):
            assert sum(1 for _ in canonical_colorings(m, 2)) == 2 ** (m - 1)

    def test_first_edge_pinned_and_growth_restricted(self):
        for colors in canonical_colorings(5, 3):
            assert colors[0] == 1
            top = 1
            for c in colors:
                assert c <= top + 1
                top = max(top, c)

    def test_lexicographic_order(self):
        seqs = list(canonical_colorings(3, 3))
        assert seqs == sorted(seqs)
        assert seqs[0] == (1, 1, 1) and seqs[-1] == (1, 2, 3)


class TestExactPw:
    def test_complete4(self):
        res = exact_pw(complete(4))
        assert res.k == 1

    def test_star_explored_count(self):
        # levels: 1 coloring at k=1, 4 at k=2, then the fifth canonical
        # 3-coloring (1,2,3) is the first to pass
        res = exact_pw(star(4))
        assert res.k == 3 and res.explored == 10

    def test_cycle4(self):
        assert exact_pw(cycle(4)).k == 2

    def test_heavy_feet_need_three(self):
        assert exact_pw(cycle_with_feet(3, [2, 2, 0])).k == 3

    def test_witness_verifies(self):
        for g in (cycle(5), theta(2, 2, 1), star(5), path_graph(6)):
            res = exact_pw(g, max_k=5)
            assert verify_all_pairs(g, res.witness)[0]
            assert res.witness.k == res.k

    def test_explored_counter_matches_independent_replay(self):
        # replay the enumeration order with the BFS verifier and count how
        # many candidates the solver must have tested
        for g in (cycle(4), cycle(5), theta(2, 2, 1)):
            expected = 1  # the single level-1 coloring fails (noncomplete)
            for colors in canonical_colorings(g.m, 2):
                expected += 1
                col = EdgeColoring(2, dict(zip(g.edges, colors)))
                if verify_all_pairs(g, col)[0]:
                    break
            assert exact_pw(g).explored == expected

    def test_level_two_exhausts_all_candidates(self):
        g = cycle_with_feet(3, [2, 2, 0])  # needs three colors, 7 edges
        res = exact_pw(g)
        assert res.k == 3
        assert res.explored > 1 + 2 ** (g.m - 1)

    def test_witness_is_canonically_smallest(self):
        g = cycle(4)
        res = exact_pw(g)
        seq = tuple(res.witness.assignment[e] for e in g.edges)
        for colors in canonical_colorings(g.m, res.k):
            if colors == seq:
                break
            col = EdgeColoring(res.k, dict(zip(g.edges, colors)))
            assert not verify_all_pairs(g, col)[0]

    def test_exceeds_max_k(self):
        assert exact_pw(star(5), max_k=3) is None

    def test_budget_guard(self):
        big = complete(8)
        g = Graph(8, [e for e in big.edges if e != (6, 7)])  # 27 edges, not complete
        with pytest.raises(BudgetExceededError):
            exact_pw(g, max_k=2)

    def test_budget_override(self):
        g = cycle(6)
        res = exact_pw(g, max_k=2, budgets={2: 6})
        assert res.k == 2
        with pytest.raises(BudgetExceededError):
            exact_pw(g, max_k=2, budgets={2: 5})

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            exact_pw(Graph(3, [(0, 1)]))

    def test_single_vertex(self):
        res = exact_pw(Graph(1))
        assert res.k == 1

    def test_agrees_with_unpruned_enumerator(self):
        for n in range(2, 6):
            for g in connected_graphs(n):
                if g.m > 4:
                    continue
                want = unpruned_minimum(g, 4)
                got = exact_pw(g, max_k=4)
                assert got.k == want


class TestExactPp:
    def test_path3(self):
        assert exact_pp(path_graph(3)).k == 2

    def test_complete4(self):
        assert exact_pp(complete(4)).k == 1

    def test_never_below_walk_count(self):
        for g in (path_graph(4), cycle(5), cycle(6), star(4), theta(2, 2, 1),
                  cycle_with_feet(3, [1, 1, 1])):
            w = exact_pw(g, max_k=4).k
            p = exact_pp(g, max_k=4).k
            assert w <= p

    def test_matches_walk_count_on_bipartite(self):
        for g in connected_bipartite_graphs(5):
            assert exact_pp(g, max_k=5).k == exact_pw(g, max_k=5).k

    def test_vertex_guard(self):
        with pytest.raises(ValueError, match="limited"):
            exact_pp(path_graph(11))


class TestExactDirected:
    def test_directed_odd_cycle_needs_three(self):
        d = directed_cycle(5)
        assert exact_directed(d, "walk").k == 3
        assert exact_directed(d, "path").k == 3

    def test_bowtie_split(self):
        d = bowtie_digraph()
        walk = exact_directed(d, "walk")
        assert walk.k == 2
        assert verify_all_pairs_directed(d, walk.witness)[0]
        assert exact_directed(d, "path").k == 3

    def test_not_strong_rejected(self):
        d = bowtie_digraph()
        from properwalk import Digraph
        broken = Digraph(5, [a for a in d.arcs if a != (2, 0)])
        with pytest.raises(ValueError, match="strongly"):
            exact_directed(broken, "walk")

    def test_bad_mode(self):
        with pytest.raises(ValueError, match="mode"):
            exact_directed(directed_cycle(3), "stroll")


class TestIterators:
    def test_connected_counts(self):
        # classic labeled connected graph counts
        assert sum(1 for _ in connected_graphs(1)) == 1
        assert sum(1 for _ in connected_graphs(2)) == 1
        assert sum(1 for _ in connected_graphs(3)) == 4
        assert sum(1 for _ in connected_graphs(4)) == 38
        assert sum(1 for _ in connected_graphs(5)) == 728

    def test_tree_counts_match_cayley(self):
        for n in range(1, 7):
            assert sum(1 for _ in labeled_trees(n)) == max(1, n ** (n - 2))

    def test_trees_are_trees(self):
        for t in labeled_trees(5):
            assert t.is_tree()

    def test_bipartite_iterator_sound_and_complete(self):
        from properwalk import bipartition
        got = set(connected_bipartite_graphs(5))
        expect = {g for g in connected_graphs(5) if bipartition(g) is not None}
        assert got == expect
