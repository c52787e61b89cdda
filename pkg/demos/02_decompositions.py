# Walkthrough: the structural decompositions behind the colorings.
#
# Run with:  python demos/02_decompositions.py

from properwalk import (Graph, bipartition, blocks, bridgeless_core, bridges,
                        contract_core_graph, cycle, disjoint_odd_cycles,
                        meets_two_bridge_rule, shortest_odd_cycle,
                        two_disjoint_paths, two_triangles_shared_vertex)

# ## Bridges and blocks
#
# Two four-cycles joined by a two-edge path through a middle vertex.

g = Graph(9, [(0, 1), (1, 2), (2, 3), (0, 3),
              (5, 6), (6, 7), (7, 8), (5, 8),
              (0, 4), (4, 5)])
print("bridges:", sorted(bridges(g)))
print("blocks:", [sorted(b) for b in blocks(g)])

# ## The bridge-deleted core
#
# Deleting the bridges leaves components that are single vertices or
# 2-edge-connected.  The key predicate for two-colorability of bipartite
# graphs is that every component touches at most two bridges.

for comp in bridgeless_core(g):
    print("core component", sorted(comp.vertices),
          "trivial" if comp.trivial else "nontrivial",
          "bridges:", comp.incident_bridges)
print("two-bridge rule holds:", meets_two_bridge_rule(bridgeless_core(g)))

# ## Contracting the core
#
# Contracting each nontrivial component gives a tree whose edges are the
# bridges; the rule above holds exactly when that tree is a path.

cc = contract_core_graph(g)
print("contracted graph:", cc.graph.edges, "is a path:", cc.is_path)

# ## Bipartitions and odd cycles

print("\nbipartition of the glued graph:", bipartition(g))
print("bipartition of a five-cycle:", bipartition(cycle(5)))
print("shortest odd cycle of C5:", shortest_odd_cycle(cycle(5)))
print("shortest odd cycle of C6:", shortest_odd_cycle(cycle(6)))

# ## Internally disjoint paths
#
# Unit-capacity max flow with split vertices gives two paths from a vertex
# to a target set sharing only their start.

h = two_triangles_shared_vertex()
p1, p2 = two_disjoint_paths(h, 1, {3, 4, 2})
print("\ntwo disjoint paths from 1:", p1, p2)

# ## Two edge-disjoint odd cycles
#
# A semi-decision: a found pair comes with a connector path (a single
# vertex when the cycles share one).

print("bow-tie:", disjoint_odd_cycles(h))
print("C5 alone:", disjoint_odd_cycles(cycle(5)))
