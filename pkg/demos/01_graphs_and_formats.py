# Walkthrough: graph values, the edge-list format, and the generators.
#
# Run with:  python demos/01_graphs_and_formats.py

from properwalk import (EdgeColoring, cycle, cycle_with_feet, emit_graph,
                        generate, parse_graph, random_connected, star, theta)

# ## Building graphs
#
# Vertices are dense integers 0..n-1, edges are unordered pairs stored in
# canonical (sorted) order.  Values are immutable and hashable.

g = cycle(5)
print("five-cycle:", g)
print("edges:", g.edges)
print("neighbors of 0:", g.neighbors(0))

# ## The edge-list text format
#
# The first line "n m" declares the counts; parse_graph also accepts bare
# edge lines and comment lines starting with '#'.

text = emit_graph(g)
print("\nemitted edge list:\n" + text)
assert parse_graph(text) == g
assert parse_graph("0 1\n1 2") == parse_graph("3 2\n0 1\n1 2")

# ## DOT output with a coloring
#
# Color 1 renders red, 2 blue, 3 green; the numeric index is kept as the
# label either way.

coloring = EdgeColoring(2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (3, 4): 2, (0, 4): 2})
print(emit_graph(g, coloring, fmt="dot"))

# ## Named families
#
# Every family the constructions care about has a deterministic generator:
# theta graphs (even outer cycle plus an inverter path making the union
# nonbipartite), odd cycles with pendant feet, and more.

t = theta(2, 2, 1)
print("theta(2,2,1) edges:", t.edges)

feet = cycle_with_feet(3, [2, 2, 0])
print("triangle with feet:", feet.n, "vertices,", feet.m, "edges")

print("star K(1,3):", star(4).edges)
print("generate('cycle', 4):", generate("cycle", 4).edges)

# ## Seeded random graphs
#
# Sampling retries until connected; the same seed always gives the same
# graph.

r1 = random_connected(8, 0.35, seed=11)
r2 = random_connected(8, 0.35, seed=11)
assert r1 == r2
print("\nrandom_connected(8, 0.35, seed=11):", r1.edges)
