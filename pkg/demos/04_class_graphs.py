"""The order graph, the size graph, the prime graph, and clique search.

Two graphs live on the non-central conjugacy classes: the order graph
joins classes whose representative orders share a prime, the size graph
joins classes whose sizes do. The prime graph lives on the primes
dividing |G|. The central question downstream: does the order graph
contain a complete subgraph on n vertices?
"""

from classgraphs import (
    alternating,
    decompose,
    find_clique,
    max_clique,
    order_class_graph,
    prime_graph,
    primes_adjacent_to_two,
    size_class_graph,
    sl2,
    suzuki8,
)
from classgraphs.cli import graph_to_dot

a5 = decompose(alternating(5))
order_graph = order_class_graph(a5)
print("A5 order graph vertices:", order_graph.labels)
print("A5 order graph edges:", order_graph.edges(), "-- only the two order-5 classes touch")
print("A5 size graph edges:", size_class_graph(a5).edges(), "-- sizes 15,20,12,12 form K4")

pg = prime_graph(alternating(7))
print("\nA7 prime graph on", pg.vertex_keys, "edges", pg.edges())
print("primes adjacent to 2:", sorted(primes_adjacent_to_two(pg)))

# SL(2,5): the four classes of even element order form a 4-clique.
sl = decompose(sl2(5))
graph = order_class_graph(sl)
print("\nSL(2,5) order graph max clique:", max_clique(graph))
print("a witness 4-clique:", find_clique(graph, 4))

# Sz(8): ten non-central classes, clique number exactly 3.
sz = decompose(suzuki8())
graph = order_class_graph(sz)
print(f"\nSz(8) order graph: {graph.vertex_count} vertices, "
      f"max clique {max_clique(graph)}")

# Graphs export to DOT with pinned labels C<index>:o=<order>,s=<size>.
print("\nDOT form of the A5 order graph:")
print(graph_to_dot(order_graph, "order:A5"))
