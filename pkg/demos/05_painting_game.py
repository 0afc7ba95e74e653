"""The online version: colors are revealed one class at a time.

The exact solver settles small games; on whittled cores a painter that
always colors a kernel of the revealed set wins with d(v) tokens.
"""

from brookscolor.choosability import kernel_orient, kernel_whittle
from brookscolor.families import complete_bipartite, cycle_graph, petersen_graph
from brookscolor.graph import Graph, to_mask
from brookscolor.oracle import chi_list_exact
from brookscolor.paintability import (chi_paint_exact, defeats_all_adversaries,
                                      painter_kernel_strategy)

theta = Graph.from_edges(7, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 6), (6, 1)])
for name, g in [("C5", cycle_graph(5)), ("K33", complete_bipartite(3, 3)), ("theta(2,2,4)", theta)]:
    print(f"{name}: choice number {chi_list_exact(g)}, paint number {chi_paint_exact(g)}")

g = petersen_graph()
core = kernel_whittle(g)
d = kernel_orient(g, core)
sub, _ = g.induced(to_mask(core.h))
tokens = [sub.degree(v) for v in range(sub.n)]
ok, line = defeats_all_adversaries(sub, tokens, painter_kernel_strategy(d, tokens))
print(f"\nkernel painter on the Petersen core ({sub.n} vertices) beats every adversary: {ok}")
