"""Repairing a stuck coloring with Kempe chain swaps.

We color a random cubic graph greedily except for one vertex, arranged so
that all three colors appear on its neighbours and none of them can simply
be recolored.  The repair loop then swaps chains until a color frees up.
"""

import random

import networkx as nx

from brookscolor.brooks import _free_colors, kempe_repair
from brookscolor.families import from_networkx
from brookscolor.graph import bits, is_proper, is_two_connected

rng = random.Random(11)
while True:
    g = from_networkx(nx.random_regular_graph(3, 12, seed=rng.randrange(10 ** 6)))
    if not is_two_connected(g):
        continue
    col = [0] * g.n
    order = list(range(1, g.n))
    rng.shuffle(order)
    for x in order:
        free = [c for c in (1, 2, 3) if c not in {col[y] for y in bits(g.adj[x])}]
        if not free:
            break
        col[x] = rng.choice(free)
    else:
        tight = len({col[x] for x in bits(g.adj[0])}) == 3
        if tight and not any(_free_colors(g, col, x, 3) for x in bits(g.adj[0])):
            break

print("neighbours of 0 and their colors:", {x: col[x] for x in bits(g.adj[0])})
trace = []
out = kempe_repair(g, 0, col, 3, trace)
for step in trace[0]["rules"]:
    print("  ", step)
print("repaired coloring is proper:", is_proper(g, out), "| color of 0:", out[0])
