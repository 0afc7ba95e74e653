"""Lists instead of a palette.

A connected graph can be colored from any lists with |L(v)| = d(v) unless
it is a Gallai tree.  For Gallai trees we can write down the bad lists;
for everything else there is both a direct coloring routine and an
orientation certificate.
"""

import random

from brookscolor.alon_tarsi import at_certify_degree_choosable
from brookscolor.choosability import (brooks_list_color, degree_choose_color, gallai_bad_lists,
                                      kernel_orient, kernel_whittle)
from brookscolor.families import bowtie_graph, gallai_random, petersen_graph
from brookscolor.graph import is_proper
from brookscolor.oracle import is_list_colorable

g = gallai_random(8, seed=4)
lists = gallai_bad_lists(g)
print("Gallai tree edges:", g.edges())
print("bad lists:", [sorted(x) for x in lists])
print("colorable?", is_list_colorable(g, lists)[0])

g = bowtie_graph().with_edge(1, 3)  # no longer a Gallai tree
rng = random.Random(1)
lists = [set(rng.sample(range(1, 8), g.degree(v))) for v in range(g.n)]
col = degree_choose_color(g, lists)
print("\ndegree lists:", [sorted(x) for x in lists])
print("coloring:", col, "proper:", is_proper(g, col, lists))
cert = at_certify_degree_choosable(g)
print(f"orientation certificate: H={sorted(cert.h)} EE={cert.ee} EO={cert.eo}")

# Petersen from arbitrary 3-lists via the kernel route.
g = petersen_graph()
core = kernel_whittle(g)
print("\nwhittled core H:", sorted(core.h), "cross degrees:", set(core.cross_degree.values()))
print("orientation arcs:", kernel_orient(g, core).arcs())
lists = [set(rng.sample(range(1, 7), 3)) for _ in range(g.n)]
print("list coloring:", brooks_list_color(g, lists))
