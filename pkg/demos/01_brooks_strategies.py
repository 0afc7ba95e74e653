"""Seven ways to color a graph with Delta colors.

Every strategy reduces to the same hard case (connected, regular,
2-connected, not complete) and then does something different with it.
The trace records which step fired.
"""

from brookscolor import color_brooks, STRATEGIES
from brookscolor.families import complete_graph, cycle_graph, petersen_graph, power

g = petersen_graph()
print(f"Petersen graph: n={g.n}, Delta={g.max_degree}")
for name in STRATEGIES:
    rep = color_brooks(g, name)
    steps = [t["step"] for t in rep.trace]
    print(f"  {name:<13} colors={rep.palette_size}  steps={steps}")

# The square of C8 is 4-regular and has no K5, so four colors suffice.
g = power(cycle_graph(8), 2)
rep = color_brooks(g, "partition")
print("\nC8 squared, partition strategy:", rep.coloring)
print("  moves:", rep.trace[0]["moves"] if rep.trace else "none needed")

# The two exceptions come back as certificates, not colorings.
for h in (complete_graph(5), cycle_graph(7)):
    rep = color_brooks(h, "lovasz")
    print(f"\n{h.n} vertices: {rep.outcome}, witness {rep.to_json()['exception']}")
