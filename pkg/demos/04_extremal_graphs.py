"""Graphs that sit right at the edge of the bounds.

catlin(3) needs 8 colors although its largest clique has 6 vertices, so
the averaged bound ceil((omega + Delta + 1) / 2) is tight there.  Joining
C5 with a clique gives chi = Delta - 1 with omega = Delta - 2.
"""

from brookscolor.families import FamilySpec, bounds_report, generate
from brookscolor.oracle import oracle_report

rep = oracle_report(generate(FamilySpec("catlin", t=3)))
print(f"catlin(3): chi={rep.chi} omega={rep.omega} Delta={rep.max_degree}")
b = bounds_report(generate(FamilySpec("catlin", t=3)))
print(f"  averaged bound {b.reed_bound}, holds={b.reed_holds}")

for m in (2, 3, 4):
    r = oracle_report(generate(FamilySpec("join", m=m)))
    print(f"C5 join K{m}: chi={r.chi} omega={r.omega} Delta={r.max_degree}")

for fam in ("fig7_left", "fig7_right"):
    r = oracle_report(generate(FamilySpec(fam)))
    print(f"{fam}: n={len(r.coloring)} Delta={r.max_degree} omega={r.omega} alpha={r.alpha}")
