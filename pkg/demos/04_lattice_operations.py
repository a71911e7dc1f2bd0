"""Joins and meets: the constructive operations against the brute oracle.

Comparability of cycle tubings reduces to inversion sets: j lies below k
exactly when every inversion of j is an inversion or an incomparable pair
of k. Joins are computed constructively by joining the cut images on the
path, lifting both arguments into the fiber over that join, and joining
the resulting shuffle words; the brute-force poset oracle confirms every
answer.

Run:  python3 demos/04_lattice_operations.py
"""

import tubelat as tl
from tubelat import cycle_lattice as cl
from tubelat import lattice_analysis as la

c5 = tl.make_graph("cycle", 5)
elems = tl.enumerate_maximal_tubings(c5)
a, b = elems[23], elems[41]

print("=== Two tubings of the 5-cycle ===")
print("  a:", a.tubes())
print("  b:", b.tubes())
print("  a <= b?", cl.leq_cycle(a, b), "  b <= a?", cl.leq_cycle(b, a))

print()
print("=== Their join and meet ===")
j = cl.join_cycle(a, b)
m = cl.meet_cycle(a, b)
print("  join:", j.tubes())
print("  meet:", m.tubes())

print()
print("=== The brute-force oracle agrees ===")
p = la.build_poset(c5)
index = {t.tube_masks: i for i, t in enumerate(p.objects)}
oracle_join = la.brute_join(p, index[a.tube_masks], index[b.tube_masks])
oracle_meet = la.brute_meet(p, index[a.tube_masks], index[b.tube_masks])
print("  unique minimal upper bound:", p.objects[oracle_join] == j)
print("  unique maximal lower bound:", p.objects[oracle_meet] == m)
print("  the whole poset is a lattice:", la.is_lattice(p))

print()
print("=== The cut map is a quotient of lattices ===")
print("  cut(a v b) == cut(a) v cut(b)?",
      cl.cut(j) == cl.join_path(cl.cut(a), cl.cut(b)))
print("  cut(a ^ b) == cut(a) ^ cut(b)?",
      cl.cut(m) == cl.meet_path(cl.cut(a), cl.cut(b)))

print()
print("=== Moebius values stay tiny ===")
matrix = la.mobius(p)
values = {v for row in matrix for v in row}
print("  values taken on the 5-cycle lattice:", sorted(values))
