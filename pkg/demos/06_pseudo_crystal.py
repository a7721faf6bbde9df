"""Root operators for arbitrary roots, axioms, and connectedness.

Run:  python demos/06_pseudo_crystal.py > crystal.dot   (tail is DOT text)
"""

from macpath.pqls import PqlsPath
from macpath.pseudo_crystal import (connectedness, crystal_graph, e_op, eps,
                                    export_dot, f_op, m_value, phi,
                                    straight_path, verify_axioms)
from macpath.root_system import root_system_from_label

rs = root_system_from_label("A2")
lam = (1, 1)
from fractions import Fraction as F

eta_e = straight_path(rs)
eta_w0 = PqlsPath([rs.longest_element()], [F(0), F(1)])
th = rs.root_index[(1, 1)]

print("height minima and string lengths at the long root:")
for name, eta in (("straight", eta_e), ("lowest", eta_w0)):
    print(f"  {name}: m = {m_value(rs, eta, lam, th)}, "
          f"eps = {eps(rs, lam, eta, th)}, phi = {phi(rs, lam, eta, th)}")

print("\nraising the lowest path along the long root:")
cur = eta_w0
while cur is not None:
    print("  ", cur)
    cur = e_op(rs, lam, cur, th)

print("\nlowering the straight path along the long root:")
cur = eta_e
while cur is not None:
    print("  ", cur)
    cur = f_op(rs, lam, cur, th)

rep = verify_axioms(rs, lam)
print(f"\naxioms over {rep.checked_pairs} (path, root) combinations:",
      "all hold" if rep.ok() else rep.failures[:3])

conn = connectedness(rs, lam)
print("every path raises to the straight one:", conn.ok())
for key, word in sorted(conn.raising_words.items(), key=lambda kv: len(kv[1]))[:5]:
    labels = [rs.roots[a] for a in word]
    print("  raising word", labels)

print("\nDOT of the graph:\n")
print(export_dot(rs, crystal_graph(rs, lam)))
