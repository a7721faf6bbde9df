"""The double Bruhat graph, restricted levels, and edge degrees.

Run:  python demos/02_double_bruhat_graph.py > dbg.dot   (tail is DOT text)
"""

from fractions import Fraction

from macpath.dbg import (ReflectionOrder, allowed_labels, classify_edge,
                         deg_edge, exists_path, export_dot)
from macpath.root_system import format_element, root_system_from_label

rs = root_system_from_label("A2")
lam = (1, 1)
w0 = rs.longest_element()

print("edges out of e and their kinds:")
for k in rs.positive_root_indices():
    target = rs.reflection(k)
    print(f"  e --{rs.roots[k]}--> {format_element(target)}: "
          f"{classify_edge(rs.identity(), k)}")

print("\nlabels allowed at level b:")
for b in (Fraction(0), Fraction(1, 2), Fraction(1, 3)):
    labels = [rs.roots[k] for k in allowed_labels(rs, lam, b)]
    print(f"  b = {b}: {labels}")

print("\nreachability at b = 1/2: e -> w0?",
      exists_path(rs.identity(), w0, Fraction(1, 2), lam))
print("reachability at b = 1/3: s1 -> s2?",
      exists_path(rs.simple_reflection(0), rs.simple_reflection(1),
                  Fraction(1, 3), lam))

order = ReflectionOrder(rs, lam, w0.apply_weight(lam))
print("\nreflection order (largest first):",
      [rs.roots[k] for k in order.beta_indices])

th = rs.root_index[(1, 1)]
print("\nedge degrees at the long label:")
print("  Bruhat, b = 1/2:", deg_edge(rs.identity(), th, Fraction(1, 2), lam).latex())
print("  quantum, b = 1/2:", deg_edge(w0, th, Fraction(1, 2), lam).latex())

print("\nDOT of the level-1/2 graph:\n")
print(export_dot(rs, lam, Fraction(1, 2)))
