"""Tour of the root-system layer: roots, reflections, orders, cosets.

Run:  python demos/01_root_systems.py
"""

from macpath.root_system import (bruhat_leq, format_element, min_coset_rep,
                                 orbit_with_reps, parabolic,
                                 root_system_from_label, v_of_mu)

rs = root_system_from_label("A2")
print(f"type {rs.type_label}: {rs.npos} positive roots")
for k in rs.positive_root_indices():
    print(f"  root {rs.roots[k]}   coroot {rs.coroots[k]}   "
          f"<rho, coroot> = {rs.pair_rho_coroot(k)}")

w0 = rs.longest_element()
print("\nlongest element:", format_element(w0), "of length", w0.length())
print("w0 sends the adjoint weight (1,1) to", w0.apply_weight((1, 1)))

print("\nWeyl group, ordered by length:")
for w in sorted(rs.weyl_elements(), key=lambda w: (w.length(), w.perm)):
    print(f"  {format_element(w):12s} length {w.length()}")

print("\nBruhat order: e <= s1*s2 <= w0:",
      bruhat_leq(rs.identity(), rs.from_word([0, 1])),
      bruhat_leq(rs.from_word([0, 1]), w0))

pd = parabolic(rs, {0})
print("\nparabolic S = {1}: longest element", format_element(pd.longest_WS))
print("minimal coset representatives:",
      [format_element(w) for w in pd.min_coset_reps()])
print("floor of w0:", format_element(min_coset_rep(w0, {0})))

lam = (1, 0)
print(f"\norbit of {lam}:")
for mu in sorted(orbit_with_reps(rs, lam)):
    print(f"  {mu}  reached by v(mu) = {format_element(v_of_mu(rs, lam, mu))}")

g2 = root_system_from_label("G2")
phi = g2.highest_short_root_index
print("\nG2 highest short root", g2.roots[phi],
      "has <rho, coroot> =", g2.pair_rho_coroot(phi))
