"""Both engines for E_mu and P_lambda, and the bijection between them.

Run:  python demos/04_macdonald_polynomials.py
"""

import random

from macpath.macdonald import e_mu_pqls, p_lambda_pqls
from macpath.pqls import pr_pair
from macpath.qt import char_equal
from macpath.ramyip import (WalkContext, e_mu_ramyip, enumerate_walks,
                            p_lambda_ramyip, xi)
from macpath.root_system import root_system_from_label

rs = root_system_from_label("A2")
lam = (1, 1)
w0 = rs.longest_element()
mu = w0.apply_weight(lam)

E_pairs = e_mu_pqls(rs, lam, mu)
E_walks = e_mu_ramyip(rs, lam, mu)
print("E for the lowest orbit weight, from the chain-pair model:")
for w in sorted(E_pairs.terms):
    print(f"  e^{w} : {E_pairs.coeff(w).latex()}")
print("agrees with the alcove-walk formula:",
      char_equal(E_pairs, E_walks, rng=random.Random(0)))

P_pairs = p_lambda_pqls(rs, lam)
P_walks = p_lambda_ramyip(rs, lam)
print("\nP for the adjoint weight:")
for w in sorted(P_pairs.terms):
    print(f"  e^{w} : {P_pairs.coeff(w).latex()}")
print("agrees with the alcove-walk formula:",
      char_equal(P_pairs, P_walks, rng=random.Random(0)))

print("\nwalk-by-walk image of the bijection (first few):")
ctx = WalkContext(rs, lam, mu)
for walk in list(enumerate_walks(rs, lam, mu, ctx=ctx))[:6]:
    pair = xi(walk)
    print(f"  J = {walk.J}: ed weight {walk.ed().wt()}, "
          f"pair weight {pr_pair(pair, ctx.order).wt(lam)}, "
          f"L = R: {walk.l_statistic() == pair.r_statistic(ctx.order)}")
