"""q = t = 0 characters, Hall-Littlewood at q = 0, and the Jack limit.

Run:  python demos/05_specializations.py
"""

from fractions import Fraction

from macpath.macdonald import (character_q0t0, demazure_character, e_mu_pqls,
                               hall_littlewood, jack, p_lambda_pqls,
                               weyl_character)
from macpath.root_system import (format_element, orbit_with_reps,
                                 root_system_from_label, v_of_mu)

rs = root_system_from_label("A2")
lam = (1, 1)

P = p_lambda_pqls(rs, lam)
print("P at q = t = 0 versus the Freudenthal character:")
print("  limit:", sorted(character_q0t0(P).items()))
wc = weyl_character(rs, lam)
print("  oracle:", sorted((w, c.as_scalar()) for w, c in wc.terms.items()))

print("\nE at q = t = 0 versus Demazure characters:")
for mu in sorted(orbit_with_reps(rs, lam)):
    vals = character_q0t0(e_mu_pqls(rs, lam, mu))
    v = v_of_mu(rs, lam, mu)
    dem = demazure_character(rs, lam, v)
    same = vals == {w: c.as_scalar() for w, c in dem.terms.items()}
    print(f"  mu = {mu}: matches Demazure at {format_element(v)}: {same}")

report = hall_littlewood(rs, lam, P)
print("\nHall-Littlewood, zero-weight coefficient by the two routes:")
print("  q = 0 specialization: ", report.from_specialization.coeff((0, 0)).latex())
print("  prefactor-free sum:   ", report.literal_sum.coeff((0, 0)).latex())
print("  routes agree:", report.routes_agree,
      " (the disagreement is expected and documented)")

print("\nJack zero-weight coefficients:")
for gamma in (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2)):
    J = jack(rs, lam, gamma)
    print(f"  gamma = {gamma}: {J.coeff((0, 0)).as_scalar()}"
          f"  (closed form 6/(1/gamma + 2) = {6 / (1 / gamma + 2)})")
