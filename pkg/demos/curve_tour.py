"""The curve E, its descent, and its points over Z[1/2].

Run: python3 demos/curve_tour.py   (about 10 seconds)
"""

from hilbk3 import curve as ec
from hilbk3 import descent, integral
from hilbk3.arith import format_factored

print("a =", format_factored(ec.A))
print("b =", format_factored(ec.B))
print("discriminant =", format_factored(ec.E.discriminant()))
print("P on E:", ec.on_curve(ec.P))
print("e(P) =", format_factored(ec.P.e), " e(P+Q) =", format_factored(ec.add_Q(ec.P).e))

tors = ec.torsion_subgroup()
print("torsion:", tors.torsion, "bounds from", tors.bound_primes)

c, cp = descent.torsor_survey()
print("\nC  candidates: %d, local survivors: %d, survivors: %s" % (len(c.candidates), len(c.local_survivors), sorted(c.survivors)))
for delta, reason in sorted(c.killed.items()):
    print("   killed %6d  %s" % (delta, reason))
print("C' candidates: %d, survivors: %s" % (len(cp.candidates), sorted(cp.survivors)))
print("|E(Q)/2E(Q)|, rank =", descent.two_selmer_rank(c, cp))

sat = descent.saturation_check()
print("saturation: %d candidates, passing x-values %d" % (sat.candidates, len(sat.passing)))

print("\n2^j P tower, alpha mod 7:")
pat = integral.mod7_pattern(4)
for j, r in pat.alpha_mod7.items():
    print("  j = %d: %d" % (j, r))
for i in (2, 3, 4):
    cert = integral.prime_q_argument(i)
    print("  q for i = %d: %s (%s)" % (i, cert.q or "-", cert.status))

scan = integral.bounded_scan(10)
print("\nscan |n| <= 10, points in Z[1/2]:", scan.z_half_points)
