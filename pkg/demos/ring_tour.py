"""Walk from the ring A{S_3} to the elliptic curve.

Run: python3 demos/ring_tour.py
"""

from hilbk3 import fujiki, hodge, symring
from hilbk3.arith import format_factored

d = symring.delta_class(3)
d3 = d * d * d
print("integrate(delta^6) =", symring.integrate(d3 * d3))

print("\nproduct table:")
for name, ok in hodge.verify_product_table():
    print("  %-8s %s" % (name, "ok" if ok else "MISMATCH"))

print("\nGram matrix of U, V, W:")
for row in hodge.middle_gram():
    print("  ", [str(x) for x in row])

print("\neta = 2U - V + 11W")
print("  eta^2 (ring) =", hodge.eta_squared())
print("  eta^2 (gram) =", hodge.eta_squared_via_gram())
print("  pairing with delta^3 =", hodge.eta_pairings()["eta.delta^3"])

f = fujiki.fujiki_constants()
print("\nFujiki constants:", [str(x) for x in f.as_tuple()])

model = fujiki.eliminate(-1329)
print("\nelimination curve c_d d^2 = c3 L^3 + c2 L^2 + c1 L + c0:")
for label, c in zip(("c_d", "c3", "c2", "c1", "c0"), model.coefficients()):
    print("  %-3s = %s" % (label, format_factored(c)))
print("  (L, d) = (-48, 0) lies on it:", model.holds(-48, 0))

c = fujiki.conclude(-48, 0, model)
print("\n(l, l) = %s, (rho, rho) = %s, [P^3] = %s rho^3 + %s rho c2" % (c.ell_square, c.rho_square, c.rho_cubed_coeff, c.rho_c2_coeff))
