"""Chern restriction, Fujiki constants, and elimination to the elliptic curve.

The class of a Lagrangian P^3 in a K3^[3]-type sixfold X is written
[P^3] = a·λ·c2(X) + b·λ^3 + d·η with L = (λ, λ).  Intersecting with
λ^3, λ·c2 and [P^3] itself gives three relations in (a, b, d, L);
eliminating a and b leaves a cubic in L equal to a multiple of d^2.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import linalg
from .k3 import LATTICE, RANK
from .poly import Poly, RationalFunction

HILB_N = 3


@dataclass(frozen=True)
class BBLattice:
    """H^2(S^[n], Z) = Λ_K3 ⊕ Zδ with (δ, δ) = -2(n-1)."""

    n: int = HILB_N

    @property
    def delta_square(self):
        return -2 * (self.n - 1)

    @property
    def gram(self):
        size = RANK + 1
        g = [[0] * size for _ in range(size)]
        for i in range(RANK):
            for j in range(RANK):
                g[i][j] = LATTICE.gram[i][j]
        g[RANK][RANK] = self.delta_square
        return g

    def discriminant(self):
        return abs(linalg.det(self.gram))

    def delta_dual(self):
        """δ^v as a rational vector: orthogonal to H^2(S) with (δ^v, δ) = 1."""
        v = [Fraction(0)] * (RANK + 1)
        v[RANK] = Fraction(1, self.delta_square)
        return v

    def form(self, u, v):
        g = self.gram
        return sum(Fraction(u[i]) * g[i][j] * v[j] for i in range(RANK + 1) for j in range(RANK + 1) if g[i][j])

    def delta(self):
        v = [0] * (RANK + 1)
        v[RANK] = 1
        return v

    def embedding_index(self):
        """[H_2 : H^2], the index of the lattice in its dual."""
        return int(self.discriminant())


def chern_restriction(n, j):
    """Coefficient of h^{2j} in c(T_X|P^n) = c(T_{P^n})·c(T_{P^n}^v) = (1 - h^2)^{n+1}."""
    if not 0 <= j <= n:
        raise ValueError("j must lie in [0, n]")
    h = Poly.x()
    total = (Poly([1]) - h * h) ** (n + 1)
    return int(total[2 * j])


@dataclass(frozen=True)
class FujikiConstants:
    e0: Fraction  # f^6 = e0 q^3
    e2: Fraction  # c2 f^4 = e2 q^2
    e4: Fraction  # c4 f^2 = e4 q
    e22: Fraction  # c2^2 f^2 = e22 q
    constant_term: Fraction

    def as_tuple(self):
        return (self.e0, self.e2, self.e4, self.e22)


def riemann_roch_sections():
    """χ(O_X(f)) as a polynomial in q = (f, f): (q+8)(q+6)(q+4)/48."""
    q = Poly.x()
    return (q + 8) * (q + 6) * (q + 4) * Fraction(1, 48)


def fujiki_constants():
    """Match the Riemann-Roch expansion against χ(O_X(f)) coefficient by coefficient.

    RR: χ = f^6/6! + c2 f^4/(12·4!) + f^2(3c2^2 - c4)/(720·2!) + 4, and
    c2^2 f^2 = (5/2) c4 f^2.  Unknowns are (e0, e2, e4, e22).
    """
    target = riemann_roch_sections()
    rows = [
        [Fraction(1, 720), 0, 0, 0],
        [0, Fraction(1, 12 * 24), 0, 0],
        [0, 0, Fraction(-1, 1440), Fraction(3, 1440)],
        [0, 0, Fraction(-5, 2), 1],
        [0, 0, 0, 0],
    ]
    rhs = [target[3], target[2], target[1], 0, target[0] - 4]
    e0, e2, e4, e22 = linalg.solve(rows, rhs)
    return FujikiConstants(e0, e2, e4, e22, target[0])


@dataclass(frozen=True)
class DiophantineSystem:
    """The three relations; eta_sq is the self-intersection of η."""

    eta_sq: Fraction
    fujiki: FujikiConstants

    def relation_lambda_cubed(self, a, b, L):
        """[P^3]λ^3 = (L/4)^3, divided by L."""
        f = self.fujiki
        return L * (f.e0 * b - Fraction(1, 64)) + f.e2 * a

    def relation_lambda_c2(self, a, b, L):
        """[P^3]λc2 = -L, using c2|P^3 = -4h^2, divided by L."""
        f = self.fujiki
        return f.e2 * b * L + f.e22 * a + 1

    def self_intersection(self, a, b, L, d):
        """[P^3]^2; equals c3(T^v_{P^3}) = -4 on solutions."""
        f = self.fujiki
        return f.e0 * b * b * L**3 + 2 * f.e2 * a * b * L**2 + f.e22 * L * a * a + d * d * self.eta_sq

    rhs_self_intersection = -4


def diophantine_system(eta_sq):
    return DiophantineSystem(Fraction(eta_sq), fujiki_constants())


@dataclass(frozen=True)
class EllipticModel:
    """c_d·d^2 = c3·L^3 + c2·L^2 + c1·L + c0 with coprime integers."""

    c_d: int
    c3: int
    c2: int
    c1: int
    c0: int
    a_of_L: RationalFunction
    b_of_L: RationalFunction

    def coefficients(self):
        return (self.c_d, self.c3, self.c2, self.c1, self.c0)

    def cubic(self, L):
        return self.c3 * L**3 + self.c2 * L**2 + self.c1 * L + self.c0

    def holds(self, L, d):
        return self.c_d * Fraction(d) ** 2 == self.cubic(L)


# 2^14·3^2·11·443 d^2 = 5^2 L^3 + 2^5·3^2 L^2 + 2^8·5 L + 2^16·3·11
PUBLISHED_MODEL = (2**14 * 3**2 * 11 * 443, 25, 2**5 * 9, 2**8 * 5, 2**16 * 3 * 11)


def solve_linear_relations(system):
    """a(L), b(L) from the two relations linear in a and b (Cramer's rule over Q(L))."""
    f = system.fujiki
    L = RationalFunction(Poly.x())
    # e2·a + e0·L·b = L/64 ;  e22·a + e2·L·b = -1
    m11, m12, r1 = RationalFunction(f.e2), L * f.e0, L * Fraction(1, 64)
    m21, m22, r2 = RationalFunction(f.e22), L * f.e2, RationalFunction(-1)
    det = m11 * m22 - m12 * m21
    a = (r1 * m22 - m12 * r2) / det
    b = (m11 * r2 - r1 * m21) / det
    return a, b


def eliminate(eta_sq):
    eta_sq = Fraction(eta_sq)
    if eta_sq == 0:
        raise ValueError("eta_sq must be nonzero")
    system = diophantine_system(eta_sq)
    a, b = solve_linear_relations(system)
    L = RationalFunction(Poly.x())
    f = system.fujiki
    lhs = b * b * L * L * L * f.e0 + a * b * L * L * (2 * f.e2) + a * a * L * f.e22
    # lhs + eta_sq·d^2 = -4  =>  -eta_sq·d^2 = lhs + 4
    rhs = lhs + 4
    if rhs.den.degree != 0:
        raise ArithmeticError("elimination left a pole in L")
    cubic = rhs.num * (1 / rhs.den.lead)
    coeffs = [-eta_sq] + [cubic[3], cubic[2], cubic[1], cubic[0]]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[1] < 0:
        ints = [-c for c in ints]
    return EllipticModel(*ints, a_of_L=a, b_of_L=b)


@dataclass(frozen=True)
class Conclusion:
    ell_square: Fraction
    rho_square: Fraction
    a: Fraction
    b: Fraction
    rho_c2_coeff: Fraction  # coefficient of ρ·c2(X) in [P^3]
    rho_cubed_coeff: Fraction  # coefficient of ρ^3


def conclude(L, d, model=None):
    """(ℓ,ℓ) and the ρ-form of [P^3] from the certified solution (L, d) = (-48, 0).

    ℓ = λ/4 and ρ = 2ℓ = λ/2, so (ℓ,ℓ) = L/16, (ρ,ρ) = L/4 and
    a·λc2 + b·λ^3 = 2a·ρc2 + 8b·ρ^3.
    """
    if (L, Fraction(d)) != (-48, 0):
        raise ValueError("only the certified solution (L, d) = (-48, 0) is accepted")
    model = model or eliminate(-3 * 443)
    if not model.holds(L, d):
        raise ArithmeticError("(L, d) does not lie on the elimination curve")
    a = model.a_of_L(L)
    b = model.b_of_L(L)
    return Conclusion(Fraction(L, 16), Fraction(L, 4), a, b, 2 * a, 8 * b)


def primitivity_check(ell_square=-3, m_bound=101):
    """Show λ = 4ℓ is divisible by 2: writing ℓ = D + mδ^v, odd m is impossible.

    (ℓ,ℓ) = (D,D) + m^2 (δ^v,δ^v) = (D,D) - m^2/4, and (D,D) must be an even
    integer.  Returns (all odd m excluded, {m: (D,D)} for the even m that fit).
    """
    dual_sq = Fraction(-1, 4)
    excluded = True
    allowed = {}
    for m in range(-m_bound, m_bound + 1):
        dd = Fraction(ell_square) - m * m * dual_sq
        ok = dd.denominator == 1 and dd.numerator % 2 == 0
        if m % 2 and ok:
            excluded = False
        if ok:
            allowed[m] = int(dd)
    return excluded, allowed
