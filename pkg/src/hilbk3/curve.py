"""Exact arithmetic on E: y^2 = x^3 + a x^2 + b x over Q and over small F_p."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .arith import factorint, is_prime, lcm


@dataclass(frozen=True)
class Curve:
    a: int
    b: int

    def __post_init__(self):
        if self.discriminant() == 0:
            raise ValueError("singular curve")

    def discriminant(self):
        return 16 * self.b**2 * (self.a**2 - 4 * self.b)

    def rhs(self, x):
        return x**3 + self.a * x**2 + self.b * x

    def bad_primes(self):
        return sorted(factorint(self.discriminant()))

    def isogenous(self):
        """E': y^2 = x^3 - 2a x^2 + (a^2 - 4b) x."""
        return Curve(-2 * self.a, self.a**2 - 4 * self.b)


A = -(3**2) * 11 * 23 * 443
B = 2**2 * 5**2 * 11**3 * 13 * 443**2
E = Curve(A, B)


@dataclass(frozen=True)
class CurvePoint:
    """O when ``e == 0``; otherwise (alpha/e^2, beta/e^3) in lowest terms."""

    alpha: int
    beta: int
    e: int

    @classmethod
    def infinity(cls):
        return cls(0, 1, 0)

    @classmethod
    def from_xy(cls, x, y):
        x, y = Fraction(x), Fraction(y)
        d = x.denominator
        e = isqrt(d)
        if e * e != d:
            raise ValueError("x-denominator %d is not a square" % d)
        if y.denominator != e**3:
            raise ValueError("y-denominator is not e^3")
        return cls(x.numerator, y.numerator, e)

    def is_infinity(self):
        return self.e == 0

    @property
    def x(self):
        return Fraction(self.alpha, self.e**2)

    @property
    def y(self):
        return Fraction(self.beta, self.e**3)

    def __repr__(self):
        if self.is_infinity():
            return "O"
        return "(%s, %s)" % (self.x, self.y)


O = CurvePoint.infinity()
Q = CurvePoint(0, 0, 1)

# the Mordell-Weil generator, coordinates taken as given
P = CurvePoint.from_xy(
    Fraction(2 * 3**2 * 11**2 * 83**2 * 443**2 * 6481**2, 7**4 * 41**2 * 71**2 * 193**2),
    Fraction(
        2 * 3 * 11**3 * 31 * 83 * 163 * 443**2 * 6481 * 240623 * 3691717,
        7**6 * 41**3 * 71**3 * 193**3,
    ),
)


def from_Ld(L, d):
    """x = 2^-4·5^2·11·443·(L + 48), y = 2·3·5^2·11^2·443^2·d."""
    x = Fraction(5**2 * 11 * 443, 2**4) * (L + 48)
    y = 2 * 3 * 5**2 * 11**2 * 443**2 * Fraction(d)
    return x, y


def to_Ld(x, y):
    L = Fraction(x) * Fraction(2**4, 5**2 * 11 * 443) - 48
    d = Fraction(y) / (2 * 3 * 5**2 * 11**2 * 443**2)
    return L, d


def on_curve(pt, curve=E):
    if pt.is_infinity():
        return True
    return pt.y**2 == curve.rhs(pt.x)


def neg(pt):
    return pt if pt.is_infinity() else CurvePoint(pt.alpha, -pt.beta, pt.e)


def add(p1, p2, curve=E):
    """Chord-tangent addition in exact rationals."""
    if p1.is_infinity():
        return p2
    if p2.is_infinity():
        return p1
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    if x1 == x2:
        if y1 == -y2:
            return O
        slope = (3 * x1 * x1 + 2 * curve.a * x1 + curve.b) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - curve.a - x1 - x2
    y3 = -(y1 + slope * (x3 - x1))
    return CurvePoint.from_xy(x3, y3)


def double(pt, curve=E):
    return add(pt, pt, curve)


def double_x_closed_form(pt, curve=E):
    """x(2R) = (α^2 - b e^4)^2 / (4 e^2 (α^3 + a α^2 e^2 + b α e^4)), unreduced.

    Returns (numerator, denominator) before cancellation.
    """
    al, e = pt.alpha, pt.e
    num = (al * al - curve.b * e**4) ** 2
    den = 4 * e * e * (al**3 + curve.a * al * al * e * e + curve.b * al * e**4)
    return num, den


def add_Q(pt, curve=E):
    """R + (0,0) = (b/x, -b·y/x^2)."""
    if pt.is_infinity():
        return Q
    if pt == Q:
        return O
    x, y = pt.x, pt.y
    return CurvePoint.from_xy(curve.b / x, -curve.b * y / (x * x))


def multiply(n, pt, curve=E):
    if n < 0:
        return multiply(-n, neg(pt), curve)
    result, base = O, pt
    while n:
        if n & 1:
            result = add(result, base, curve)
        base = add(base, base, curve)
        n >>= 1
    return result


def combination(n, k, curve=E):
    """nP + kQ."""
    pt = multiply(n, P, curve)
    return add_Q(pt, curve) if k % 2 else pt


def discriminant_factored(curve=E):
    d = curve.discriminant()
    return (-1 if d < 0 else 1), factorint(d)


# ---- reduction modulo p ----------------------------------------------------

INF = None  # the point at infinity in E(F_p)


def reduce_point(pt, p):
    """Image of a rational point in E(F_p) (p must not divide the model's denominators)."""
    if pt.is_infinity() or pt.e % p == 0:
        return INF
    einv = pow(pt.e, -1, p)
    return (pt.alpha * einv * einv % p, pt.beta * einv**3 % p)


def add_mod(p1, p2, p, curve=E):
    if p1 is INF:
        return p2
    if p2 is INF:
        return p1
    a, b = curve.a % p, curve.b % p
    (x1, y1), (x2, y2) = p1, p2
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return INF
        slope = (3 * x1 * x1 + 2 * a * x1 + b) * pow(2 * y1, -1, p) % p
    else:
        slope = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (slope * slope - a - x1 - x2) % p
    y3 = (-(y1 + slope * (x3 - x1))) % p
    return (x3, y3)


def multiply_mod(n, pt, p, curve=E):
    result, base = INF, pt
    while n:
        if n & 1:
            result = add_mod(result, base, p, curve)
        base = add_mod(base, base, p, curve)
        n >>= 1
    return result


def points_mod(p, curve=E):
    """All affine points of the reduction mod p (singular ones included)."""
    a, b = curve.a % p, curve.b % p
    roots = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    out = []
    for x in range(p):
        for y in roots.get((x**3 + a * x * x + b * x) % p, ()):
            out.append((x, y))
    return out


def singular_points_mod(p, curve=E):
    a, b = curve.a % p, curve.b % p
    return [
        (x, y)
        for x, y in points_mod(p, curve)
        if (2 * y) % p == 0 and (3 * x * x + 2 * a * x + b) % p == 0
    ]


@dataclass(frozen=True)
class GroupCertificate:
    p: int
    order: int
    two_torsion: int  # affine points with y = 0, i.e. elements of order 2
    exponent: int


def count_points(p, curve=E):
    if not is_prime(p) or p > 10**4:
        raise ValueError("p must be a prime <= 10^4")
    if curve.discriminant() % p == 0:
        raise ValueError("bad reduction at %d" % p)
    pts = points_mod(p, curve)
    order = len(pts) + 1
    exponent = 1
    for pt in pts:
        k, q = 1, pt
        while q is not INF:
            q = add_mod(q, pt, p, curve)
            k += 1
        exponent = lcm(exponent, k)
    two = sum(1 for _, y in pts if y == 0)
    return GroupCertificate(p, order, two, exponent)


def double_subgroup_mod(p, curve=E):
    """2·E(F_p) as a set of points (INF included as None)."""
    pts = [INF] + points_mod(p, curve)
    return {add_mod(q, q, p, curve) for q in pts}


SINGULAR_AT_ORIGIN_PRIMES = (2, 5, 11, 13, 443)


def singular_point(p, curve=E):
    """The unique singular point of E mod p for the multiplicative-free bad primes."""
    if p not in SINGULAR_AT_ORIGIN_PRIMES:
        raise ValueError("singular_point is certified only for p in %s" % (SINGULAR_AT_ORIGIN_PRIMES,))
    sing = singular_points_mod(p, curve)
    if sing != [(0, 0)]:
        raise ArithmeticError("unexpected singular locus %r mod %d" % (sing, p))
    return sing[0]


@dataclass(frozen=True)
class TorsionCertificate:
    a2_minus_4b: int
    rational_two_torsion: tuple
    bound_primes: tuple  # (p, |E(F_p)|, exponent)
    excluded_odd: dict  # odd prime ℓ -> prime p with ℓ ∤ |E(F_p)|
    torsion: tuple


def torsion_subgroup(curve=E):
    """Certify E(Q)_tors = {O, (0,0)}.

    x^2 + a x + b has negative discriminant, so (0,0) is the only rational
    2-torsion point.  Prime-to-p torsion injects into E(F_p) for good p;
    |E(F_3)| = 4 kills odd ℓ ≠ 3 and |E(F_19)| = 14 kills ℓ = 3.  The
    2-primary part is cyclic and embeds in E(F_3), which has exponent 2.
    """
    disc2 = curve.a**2 - 4 * curve.b
    two = [Q] if disc2 < 0 else None
    if two is None:
        raise ArithmeticError("x^2 + ax + b may have rational roots")
    f3 = count_points(3, curve)
    f19 = count_points(19, curve)
    excluded = {}
    for ell in sorted(set(factorint(f3.order)) | set(factorint(f19.order)) | {3, 5, 7}):
        if ell == 2:
            continue
        if ell != 3 and f3.order % ell:
            excluded[ell] = 3
        elif ell != 19 and f19.order % ell:
            excluded[ell] = 19
    # every odd ℓ outside {3} is coprime to |E(F_3)| = 4
    if f3.order != 4 or f3.exponent != 2 or 3 not in excluded:
        raise ArithmeticError("torsion bound failed")
    return TorsionCertificate(
        disc2,
        (O, Q),
        ((3, f3.order, f3.exponent), (19, f19.order, f19.exponent)),
        excluded,
        (O, Q),
    )


def denominator_valuation_free(pt, prime):
    """True when the normalized doubling fraction has no common factor at prime."""
    num, den = double_x_closed_form(pt)
    return not (num % prime == 0 and den % prime == 0)


def reduced_double(pt, curve=E):
    """(α(2R), e(2R)^2) from the closed form after cancelling the gcd."""
    num, den = double_x_closed_form(pt, curve)
    g = gcd(num, den)
    return num // g, den // g
