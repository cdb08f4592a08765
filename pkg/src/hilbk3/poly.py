"""Univariate polynomials and rational functions with exact rational coefficients."""

from fractions import Fraction
from math import gcd, lcm


class Poly:
    """Dense univariate polynomial, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append("%s*L^%d" % (c, i) if i else str(c))
        return " + ".join(terms)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        while len(r) >= len(other.coeffs) and any(r):
            shift = len(r) - len(other.coeffs)
            f = r[-1] / other.lead
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        return self * (1 / self.lead) if self.coeffs else self

    def content(self):
        """Positive rational c with self/c integral and primitive."""
        if not self.coeffs:
            return Fraction(0)
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        g = 0
        for c in self.coeffs:
            g = gcd(g, int(c * den))
        return Fraction(g, den)

    def primitive(self):
        """Integral primitive associate with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return self * (1 / c)

    def integer_coeffs(self):
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial is not integral")
        return [int(c) for c in self.coeffs]


def poly_gcd(f, g):
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def resultant(f, g):
    """Resultant over Q by the Euclidean recursion."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.degree, g.degree
    if n == 0:
        return g.lead**m
    if m < n:
        sign = -1 if (m * n) % 2 else 1
        return sign * resultant(g, f)
    r = f % g
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lead ** (m - r.degree) * resultant(g, r)


def discriminant(f):
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lead


def sturm_count_real_roots(f):
    """Number of distinct real roots of f (Sturm's theorem at ±infinity)."""
    if f.degree < 1:
        return 0
    seq = [f, f.derivative()]
    while True:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)

    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def sgn(x):
        return (x > 0) - (x < 0)

    at_pos = [sgn(p.lead) for p in seq]
    at_neg = [sgn(p.lead) * (-1 if p.degree % 2 else 1) for p in seq]
    return changes(at_neg) - changes(at_pos)


class RationalFunction:
    """numerator/denominator in Q(L), kept in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly([num])
        den = Poly([1]) if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if not num.is_zero() else den.monic()
        num, den = num // g, den // g
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def _coerce(self, other):
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at %s" % x)
        return Fraction(self.num(x)) / d

    def __repr__(self):
        return "(%r)/(%r)" % (self.num, self.den)
