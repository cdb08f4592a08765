"""Local solvability of y^2 = F(X, Y) systems over Q_p and R.

A system is a list of binary forms F_1..F_r of even degree with integer
coefficients.  It is solvable at a place v when some (X : Y) in P^1(Q_v)
makes every F_i(X, Y) a square in Q_v (zero allowed).  Even degree means
the square class does not depend on the representative of (X : Y).

Over Q_p the search runs through residue classes t0 + p^k Z_p on the two
charts (X, Y) = (t, 1) and (1, p·s).  A class is settled when each form
has constant square class on it (checked from the Taylor expansion) or
has a root in it certified by Hensel's lemma.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arith import is_square_qp, valuation
from .poly import Poly, discriminant, sturm_count_real_roots

REAL = "R"


class Undecided(ArithmeticError):
    """The residue search hit its precision bound without settling a class."""


@dataclass(frozen=True)
class LocalResult:
    place: object
    solvable: bool
    precision: int  # deepest k reached (0 at the real place)
    bound: int
    witness: tuple = field(default=None)  # (chart, t0, k) of a successful class


def form_from_quartic(coeffs):
    """Binary form of degree 4 from c0 + c1 z + ... + c4 z^4."""
    coeffs = list(coeffs) + [0] * (5 - len(coeffs))
    return tuple(int(c) for c in coeffs[:5])


def _chart_polys(form, p, chart):
    """Integer coefficient lists of F(t, 1) or F(1, p·s)."""
    d = len(form) - 1
    if chart == 0:
        return list(form)
    # F(1, Y) = Σ c_i Y^{d-i}; substitute Y = p s
    out = [0] * (d + 1)
    for i, c in enumerate(form):
        out[d - i] = c * p ** (d - i)
    return out


def _shift(coeffs, t0, scale):
    """Coefficients of G(t0 + scale·s)."""
    d = len(coeffs) - 1
    out = [0] * (d + 1)
    for i, c in enumerate(coeffs):
        if not c:
            continue
        for j in range(i + 1):
            out[j] += c * comb(i, j) * t0 ** (i - j) * scale**j
    return out


def _val(n, p):
    return valuation(n, p) if n else None


def _status(h, p, k=0):
    """'sq', 'nsq', 'root' or None (unsettled) for G on t0 + p^k Z_p.

    h holds the coefficients of G(t0 + p^k s).  A root is certified by
    Hensel: v(G(t0)) > 2 v(G'(t0)), and the root lies in the class when
    v(G(t0)) - v(G'(t0)) >= k.
    """
    h0 = h[0]
    rest = [c for c in h[1:] if c]
    if h0 == 0:
        return "root"
    v0 = valuation(h0, p)
    if not rest:
        return "sq" if is_square_qp(h0, p) else "nsq"
    w = min(valuation(c, p) for c in rest)
    need = 3 if p == 2 else 1
    if w - v0 >= need:
        return "sq" if is_square_qp(h0, p) else "nsq"
    if h[1]:
        vd = valuation(h[1], p) - k
        if v0 > 2 * vd and v0 - vd >= k:
            return "root"
    return None


def _precision_bound(forms, p, extra):
    prod = Poly([1])
    for f in forms:
        prod = prod * Poly(f)
    if prod.degree < 1:
        base = 0
    else:
        disc = discriminant(prod)
        base = valuation(disc, p) if disc else 0
    return base + extra + (4 if p == 2 else 0)


def _search_chart(polys, p, chart, bound):
    """Depth-first search over residue classes; returns (found, witness, depth)."""
    start_k = 0
    stack = [(0, start_k)]
    deepest = 0
    while stack:
        t0, k = stack.pop()
        deepest = max(deepest, k)
        scale = p**k
        statuses = [_status(_shift(g, t0, scale), p, k) for g in polys]
        if "nsq" in statuses:
            continue
        roots = statuses.count("root")
        if None not in statuses and roots <= 1:
            return True, (chart, t0, k), deepest
        if k >= bound:
            raise Undecided("no decision at p=%d within precision %d" % (p, bound))
        for r in range(p):
            stack.append((t0 + r * scale, k + 1))
    return False, None, deepest


def solvable_padic(forms, p, extra=2):
    forms = [tuple(int(c) for c in f) for f in forms]
    if any(len(f) % 2 == 0 for f in forms):
        raise ValueError("binary forms must have even degree")
    deepest = 0
    bound = 0
    for chart in (0, 1):
        polys = [_chart_polys(f, p, chart) for f in forms]
        b = _precision_bound([pp for pp in polys], p, extra)
        bound = max(bound, b)
        found, witness, depth = _search_chart(polys, p, chart, b)
        deepest = max(deepest, depth)
        if found:
            return LocalResult(p, True, deepest, bound, witness)
    return LocalResult(p, False, deepest, bound)


def _isolating_points(poly):
    """Rational points separating the distinct real roots of poly, plus outer points."""
    if poly.degree < 1:
        return [Fraction(0)]
    bound = 1 + max(abs(c / poly.lead) for c in poly.coeffs)

    def count(lo, hi):
        # roots in (lo, hi] via Sturm sign changes
        seq = [poly, poly.derivative()]
        while True:
            r = -(seq[-2] % seq[-1])
            if r.is_zero():
                break
            seq.append(r)

        def changes(x):
            signs = [s for s in ((q(x) > 0) - (q(x) < 0) for q in seq) if s]
            return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

        return changes(lo) - changes(hi)

    points = [-bound, bound]
    work = [(-bound, bound)]
    while work:
        lo, hi = work.pop()
        c = count(lo, hi)
        if c <= 1:
            continue
        mid = (lo + hi) / 2
        while poly(mid) == 0:
            mid = (lo + 2 * mid) / 3
        points.append(mid)
        work += [(lo, mid), (mid, hi)]
    return sorted(set(points))


def solvable_real(forms):
    forms = [tuple(int(c) for c in f) for f in forms]
    # point at infinity (X : Y) = (1 : 0)
    if all(f[-1] >= 0 for f in forms):
        return LocalResult(REAL, True, 0, 0, ("inf",))
    polys = [Poly(f) for f in forms]
    prod = Poly([1])
    for g in polys:
        prod = prod * g
    square_free = prod // _gcd_with_derivative(prod)
    for x in _isolating_points(square_free):
        if all(g(x) >= 0 for g in polys):
            return LocalResult(REAL, True, 0, 0, ("t", x))
    return LocalResult(REAL, False, 0, 0)


def _gcd_with_derivative(f):
    from .poly import poly_gcd

    d = f.derivative()
    return poly_gcd(f, d) if not d.is_zero() else Poly([1])


def solvable(forms, place, extra=2):
    if place == REAL:
        return solvable_real(forms)
    return solvable_padic(forms, place, extra)


def count_real_roots(form):
    return sturm_count_real_roots(Poly(form))
