"""Points of E with coordinates in Z[1/2].

Every point is nP + kQ.  A point lies in Z[1/2] exactly when e(R) is a
power of 2, so each case of the argument exhibits an odd prime dividing
e(nP + kQ): 7 for k = 0, 3 for odd n, 79 for n = 2 mod 4, and for
4 | n a prime q | α(2^i P) with q ≠ 1 (mod 7) that is not a bad prime.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, isqrt

from . import curve as ec
from .arith import trial_factor, valuation

BAD_AT_ORIGIN = ec.SINGULAR_AT_ORIGIN_PRIMES  # 2, 5, 11, 13, 443
MULTIPLICATIVE = (113, 127)


def point(n, k):
    """nP + kQ."""
    return ec.combination(n, k)


@dataclass
class DenominatorCertificate:
    n: int
    k: int
    e: int
    e_factors: dict  # complete factorization when available, else partial
    witnesses: list = field(default_factory=list)  # (prime, reason)

    def check(self):
        """Re-derive e and confirm every witness prime divides it."""
        if point(self.n, self.k).e != self.e:
            return False
        return all(self.e % p == 0 for p, _ in self.witnesses)


def _factors(n):
    f, rest = trial_factor(n)
    if rest != 1:
        f = dict(f)
        f[rest] = f.get(rest, 0) + 1  # unfactored cofactor kept as a pseudo-prime
    return dict(sorted(f.items()))


def certificate_base_cases():
    specs = ((1, 0, 7, "7 | e(P), so 7 | e(nP)"), (1, 1, 3, "3 | e(P+Q), so 3 | e(n(P+Q))"), (2, 1, 79, "79 | e(2P+Q)"))
    out = []
    for n, k, prime, reason in specs:
        e = point(n, k).e
        cert = DenominatorCertificate(n, k, e, _factors(e))
        if e % prime == 0:
            cert.witnesses.append((prime, reason))
        out.append(cert)
    return out


# ---- the 2^j P tower ---------------------------------------------------------


def doubling_tower(j_max):
    """[2^j P for j = 0..j_max], by chord-tangent doubling."""
    if j_max > 5:
        raise ValueError("j_max must be at most 5")
    pts = [ec.P]
    for _ in range(j_max):
        pts.append(ec.double(pts[-1]))
    return pts


def nonsingular_reduction(pt, p):
    """True when pt reduces to a smooth point of E mod p."""
    if pt.e % p == 0:
        return True  # reduces to O
    return ec.reduce_point(pt, p) not in ec.singular_points_mod(p)


@dataclass
class Mod7Pattern:
    alpha_mod7: dict  # j -> α(2^j P) mod 7
    sevens_divide_e: dict  # j -> 7 | e(2^j P)
    nonsingular_4p: dict  # bad prime -> bool
    step_exact: dict  # j -> α(2^{j+1}P) == ±(α^2 - b e^4)^2 with gcd 1
    step_mod7: dict  # j -> ((α^2 - b e^4)^2 mod 7, α(2^{j+1}P) mod 7)
    remark: dict

    @property
    def ok(self):
        return (
            all(v in (3, 4) for j, v in self.alpha_mod7.items() if j >= 2)
            and all(self.sevens_divide_e.values())
            and all(self.nonsingular_4p.values())
            and all(self.step_exact.values())
            and all(self.remark.values())
        )


def closing_remark(tower=None, samples=4):
    """2-adic facts about 2P and 4P, exactly and from the low-precision inputs.

    Inputs a = 1 (mod 8), b = 28 (mod 32), x(P) = 2 (mod 16); every sampled
    lift of these residues must give x(2R) = 4 (mod 32) and
    x(4R) = 2^-4 (mod 2^-3), i.e. v_2(x(4R)) = -4.
    """
    tower = tower or doubling_tower(2)
    x1, x2, x4 = tower[0].x, tower[1].x, tower[2].x
    out = {
        "a = 1 mod 8": ec.A % 8 == 1,
        "b = 28 mod 32": ec.B % 32 == 28,
        "x(P) = 2 mod 16": _mod2k(x1, 16) == 2,
        "x(2P) = 4 mod 32": _mod2k(x2, 32) == 4,
        "v2(x(4P)) = -4": valuation(x4, 2) == -4,
    }
    lifts_ok = True
    for i, j, k in product(range(samples), repeat=3):
        a, b, x = 1 + 8 * i, 28 + 32 * j, Fraction(2 + 16 * k)
        x2l = _double_x(x, a, b)
        x4l = _double_x(x2l, a, b)
        if _mod2k(x2l, 32) != 4 or valuation(x4l, 2) != -4:
            lifts_ok = False
    out["low-precision lifts agree"] = lifts_ok
    return out


def _double_x(x, a, b):
    return (x * x - b) ** 2 / (4 * (x**3 + a * x * x + b * x))


def _mod2k(x, m):
    """x mod m for a 2-adically integral rational x."""
    x = Fraction(x)
    if x.denominator % 2 == 0:
        raise ValueError("not 2-integral")
    return x.numerator * pow(x.denominator, -1, m) % m


def mod7_pattern(j_max=4):
    tower = doubling_tower(j_max)
    alpha_mod7 = {j: pt.alpha % 7 for j, pt in enumerate(tower)}
    sevens = {j: pt.e % 7 == 0 for j, pt in enumerate(tower)}
    p4 = tower[2]
    nonsing = {p: nonsingular_reduction(p4, p) for p in BAD_AT_ORIGIN + MULTIPLICATIVE}
    for p in BAD_AT_ORIGIN:
        nonsing[p] = nonsing[p] and (p4.alpha % p != 0)
    step_exact, step_mod7 = {}, {}
    for j in range(2, j_max):
        num, den = ec.double_x_closed_form(tower[j])
        nxt = tower[j + 1]
        step_exact[j] = gcd(num, den) == 1 and abs(nxt.alpha) == num
        step_mod7[j] = (num % 7, nxt.alpha % 7)
    return Mod7Pattern(alpha_mod7, sevens, nonsing, step_exact, step_mod7, closing_remark(tower))


# ---- the prime q -------------------------------------------------------------


@dataclass
class PrimeQCertificate:
    """status is "pass" with an explicit q, "premises-verified" when only the
    unfactored part is known to hold such a q, else "incomplete"."""

    i: int
    status: str
    q: int
    alpha_mod7: int
    small_factors: dict
    cofactor: int
    divides_e_plus_q: bool  # q | e(2^i P + Q), or the whole cofactor does when q is not explicit
    cofactor_mod7: int  # residue of the unfactored part; not 0 or 1 means some q exists there
    cofactor_coprime_to_bad: bool


def prime_q_argument(i, tower=None):
    """Exhibit q | α(2^i P), q ≠ 1 (mod 7), q good, with q | e(2^i P + Q)."""
    if not 2 <= i <= 4:
        raise ValueError("i must lie in 2..4")
    tower = tower or doubling_tower(i)
    pt = tower[i]
    alpha = abs(pt.alpha)
    root = isqrt(alpha)
    # for i >= 3 the no-cancellation step makes α a perfect square
    base = root if root * root == alpha else alpha
    factors, rest = trial_factor(base)
    bad = set(BAD_AT_ORIGIN + MULTIPLICATIVE)
    shifted = ec.add_Q(pt)
    coprime = all(rest % p for p in bad)
    for q in sorted(factors):
        if q % 7 != 1 and q not in bad:
            return PrimeQCertificate(i, "pass", q, pt.alpha % 7, factors, rest, shifted.e % q == 0, rest % 7, coprime)
    # a cofactor that is not 0 or 1 mod 7 has some prime factor q that is not 1 mod 7
    divides = rest > 1 and shifted.e % rest == 0
    status = "premises-verified" if divides and coprime and rest % 7 not in (0, 1) else "incomplete"
    return PrimeQCertificate(i, status, 0, pt.alpha % 7, factors, rest, divides, rest % 7, coprime)


# ---- direct scan -------------------------------------------------------------


@dataclass
class ScanEntry:
    n: int
    k: int
    e: int
    in_z_half: bool
    witness: int  # odd divisor > 1 of e (a prime when trial division finds one), or 0
    doubling_matches: bool  # closed-form x(2R) equals chord-tangent 2R


@dataclass
class ScanReport:
    bound: int
    entries: list
    z_half_points: list
    divisibility_ok: bool  # e(P) | e(nP) for all scanned n

    @property
    def ok(self):
        return self.z_half_points == [(0, 1)] and self.divisibility_ok and all(
            e.doubling_matches and (e.in_z_half or e.witness) for e in self.entries
        )


def _odd_witness(e, candidates):
    for q in candidates:
        if e % q == 0:
            return q
    odd = e
    while odd % 2 == 0:
        odd //= 2
    if odd == 1:
        return 0
    f, _ = trial_factor(odd, bound=10**4)
    return min(f) if f else odd


def bounded_scan(N=10, extra_witnesses=()):
    if N > 12:
        raise ValueError("N must be at most 12")
    witnesses = (7, 3, 79) + tuple(extra_witnesses)
    multiples = {0: ec.O}
    for n in range(1, N + 1):
        multiples[n] = ec.add(multiples[n - 1], ec.P)
    entries, z_half = [], []
    div_ok = True
    eP = ec.P.e
    for n in range(-N, N + 1):
        base = multiples[abs(n)] if n >= 0 else ec.neg(multiples[-n])
        if n and base.e % eP:
            div_ok = False
        for k in (0, 1):
            if n == 0 and k == 0:
                continue
            pt = ec.add_Q(base) if k else base
            e = pt.e
            in_z_half = e & (e - 1) == 0
            if in_z_half:
                z_half.append((n, k))
            num, den = ec.double_x_closed_form(pt)
            doubled = ec.double(pt)
            matches = doubled.is_infinity() if den == 0 else Fraction(num, den) == doubled.x
            entries.append(ScanEntry(n, k, e, in_z_half, 0 if in_z_half else _odd_witness(e, witnesses), matches))
    return ScanReport(N, entries, z_half, div_ok)
