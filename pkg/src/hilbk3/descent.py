"""Two-isogeny descent on E: y^2 = x^3 + a x^2 + b x and its partner E'.

The maps ψ: E(Q)/φ̂E'(Q) -> Q*/Q*^2 and ψ': E'(Q)/φE(Q) -> Q*/Q*^2 land
in classes δ built from the primes of b and of a^2 - 4b.  A class δ is in
the image exactly when the quartic torsor has a rational point, so local
insolvability removes δ, and the image being a subgroup removes whole
cosets once a single representative is killed.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import curve as ec
from .arith import divisors, factorint, is_square, legendre, squarefree_divisors, squarefree_part
from .local import REAL, Undecided, form_from_quartic, solvable
from .poly import Poly, resultant

__all__ = [
    "legendre",
    "TorsorSpec",
    "quartic_solvable_padic",
    "torsor_survey",
    "two_selmer_rank",
    "known_images",
    "saturation_check",
    "EpsilonLadder",
    "epsilon_ladder",
]


def _radical(n):
    return tuple(sorted(factorint(n)))


@dataclass(frozen=True)
class TorsorSpec:
    """C_δ (kind 'C') or C'_δ (kind "C'") for the curve (a, b).

    C_δ : δw^2 = δ^2 z^4 + δ a z^2 + b
    C'_δ: δw^2 = δ^2 z^4 - 2δ a z^2 + (a^2 - 4b)
    Multiplying by δ turns either into W^2 = G(z) with W = δw.
    """

    delta: int
    kind: str = "C"
    a: int = ec.A
    b: int = ec.B

    def __post_init__(self):
        if self.kind not in ("C", "C'"):
            raise ValueError("kind must be 'C' or \"C'\"")
        if self.delta == 0 or squarefree_part(self.delta) != self.delta:
            raise ValueError("delta must be square-free")
        if self.radical_value() % abs(self.delta):
            raise ValueError("delta must divide %d" % self.radical_value())

    def constant(self):
        return self.b if self.kind == "C" else self.a**2 - 4 * self.b

    def radical_value(self):
        out = 1
        for p in _radical(self.constant()):
            out *= p
        return out

    def quartic(self):
        """Coefficients (low degree first) of G(z) = δ·RHS."""
        d = self.delta
        mid = d * d * self.a if self.kind == "C" else -2 * d * d * self.a
        return form_from_quartic([d * self.constant(), 0, mid, 0, d**3])

    def has_point(self, z, w):
        d = Fraction(self.delta)
        z, w = Fraction(z), Fraction(w)
        mid = self.a if self.kind == "C" else -2 * self.a
        return d * w * w == d * d * z**4 + d * mid * z * z + self.constant()


def quartic_solvable_padic(torsor, place, extra=2):
    """Local solvability of a TorsorSpec or of W^2 = quartic (coefficient list) at a place."""
    form = torsor.quartic() if isinstance(torsor, TorsorSpec) else form_from_quartic(torsor)
    return solvable([form], place, extra).solvable


def _places():
    """REAL and every prime of bad reduction (2 included)."""
    return [REAL] + list(_radical(2 * ec.E.discriminant()))


@dataclass(frozen=True)
class KnownImage:
    point: str
    delta: int


def known_images():
    """ψ of O, Q and P, and ψ' of O and (0,0) on E'."""
    c = [KnownImage("O", 1), KnownImage("Q", squarefree_part(ec.B)), KnownImage("P", squarefree_part(ec.P.x.numerator * ec.P.x.denominator))]
    cp = [KnownImage("O", 1), KnownImage("(0,0) on E'", squarefree_part(ec.A**2 - 4 * ec.B))]
    return c, cp


def _square_class_product(x, y):
    return squarefree_part(x * y)


def _subgroup(gens):
    group = {1}
    for g in gens:
        group |= {_square_class_product(g, h) for h in group}
    return group


@dataclass
class SurveyResult:
    kind: str
    candidates: list
    local_failures: dict  # delta -> first place without a local point
    local_survivors: set
    killed: dict  # delta -> reason, for classes removed by a global argument
    survivors: set
    known: set  # subgroup generated by images of known rational points

    @property
    def image_size(self):
        return len(self.survivors)


def _local_filter(kind, const, extra):
    candidates = squarefree_divisors(_radical(const), signed=True)
    failures = {}
    for d in candidates:
        spec = TorsorSpec(d, kind)
        for place in _places():
            if not quartic_solvable_padic(spec, place, extra):
                failures[d] = place
                break
    survivors = {d for d in candidates if d not in failures}
    return candidates, failures, survivors


def torsor_survey(extra=2, ladders=None):
    """(SurveyResult for C, SurveyResult for C').

    Local tests run at REAL and at every bad prime.  The
    ε-ladders then kill δ = 11, 443, 11·443 on C; since im ψ is a subgroup
    containing the known images, each killed δ removes its whole coset.
    """
    known_c, known_cp = known_images()
    results = []
    for kind, const, known in (("C", ec.B, known_c), ("C'", ec.A**2 - 4 * ec.B, known_cp)):
        candidates, failures, local = _local_filter(kind, const, extra)
        group = _subgroup([k.delta for k in known])
        killed = {}
        if kind == "C":
            ladders = ladders if ladders is not None else [epsilon_ladder(d, extra) for d in LADDER_SEEDS]
            for lad in ladders:
                if not lad.obstructed:
                    continue
                for h in group:
                    coset = _square_class_product(lad.delta, h)
                    if coset in local:
                        killed[coset] = "coset of %d (epsilon ladder)" % lad.delta
        survivors = local - set(killed)
        results.append(SurveyResult(kind, candidates, failures, local, killed, survivors, group))
    return tuple(results)


def two_selmer_rank(survey_c, survey_cp):
    """(|E(Q)/2E(Q)|, rank) from |im ψ|·|im ψ'| = 2^(r+2)."""
    if survey_c.survivors != survey_c.known or survey_cp.survivors != survey_cp.known:
        raise ArithmeticError("survivors are not all accounted for by known points")
    size = survey_c.image_size * survey_cp.image_size // 2
    rank = size.bit_length() - 2  # size = 2^(r+1) with one 2-torsion point
    return size, rank


# ---- ε-ladders -------------------------------------------------------------

LADDER_SEEDS = {
    11: (3 * 5**2 * 443, 2**2 * 5 * 11 * 443, 1),
    443: (-3 * 11 * 13, 11 * 13 * 443, 2),
    11 * 443: (5**3 * 11, 2 * 5 * 11 * 443, 3**2),
}

LADDER_PLACES = (REAL, 11, 443, 13)


@dataclass
class EpsilonLadder:
    delta: int
    u0: int
    w0: int
    t: int
    f: tuple  # coefficient of X^i Y^(2-i) at index i
    g: tuple
    epsilons: list
    common_primes: tuple  # primes dividing Res(f, g)
    obstructions: dict = field(default_factory=dict)  # ε -> (place, precision bound)

    @property
    def obstructed(self):
        return all(e in self.obstructions for e in self.epsilons)


def ladder_forms(delta, u0, w0, t, a=ec.A):
    """f(X, Y) = u0 X^2 - 2 w0 XY + (ta + δu0) Y^2, g(X, Y) = t(X^2 - δY^2).

    Returned as coefficient lists of the dehomogenization in X/Y, low degree first.
    """
    f = (t * a + delta * u0, -2 * w0, u0)
    g = (-t * delta, 0, t)
    return f, g


def conic_holds(delta, u0, w0, t, a=ec.A, b=ec.B):
    u, w = Fraction(u0, t), Fraction(w0, t)
    return delta * w * w == delta * delta * u * u + delta * a * u + b


def epsilon_ladder(delta, extra=2):
    if delta not in LADDER_SEEDS:
        raise ValueError("no seed for delta = %d" % delta)
    u0, w0, t = LADDER_SEEDS[delta]
    if not conic_holds(delta, u0, w0, t):
        raise ArithmeticError("seed is not a point on the conic")
    f, g = ladder_forms(delta, u0, w0, t)
    res = resultant(Poly(f), Poly(g))
    common = _radical(int(res))
    allowed = set(_radical(11 * 113 * 127 * 443 * t))
    if not set(common) <= allowed:
        raise ArithmeticError("Res(f, g) has an unexpected prime")
    epsilons = squarefree_divisors(sorted(allowed), signed=True)
    lad = EpsilonLadder(delta, u0, w0, t, f, g, epsilons, common)
    places = list(LADDER_PLACES) + [p for p in sorted(allowed | {2}) if p not in LADDER_PLACES]
    for eps in epsilons:
        forms = [tuple(eps * c for c in f), tuple(eps * c for c in g)]
        for place in places:
            try:
                ok = solvable(forms, place, extra)
            except Undecided:
                continue
            if not ok.solvable:
                lad.obstructions[eps] = (place, ok.bound)
                break
    return lad


# ---- saturation --------------------------------------------------------------


@dataclass(frozen=True)
class SaturationCertificate:
    candidates: int
    passing: tuple  # x-coordinates whose cubic value is a rational square
    p_mod3_nonzero: bool
    two_e_f3_trivial: bool
    pq_mod7_outside_2e: bool

    @property
    def ok(self):
        return (
            self.candidates == 192
            and self.passing == (ec.P.x,)
            and self.p_mod3_nonzero
            and self.two_e_f3_trivial
            and self.pq_mod7_outside_2e
        )


def saturation_check():
    """Search for R with P = ±2R + (odd multiple) style halvings.

    A 2-divisor R of P or P + Q would need e(R) | e(P) and α(R) of the
    shape 2·11^2·443^2·s^2 with s | 3·83·6481; all 24 × 8 candidates are
    tested for a square right-hand side.  The mod-3 and mod-7 reductions
    show directly that neither P nor P + Q lies in 2E(Q).
    """
    e_values = divisors({7: 2, 41: 1, 71: 1, 193: 1})
    s_values = divisors({3: 1, 83: 1, 6481: 1})
    base = 2 * 11**2 * 443**2
    passing = []
    count = 0
    for e in e_values:
        for s in s_values:
            count += 1
            x = Fraction(base * s * s, e * e)
            if is_square(ec.E.rhs(x)):
                passing.append(x)
    p3 = ec.reduce_point(ec.P, 3)
    two_e3 = ec.double_subgroup_mod(3)
    pq7 = ec.reduce_point(ec.add_Q(ec.P), 7)
    return SaturationCertificate(
        count,
        tuple(passing),
        p3 is not ec.INF,
        two_e3 == {ec.INF},
        pq7 not in ec.double_subgroup_mod(7),
    )
