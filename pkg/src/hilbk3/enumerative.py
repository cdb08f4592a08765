"""Betti numbers of S^[n] and the orthogonal-group bookkeeping around them."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

B2_K3 = 22
MAX_N = 6


class BiSeries:
    """Truncated series Σ_n p_n(z) t^n with integer polynomial coefficients.

    ``coeffs[n]`` is a list of integers, the coefficients of p_n by degree in z.
    """

    def __init__(self, n_max, coeffs=None):
        self.n_max = n_max
        self.coeffs = coeffs or [[1]] + [[0] for _ in range(n_max)]

    @classmethod
    def one(cls, n_max):
        return cls(n_max)

    def __mul__(self, other):
        out = [[0] for _ in range(self.n_max + 1)]
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                if i + j > self.n_max:
                    break
                target = out[i + j]
                need = len(p) + len(q) - 1
                if len(target) < need:
                    target.extend([0] * (need - len(target)))
                for a, ca in enumerate(p):
                    if ca:
                        for b, cb in enumerate(q):
                            if cb:
                                target[a + b] += ca * cb
        return BiSeries(self.n_max, [_trim(c) for c in out])

    def coefficient(self, n):
        return list(self.coeffs[n])


def _trim(c):
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def geometric(z_power, t_power, n_max):
    """1 / (1 - z^a t^m) truncated at t^n_max."""
    coeffs = [[0] for _ in range(n_max + 1)]
    k = 0
    while k * t_power <= n_max:
        c = [0] * (k * z_power + 1)
        c[-1] = 1
        coeffs[k * t_power] = c
        k += 1
    coeffs[0] = [1]
    return BiSeries(n_max, coeffs)


def goettsche_series(n_max):
    """Π_m (1 - z^{2m-2} t^m)^-1 (1 - z^{2m} t^m)^-22 (1 - z^{2m+2} t^m)^-1."""
    series = BiSeries.one(n_max)
    for m in range(1, n_max + 1):
        series = series * geometric(2 * m - 2, m, n_max)
        middle = geometric(2 * m, m, n_max)
        for _ in range(B2_K3):
            series = series * middle
        series = series * geometric(2 * m + 2, m, n_max)
    return series


def poincare_polynomial(n):
    if not 0 <= n <= MAX_N:
        raise ValueError("n must lie in 0..%d" % MAX_N)
    return goettsche_series(n).coefficient(n)


def goettsche_q(n):
    """[β_0, β_2, ..., β_2n]: the even Betti numbers up to the middle degree."""
    p = poincare_polynomial(n)
    p = p + [0] * (4 * n + 1 - len(p))
    return [p[2 * j] for j in range(n + 1)]


@dataclass(frozen=True)
class VerbitskyCounts:
    image: dict  # k -> C(22 + k, k), the image of Sym^k H^2
    betti: dict  # (n, k) -> dim H^{2k}(S^[n])
    cokernel: dict  # (k, n) -> dim H^{2k}(S^[n]) - dim Sym^k H^2(S^[n])


def verbitsky_counts():
    """Sym^k H^2(S^[n]) -> H^{2k}(S^[n]) is injective for k <= n; record cokernels."""
    b2 = B2_K3 + 1
    image = {k: comb(b2 + k - 1, k) for k in range(4)}
    betti, coker = {}, {}
    for n in (2, 3):
        q = goettsche_q(n)
        for k in range(1, n + 1):
            betti[(n, k)] = q[k]
    for k, n in ((2, 2), (2, 3), (3, 3)):
        coker[(k, n)] = betti[(n, k)] - image[k]
    return VerbitskyCounts(image, betti, coker)


# ---- orthogonal groups -------------------------------------------------------


def _validate(lam, r, even):
    lam = tuple(lam) + (0,) * (r - len(lam))
    if len(lam) != r:
        raise ValueError("too many entries for rank %d" % r)
    if any(int(x) != x for x in lam):
        raise ValueError("only integral highest weights are supported")
    head = lam[:-1] if even else lam
    if any(x < 0 for x in head):
        raise ValueError("entries must be nonnegative")
    if any(lam[i] < lam[i + 1] for i in range(r - 2)) or (r > 1 and lam[r - 2] < abs(lam[r - 1])):
        raise ValueError("weights must be weakly decreasing")
    if not even and lam[-1] < 0:
        raise ValueError("negative entry for an odd orthogonal group")
    return lam


def _as_integer(x):
    if x.denominator != 1:
        raise ArithmeticError("Weyl product is not integral: %s" % x)
    return int(x)


def weyl_dim_odd(lam, r):
    """Dimension of the SO(2r+1) irreducible with highest weight lam."""
    lam = _validate(lam, r, even=False)
    ell = [Fraction(2 * (lam[i] + r - i - 1) + 1, 2) for i in range(r)]  # λ_i + r - i + 1/2, i 1-based
    out = Fraction(1)
    for i in range(r):
        for j in range(i, r):
            if i < j:
                out *= (ell[i] - ell[j]) / (j - i)
            out *= (ell[i] + ell[j]) / (2 * r + 1 - (i + 1) - (j + 1))
    return _as_integer(out)


def weyl_dim_even(lam, r):
    """Dimension of the SO(2r) irreducible with highest weight lam."""
    lam = _validate(lam, r, even=True)
    ell = [lam[i] + r - i - 1 for i in range(r)]
    out = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            out *= Fraction(ell[i] ** 2 - ell[j] ** 2, (j - i) * (2 * r - (i + 1) - (j + 1)))
    return _as_integer(out)


def branch_odd_to_even(lam, r):
    """All λ̄ with λ1 >= λ̄1 >= λ2 >= ... >= λr >= |λ̄r|."""
    lam = _validate(lam, r, even=False)
    ranges = []
    for i in range(r):
        hi = lam[i]
        lo = lam[i + 1] if i + 1 < r else 0
        if i + 1 < r:
            ranges.append(range(lo, hi + 1))
        else:
            ranges.append(range(-hi, hi + 1))
    return [tuple(w) for w in product(*ranges)]


def branching_identity(lam, r):
    """(dim V_X(λ), Σ dim V_S(λ̄)) for the restriction SO(2r+1) -> SO(2r)."""
    return weyl_dim_odd(lam, r), sum(weyl_dim_even(w, r) for w in branch_odd_to_even(lam, r))


def weight(*entries, r=11):
    return tuple(entries) + (0,) * (r - len(entries))


# ---- H^*(X) as a representation --------------------------------------------

RANK_X = 11  # H^2(X) has dimension 23 = 2·11 + 1

# summands V_X(λ) of H^{2k}(X); () is the trivial representation
DECOMPOSITIONS = {
    2: {1: [(1,)], 2: [(2,), ()]},
    3: {1: [(1,)], 2: [(2,), (1,), ()], 3: [(3,), (1, 1), (1,), ()]},
}

# summands V_S(λ̄) of H^{2k}(S^[n]) from the tensor description of A^[n]
S_DECOMPOSITIONS = {
    3: {2: [(2,), (1,), (1,), (), (), ()], 3: [(3,), (2,), (1, 1), (1,), (1,), (1,), (), (), ()]},
}


@dataclass(frozen=True)
class DecompositionAudit:
    n: int
    dims: dict  # k -> Σ dim V_X(λ)
    betti: dict  # k -> β_{2k}
    trivial: dict  # k -> number of trivial summands
    restriction_ok: dict  # k -> branching of the X summands equals the S summands

    @property
    def ok(self):
        return self.dims == self.betti and all(self.restriction_ok.values())


def decomposition_audit(n):
    if n not in DECOMPOSITIONS:
        raise ValueError("n must be 2 or 3")
    q = goettsche_q(n)
    dims, betti, trivial, restr = {}, {}, {}, {}
    for k, summands in DECOMPOSITIONS[n].items():
        dims[k] = sum(weyl_dim_odd(weight(*lam, r=RANK_X), RANK_X) for lam in summands)
        betti[k] = q[k]
        trivial[k] = sum(1 for lam in summands if not any(lam))
        if k in S_DECOMPOSITIONS.get(n, {}):
            branched = sorted(w for lam in summands for w in branch_odd_to_even(weight(*lam, r=RANK_X), RANK_X))
            expected = sorted(weight(*lam, r=RANK_X) for lam in S_DECOMPOSITIONS[n][k])
            restr[k] = branched == expected
    return DecompositionAudit(n, dims, betti, trivial, restr)
