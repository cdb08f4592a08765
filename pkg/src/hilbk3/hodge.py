"""The absolute Hodge classes of S^[3] and the distinguished middle class η."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .k3 import LATTICE, PT, RANK, UNIT
from .symring import Permutation, SnClass, delta_class, integrate, is_invariant

N = 3
IDENT = Permutation.identity(N)
TRANSPOSITIONS = ((1, 2), (1, 3), (2, 3))


def _perm(*cycles):
    return Permutation.from_cycles(N, *cycles)


def _pair_tensor(positions, size):
    """Σ_j e_j ⊗ e_j^v on two tensor slots (expanded into basis labels)."""
    i, k = positions
    tensor = {}
    for j in range(RANK):
        for m, c in enumerate(LATTICE.dual_vector(j)):
            if not c:
                continue
            key = [UNIT] * size
            key[i] = j + 1
            key[k] = m + 1
            key = tuple(key)
            tensor[key] = tensor.get(key, 0) + c
    return tensor


def _orbit_slot(perm, elements):
    """Index of the orbit of ``perm`` containing the 1-based elements."""
    target = tuple(sorted(e - 1 for e in elements))
    return perm.orbits().index(target)


@dataclass(frozen=True)
class StandardClasses:
    delta: SnClass
    P: SnClass
    Q: SnClass
    R: SnClass
    U: SnClass
    V: SnClass
    W: SnClass

    def items(self):
        return [(name, getattr(self, name)) for name in ("delta", "P", "Q", "R", "U", "V", "W")]


@lru_cache(maxsize=None)
def standard_classes():
    delta = delta_class(N)

    P = SnClass(N)
    for i in range(N):
        key = [UNIT] * N
        key[i] = PT
        P = P + SnClass.sector(IDENT, key)

    Q = SnClass(N)
    for i, k in ((0, 1), (0, 2), (1, 2)):
        Q = Q + SnClass.from_tensor(IDENT, _pair_tensor((i, k), N))

    R = SnClass.sector(_perm((1, 3, 2))) + SnClass.sector(_perm((1, 2, 3)))

    U = SnClass(N)
    V = SnClass(N)
    W = SnClass(N)
    for (i, j) in TRANSPOSITIONS:
        perm = _perm((i, j))
        other = ({1, 2, 3} - {i, j}).pop()
        pair_slot = _orbit_slot(perm, (i, j))
        single_slot = _orbit_slot(perm, (other,))
        key = [UNIT, UNIT]
        key[pair_slot] = PT
        U = U + SnClass.sector(perm, key)
        key = [UNIT, UNIT]
        key[single_slot] = PT
        V = V + SnClass.sector(perm, key)
        W = W + SnClass.from_tensor(perm, _pair_tensor((pair_slot, single_slot), 2))
    return StandardClasses(delta, P, Q, R, U, V, W)


def point_cube(c=1):
    """c·([pt]⊗[pt]⊗[pt])(id)."""
    return SnClass.sector(IDENT, (PT, PT, PT), c)


@lru_cache(maxsize=None)
def products():
    """Every product appearing in the codimension 2/3 table, computed once."""
    s = standard_classes()
    d2 = s.delta * s.delta
    out = {
        "delta^2": d2,
        "delta*P": s.delta * s.P,
        "delta*Q": s.delta * s.Q,
        "delta*R": s.delta * s.R,
        "delta^3": d2 * s.delta,
        "U^2": s.U * s.U,
        "V^2": s.V * s.V,
        "U*W": s.U * s.W,
        "V*W": s.V * s.W,
        "U*V": s.U * s.V,
        "W^2": s.W * s.W,
    }
    return out


def expected_table():
    """The product identities as stated, keyed like products()."""
    s = standard_classes()
    zero = SnClass(N)
    return {
        "delta^2": s.P.scale(-2) - s.Q + s.R.scale(3),
        "delta*P": s.U.scale(2) + s.V,
        "delta*Q": s.U.scale(22) + s.W.scale(2),
        "delta*R": (s.U + s.V + s.W).scale(-2),
        "delta^3": s.U.scale(-32) - s.V.scale(8) - s.W.scale(8),
        "U^2": zero,
        "V^2": zero,
        "U*W": zero,
        "V*W": zero,
        "U*V": point_cube(-3),
        "W^2": point_cube(-66),
    }


def verify_product_table():
    """[(identity, ok)] for each product; ok is exact SnClass equality."""
    got = products()
    return [(name, got[name] == want) for name, want in expected_table().items()]


@lru_cache(maxsize=None)
def middle_gram():
    """3x3 integrate-pairings of U, V, W, recomputed from the ring."""
    s = standard_classes()
    basis = (s.U, s.V, s.W)
    return tuple(tuple(integrate(x * y) for y in basis) for x in basis)


def gram_pair(u, v, gram=None):
    gram = middle_gram() if gram is None else gram
    return sum(Fraction(u[i]) * gram[i][j] * v[j] for i in range(3) for j in range(3))


ETA_UVW = (2, -1, 11)
ETA_SQUARED = -3 * 443


def from_uvw(coords):
    s = standard_classes()
    return s.U.scale(coords[0]) + s.V.scale(coords[1]) + s.W.scale(coords[2])


def eta():
    return from_uvw(ETA_UVW)


def eta_squared():
    """η² through the full ring product."""
    e = eta()
    return integrate(e * e)


def eta_squared_via_gram():
    """-4<U,V> + 121<W,W>, the expansion using only the middle Gram data."""
    g = middle_gram()
    return -4 * g[0][1] + 121 * g[2][2]


def delta_sixth():
    d3 = products()["delta^3"]
    return integrate(d3 * d3)


def eta_pairings():
    """Audit pairings of η against δ^3 and δ·P (both via the ring)."""
    e = eta()
    p = products()
    return {
        "eta.delta^3": integrate(e * p["delta^3"]),
        "eta.(delta*P)": integrate(e * p["delta*P"]),
    }


def orthogonal_complement(span, gram=None):
    """Primitive generator of the Gram-orthogonal complement of a 2-dim span.

    Returns (vector, self_pairing).
    """
    gram = middle_gram() if gram is None else gram
    if linalg.rank(span) != 2:
        raise ValueError("span must be 2-dimensional")
    rows = [[sum(Fraction(v[i]) * gram[i][j] for i in range(3)) for j in range(3)] for v in span]
    kernel = linalg.nullspace(rows)
    if len(kernel) != 1:
        raise ValueError("degenerate span: complement has dimension %d" % len(kernel))
    vec = linalg.primitive_integer_vector(kernel[0])
    return tuple(vec), gram_pair(vec, vec, gram)


def in_span(target, span):
    """Coefficients c with Σ c_i span_i = target, or None."""
    cols = [[Fraction(v[i]) for v in span] for i in range(3)]
    try:
        return linalg.solve(cols, list(target))
    except ValueError:
        return None


def uvw_coordinates(x):
    """Coordinates of x in the {U, V, W} basis; raises if x is outside the span."""
    s = standard_classes()
    basis = (s.U, s.V, s.W)
    keys = {(perm, key) for c in (x,) + basis for perm, key, _ in c.terms()}
    rows, rhs = [], []
    for perm, key in sorted(keys):
        rows.append([b.sectors.get(perm, {}).get(key, 0) for b in basis])
        rhs.append(x.sectors.get(perm, {}).get(key, 0))
    try:
        coords = linalg.solve(rows, rhs)
    except ValueError:
        raise ValueError("class is not in span{U, V, W}") from None
    if from_uvw(coords) != x:
        raise ValueError("class is not in span{U, V, W}")
    return tuple(coords)


def invariance_report():
    return [(name, is_invariant(c)) for name, c in standard_classes().items()]
