"""The shifted Frobenius algebra A = H^*(S, Q)(1) of a K3 surface.

Basis labels are small integers shared by every module:

    0        the unit 1          (weight -2)
    1 .. 22  e_1 .. e_22 in H^2  (weight 0)
    23       the point class     (weight +2)

The H^2 lattice is fixed as U+U+U+E8(-1)+E8(-1). The pairing is
<x, y> = T(xy) with T(x) = -(coefficient of [pt]).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg

UNIT = 0
PT = 23
RANK = 22
DIM = 24
LABELS = tuple(range(DIM))

E8_CARTAN = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)
HYPERBOLIC = ((0, 1), (1, 0))


def _block_diag(blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


@dataclass(frozen=True)
class K3Lattice:
    gram: tuple
    gram_inverse: tuple

    @classmethod
    def standard(cls):
        neg_e8 = [[-x for x in row] for row in E8_CARTAN]
        gram = _block_diag([HYPERBOLIC] * 3 + [neg_e8] * 2)
        inv = linalg.inverse(gram)
        if any(x.denominator != 1 for row in inv for x in row):
            raise ArithmeticError("K3 lattice is not unimodular")
        return cls(tuple(map(tuple, gram)), tuple(tuple(int(x) for x in row) for row in inv))

    def form(self, u, v):
        """Intersection form (u, v)_S on coordinate vectors."""
        total = 0
        for i, ui in enumerate(u):
            if ui:
                for j, g in _ROW_SUPPORT[i]:
                    if v[j]:
                        total += ui * g * v[j]
        return total

    def dual_vector(self, i):
        """Coordinates of e_i^v, the Poincare dual of e_i (0-based i)."""
        return self.gram_inverse[i]


LATTICE = K3Lattice.standard()
_ROW_SUPPORT = tuple(tuple((j, g) for j, g in enumerate(row) if g) for row in LATTICE.gram)


@dataclass(frozen=True)
class GradedClass:
    """c_unit·1 + Σ c_mid[i]·e_{i+1} + c_pt·[pt]."""

    c_unit: Fraction = Fraction(0)
    c_mid: tuple = (Fraction(0),) * RANK
    c_pt: Fraction = Fraction(0)

    @classmethod
    def unit(cls, c=1):
        return cls(c_unit=Fraction(c))

    @classmethod
    def point(cls, c=1):
        return cls(c_pt=Fraction(c))

    @classmethod
    def mid(cls, vector):
        return cls(c_mid=tuple(Fraction(x) for x in vector))

    @classmethod
    def basis(cls, label):
        if label == UNIT:
            return cls.unit()
        if label == PT:
            return cls.point()
        v = [0] * RANK
        v[label - 1] = 1
        return cls.mid(v)

    @classmethod
    def from_labels(cls, coeffs):
        unit = coeffs.get(UNIT, 0)
        pt = coeffs.get(PT, 0)
        return cls(Fraction(unit), tuple(Fraction(coeffs.get(i + 1, 0)) for i in range(RANK)), Fraction(pt))

    def labels(self):
        """Sparse {label: coefficient} view."""
        out = {}
        if self.c_unit:
            out[UNIT] = self.c_unit
        for i, c in enumerate(self.c_mid):
            if c:
                out[i + 1] = c
        if self.c_pt:
            out[PT] = self.c_pt
        return out

    def degree(self):
        """Shifted weight if homogeneous, None for zero or mixed classes."""
        present = [d for d, nz in ((-2, self.c_unit), (0, any(self.c_mid)), (2, self.c_pt)) if nz]
        return present[0] if len(present) == 1 else None

    def __add__(self, other):
        return GradedClass(
            self.c_unit + other.c_unit,
            tuple(a + b for a, b in zip(self.c_mid, other.c_mid)),
            self.c_pt + other.c_pt,
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return GradedClass(self.c_unit * c, tuple(x * c for x in self.c_mid), self.c_pt * c)

    def __mul__(self, other):
        return mul_A(self, other)


def mul_A(a, b, lattice=LATTICE):
    mid = lattice.form(a.c_mid, b.c_mid) if any(a.c_mid) and any(b.c_mid) else 0
    return GradedClass(
        a.c_unit * b.c_unit,
        tuple(a.c_unit * y + b.c_unit * x for x, y in zip(a.c_mid, b.c_mid)),
        a.c_unit * b.c_pt + a.c_pt * b.c_unit + mid,
    )


def T_functional(a):
    return -a.c_pt


def pairing(a, b):
    return T_functional(mul_A(a, b))


def pairing_gram():
    """24x24 Gram matrix of <,> in the label basis."""
    basis = [GradedClass.basis(l) for l in LABELS]
    return [[pairing(x, y) for y in basis] for x in basis]


def signature():
    plus, minus, zero = linalg.inertia(pairing_gram())
    if zero:
        raise ArithmeticError("degenerate pairing")
    return plus, minus


@lru_cache(maxsize=None)
def label_product(l1, l2):
    """Product of two basis labels as (scalar, label), or None if zero."""
    if l1 == UNIT:
        return (1, l2)
    if l2 == UNIT:
        return (1, l1)
    if l1 == PT or l2 == PT:
        return None
    g = LATTICE.gram[l1 - 1][l2 - 1]
    return (g, PT) if g else None


def dual_basis_label(label):
    """Poincare dual f^v of a basis element: ∫ f_k f_l^v = δ_kl."""
    if label == UNIT:
        return GradedClass.point()
    if label == PT:
        return GradedClass.unit()
    return GradedClass.mid(LATTICE.dual_vector(label - 1))


def _pairing_dual(label):
    """f^* with <f_k, f_l^*> = δ_kl; equals -f^v since T = -∫."""
    return -dual_basis_label(label)


def _triple_T(l1, l2, l3):
    """T(f_l1 f_l2 f_l3) for basis labels."""
    first = label_product(l1, l2)
    if first is None:
        return 0
    second = label_product(first[1], l3)
    if second is None or second[1] != PT:
        return 0
    return -first[0] * second[0]


@lru_cache(maxsize=None)
def _dual_occurrences():
    """label p -> ((i, coefficient of f_p in f_i^*), ...)."""
    occ = {p: [] for p in LABELS}
    for i in LABELS:
        for p, c in _pairing_dual(i).labels().items():
            occ[p].append((i, _norm(c)))
    return {p: tuple(v) for p, v in occ.items()}


@lru_cache(maxsize=None)
def comultiply_label(label, k=2):
    """Adjoint of k-fold multiplication applied to a basis label.

    Returns a tuple of (coefficient, (l_1, ..., l_k)) pairs.
    """
    if k < 1:
        raise ValueError("comultiplication arity must be positive")
    if k == 1:
        return ((Fraction(1), (label,)),)
    if k == 2:
        # <a, f_i^* f_j^*> = Σ_{p,q} (f_i^*)_p (f_j^*)_q T(a f_p f_q), over nonzero T only
        occurs = _dual_occurrences()
        acc = {}
        for p in LABELS:
            for q in LABELS:
                t = _triple_T(label, p, q)
                if not t:
                    continue
                for i, cp in occurs[p]:
                    for j, cq in occurs[q]:
                        acc[(i, j)] = acc.get((i, j), 0) + cp * cq * t
        return tuple((_norm(c), key) for key, c in sorted(acc.items()) if c)
    # coassociativity: Δ_k = (Δ_2 ⊗ id^{k-2}) ∘ Δ_{k-1}
    acc = {}
    for c, labels in comultiply_label(label, k - 1):
        for c2, (x, y) in comultiply_label(labels[0], 2):
            key = (x, y) + labels[1:]
            acc[key] = acc.get(key, 0) + c * c2
    return tuple((_norm(c), key) for key, c in sorted(acc.items()) if c)


def _norm(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def comultiply(a, k=2):
    """Δ_* a as a sparse {label tuple: coefficient} element of A^{⊗k}."""
    acc = {}
    for label, coeff in a.labels().items():
        for c, key in comultiply_label(label, k):
            acc[key] = acc.get(key, 0) + coeff * c
    return {key: c for key, c in acc.items() if c}


def tensor_pairing(x, y):
    """<x, y> on A^{⊗k} for sparse label-tuple dicts."""
    total = Fraction(0)
    for kx, cx in x.items():
        for ky, cy in y.items():
            term = cx * cy
            for lx, ly in zip(kx, ky):
                prod = label_product(lx, ly)
                if prod is None or prod[1] != PT:
                    term = 0
                    break
                term *= -prod[0]
            total += term
    return total


def euler_class():
    return GradedClass.point(-24)


def euler_from_comultiplication():
    """mul ∘ Δ_* applied to 1."""
    out = GradedClass()
    for (l1, l2), c in comultiply(GradedClass.unit()).items():
        out = out + mul_A(GradedClass.basis(l1), GradedClass.basis(l2)).scale(c)
    return out
