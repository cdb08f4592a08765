"""The algebra A{S_n}, its S_n-invariants A^[n], and integration on S^[n].

An element is a sum over permutations π of tensors indexed by the
orbits of <π> on {1..n}.  Tensors are sparse dicts from label tuples
(one A-basis label per orbit, orbits sorted by their smallest element)
to Fractions.  Points are 0-based internally; cycles are written
1-based at the API boundary.

The product of aπ and bσ is

    φ_*( φ_π^*(a) · φ_σ^*(b) · e^{g} ) · πσ

where the pullbacks multiply a and b onto the orbits of <π, σ>, e is the
Euler class of A, g is the graph defect of each orbit, and φ_* is the
adjoint of multiplication from <πσ>-orbits onto <π, σ>-orbits.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from . import k3
from .k3 import PT, UNIT, label_product, comultiply_label


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple  # images[i] = π(i), 0-based

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n, *cycles):
        """Permutation from 1-based cycles, e.g. from_cycles(3, (1, 2, 3))."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        if sorted(images) != list(range(n)):
            raise ValueError("cycles do not define a permutation")
        return cls(tuple(images))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        """Composition: (π·σ)(i) = π(σ(i))."""
        if self.n != other.n:
            raise ValueError("permutations of different degree")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def orbits(self):
        return orbit_partition(self.n, (self,))

    def is_identity(self):
        return self.images == tuple(range(self.n))

    def __repr__(self):
        cycles = [o for o in self.orbits() if len(o) > 1]
        if not cycles:
            return "id"
        out = []
        for o in cycles:
            cyc, i = [o[0]], self.images[o[0]]
            while i != o[0]:
                cyc.append(i)
                i = self.images[i]
            out.append("(" + "".join(str(c + 1) for c in cyc) + ")")
        return "".join(out)


@lru_cache(maxsize=None)
def orbit_partition(n, gens):
    """Orbits of the group generated by ``gens``, each a sorted tuple, sorted by minimum."""
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g(i))
            if a != b:
                parent[a] = b
    blocks = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def _block_map(fine, coarse):
    """Index of the coarse block containing each fine block."""
    where = {}
    for j, block in enumerate(coarse):
        for i in block:
            where[i] = j
    return tuple(where[block[0]] for block in fine)


@dataclass
class OrbitTensor:
    """A tensor with factors indexed by the blocks of ``orbits``."""

    orbits: tuple
    coeffs: dict

    def __post_init__(self):
        for key in self.coeffs:
            if len(key) != len(self.orbits):
                raise ValueError("tensor key %r does not match %d orbits" % (key, len(self.orbits)))


def _check_surjection(phi, m):
    if set(phi) != set(range(m)):
        raise ValueError("map %r is not a surjection onto %d blocks" % (phi, m))


def _pull_key(phi, m, key):
    """Multiply the factors of one basis tensor within each fiber of phi."""
    scalar = 1
    out = [UNIT] * m
    for i, label in enumerate(key):
        j = phi[i]
        prod = label_product(out[j], label)
        if prod is None:
            return None
        scalar *= prod[0]
        out[j] = prod[1]
    return scalar, tuple(out)


def pullback(phi, a, m=None):
    """φ^*: A^{⊗I} → A^{⊗J} for a surjection phi given as a tuple I → range(m)."""
    phi = tuple(phi)
    m = max(phi) + 1 if m is None else m
    _check_surjection(phi, m)
    acc = {}
    for key, c in a.items():
        res = _pull_key(phi, m, key)
        if res is not None:
            s, k2 = res
            acc[k2] = acc.get(k2, 0) + c * s
    return {k: c for k, c in acc.items() if c}


@lru_cache(maxsize=None)
def _fibers(phi, m):
    return tuple(tuple(i for i, j in enumerate(phi) if j == jj) for jj in range(m))


def _push_key(phi, m, key):
    """Expand one basis tensor over J into A^{⊗I}; yields (coeff, key)."""
    fibers = _fibers(phi, m)
    parts = [comultiply_label(label, len(fib)) for label, fib in zip(key, fibers)]
    size = len(phi)
    for combo in product(*parts):
        coeff = 1
        out = [None] * size
        for (c, labels), fib in zip(combo, fibers):
            coeff *= c
            for pos, lab in zip(fib, labels):
                out[pos] = lab
        yield coeff, tuple(out)


def pushforward(phi, b, m=None):
    """φ_*: A^{⊗J} → A^{⊗I}, the <,>-adjoint of pullback."""
    phi = tuple(phi)
    m = max(phi) + 1 if m is None else m
    _check_surjection(phi, m)
    acc = {}
    for key, c in b.items():
        for c2, k2 in _push_key(phi, m, key):
            acc[k2] = acc.get(k2, 0) + c * c2
    return {k: c for k, c in acc.items() if c}


def graph_defect(pi, sigma, block):
    """g(B) = (|B| + 2 - #<π>-orbits - #<σ>-orbits - #<πσ>-orbits in B) / 2."""
    block = set(block)

    def count(perm):
        return sum(1 for o in perm.orbits() if o[0] in block)

    twice = len(block) + 2 - count(pi) - count(sigma) - count(pi * sigma)
    if twice < 0 or twice % 2:
        raise ArithmeticError("graph defect %s/2 is not a nonnegative integer" % twice)
    return twice // 2


@lru_cache(maxsize=None)
def _product_plan(pi, sigma):
    n = pi.n
    tau = pi * sigma
    joint = orbit_partition(n, (pi, sigma))
    m = len(joint)
    phi_pi = _block_map(pi.orbits(), joint)
    phi_sigma = _block_map(sigma.orbits(), joint)
    phi_tau = _block_map(tau.orbits(), joint)
    defects = tuple(graph_defect(pi, sigma, b) for b in joint)
    return tau, m, phi_pi, phi_sigma, phi_tau, defects


def _norm(c):
    """Keep integral coefficients as int; Fraction arithmetic is much slower."""
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class SnClass:
    """Element of A{S_n}: {Permutation: {label tuple: Fraction}}."""

    __slots__ = ("n", "sectors")

    def __init__(self, n, sectors=None):
        self.n = n
        clean = {}
        for perm, tensor in (sectors or {}).items():
            if perm.n != n:
                raise ValueError("sector permutation of wrong degree")
            k = len(perm.orbits())
            t = {}
            for key, c in tensor.items():
                if len(key) != k:
                    raise ValueError("sector %r expects %d labels, got %r" % (perm, k, key))
                if c:
                    t[key] = _norm(c)
            if t:
                clean[perm] = t
        self.sectors = clean

    @classmethod
    def sector(cls, perm, labels=None, coeff=1):
        """coeff · (basis tensor) · perm; all-unit labels by default."""
        if labels is None:
            labels = (UNIT,) * len(perm.orbits())
        return cls(perm.n, {perm: {tuple(labels): coeff}})

    @classmethod
    def from_tensor(cls, perm, tensor):
        return cls(perm.n, {perm: dict(tensor)})

    def orbit_tensor(self, perm):
        return OrbitTensor(perm.orbits(), dict(self.sectors.get(perm, {})))

    def terms(self):
        for perm, t in self.sectors.items():
            for key, c in t.items():
                yield perm, key, c

    def __len__(self):
        return sum(len(t) for t in self.sectors.values())

    def is_zero(self):
        return not self.sectors

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, SnClass) and self.n == other.n and self.sectors == other.sectors

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if self.n != other.n:
            raise ValueError("mismatched n")
        sectors = {p: dict(t) for p, t in self.sectors.items()}
        for perm, key, c in other.terms():
            t = sectors.setdefault(perm, {})
            t[key] = t.get(key, 0) + c
        return SnClass(self.n, sectors)

    __radd__ = __add__

    def scale(self, c):
        c = Fraction(c)
        return SnClass(self.n, {p: {k: v * c for k, v in t.items()} for p, t in self.sectors.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)

    def __pow__(self, k):
        out = unit(self.n)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __repr__(self):
        parts = []
        for perm in sorted(self.sectors):
            for key, c in sorted(self.sectors[perm].items()):
                parts.append("%s*%s%r" % (c, key, perm))
        return " + ".join(parts) if parts else "0"


def unit(n):
    return SnClass.sector(Permutation.identity(n))


def _joint_product(ka, kb, defects):
    """Factorwise product of two basis tensors times e^{g(B)} on each block."""
    coeff = 1
    labels = []
    for la, lb, g in zip(ka, kb, defects):
        prod = label_product(la, lb)
        if prod is None:
            return None
        coeff *= prod[0]
        lab = prod[1]
        for _ in range(g):
            prod = label_product(lab, PT)
            if prod is None:
                return None
            coeff *= prod[0] * _EULER
            lab = prod[1]
        labels.append(lab)
    return coeff, tuple(labels)


_EULER = k3.euler_class().c_pt


def multiply(x, y):
    if x.n != y.n:
        raise ValueError("cannot multiply classes over S_%d and S_%d" % (x.n, y.n))
    out = {}
    for pi, ta in x.sectors.items():
        for sigma, tb in y.sectors.items():
            tau, m, phi_pi, phi_sigma, phi_tau, defects = _product_plan(pi, sigma)
            pa = pullback(phi_pi, ta, m)
            if not pa:
                continue
            pb = pullback(phi_sigma, tb, m)
            joint = {}
            for ka, ca in pa.items():
                for kb, cb in pb.items():
                    res = _joint_product(ka, kb, defects)
                    if res is not None:
                        joint[res[1]] = joint.get(res[1], 0) + ca * cb * res[0]
            if not joint:
                continue
            pushed = pushforward(phi_tau, joint, m)
            t = out.setdefault(tau, {})
            for key, c in pushed.items():
                t[key] = t.get(key, 0) + c
    return SnClass(x.n, out)


@lru_cache(maxsize=None)
def _top_coefficient(label, k):
    """Coefficient of pt^{⊗k} in the k-fold comultiplication of a label."""
    for c, key in comultiply_label(label, k):
        if all(lab == PT for lab in key):
            return c
    return 0


@lru_cache(maxsize=None)
def _partners(label):
    """Labels with a nonzero product against ``label``, with that product."""
    out = []
    for other in range(k3.DIM):
        prod = label_product(label, other)
        if prod is not None:
            out.append((other, prod))
    return tuple(out)


def integrate_product(x, y):
    """integrate(x * y), computing only the part that lands on [pt]^{⊗n}(id)."""
    if x.n != y.n:
        raise ValueError("cannot multiply classes over S_%d and S_%d" % (x.n, y.n))
    total = 0
    for pi, ta in x.sectors.items():
        tb = y.sectors.get(pi.inverse())
        if not tb:
            continue
        tau, m, phi_pi, phi_sigma, phi_tau, defects = _product_plan(pi, pi.inverse())
        sizes = [len(f) for f in _fibers(phi_tau, m)]
        pa = pullback(phi_pi, ta, m)
        pb = pullback(phi_sigma, tb, m)
        for ka, ca in pa.items():
            options = [_partners(lab) for lab in ka]
            for choice in product(*options):
                kb = tuple(lb for lb, _ in choice)
                cb = pb.get(kb)
                if not cb:
                    continue
                res = _joint_product(ka, kb, defects)
                if res is None:
                    continue
                c = ca * cb * res[0]
                for lab, k in zip(res[1], sizes):
                    c *= _top_coefficient(lab, k)
                    if not c:
                        break
                total += c
    return Fraction(total) / factorial(x.n)


def sn_action(sigma, x):
    """σ~(aπ) = σ^*a · σπσ^{-1}: the factor on orbit O moves to σ(O)."""
    out = {}
    sinv = sigma.inverse()
    for pi, tensor in x.sectors.items():
        conj = sigma * pi * sinv
        src = pi.orbits()
        dst = conj.orbits()
        index = {o: j for j, o in enumerate(dst)}
        perm = [index[tuple(sorted(sigma(i) for i in o))] for o in src]
        t = out.setdefault(conj, {})
        for key, c in tensor.items():
            new = [None] * len(key)
            for i, lab in zip(perm, key):
                new[i] = lab
            new = tuple(new)
            t[new] = t.get(new, 0) + c
    return SnClass(x.n, out)


def all_permutations(n):
    return [Permutation(p) for p in permutations(range(n))]


def symmetrize(x):
    perms = all_permutations(x.n)
    total = SnClass(x.n)
    for s in perms:
        total = total + sn_action(s, x)
    return total.scale(Fraction(1, len(perms)))


def is_invariant(x):
    gens = [Permutation.from_cycles(x.n, (i, i + 1)) for i in range(1, x.n)]
    return all(sn_action(g, x) == x for g in gens)


def integrate(x):
    """(coefficient of [pt]^{⊗n} in the identity sector) / n!."""
    ident = Permutation.identity(x.n)
    c = x.sectors.get(ident, {}).get((PT,) * x.n, 0)
    return Fraction(c) / factorial(x.n)


def diagonal_class(n, vector):
    """Σ_i 1⊗…⊗D_{(i)}⊗…⊗1 (id) for D ∈ H^2(S) in e-coordinates."""
    ident = Permutation.identity(n)
    tensor = {}
    for idx, coeff in enumerate(vector):
        if coeff:
            for i in range(n):
                key = [UNIT] * n
                key[i] = idx + 1
                tensor[tuple(key)] = tensor.get(tuple(key), 0) + coeff
    return SnClass(n, {ident: tensor})


def delta_class(n=3):
    """δ = Σ_{i<j} 1·(ij)."""
    total = SnClass(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = total + SnClass.sector(Permutation.from_cycles(n, (i, j)))
    return total


def divisor_in_ring(vector, c, n=3):
    return diagonal_class(n, vector) + delta_class(n).scale(c)


# mostly unit labels, so products of a few random classes stay below the top degree
LOW_DEGREE_LABELS = (UNIT,) * 6 + (1, 2, 5, 13, PT)


def random_class(rng, n=3, terms=3, labels=None, coeffs=(-2, -1, 1, 2)):
    """A sparse random element of A{S_n}; ``rng`` is a random.Random."""
    labels = labels or tuple(range(k3.DIM))
    perms = all_permutations(n)
    out = SnClass(n)
    for _ in range(terms):
        perm = rng.choice(perms)
        key = tuple(rng.choice(labels) for _ in perm.orbits())
        out = out + SnClass.sector(perm, key, rng.choice(coeffs))
    return out
