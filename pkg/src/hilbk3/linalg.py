"""Exact linear algebra over the rationals (small dense matrices)."""

from fractions import Fraction


def _frac_matrix(m):
    return [[Fraction(x) for x in row] for row in m]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = _frac_matrix(m)
    rows, cols = len(m), len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m):
    return len(rref(m)[1])


def det(m):
    m = _frac_matrix(m)
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def inverse(m):
    n = len(m)
    aug = [list(row) + identity(n)[i] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve(m, rhs):
    """Solve m·x = rhs exactly; raises ValueError if inconsistent.

    Overdetermined systems are fine as long as they are consistent; the
    solution must be unique.
    """
    cols = len(m[0])
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < cols:
        raise ValueError("underdetermined linear system")
    return [red[i][cols] for i in range(cols)]


def nullspace(m):
    """Basis of the right kernel, one vector per free column."""
    cols = len(m[0])
    red, pivots = rref(m)
    basis = []
    for free in range(cols):
        if free in pivots:
            continue
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(v)
    return basis


def inertia(m):
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Symmetric Gaussian elimination by congruence; a zero pivot with a
    nonzero off-diagonal entry is repaired by adding that row/column.
    """
    m = _frac_matrix(m)
    n = len(m)
    plus = minus = 0
    active = list(range(n))
    while active:
        i = active[0]
        if m[i][i] == 0:
            j = next((j for j in active[1:] if m[i][j] != 0), None)
            if j is None:
                active.pop(0)
                continue
            if m[j][j] != 0:
                # swap roles so the pivot is nonzero
                active.remove(j)
                active.insert(0, j)
                continue
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            continue
        piv = m[i][i]
        if piv > 0:
            plus += 1
        else:
            minus += 1
        rest = active[1:]
        for r in rest:
            f = m[r][i] / piv
            if f:
                for k in range(n):
                    m[r][k] -= f * m[i][k]
                for k in range(n):
                    m[k][r] -= f * m[k][i]
        active = rest
    return plus, minus, n - plus - minus


def primitive_integer_vector(v):
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    from math import gcd, lcm

    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints
