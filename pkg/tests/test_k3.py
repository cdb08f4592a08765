from hilbk3 import k3, linalg


def test_lattice_unimodular_and_even():
    g = k3.LATTICE.gram
    assert linalg.det(g) == -1
    assert all(g[i][i] % 2 == 0 for i in range(k3.RANK))
    assert linalg.inertia(g) == (3, 19, 0)


def test_dual_basis():
    for i in range(k3.RANK):
        dual = k3.LATTICE.dual_vector(i)
        for j in range(k3.RANK):
            e = [0] * k3.RANK
            e[j] = 1
            assert k3.LATTICE.form(dual, e) == (1 if i == j else 0)


def test_frobenius_pairing():
    assert k3.signature() == (20, 4)
    one, pt = k3.GradedClass.unit(), k3.GradedClass.point()
    assert k3.pairing(one, pt) == -1
    assert k3.pairing(one, one) == 0


def test_euler_class():
    assert k3.euler_class().labels() == {k3.PT: -24}
    assert k3.euler_from_comultiplication().labels() == {k3.PT: -24}


def test_comultiplication_is_adjoint():
    # <Δ(a), b ⊗ c> = <a, bc>
    labels = (k3.UNIT, 1, 2, 9, k3.PT)
    for a in labels:
        ca = k3.comultiply(k3.GradedClass.basis(a))
        for b in labels:
            for c in labels:
                lhs = k3.tensor_pairing(ca, {(b, c): 1})
                rhs = k3.pairing(k3.GradedClass.basis(a), k3.GradedClass.basis(b) * k3.GradedClass.basis(c))
                assert lhs == rhs, (a, b, c)
