from fractions import Fraction as F

import pytest

from yibre.cg import (CGParams, cg_equivalence_residual, cg_matrix,
                      cg_plane_relations, cg_symmetry_residual,
                      d_twist_conjugate, d_twist_matrix,
                      generating_function_residual, phi_transition,
                      sectype_identity_residual, standard_rc_matrix,
                      standard_riming, summation_matrix, x_change_of_basis)
from yibre.kernel import InvalidInputError, RationalDraw
from yibre.rime import (RimeClass, classify, quantum_space_relations,
                        relation_basis_from_rows, strict_rime_R)
from yibre.tensor import (Operator1, Operator2, conjugate2, hecke_residual,
                          kron11, yb_residual)

Q = F(1, 4)


def rows_of(r, i, j):
    n = r.dim
    return [r.get(i, j, k, l) for k in range(1, n + 1) for l in range(1, n + 1)]


def test_cg_frozen_n2():
    r = cg_matrix(CGParams(2, Q, 1))
    assert rows_of(r, 1, 1) == [1, 0, 0, 0]
    assert rows_of(r, 1, 2) == [0, 1 - Q, 1, 0]
    assert rows_of(r, 2, 1) == [0, Q, 0, 0]
    assert rows_of(r, 2, 2) == [0, 0, 0, 1]


def test_cg_n1_identity():
    assert cg_matrix(CGParams(1, Q, 1)) == Operator2.identity(1)


def test_cg_n3_staircase_terms():
    r = cg_matrix(CGParams(3, Q, 1))
    assert r.get(1, 3, 3, 1) == 1
    assert r.get(1, 3, 1, 3) == 1 - Q
    assert r.get(1, 3, 2, 2) == 1 - Q


@pytest.mark.parametrize("n,p", [(2, F(1)), (3, F(1)), (3, F(2, 3)), (4, F(-3))])
def test_cg_ybe_hecke(n, p):
    r = cg_matrix(CGParams(n, Q, p))
    assert yb_residual(r).is_zero()
    assert hecke_residual(r, 1 - Q).is_zero()


def test_d_twist():
    r = cg_matrix(CGParams(3, Q, 1))
    assert d_twist_conjugate(r, 1) == r
    assert d_twist_conjugate(r, 2) == cg_matrix(CGParams(3, Q, 2))
    d = d_twist_matrix(3, 2)
    dd = kron11(d, d)
    assert (r @ dd) == (dd @ r)
    # a matrix without the invariance fails the precondition
    bad = strict_rime_R([1, 2, 4], F(1, 2))
    with pytest.raises(InvalidInputError):
        d_twist_conjugate(bad, 2)


def test_x_change_of_basis_frozen():
    x, xinv = x_change_of_basis([1, 2])
    assert x.rows == [[1, 2], [1, 1]]
    assert xinv.rows == [[-1, 2], [1, -1]]
    assert x_change_of_basis([5])[0].rows == [[1]]


@pytest.mark.parametrize("phi", [[1, 2], [1, 2, 3], [0, 1, 5, -2]])
def test_x_inverse_exact(phi):
    x, xinv = x_change_of_basis(phi)
    assert (x @ xinv) == Operator1.identity(len(phi))
    assert (xinv @ x) == Operator1.identity(len(phi))


@pytest.mark.parametrize("phi,beta", [([1, 2], F(1, 2)), ([1, 2, 4], F(1, 3))])
def test_cg_equivalence(phi, beta):
    assert cg_equivalence_residual(phi, beta).is_zero()


def test_cg_equivalence_seeded_n4_n5():
    rd = RationalDraw(7)
    for n in (4, 5):
        phi = rd.vector(n, distinct=True)
        assert cg_equivalence_residual(phi, F(2, 5)).is_zero()


def test_cg_equivalence_beta_one_rejected():
    with pytest.raises(InvalidInputError):
        cg_equivalence_residual([1, 2], 1)


def test_sectype_exhaustive():
    for phi in ([1, 2], [1, 2, 4], [1, 2, 4, 7]):
        n = len(phi)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        assert sectype_identity_residual(phi, i, j, k, l) == 0


def test_sectype_seeded_tuples():
    rd = RationalDraw(13)
    phi = rd.vector(4, distinct=True)
    for _ in range(20):
        i = rd.int_in(1, 4)
        j = rd.int_in(1, 4)
        if i == j:
            j = i % 4 + 1
        k, l = rd.int_in(1, 4), rd.int_in(1, 4)
        assert sectype_identity_residual(phi, i, j, k, l) == 0
    with pytest.raises(InvalidInputError):
        sectype_identity_residual(phi, 2, 2, 1, 1)


def test_phi_transition():
    assert phi_transition([1, 2], [1, 2]) == Operator1.identity(2)
    pt = phi_transition([1, 2], [3, 5])
    assert pt.rows == [[4, -3], [2, -1]]
    rd = RationalDraw(5)
    for n in (2, 3):
        a, b = rd.vector(n, distinct=True), rd.vector(n, distinct=True)
        xp, _ = x_change_of_basis(b)
        _, xi = x_change_of_basis(a)
        assert phi_transition(a, b) == (xp @ xi)


def test_generating_function():
    assert all(v == 0 for row in generating_function_residual([1, 2]) for v in row)
    rd = RationalDraw(9)
    grid = generating_function_residual(rd.vector(4, distinct=True))
    assert all(v == 0 for row in grid for v in row)


def test_standard_riming():
    for n in (2, 3, 4):
        rc, xt, residual = standard_riming(n, Q)
        assert residual.is_zero()
        assert yb_residual(rc).is_zero()
        assert hecke_residual(rc, 1 - Q).is_zero()
        conj = conjugate2(rc, xt)
        assert classify(conj) in (RimeClass.RIME_NON_STRICT, RimeClass.RIME_STRICT)
    assert summation_matrix(3).rows == [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    r2 = standard_rc_matrix(2, Q)
    assert rows_of(r2, 1, 2) == [0, 1 - Q, 1, 0]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cg_symmetry(n):
    assert cg_symmetry_residual(n, Q).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cg_quantum_plane(n):
    rcg = cg_matrix(CGParams(n, Q, 1))
    assert quantum_space_relations(rcg, 1, "right", "even") == cg_plane_relations(n, Q)


@pytest.mark.parametrize("n,phi", [(2, [1, 2]), (3, [1, 2, 4])])
def test_xty_maps_plane_ideals(n, phi):
    beta = 1 - Q
    rr = strict_rime_R(phi, beta)
    x, _ = x_change_of_basis(phi)
    m = rr.scalar_shift(-1) @ kron11(x, x)
    rows = [[m._get(r_, c_) for c_ in range(n * n)] for r_ in range(n * n)]
    rcg = cg_matrix(CGParams(n, Q, 1))
    rows2 = [[rcg.scalar_shift(-1)._get(r_, c_) for c_ in range(n * n)]
             for r_ in range(n * n)]
    assert relation_basis_from_rows(n, rows) == relation_basis_from_rows(n, rows2)
