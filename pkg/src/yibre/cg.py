"""Cremmer-Gervais R-matrices and the symmetric-function change of basis.

The two-parameter family is kept polynomial in q^-2 and p, so a single
rational ``qsq_inv`` stands for q^-2 everywhere and no square roots appear.
The Hecke parameter is beta = 1 - q^-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kernel import (ONE, ZERO, InvalidInputError, elem_sym, elem_sym_omit,
                     rat, ratvec, require_distinct, theta)
from .rime import RimeClass, classify, strict_rime_R
from .tensor import Operator1, Operator2, conjugate2, kron11, op1_on_leg2


@dataclass(frozen=True)
class CGParams:
    dim: int
    qsq_inv: Fraction  # the value q^-2
    p: Fraction = ONE

    def __post_init__(self):
        object.__setattr__(self, "qsq_inv", rat(self.qsq_inv))
        object.__setattr__(self, "p", rat(self.p))
        if not self.qsq_inv:
            raise InvalidInputError("qsq_inv must be nonzero")
        if not self.p:
            raise InvalidInputError("p must be nonzero")

    @property
    def beta(self) -> Fraction:
        return ONE - self.qsq_inv


def cg_matrix(params: CGParams) -> Operator2:
    """Entries q^{-2 theta_ij} p^{i-j} d^i_l d^j_k plus the two (1-q^-2) staircase sums."""
    n, qi, p = params.dim, params.qsq_inv, params.p
    r = Operator2(n)
    one_minus = ONE - qi
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r.add_to(i, j, j, i, (qi ** theta(i, j)) * p ** (i - j))
            for s in range(i, j):           # i <= s < j
                l = i + j - s
                if 1 <= l <= n:
                    r.add_to(i, j, s, l, one_minus * p ** (i - s))
            for s in range(j + 1, i):       # j < s < i
                l = i + j - s
                if 1 <= l <= n:
                    r.add_to(i, j, s, l, -one_minus * p ** (i - s))
    return r


def d_twist_matrix(n: int, p) -> Operator1:
    """D(p)^i_j = delta^i_j p^(i-1)."""
    p = rat(p)
    if not p:
        raise InvalidInputError("p must be nonzero")
    return Operator1.diag([p ** i for i in range(n)])


def d_twist_conjugate(r: Operator2, p) -> Operator2:
    """D(p)_1 R D(p)_1^{-1}, legal only when D(p)_1 D(p)_2 commutes with R."""
    n = r.dim
    d = d_twist_matrix(n, p)
    dd = kron11(d, d)
    if not (r @ dd - dd @ r).is_zero():
        raise InvalidInputError("D(p) x D(p) does not commute with the matrix")
    d1 = op1_on_leg2(d, 1)
    return d1 @ r @ op1_on_leg2(d.inverse(), 1)


def x_change_of_basis(phi) -> tuple[Operator1, Operator1]:
    """X^k_j = e_{j-1}^khat(phi) and its Lagrange closed-form inverse."""
    phi = ratvec(phi)
    require_distinct(phi, "phi")
    n = len(phi)
    x = Operator1([[elem_sym_omit(phi, j - 1, k) for j in range(1, n + 1)]
                   for k in range(1, n + 1)])
    rows = []
    for j in range(1, n + 1):
        row = []
        for i in range(1, n + 1):
            denom = ONE
            for k in range(1, n + 1):
                if k != i:
                    denom *= phi[i - 1] - phi[k - 1]
            row.append((-ONE) ** (j - 1) * phi[i - 1] ** (n - j) / denom)
        rows.append(row)
    xinv = Operator1(rows)
    if (x @ xinv) != Operator1.identity(n):
        raise InvalidInputError("closed-form inverse failed")  # distinctness guarantees this
    return x, xinv


def cg_equivalence_residual(phi, beta) -> Operator2:
    """R(phi,beta) (X x X) - (X x X) R_CG with q^-2 = 1 - beta; zero by construction."""
    beta = rat(beta)
    if beta == 1:
        raise InvalidInputError("beta = 1 puts q^-2 at zero")
    phi = ratvec(phi)
    r = strict_rime_R(phi, beta)
    x, _ = x_change_of_basis(phi)
    xx = kron11(x, x)
    rcg = cg_matrix(CGParams(len(phi), ONE - beta, ONE))
    return r @ xx - xx @ rcg


def sectype_identity_residual(phi, i: int, j: int, k: int, l: int) -> Fraction:
    """Symmetric-function identity behind the change of basis, one index tuple."""
    phi = ratvec(phi)
    require_distinct(phi, "phi")
    if i == j:
        raise InvalidInputError("requires i != j")
    n = len(phi)
    e = lambda m, omit: elem_sym_omit(phi, m, omit)
    lhs = (phi[i - 1] * e(k - 1, i) - phi[j - 1] * e(k - 1, j)) \
        * (e(l - 1, i) - e(l - 1, j)) / (phi[i - 1] - phi[j - 1])
    rhs = ZERO
    for s in range(max(1, k - l + 2), k + 1):
        rhs += e(l + s - 2, i) * e(k - s, j) - e(l + s - 2, j) * e(k - s, i)
    return lhs - rhs


def phi_transition(phi, phi_prime) -> Operator1:
    """Closed form of X(phi') X(phi)^{-1}.

    Entry (i,j) is prod_{k != i}(phi_j - phi'_k) / prod_{l != j}(phi_j - phi_l);
    the apparent pole at phi_j = phi'_i cancels against the full product, so
    the cancelled form is used and no extra precondition is needed.
    """
    phi = ratvec(phi)
    phi_prime = ratvec(phi_prime)
    require_distinct(phi, "phi")
    require_distinct(phi_prime, "phi'")
    if len(phi) != len(phi_prime):
        raise InvalidInputError("vectors must share a length")
    n = len(phi)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            num = ONE
            for k in range(1, n + 1):
                if k != i:
                    num *= phi[j - 1] - phi_prime[k - 1]
            den = ONE
            for l in range(1, n + 1):
                if l != j:
                    den *= phi[j - 1] - phi[l - 1]
            row.append(num / den)
        rows.append(row)
    return Operator1(rows)


def generating_function_residual(phi) -> list[list[Fraction]]:
    """Grid of e_j(phi) - e_j^ihat - phi_i e_{j-1}^ihat over all (i, j).

    e_j is affine in each phi_i with slope e_{j-1}^ihat, so vanishing of this
    grid is exactly the derivative rule de_j/dphi_i = e_{j-1}^ihat behind the
    generating-function form of the change of basis.
    """
    phi = ratvec(phi)
    n = len(phi)
    return [[elem_sym(phi, j) - elem_sym_omit(phi, j, i) - phi[i - 1] * elem_sym_omit(phi, j - 1, i)
             for j in range(1, n + 1)] for i in range(1, n + 1)]


def standard_rc_matrix(n: int, qsq_inv) -> Operator2:
    """Exchange matrix of the multiparameter standard solution that admits riming."""
    qi = rat(qsq_inv)
    r = Operator2(n)
    for i in range(1, n + 1):
        r.set(i, i, i, i, ONE)
        for j in range(1, n + 1):
            if i < j:
                r.set(i, j, j, i, ONE)
                r.set(i, j, i, j, ONE - qi)
            elif i > j:
                r.set(i, j, j, i, qi)
    return r


def riming_target_matrix(n: int, qsq_inv) -> Operator2:
    """Rime form read off the transformed exchange relations."""
    qi = rat(qsq_inv)
    r = Operator2(n)
    for i in range(1, n + 1):
        r.set(i, i, i, i, ONE)
        for j in range(1, n + 1):
            if i < j:
                r.set(i, j, j, i, ONE)
                r.set(i, j, i, j, ONE - qi)
                r.set(i, j, i, i, -(ONE - qi))
            elif i > j:
                r.set(i, j, j, i, qi)
                r.set(i, j, j, j, ONE - qi)
    return r


def summation_matrix(n: int) -> Operator1:
    """Xtilde^i_j = 1 - theta_ji: lower-triangular matrix of ones."""
    return Operator1([[ONE if j <= i else ZERO for j in range(n)] for i in range(n)])


def standard_riming(n: int, qsq_inv) -> tuple[Operator2, Operator1, Operator2]:
    """Conjugate the standard solution by the summation matrix; lands on a rime form."""
    if n < 2:
        raise InvalidInputError("needs n >= 2")
    rc = standard_rc_matrix(n, qsq_inv)
    xt = summation_matrix(n)
    conj = conjugate2(rc, xt)
    residual = conj - riming_target_matrix(n, qsq_inv)
    if residual.is_zero() and classify(conj) not in (RimeClass.RIME_STRICT,
                                                     RimeClass.RIME_NON_STRICT,
                                                     RimeClass.ICE):
        raise InvalidInputError("conjugated matrix failed the rime test")
    return rc, xt, residual


def cg_symmetry_residual(n: int, qsq_inv) -> Operator2:
    """(R_CG)^{ab}_{kl} - d^a_k d^b_l - d^a_l d^b_k + (R_CG)^{ba}_{kl} at p = 1."""
    rcg = cg_matrix(CGParams(n, qsq_inv, ONE))
    out = Operator2(n)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    v = rcg.get(a, b, k, l) + rcg.get(b, a, k, l)
                    if a == k and b == l:
                        v -= ONE
                    if a == l and b == k:
                        v -= ONE
                    if v:
                        out.set(a, b, k, l, v)
    return out


def cg_plane_relations(n: int, qsq_inv):
    """Right even plane of R_CG: y^i y^j = q^2 y^j y^i + (q^2-1)(y^{i+1}y^{j-1} + ...), i<j."""
    from .rime import relation_basis_from_rows

    qi = rat(qsq_inv)
    rows = []
    pos = lambda a, b: (a - 1) * n + (b - 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # multiplied through by q^-2 to stay polynomial in qsq_inv
            row = [ZERO] * (n * n)
            row[pos(i, j)] += qi
            row[pos(j, i)] -= ONE
            for s in range(i + 1, j):
                row[pos(s, i + j - s)] -= ONE - qi
            rows.append(row)
    return relation_basis_from_rows(n, rows)
