"""Classical r-matrices: rime families, Cremmer-Gervais and boundary solutions.

All wedge/tensor expressions are generated from the single matrix-unit rule
e^i_j : e_i -> e_j (Operator1.unit), which pins every sign in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cg import x_change_of_basis
from .kernel import (ONE, ZERO, InvalidInputError, rat, ratvec,
                     require_distinct)
from .rime import strict_rime_R
from .tensor import (Operator1, Operator2, commutator_with_sum, conjugate2,
                     cybe_residual, kron11, op1_on_leg2, permutation_P, wedge)

RIME_NONSKEW = "rime-nonskew"
RIME_SKEW = "rime-skew"
RIME_SKEW_SL = "rime-skew-sl"
R_CG = "r-cg"
R_CG_PRIME = "r-cg-prime"
B_SKEW = "b-skew"
B_CG = "b-cg"

CLASSICAL_KINDS = (RIME_NONSKEW, RIME_SKEW, RIME_SKEW_SL, R_CG, R_CG_PRIME, B_SKEW, B_CG)
PARAMETRIC_KINDS = (RIME_NONSKEW, RIME_SKEW, RIME_SKEW_SL)


def unit(n, i, j) -> Operator1:
    return Operator1.unit(n, i, j)


def rime_nonskew_r(phi) -> Operator2:
    """r = sum_{i!=j} phi_i/(phi_i-phi_j) (e^i_j (x) e^j_i - e^i_i (x) e^j_j + e^i_i ^ e^i_j)."""
    phi = ratvec(phi)
    require_distinct(phi, "phi")
    n = len(phi)
    r = Operator2(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            c = phi[i - 1] / (phi[i - 1] - phi[j - 1])
            term = (kron11(unit(n, i, j), unit(n, j, i))
                    - kron11(unit(n, i, i), unit(n, j, j))
                    + wedge(unit(n, i, i), unit(n, i, j)))
            r = r + term.scale(c)
    return r


def rcg_r(n: int) -> Operator2:
    """Parameter-free Cremmer-Gervais cYB solution."""
    r = Operator2(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for s in range(1, j - i + 1):
                r = r + kron11(unit(n, i + s - 1, j), unit(n, j - s + 1, i))
                r = r - kron11(unit(n, i + s - 1, i), unit(n, j - s + 1, j))
    return r


def rcg_prime_r(n: int) -> Operator2:
    """The mirror solution with r P = -r."""
    r = Operator2(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for s in range(1, j - i + 1):
                r = r + kron11(unit(n, i, j - s + 1), unit(n, j, i + s - 1))
                r = r - kron11(unit(n, j, j - s + 1), unit(n, i, i + s - 1))
    return r


def b_skew_r(n: int) -> Operator2:
    """b = sum_{i<j} sum_k e_i^{i+k} ^ e_j^{j-k+1}."""
    r = Operator2(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(1, j - i + 1):
                r = r + wedge(unit(n, i + k, i), unit(n, j - k + 1, j))
    return r


def invariance_eta_cg(n: int) -> Operator1:
    """Traceless generator of the invariance group of the parameter-free solution.

    sum_j j e^j_j - (n+1)/2; the shift makes it traceless (the displayed
    multiple of the identity does not).
    """
    eta = Operator1.diag([Fraction(j) - Fraction(n + 1, 2) for j in range(1, n + 1)])
    return eta


def invariance_eta0_b(n: int) -> Operator1:
    """eta0 = sum_j (n-j) e^{j+1}_j, the translation generator for the skew solution."""
    eta = Operator1.zero(n)
    for j in range(1, n):
        eta = eta + unit(n, j + 1, j).scale(n - j)
    return eta


def b_cg_r(n: int) -> Operator2:
    """Boundary solution: b plus the Cartan completion sum (1 - j/n) e^i_i ^ e^{j+1}_j."""
    r = b_skew_r(n)
    ident = Operator1.identity(n)
    for j in range(1, n):
        r = r + wedge(ident, unit(n, j + 1, j)).scale(ONE - Fraction(j, n))
    return r


def carrier_Z(n: int, i: int, j: int) -> Operator1:
    """Z^i_j = e^i_j - e^j_j (zero when i = j)."""
    if i == j:
        return Operator1.zero(n)
    return unit(n, i, j) - unit(n, j, j)


def rime_skew_r(mu) -> Operator2:
    """Skew-symmetric r = sum_{i<j} Z^i_j ^ Z^j_i / (mu_i - mu_j)."""
    mu = ratvec(mu)
    require_distinct(mu, "mu")
    n = len(mu)
    r = Operator2(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            r = r + wedge(carrier_Z(n, i, j), carrier_Z(n, j, i)).scale(
                ONE / (mu[i - 1] - mu[j - 1]))
    return r


def rime_skew_sl_r(mu) -> Operator2:
    """The traceless variant built from Ztilde^i_j = Z^i_j + I/n."""
    mu = ratvec(mu)
    require_distinct(mu, "mu")
    n = len(mu)
    shift = Operator1.identity(n).scale(Fraction(1, n))
    r = Operator2(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            zt_ij = carrier_Z(n, i, j) + shift
            zt_ji = carrier_Z(n, j, i) + shift
            r = r + wedge(zt_ij, zt_ji).scale(ONE / (mu[i - 1] - mu[j - 1]))
    return r


def build_classical(kind: str, n: int | None = None, params=None) -> Operator2:
    if kind in PARAMETRIC_KINDS:
        if params is None:
            raise InvalidInputError(f"{kind} needs a parameter vector")
        return {RIME_NONSKEW: rime_nonskew_r,
                RIME_SKEW: rime_skew_r,
                RIME_SKEW_SL: rime_skew_sl_r}[kind](params)
    if n is None or n < 2:
        raise InvalidInputError(f"{kind} needs a dimension n >= 2")
    return {R_CG: rcg_r, R_CG_PRIME: rcg_prime_r, B_SKEW: b_skew_r, B_CG: b_cg_r}[kind](n)


def classical_limit_residual(phi, beta) -> Operator2:
    """P R(phi,beta) - identity - beta * r(phi): exactly zero, not asymptotically."""
    phi = ratvec(phi)
    beta = rat(beta)
    r_quantum = strict_rime_R(phi, beta)
    n = len(phi)
    p = permutation_P(n)
    return (p @ r_quantum) - Operator2.identity(n) - rime_nonskew_r(phi).scale(beta)


def conjugation_residual(pair: str, params) -> Operator2:
    """lhs - (X x X) rhs (X^-1 x X^-1) for the three stated equivalences."""
    params = ratvec(params)
    n = len(params)
    x, _ = x_change_of_basis(params)
    if pair == "nonskew-to-rcg":
        lhs, rhs = rime_nonskew_r(params), rcg_r(n)
    elif pair == "skew-to-b":
        lhs, rhs = rime_skew_r(params), b_skew_r(n)
    elif pair == "skew-sl-to-bcg":
        lhs, rhs = rime_skew_sl_r(params), b_cg_r(n)
    else:
        raise InvalidInputError(f"unknown conjugation pair {pair!r}")
    return lhs - conjugate2(rhs, x)


@dataclass
class CarrierReport:
    product_rule_ok: bool
    brackets_ok: bool
    other_brackets_vanish: bool
    omega_is_inverse: bool
    omega_is_coboundary: bool
    sl_variant_ok: bool

    def all_ok(self) -> bool:
        return all((self.product_rule_ok, self.brackets_ok, self.other_brackets_vanish,
                    self.omega_is_inverse, self.omega_is_coboundary, self.sl_variant_ok))


def carrier_algebra_check(mu) -> CarrierReport:
    """Structure checks for the Frobenius carrier spanned by Z^i_j."""
    mu = ratvec(mu)
    require_distinct(mu, "mu")
    n = len(mu)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    z = {(i, j): carrier_Z(n, i, j) for (i, j) in pairs}

    # (a) associative product rule Z^j_i Z^k_l = (d^j_l - d^i_l)(Z^k_i - Z^l_i)
    product_ok = True
    for (j, i) in pairs:
        for (k, l) in pairs:
            lhs = z[(j, i)] @ z[(k, l)]
            coeff = (ONE if j == l else ZERO) - (ONE if i == l else ZERO)
            rhs = (carrier_Z(n, k, i) - carrier_Z(n, l, i)).scale(coeff)
            if lhs != rhs:
                product_ok = False

    # (b) the three displayed bracket families
    def bracket(a, b):
        return a @ b - b @ a

    brackets_ok = True
    others_ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if bracket(z[(i, j)], z[(j, i)]) != z[(j, i)] - z[(i, j)]:
                brackets_ok = False
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                if bracket(z[(j, i)], z[(k, i)]) != z[(j, i)] - z[(k, i)]:
                    brackets_ok = False
                if bracket(z[(i, j)], z[(j, k)]) != z[(j, k)] - z[(i, k)]:
                    brackets_ok = False
    for (a, b) in pairs:
        for (c, d) in pairs:
            if {a, b} & {c, d}:
                continue
            if not bracket(z[(a, b)], z[(c, d)]).is_zero():
                others_ok = False

    # (c) omega(Z^i_j, Z^k_l) = -(mu_i - mu_j) d^l_i d^j_k inverts the r-coefficients
    idx = {p: a for a, p in enumerate(pairs)}
    m = len(pairs)
    rcoef = Operator1.zero(m)
    for (i, j) in pairs:
        rcoef.rows[idx[(i, j)]][idx[(j, i)]] = ONE / (mu[i - 1] - mu[j - 1])
    rinv = rcoef.inverse()
    omega = lambda i, j, k, l: -(mu[i - 1] - mu[j - 1]) if (l == i and k == j) else ZERO
    omega_ok = all(rinv.rows[idx[(i, j)]][idx[(k, l)]] == omega(i, j, k, l)
                   for (i, j) in pairs for (k, l) in pairs)

    # (d) omega = d(lambda_n) with lambda_n(Z^k_l) = -mu_l
    lam = lambda mat_pair: -mu[mat_pair[1] - 1]
    cobound_ok = True
    for (i, j) in pairs:
        for (k, l) in pairs:
            br = bracket(z[(i, j)], z[(k, l)])
            # expand br in the Z basis: br = sum c_{ab} Z^a_b with c read off entries
            val = _lambda_on_carrier(br, mu)
            if val != omega(i, j, k, l):
                cobound_ok = False

    # (e) Ztilde obeys the same brackets and fixes the all-ones vector up to 1/n
    shift = Operator1.identity(n).scale(Fraction(1, n))
    zt = {p: z[p] + shift for p in pairs}
    sl_ok = True
    v = tuple([ONE] * n)
    for (i, j) in pairs:
        if zt[(i, j)].apply(v) != tuple(x / n for x in v):
            sl_ok = False
        if bracket(zt[(i, j)], zt[(j, i)]) != zt[(j, i)] - zt[(i, j)]:
            sl_ok = False
    return CarrierReport(product_ok, brackets_ok, others_ok, omega_ok, cobound_ok, sl_ok)


def _lambda_on_carrier(mat: Operator1, mu) -> Fraction:
    """Evaluate lambda_n = -sum mu_i z^i_j on a matrix known to lie in the carrier.

    A carrier element sum c_{ij} Z^i_j has off-diagonal entries c_{ij} at the
    matrix slot of e^i_j (row j, col i with our unit convention), and
    lambda_n picks -sum_{i != j} c_{ij} mu_j.
    """
    n = mat.dim
    total = ZERO
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                total += -mat.rows[j - 1][i - 1] * mu[j - 1]
    return total


def invariance_shift_residual(r: Operator2, eta: Operator1, c) -> "Operator3":
    """cYB residual of r + c(eta_1 - eta_2); the invariance bracket is a precondition."""
    if not commutator_with_sum(r, eta).is_zero():
        raise InvalidInputError("[r, eta_1 + eta_2] != 0")
    c = rat(c)
    shifted = r + (op1_on_leg2(eta, 1) - op1_on_leg2(eta, 2)).scale(c)
    return cybe_residual(shifted)


def representation_change_residual(n: int, c, kind: str = R_CG) -> Operator2:
    """Effect of e^i_j -> e^i_j + c d^i_j on the wedge expansion, minus the closed form.

    For the Cremmer-Gervais solution the closed form carries an extra
    -c^2 n(n-1)/2 identity term on top of the displayed shift (multiples of
    the identity do not disturb the cYBe); for the skew solution the change
    is exactly c eta0 ^ identity.
    """
    c = rat(c)
    ident = Operator1.identity(n)
    if kind == R_CG:
        changed = Operator2(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for s in range(1, j - i + 1):
                    u1 = unit(n, i + s - 1, j)
                    u2 = unit(n, j - s + 1, i)
                    u3 = unit(n, i + s - 1, i)
                    u4 = unit(n, j - s + 1, j)
                    changed = changed + kron11(_shifted(u1, c), _shifted(u2, c))
                    changed = changed - kron11(_shifted(u3, c), _shifted(u4, c))
        eta = invariance_eta_cg(n)
        expected = (rcg_r(n)
                    + (kron11(eta, ident) - kron11(ident, eta)
                       - Operator2.identity(n).scale(n - 1)).scale(c)
                    - Operator2.identity(n).scale(c * c * Fraction(n * (n - 1), 2)))
        return changed - expected
    if kind == B_SKEW:
        changed = Operator2(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(1, j - i + 1):
                    a = unit(n, i + k, i)
                    b = unit(n, j - k + 1, j)
                    changed = changed + kron11(_shifted(a, c), _shifted(b, c))
                    changed = changed - kron11(_shifted(b, c), _shifted(a, c))
        expected = b_skew_r(n) + wedge(invariance_eta0_b(n), ident).scale(c)
        return changed - expected
    raise InvalidInputError(f"no representation change for kind {kind!r}")


def _shifted(u: Operator1, c) -> Operator1:
    """e^i_j + c d^i_j: the shift hits exactly the diagonal units."""
    if u.trace():
        return u + Operator1.identity(u.dim).scale(c)
    return u


def bd_symmetry_check(kind: str, n: int) -> dict[str, bool]:
    """One-sided P symmetries and Cartan parts of the two parameter-free solutions."""
    p = permutation_P(n)
    r = rcg_r(n) if kind == R_CG else rcg_prime_r(n)
    out = {}
    if kind == R_CG:
        out["p_left"] = (p @ r + r).is_zero()
    else:
        out["p_right"] = (r @ p + r).is_zero()
    out["sum_rule"] = (r + r.reversed_legs()) == (p - Operator2.identity(n))
    cartan_ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            want = ZERO
            if kind == R_CG and i < j:
                want = -ONE
            if kind == R_CG_PRIME and i > j:
                want = -ONE
            if r.get(i, j, i, j) != want:
                cartan_ok = False
    out["cartan"] = cartan_ok
    return out


def bd_fork_R(q, p, r, s) -> Operator2:
    """16x16 solution of the minimal non-rimeable fork diagram, read off its exchange relations."""
    q, p, r, s = rat(q), rat(p), rat(r), rat(s)
    if q in (0, 1, -1) or not p or not r or not s:
        raise InvalidInputError("needs q not in {0,1,-1} and p, r, s nonzero")
    m = Operator2(4)
    lam = ONE - 1 / q ** 2
    for i in range(1, 5):
        m.set(i, i, i, i, ONE)
    entries = {
        (1, 2): [((2, 1), p / q)],
        (1, 3): [((3, 1), r / q ** 2)],
        (1, 4): [((4, 1), p * r / q), ((3, 2), -r * s / q)],
        (2, 1): [((1, 2), 1 / (p * q)), ((2, 1), lam)],
        (2, 3): [((3, 2), s / (p * q))],
        (2, 4): [((4, 2), s / q ** 2)],
        (3, 1): [((1, 3), 1 / r), ((3, 1), lam)],
        (3, 2): [((2, 3), p / (q * s)), ((3, 2), lam)],
        (3, 4): [((4, 3), p * r / (q * s))],
        (4, 1): [((1, 4), 1 / (p * q * r)), ((4, 1), lam), ((2, 3), 1 / q)],
        (4, 2): [((2, 4), 1 / s), ((4, 2), lam)],
        (4, 3): [((3, 4), s / (p * q * r)), ((4, 3), lam)],
    }
    for (i, j), terms in entries.items():
        for (k, l), v in terms.items() if isinstance(terms, dict) else terms:
            m.set(i, j, k, l, v)
    return m


def lambda_bcg_gram(n: int) -> Operator1:
    """Gram matrix of lambda([. , .]) with lambda = sum (e^i_{i+1})* on the Ztilde basis."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    shift = Operator1.identity(n).scale(Fraction(1, n))
    zt = [carrier_Z(n, i, j) + shift for (i, j) in pairs]

    def lam(mat: Operator1) -> Fraction:
        # coefficient sum of the units e^i_{i+1}, i.e. the subdiagonal entries
        return sum((mat.rows[i][i + 1] for i in range(n - 1)), ZERO)

    m = len(pairs)
    g = Operator1.zero(m)
    for a in range(m):
        for b in range(m):
            g.rows[a][b] = lam(zt[a] @ zt[b] - zt[b] @ zt[a])
    return g


def tilde_difference_residual(mu) -> Operator1:
    """X_mu sum_j (1 - j/n) e^{j+1}_j - (1/n) sum_{i!=j} Z^j_i/(mu_i-mu_j) X_mu."""
    mu = ratvec(mu)
    require_distinct(mu, "mu")
    n = len(mu)
    x, _ = x_change_of_basis(mu)
    lhs_factor = Operator1.zero(n)
    for j in range(1, n):
        lhs_factor = lhs_factor + unit(n, j + 1, j).scale(ONE - Fraction(j, n))
    rhs_factor = Operator1.zero(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                rhs_factor = rhs_factor + carrier_Z(n, j, i).scale(
                    ONE / (mu[i - 1] - mu[j - 1]))
    rhs_factor = rhs_factor.scale(Fraction(1, n))
    return x @ lhs_factor - rhs_factor @ x
