"""Exact rational scalars, elementary symmetric functions and Lagrange/Vandermonde inversion.

Everything in this package computes over ``fractions.Fraction``; there is no
floating point anywhere.  Identities are certified by evaluation at seeded
random rational points, so all draws happen through :class:`RationalDraw`.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class DegenerateParametersError(ValueError):
    """A parameter vector violates a pairwise-distinctness (or nonzero) requirement."""


class NotSkewInvertibleError(ValueError):
    """The defining linear system of the skew inverse is singular."""


class InvalidInputError(ValueError):
    """An operation precondition does not hold."""


def rat(value, den=None) -> Fraction:
    """Coerce ints, 'p/q' strings or Fractions to an exact rational."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise InvalidInputError(f"cannot interpret {value!r} as a rational")


def format_rat(x: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is one."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def ratvec(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat(v) for v in values)


def require_distinct(values: Sequence[Fraction], what: str = "parameters") -> None:
    if len(set(values)) != len(values):
        raise DegenerateParametersError(f"{what} must be pairwise distinct: {values}")


def theta(i: int, j: int) -> int:
    """Step function: 1 when i > j, else 0."""
    return 1 if i > j else 0


def elem_sym(values: Sequence[Fraction], k: int) -> Fraction:
    """Elementary symmetric polynomial e_k of the given values (e_0 = 1)."""
    if k < 0:
        return ZERO
    n = len(values)
    if k > n:
        return ZERO
    # coeffs[j] = e_j of the prefix processed so far
    coeffs = [ONE] + [ZERO] * k
    for v in values:
        for j in range(k, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs[k]


def elem_sym_omit(values: Sequence[Fraction], k: int, omit: int) -> Fraction:
    """e_k of the vector with 1-based entry ``omit`` removed."""
    n = len(values)
    if not 1 <= omit <= n:
        raise InvalidInputError(f"omit index {omit} out of range 1..{n}")
    reduced = tuple(values[:omit - 1]) + tuple(values[omit:])
    return elem_sym(reduced, k)


def elem_sym_omit2(values: Sequence[Fraction], k: int, omit_a: int, omit_b: int) -> Fraction:
    """e_k with two distinct 1-based entries removed."""
    if omit_a == omit_b:
        raise InvalidInputError("omit indices must differ")
    a, b = sorted((omit_a, omit_b))
    reduced = tuple(values[:a - 1]) + tuple(values[a:b - 1]) + tuple(values[b:])
    return elem_sym(reduced, k)


def vandermonde_matrix(values: Sequence[Fraction]):
    """V^j_k = phi_k^(n-j) as an Operator1."""
    from .tensor import Operator1

    n = len(values)
    return Operator1([[values[k] ** (n - j - 1) for k in range(n)] for j in range(n)])


def vandermonde_inverse(values: Sequence[Fraction]):
    """Exact inverse of the Vandermonde matrix via the Lagrange formula.

    (V^-1)^k_j = (-1)^(j-1) e_(j-1)^khat / prod_(l!=k) (phi_k - phi_l).
    """
    from .tensor import Operator1

    values = ratvec(values)
    require_distinct(values)
    n = len(values)
    rows = []
    for k in range(1, n + 1):
        denom = ONE
        for l in range(1, n + 1):
            if l != k:
                denom *= values[k - 1] - values[l - 1]
        rows.append([(-ONE) ** (j - 1) * elem_sym_omit(values, j - 1, k) / denom
                     for j in range(1, n + 1)])
    return Operator1(rows)


class RationalDraw:
    """Seeded source of small random rationals for identity testing.

    Numerators are uniform in [-12, 12] without 0, denominators in [1, 8];
    vectors are re-drawn until they satisfy distinctness/nonzero demands.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)
        self.history: list[Fraction] = []

    def rational(self, nonzero: bool = True) -> Fraction:
        num = 0
        while num == 0:
            num = self._rng.randint(-12, 12)
            if not nonzero:
                break
        x = Fraction(num, self._rng.randint(1, 8))
        self.history.append(x)
        return x

    def vector(self, n: int, distinct: bool = True, nonzero: bool = False) -> tuple[Fraction, ...]:
        while True:
            v = tuple(self.rational(nonzero=nonzero) for _ in range(n))
            if not distinct or len(set(v)) == n:
                self.history.extend([])
                return v

    def int_in(self, lo: int, hi: int) -> int:
        return self._rng.randint(lo, hi)

    def choice(self, seq):
        return self._rng.choice(seq)
