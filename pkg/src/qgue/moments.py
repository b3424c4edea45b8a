"""Moment engine for the q-deformed unitary-invariant Gaussian ensemble.

The normalized multivariate integral of a symmetric polynomial f is
L2(f) / L2(1), where L2 is the coordinatewise Gaussian functional applied
after multiplying by the squared Vandermonde factor.  Two routes compute
it: the monomial oracle (definitional) and the shadow-determinant fast
path, and Theorem-style closed formulas are transcribed verbatim so the
verification harness can compare them against the oracle.

The closed-form evaluators (`hook_moment_closed_form`, `sigma_closed_form`,
`p2m_closed_form`, `theorem5_rhs`, `qhz_rhs`) reproduce printed formulas
exactly as printed, known defects included; correctness judgments live in
`qgue.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from .exactq import ONE, ZERO, Scalar, evaluate_at, m_q, q_binomial, q_factorial
from .qxpoly import XPoly, functional_L, hermite
from .symschur import (
    MonomialMap,
    Partition,
    SchurVector,
    SizeError,
    apply_M2,
    power_sum_vector,
    schur_monomials,
    sigma_at_zero,
)

__all__ = [
    "DegenerateDenominator",
    "gaussian_moment",
    "hermite_norm",
    "normalization",
    "integrate_schur",
    "integrate_symmetric",
    "level_density_moment",
    "hermite_squared_moment",
    "hook_moment_closed_form",
    "sigma_closed_form",
    "p2m_closed_form",
    "theorem5_rhs",
    "theorem5_lhs",
    "qhz_lhs",
    "qhz_rhs",
    "GenusRow",
    "pairing_genus_counts",
    "genus_table",
    "GENUS_MAX_M",
]

GENUS_MAX_M = 6


class DegenerateDenominator(ArithmeticError):
    """A printed closed form divides by zero for these parameters."""


@lru_cache(maxsize=None)
def gaussian_moment(n: int) -> Scalar:
    """L(x**n), computed from the inverse Gaussian operator."""
    return functional_L(XPoly.x_power(n))


@lru_cache(maxsize=None)
def hermite_norm(j: int) -> Scalar:
    """L(H_j**2), computed directly."""
    return functional_L(hermite(j) * hermite(j))


@lru_cache(maxsize=None)
def normalization(N: int) -> Scalar:
    """Total mass L2(1) of the unnormalized N-variable integral."""
    if N < 1:
        raise ValueError("normalization needs N >= 1")
    return apply_M2(MonomialMap.constant(N, ONE), gaussian_moment)


@lru_cache(maxsize=None)
def integrate_schur(kappa: Partition, N: int, method: str = "fast") -> Scalar:
    """Normalized integral of the Schur polynomial s_kappa over N variables."""
    if method == "fast":
        return sigma_at_zero(kappa, N)
    if method == "oracle":
        return apply_M2(schur_monomials(kappa, N), gaussian_moment) / normalization(N)
    raise ValueError("method must be 'fast' or 'oracle'")


def integrate_symmetric(f: SchurVector) -> Scalar:
    """Linear extension of the fast Schur integral to a Schur-basis vector."""
    total = ZERO
    for p, c in f.entries.items():
        total = total + c * sigma_at_zero(p, f.n_vars)
    return total


def level_density_moment(p: XPoly, N: int) -> Scalar:
    """Integral of p(x_1) + ... + p(x_N), as the sum of L(p H_j^2)/L(H_j^2)."""
    if N < 1:
        raise ValueError("level_density_moment needs N >= 1")
    total = ZERO
    for j in range(N):
        hj = hermite(j)
        total = total + functional_L(p * hj * hj) / hermite_norm(j)
    return total


@lru_cache(maxsize=None)
def hermite_squared_moment(m: int, s: int) -> Scalar:
    """L(x**(2m) H_s**2), the oracle side of the one-variable moment formulas."""
    if m < 0 or s < 0:
        raise ValueError("hermite_squared_moment needs m, s >= 0")
    hs = hermite(s)
    return functional_L((hs * hs).shifted(2 * m))


# ---------------------------------------------------------------------------
# verbatim closed forms
# ---------------------------------------------------------------------------


def hook_moment_closed_form(ell: int, m: int, N: int) -> Scalar:
    """Printed hook-partition integral for mu = (ell+1, 1, ..., 1) of weight 2m."""
    if m < 1 or ell < 0 or 2 * m - ell - 1 < 0:
        raise ValueError("needs m >= 1 and 0 <= ell <= 2m - 1")
    f = ell // 2
    value = (
        Scalar.q_power((m - f - 1) * (m - f - 2))
        * q_binomial(N + ell, 2 * m)
        * q_binomial(m - 1, f, squared=True)
        * m_q(2 * m - 1)
    )
    return -value if (m - f) % 2 else value


def sigma_closed_form(m: int, t: int, N: int) -> Scalar:
    """Printed integral of the hook-pair difference sigma_{m,t}."""
    if m < 1 or t < 0:
        raise ValueError("needs m >= 1 and t >= 0")
    value = (
        Scalar.q_power((m - t - 1) * (m - t - 2) + (N + 2 * t + 1 - 2 * m))
        * m_q(2 * m - 1)
        * q_binomial(m - 1, t, squared=True)
        * q_binomial(N + 2 * t, 2 * m - 1)
    )
    return value if (m - t + 1) % 2 == 0 else -value


def p2m_closed_form(m: int, N: int) -> Scalar:
    """Printed closed form for the integral of the power sum p_{2m}."""
    if m < 1:
        raise ValueError("needs m >= 1")
    total = ZERO
    for t in range(m + 1):
        term = (
            Scalar.q_power(t * t + (5 - 2 * m) * t)
            * q_binomial(m - 1, t, squared=True)
            * q_binomial(N + 2 * t, 2 * m - 1)
        )
        total = total + (term if (m - t + 1) % 2 == 0 else -term)
    return m_q(2 * m - 1) * Scalar.q_power(N + m * m - 5 * m + 3) * total


def theorem5_rhs(m: int, s: int) -> Scalar:
    """Printed right-hand side of the telescoped single-H moment formula.

    Terms whose binomial prefactor vanishes are skipped before the printed
    denominator 1 - q**(s+2+2t-m) is formed; a contributing term with a
    vanishing denominator raises DegenerateDenominator.
    """
    if m < 1 or s < 0:
        raise ValueError("needs m >= 1 and s >= 0")
    total = ZERO
    for t in range(m + 1):
        b1 = q_binomial(m - 1, t, squared=True)
        b2 = q_binomial(s + 2 * t, 2 * m - 1)
        if b1.is_zero or b2.is_zero:
            continue
        e = s + 2 + 2 * t - m
        if e == 0:
            raise DegenerateDenominator(
                f"printed denominator 1 - q^(s+2+2t-m) vanishes at t={t}"
            )
        paren = (
            Scalar.q_power(1)
            * (ONE - Scalar.q_power(s + 1 - 2 * t))
            / (ONE - Scalar.q_power(e))
            - ONE
        )
        term = Scalar.q_power(t * t + (5 - 2 * m) * t + s) * b1 * b2 * paren
        total = total + (term if (m - t + 1) % 2 == 0 else -term)
    return m_q(2 * m - 1) * Scalar.q_power(m * m - 5 * m + 3) * total


def theorem5_lhs(m: int, s: int) -> Scalar:
    """The moment oracle under the printed normalization q**(s(s+1)/2) [s+1]!."""
    return hermite_squared_moment(m, s) / (
        Scalar.q_power(s * (s + 1) // 2) * q_factorial(s + 1)
    )


def qhz_lhs(m: int, s: int) -> Scalar:
    """The moment oracle under the normalization q**(s(s-1)/2) [s]!."""
    return hermite_squared_moment(m, s) / (
        Scalar.q_power(s * (s - 1) // 2) * q_factorial(s)
    )


def qhz_rhs(m: int, s: int) -> Scalar:
    """The q-deformed one-face map-counting sum (Wimberley-Morales form)."""
    if m < 1 or s < 0:
        raise ValueError("needs m >= 1 and s >= 0")
    total = ZERO
    for k in range(min(m, s) + 1):
        term = (
            Scalar.q_power(m * (s - k) + k * (k - 1) // 2)
            * q_binomial(s, k)
            * q_binomial(m, k)
        )
        for i in range(1, k + 1):
            term = term * (ONE + Scalar.q_power(m + i))
        total = total + term
    return m_q(2 * m - 1) * total


# ---------------------------------------------------------------------------
# genus tables at q = 1
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenusRow:
    """One-face map counts for 2m-gon gluings: interpolated vs enumerated."""

    m: int
    coefficients: Dict[int, int]
    pairing: Dict[int, int]
    matches: bool


def pairing_genus_counts(m: int) -> Dict[int, int]:
    """Enumerate all (2m-1)!! edge pairings of a 2m-gon, counted by genus.

    A pairing is a fixed-point-free involution on the polygon's edges; the
    glued surface has one face, m edges, and V vertices equal to the cycle
    count of (involution o rotation), so 2 - 2g = V - m + 1.
    """
    n = 2 * m
    counts: Dict[int, int] = {}

    def matchings(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for i, other in enumerate(rest):
            for tail in matchings(rest[:i] + rest[i + 1 :]):
                yield [(first, other)] + tail

    for pairing in matchings(tuple(range(n))):
        sigma = [0] * n
        for a, b in pairing:
            sigma[a] = b
            sigma[b] = a
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if not seen[start]:
                cycles += 1
                v = start
                while not seen[v]:
                    seen[v] = True
                    v = sigma[(v + 1) % n]
        g, rem = divmod(m + 1 - cycles, 2)
        assert rem == 0
        counts[g] = counts.get(g, 0) + 1
    return counts


def _interpolate(xs: List[int], ys: List[Fraction]) -> List[Fraction]:
    """Coefficients (ascending) of the unique polynomial through the points."""
    coeffs = [Fraction(0)] * len(xs)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        w = ys[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * w
    return coeffs


def genus_table(max_m: int) -> List[GenusRow]:
    """For each m <= max_m, the genus expansion of the 2m-th power-sum moment
    at q = 1 as a polynomial in N, cross-checked against direct enumeration."""
    if max_m < 1:
        raise ValueError("genus_table needs max_m >= 1")
    if max_m > GENUS_MAX_M:
        raise SizeError(f"genus_table limited to max_m <= {GENUS_MAX_M}")
    rows = []
    for m in range(1, max_m + 1):
        xs = list(range(m + 2))
        ys = [Fraction(0)]
        for N in range(1, m + 2):
            ys.append(evaluate_at(integrate_symmetric(power_sum_vector(m, N)), 1))
        coeffs = _interpolate(xs, ys)
        table: Dict[int, int] = {}
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            offset = (m + 1) - k
            assert offset >= 0 and offset % 2 == 0 and c.denominator == 1, (m, k, c)
            table[offset // 2] = int(c)
        pairing = pairing_genus_counts(m)
        rows.append(GenusRow(m, table, pairing, table == pairing))
    return rows
