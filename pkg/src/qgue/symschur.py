"""Partitions, Schur polynomials, and the determinantal multivariate machinery.

Two parallel routes to multivariate integrals live here:

  * the fast route: for a monic family {f_n}, the expansion of the family
    determinant F_kappa in Schur polynomials is a determinant of univariate
    coefficients, so no multivariate algebra is needed;
  * the oracle route: expand everything into monomials (`MonomialMap`),
    multiply by the squared Vandermonde factor, and apply a univariate
    functional coordinatewise.

Determinant orientation is fixed once and for all: in every alternant the
row index is the variable and column j carries exponent kappa_j + N - j
(so the Vandermonde uses N - j).  With this choice s_emptyset = 1 and Schur
coefficients are nonnegative integers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

from .exactq import ONE, ZERO, Scalar
from .qxpoly import XPoly, hermite, shadow_hermite

__all__ = [
    "ShapeError",
    "SizeError",
    "Partition",
    "partitions",
    "hook_partition",
    "MonomialMap",
    "SchurVector",
    "PolyFamily",
    "monomial_family",
    "binomial_family",
    "hermite_family",
    "shadow_family",
    "schur_monomials",
    "vandermonde",
    "family_expand",
    "sigma_at_zero",
    "hook_decomposition",
    "apply_M0",
    "apply_M2",
    "generalized_binomial",
    "det",
]

ORACLE_MAX_VARS = 5
ORACLE_MAX_DEGREE = 40


class ShapeError(ValueError):
    """A partition is longer than the number of variables allows."""


class SizeError(ValueError):
    """A brute-force oracle request exceeds the hard guardrails."""


class Partition:
    """Weakly decreasing nonnegative integers, trailing zeros trimmed."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = list(parts)
        while ps and ps[-1] == 0:
            ps.pop()
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {ps}")
        self.parts = tuple(ps)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(other.length))

    def subdiagrams(self) -> Iterator["Partition"]:
        """All partitions whose Young diagram fits inside this one."""

        def rec(i: int, cap: int, prefix: List[int]) -> Iterator[Tuple[int, ...]]:
            yield tuple(prefix)
            if i < len(self.parts):
                for v in range(1, min(cap, self.parts[i]) + 1):
                    prefix.append(v)
                    yield from rec(i + 1, v, prefix)
                    prefix.pop()

        for parts in rec(0, self.parts[0] if self.parts else 0, []):
            yield Partition(parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return (self.weight, self.parts) < (other.weight, other.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def partitions(max_weight: int, max_length: int) -> Iterator[Partition]:
    """All partitions of weight <= max_weight and length <= max_length."""

    def rec(remaining: int, cap: int, slots: int, prefix: List[int]) -> Iterator[Tuple[int, ...]]:
        yield tuple(prefix)
        if slots and remaining:
            for v in range(min(cap, remaining), 0, -1):
                prefix.append(v)
                yield from rec(remaining - v, v, slots - 1, prefix)
                prefix.pop()

    for parts in rec(max_weight, max_weight, max_length, []):
        yield Partition(parts)


def hook_partition(first: int, ones: int) -> Partition:
    return Partition((first,) + (1,) * ones)


class MonomialMap:
    """Sparse multivariate polynomial: exponent tuples of fixed length to Scalars."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: Dict[Tuple[int, ...], Scalar] = None):
        self.n_vars = n_vars
        clean: Dict[Tuple[int, ...], Scalar] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != n_vars:
                raise ValueError("exponent tuple of wrong length")
            if not c.is_zero:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def constant(cls, n_vars: int, value: Scalar) -> "MonomialMap":
        return cls(n_vars, {(0,) * n_vars: value})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MonomialMap):
            return self.n_vars == other.n_vars and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "MonomialMap") -> "MonomialMap":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(e, None)
            else:
                out[e] = s
        return MonomialMap(self.n_vars, out)

    def __neg__(self) -> "MonomialMap":
        return MonomialMap(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MonomialMap") -> "MonomialMap":
        return self + (-other)

    def __mul__(self, other: "MonomialMap") -> "MonomialMap":
        out: Dict[Tuple[int, ...], Scalar] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MonomialMap(self.n_vars, out)

    def scale(self, c: Scalar) -> "MonomialMap":
        if c.is_zero:
            return MonomialMap(self.n_vars)
        return MonomialMap(self.n_vars, {e: v * c for e, v in self.terms.items()})

    def __repr__(self) -> str:
        items = sorted(self.terms)
        return f"MonomialMap({self.n_vars}, {{{', '.join(f'{e}: {self.terms[e]}' for e in items)}}})"


def _perm_signs(n: int) -> List[Tuple[Tuple[int, ...], int]]:
    from itertools import permutations

    out = []
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((perm, -1 if inv % 2 else 1))
    return out


def _alternant(exponents: Tuple[int, ...], n: int) -> MonomialMap:
    """det[x_i ** exponents[j]] over rows i = variables, columns j."""
    terms: Dict[Tuple[int, ...], Scalar] = {}
    minus_one = -ONE
    for perm, sig in _perm_signs(n):
        e = tuple(exponents[perm[i]] for i in range(n))
        c = ONE if sig > 0 else minus_one
        s = terms.get(e)
        s = c if s is None else s + c
        if s.is_zero:
            terms.pop(e, None)
        else:
            terms[e] = s
    return MonomialMap(n, terms)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> MonomialMap:
    """prod_{i<j} (x_i - x_j), expanded: det[x_i ** (n - j)]."""
    return _alternant(tuple(n - 1 - j for j in range(n)), n)


@lru_cache(maxsize=None)
def _vandermonde_squared(n: int) -> MonomialMap:
    v = vandermonde(n)
    return v * v


def _exact_div(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """Exact multivariate division with respect to lex order; raises if inexact."""
    lead_g = max(g.terms)
    cg = g.terms[lead_g]
    work = dict(f.terms)
    quot: Dict[Tuple[int, ...], Scalar] = {}
    while work:
        lead = max(work)
        e = tuple(a - b for a, b in zip(lead, lead_g))
        if any(x < 0 for x in e):
            raise ArithmeticError("multivariate division is not exact")
        c = work[lead] / cg
        quot[e] = c
        for eg, vg in g.terms.items():
            key = tuple(x + y for x, y in zip(e, eg))
            s = work.get(key, ZERO) - c * vg
            if s.is_zero:
                work.pop(key, None)
            else:
                work[key] = s
    return MonomialMap(f.n_vars, quot)


@lru_cache(maxsize=None)
def schur_monomials(kappa: Partition, n_vars: int) -> MonomialMap:
    """The Schur polynomial s_kappa in n_vars variables, fully expanded.

    Computed as the ratio of the shifted alternant by the Vandermonde
    alternant, both in the fixed column orientation.
    """
    if kappa.length > n_vars:
        raise ShapeError(f"partition {kappa!r} needs more than {n_vars} variables")
    exps = tuple(kappa.part(j) + n_vars - 1 - j for j in range(n_vars))
    return _exact_div(_alternant(exps, n_vars), vandermonde(n_vars))


class SchurVector:
    """A symmetric polynomial in a fixed number of variables, Schur basis."""

    __slots__ = ("entries", "n_vars")

    def __init__(self, entries: Dict[Partition, Scalar], n_vars: int):
        self.n_vars = n_vars
        clean = {}
        for p, c in entries.items():
            if p.length > n_vars:
                raise ShapeError(f"partition {p!r} too long for {n_vars} variables")
            if not c.is_zero:
                clean[p] = c
        self.entries = clean

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SchurVector):
            return self.n_vars == other.n_vars and self.entries == other.entries
        return NotImplemented

    def to_json_obj(self) -> Dict[str, str]:
        return {str(p): str(self.entries[p]) for p in sorted(self.entries)}

    def __repr__(self) -> str:
        body = ", ".join(f"({p}): {c}" for p, c in sorted(self.entries.items()))
        return f"SchurVector({{{body}}}, n_vars={self.n_vars})"


# a polynomial family is any generator of monic degree-n univariate polynomials
PolyFamily = Callable[[int], XPoly]


def monomial_family(n: int) -> XPoly:
    return XPoly.x_power(n)


@lru_cache(maxsize=None)
def binomial_family(n: int) -> XPoly:
    """(x + 1)**n."""
    return (XPoly.x_power(1) + XPoly.one()) ** n


def hermite_family(n: int) -> XPoly:
    return hermite(n)


def shadow_family(n: int) -> XPoly:
    return shadow_hermite(n)


def _family_polys(fam: PolyFamily, kappa: Partition, n_vars: int) -> List[XPoly]:
    polys = []
    for col in range(n_vars):
        deg = kappa.part(col) + n_vars - 1 - col
        f = fam(deg)
        if f.degree != deg or not f.is_monic:
            raise ValueError(f"family generator must be monic of degree {deg}")
        polys.append(f)
    return polys


def det(matrix: List[List[Scalar]]) -> Scalar:
    """Determinant of a Scalar matrix by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return ONE
    m = [list(row) for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = ZERO
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def family_expand(fam: PolyFamily, kappa: Partition, n_vars: int) -> SchurVector:
    """Expand the family determinant F_kappa in Schur polynomials.

    The coefficient of s_lambda is the determinant of univariate coefficients
    C[j][l] = [x**(lambda_j + N - j)] fam(kappa_l + N - l); only lambda with
    diagram inside kappa can appear and the leading coefficient is 1.
    """
    if kappa.length > n_vars:
        raise ShapeError(f"partition {kappa!r} needs more than {n_vars} variables")
    polys = _family_polys(fam, kappa, n_vars)
    entries: Dict[Partition, Scalar] = {}
    for lam in kappa.subdiagrams():
        mat = [
            [polys[col].coefficient(lam.part(row) + n_vars - 1 - row) for col in range(n_vars)]
            for row in range(n_vars)
        ]
        d = det(mat)
        if not d.is_zero:
            entries[lam] = d
    return SchurVector(entries, n_vars)


@lru_cache(maxsize=None)
def sigma_at_zero(kappa: Partition, n_vars: int) -> Scalar:
    """The empty-partition coefficient of the shadow family expansion of kappa."""
    if kappa.length > n_vars:
        raise ShapeError(f"partition {kappa!r} needs more than {n_vars} variables")
    polys = _family_polys(shadow_family, kappa, n_vars)
    mat = [
        [polys[col].coefficient(n_vars - 1 - row) for col in range(n_vars)]
        for row in range(n_vars)
    ]
    return det(mat)


def hook_decomposition(m: int, n_vars: int) -> List[Tuple[int, Partition]]:
    """Signed hooks of p_{2m}: (+/-1, (2m - i, 1^i)), dropping lengths > n_vars."""
    if m < 1:
        raise ValueError("hook_decomposition needs m >= 1")
    out = []
    for i in range(2 * m):
        if i + 1 <= n_vars:
            out.append((-1 if i % 2 else 1, hook_partition(2 * m - i, i)))
    return out


def power_sum_vector(m: int, n_vars: int) -> SchurVector:
    """p_{2m} as a SchurVector in n_vars variables."""
    entries = {p: (ONE if s > 0 else -ONE) for s, p in hook_decomposition(m, n_vars)}
    return SchurVector(entries, n_vars)


def power_sum_monomials(m: int, n_vars: int) -> MonomialMap:
    """p_{2m} = sum_i x_i**(2m) as a MonomialMap."""
    terms = {}
    for i in range(n_vars):
        e = [0] * n_vars
        e[i] = 2 * m
        terms[tuple(e)] = ONE
    return MonomialMap(n_vars, terms)


Moments = Callable[[int], Scalar]


def apply_M0(f: MonomialMap, moments: Moments) -> Scalar:
    """Apply a univariate functional coordinatewise: x**e_1 ... x**e_N maps to
    the product of moments(e_i).  Monomials are grouped by sorted exponent
    signature so each product is computed once."""
    groups: Dict[Tuple[int, ...], Scalar] = {}
    for exps, c in f.terms.items():
        sig = tuple(sorted(exps))
        s = groups.get(sig)
        groups[sig] = c if s is None else s + c
    total = ZERO
    for sig, c in groups.items():
        prod = c
        for e in sig:
            if prod.is_zero:
                break
            prod = prod * moments(e)
        total = total + prod
    return total


def apply_M2(f: MonomialMap, moments: Moments) -> Scalar:
    """The definitional brute-force integral: expand f times the squared
    Vandermonde factor and apply the functional coordinatewise."""
    n = f.n_vars
    if n > ORACLE_MAX_VARS:
        raise SizeError(f"oracle limited to {ORACLE_MAX_VARS} variables, got {n}")
    degree = f.total_degree + n * (n - 1)
    if degree > ORACLE_MAX_DEGREE:
        raise SizeError(
            f"oracle limited to total degree {ORACLE_MAX_DEGREE}, got {degree}"
        )
    return apply_M0(f * _vandermonde_squared(n), moments)


def generalized_binomial(lam: Partition, kappa: Partition, n_vars: int) -> Scalar:
    """The kappa-coefficient of the (x+1)**n family expansion of lambda."""
    return family_expand(binomial_family, lam, n_vars).entries.get(kappa, ZERO)
