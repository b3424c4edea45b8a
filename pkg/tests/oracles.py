"""Independent brute-force oracles shared by the test modules.

Nothing here reuses the library's determinant or operator routes: Schur
polynomials come from tableau enumeration, multivariate determinants from
explicit permutation expansion, and map counts from first principles.
"""

from itertools import permutations
from math import prod

from qgue import ONE, MonomialMap, XPoly


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def ssyt_schur(parts, n_vars):
    """Schur polynomial by enumerating semistandard Young tableaux.

    Rows weakly increase, columns strictly increase, entries in 1..n_vars.
    Returns a map from exponent tuple to integer coefficient.
    """
    parts = tuple(parts)
    rows = len(parts)
    out = {}

    def fill(r, c, tableau):
        if r == rows:
            weight = [0] * n_vars
            for row in tableau:
                for v in row:
                    weight[v - 1] += 1
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        if c == parts[r]:
            fill(r + 1, 0, tableau)
            return
        lo = 1
        if c > 0:
            lo = max(lo, tableau[r][c - 1])
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)
        for v in range(lo, n_vars + 1):
            tableau[r].append(v)
            fill(r, c + 1, tableau)
            tableau[r].pop()

    fill(0, 0, [[] for _ in range(rows)])
    return out


def univariate_to_monomials(p: XPoly, var: int, n_vars: int) -> MonomialMap:
    """Embed a univariate polynomial as a MonomialMap in variable `var`."""
    terms = {}
    for k, c in enumerate(p.coeffs):
        if not c.is_zero:
            e = [0] * n_vars
            e[var] = k
            terms[tuple(e)] = c
    return MonomialMap(n_vars, terms)


def family_alternant(polys, n_vars) -> MonomialMap:
    """det[polys[j](x_i)] expanded into monomials by permutation sum."""
    total = MonomialMap(n_vars)
    for perm in permutations(range(n_vars)):
        inv = sum(
            1
            for i in range(n_vars)
            for j in range(i + 1, n_vars)
            if perm[i] > perm[j]
        )
        prod_map = MonomialMap.constant(n_vars, ONE if inv % 2 == 0 else -ONE)
        for i in range(n_vars):
            prod_map = prod_map * univariate_to_monomials(polys[perm[i]], i, n_vars)
        total = total + prod_map
    return total
