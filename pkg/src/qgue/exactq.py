"""Exact arithmetic over Q(q), the field of rational functions in q.

This is the ground field for the whole package.  Three layers:

  * coefficients: arbitrary-precision rationals (`fractions.Fraction`,
    aliased `BigRat`).  Integer-valued coefficients are stored as plain
    `int` so the polynomial kernels mostly run on machine integers.
  * `QPolynomial`: dense univariate polynomial in q, trailing zeros
    stripped; the zero polynomial is the empty coefficient sequence.
  * `Scalar`: a reduced ratio num/den of two `QPolynomial` with monic
    denominator.  Construction always canonicalizes, so `==` on Scalars
    is exact field equality.

Everything is immutable after construction and safe to share freely.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

BigRat = Fraction

Coeff = Union[int, Fraction]

__all__ = [
    "BigRat",
    "PoleError",
    "QPolynomial",
    "Scalar",
    "ZERO",
    "ONE",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "m_q",
    "series_coefficient",
    "evaluate_at",
]


class PoleError(ArithmeticError):
    """Evaluation of a Scalar at a point where its reduced denominator vanishes."""


def _norm(c: Coeff) -> Coeff:
    """Collapse Fractions with denominator 1 to plain ints."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _divc(a: Coeff, b: Coeff) -> Coeff:
    """Exact division of coefficients, keeping ints when possible."""
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / Fraction(b))


def _invc(b: Coeff) -> Coeff:
    if b == 1:
        return 1
    if b == -1:
        return -1
    return _norm(Fraction(1) / Fraction(b))


# ---------------------------------------------------------------------------
# polynomials in q
# ---------------------------------------------------------------------------


class QPolynomial:
    """Dense polynomial in q with exact rational coefficients."""

    __slots__ = ("coeffs", "_prim")

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._prim = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QPolynomial":
        """Trusted constructor: coeffs already normalized and trimmed."""
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._prim = None
        return p

    @classmethod
    def zero(cls) -> "QPolynomial":
        return _QP_ZERO

    @classmethod
    def one(cls) -> "QPolynomial":
        return _QP_ONE

    @classmethod
    def constant(cls, c: Coeff) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def q_power(cls, j: int) -> "QPolynomial":
        if j < 0:
            raise ValueError("q_power needs a nonnegative exponent")
        return cls._raw((0,) * j + (1,))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def leading(self) -> Coeff:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def coefficient(self, k: int) -> Coeff:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((_norm(other),) if other != 0 else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({self})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = list(self.coeffs)
        b = other.coeffs
        if len(out) < len(b):
            out.extend([0] * (len(b) - len(out)))
        for i, c in enumerate(b):
            out[i] -= c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _QP_ZERO
        if len(a) == 1:
            return other.scale(a[0])
        if len(b) == 1:
            return self.scale(b[0])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    def scale(self, c: Coeff) -> "QPolynomial":
        if c == 0:
            return _QP_ZERO
        if c == 1:
            return self
        return QPolynomial(x * c for x in self.coeffs)

    def shifted(self, j: int) -> "QPolynomial":
        """Multiply by q**j (j >= 0) or strip j known-zero low coefficients (j < 0)."""
        if j >= 0:
            if self.is_zero:
                return self
            return QPolynomial._raw((0,) * j + self.coeffs)
        assert all(c == 0 for c in self.coeffs[:-j])
        return QPolynomial._raw(self.coeffs[-j:])

    def __call__(self, x: Coeff) -> Coeff:
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- division ------------------------------------------------------------

    def exact_div(self, other: "QPolynomial") -> Optional["QPolynomial"]:
        """Return self/other when the division is exact, else None."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return _QP_ZERO
        dd = self.degree - other.degree
        if dd < 0:
            return None
        if other.degree == 0:
            return self.scale(_invc(other.coeffs[0]))
        # integer-image filter: if both primitive integer images exist and the
        # divisor's value does not divide the dividend's, division cannot be exact
        pa = self._int_primitive()
        pb = other._int_primitive()
        va = _eval_int(pa[1], 2)
        vb = _eval_int(pb[1], 2)
        if vb != 0 and va % vb != 0:
            return None
        a = list(self.coeffs)
        b = other.coeffs
        nb = len(b)
        lb = b[-1]
        out = [0] * (dd + 1)
        for i in range(dd, -1, -1):
            c = a[i + nb - 1]
            if c:
                c = _divc(c, lb)
                out[i] = c
                for j in range(nb - 1):
                    a[i + j] -= c * b[j]
        if any(a[j] for j in range(nb - 1)):
            return None
        return QPolynomial(out)

    def _int_primitive(self):
        """Return (scale, int coefficient list) with self = scale * primitive."""
        if self._prim is None:
            if not self.coeffs:
                self._prim = (Fraction(0), [])
            else:
                den = 1
                for c in self.coeffs:
                    if type(c) is Fraction:
                        den = den * c.denominator // math.gcd(den, c.denominator)
                ints = [int(c * den) for c in self.coeffs]
                g = 0
                for c in ints:
                    g = math.gcd(g, c)
                if ints[-1] < 0:
                    g = -g
                self._prim = (Fraction(g, den), [c // g for c in ints])
        return self._prim

    def deflate_root(self, x0: Coeff) -> "QPolynomial":
        """Divide by (q - x0); assumes x0 is a root."""
        out = [0] * len(self.coeffs[1:])
        acc: Coeff = 0
        for i in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * x0 + self.coeffs[i]
            out[i - 1] = acc
        return QPolynomial(out)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        return _format_poly(self.coeffs)

    def latex(self) -> str:
        return _latex_poly(self.coeffs)


_QP_ZERO = QPolynomial._raw(())
_QP_ONE = QPolynomial._raw((1,))


def _eval_int(coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# polynomial gcd: heuristic gcd with a subresultant fallback
# ---------------------------------------------------------------------------


def _primitive(ints):
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g == 0:
        return ints
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _int_divides(g, a):
    """Exact integer-polynomial division a/g, or None."""
    dd = len(a) - len(g)
    if dd < 0:
        return None
    rem = list(a)
    lg = g[-1]
    ng = len(g)
    out = [0] * (dd + 1)
    for i in range(dd, -1, -1):
        c = rem[i + ng - 1]
        if c:
            q, r = divmod(c, lg)
            if r:
                return None
            out[i] = q
            for j in range(ng - 1):
                rem[i + j] -= q * g[j]
    if any(rem[j] for j in range(ng - 1)):
        return None
    return out


def _heu_gcd(a, b):
    """Heuristic gcd of primitive integer coefficient lists (may return None)."""
    bound = max(max(abs(c) for c in a), max(abs(c) for c in b))
    x = 4 * bound + 4
    for _ in range(6):
        va = _eval_int(a, x)
        vb = _eval_int(b, x)
        gv = math.gcd(va, vb)
        digits = []
        g = gv
        while g:
            r = g % x
            if 2 * r > x:
                r -= x
            digits.append(r)
            g = (g - r) // x
        if not digits:
            digits = [0]
        cand = _primitive(digits)
        if cand and _int_divides(cand, a) is not None and _int_divides(cand, b) is not None:
            return cand
        x = 2 * x + 29
    return None


def _subresultant_gcd(a, b):
    """Subresultant PRS gcd of primitive integer coefficient lists."""
    if len(a) < len(b):
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = len(a) - len(b)
        # pseudo-remainder of a by b
        rem = [c * b[-1] ** (delta + 1) for c in a]
        nb = len(b)
        for i in range(delta, -1, -1):
            c = rem[i + nb - 1]
            if c:
                q, r = divmod(c, b[-1])
                assert r == 0
                for j in range(nb):
                    rem[i + j] -= q * b[j]
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            return _primitive(b)
        divisor = g * h**delta
        rem = [c // divisor for c in rem]
        a, b = b, rem
        g = a[-1]
        h = h * g**delta // h**delta if delta else h
        if len(b) == 1:
            return [1]


def _mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _gcd_int(a, b):
    """Full gcd of primitive integer coefficient lists (primitive, positive leading)."""
    g = _heu_gcd(a, b)
    if g is None:
        g = _subresultant_gcd(a, b)
    if len(g) > 1:
        # the heuristic can in principle accept a proper divisor; gcd(a, b) equals
        # g * gcd(a/g, b/g), so recurse on the cofactors until they are coprime
        extra = _gcd_int(_primitive(_int_divides(g, a)), _primitive(_int_divides(g, b)))
        if len(extra) > 1:
            g = _primitive(_mul_int(g, extra))
    return g


def _poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Primitive positive-leading gcd over the integers."""
    if a.is_zero:
        return QPolynomial(_primitive(b._int_primitive()[1]))
    if b.is_zero:
        return QPolynomial(_primitive(a._int_primitive()[1]))
    return QPolynomial(_gcd_int(a._int_primitive()[1], b._int_primitive()[1]))


# ---------------------------------------------------------------------------
# the field Q(q)
# ---------------------------------------------------------------------------


def _reduce_pair(num: QPolynomial, den: QPolynomial):
    if den.is_zero:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if num.is_zero:
        return _QP_ZERO, _QP_ONE
    v = min(num.valuation, den.valuation)
    if v:
        num = num.shifted(-v)
        den = den.shifted(-v)
    if den.degree == 0:
        c = den.coeffs[0]
        return (num if c == 1 else num.scale(_invc(c))), _QP_ONE
    q = num.exact_div(den)
    if q is not None:
        return q, _QP_ONE
    q = den.exact_div(num)
    if q is not None:
        lc = q.leading
        if lc == 1:
            return _QP_ONE, q
        inv = _invc(lc)
        return QPolynomial.constant(inv), q.scale(inv)
    g = _poly_gcd(num, den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    lc = den.leading
    if lc != 1:
        inv = _invc(lc)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


class Scalar:
    """Element of Q(q): a reduced num/den pair with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if not isinstance(num, QPolynomial):
            num = QPolynomial.constant(num) if num else _QP_ZERO
        if not isinstance(den, QPolynomial):
            den = QPolynomial.constant(den)
        self.num, self.den = _reduce_pair(num, den)

    @classmethod
    def _make(cls, num: QPolynomial, den: QPolynomial) -> "Scalar":
        """Trusted constructor: (num, den) already canonical."""
        s = cls.__new__(cls)
        s.num = num
        s.den = den
        return s

    @classmethod
    def from_fraction(cls, c) -> "Scalar":
        c = _norm(Fraction(c))
        if c == 0:
            return ZERO
        return cls._make(QPolynomial.constant(c), _QP_ONE)

    @classmethod
    def q_power(cls, j: int) -> "Scalar":
        """q**j, with negative j allowed."""
        if j >= 0:
            return cls._make(QPolynomial.q_power(j), _QP_ONE)
        return cls._make(_QP_ONE, QPolynomial.q_power(-j))

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def as_signed_q_power(self):
        """Return (sign, j) when self == sign * q**j with sign in {1, -1}, else None."""
        if len(self.num.coeffs) != sum(1 for c in self.num.coeffs if c == 0) + 1:
            return None
        lead = self.num.leading
        if lead not in (1, -1):
            return None
        if any(c for c in self.num.coeffs[:-1]):
            return None
        dv = self.den.valuation
        if self.den.coeffs[dv:] != (1,):
            return None
        return (1 if lead == 1 else -1, self.num.degree - self.den.degree)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self.num, self.den
        c, d = other.num, other.den
        if a.is_zero:
            return other
        if c.is_zero:
            return self
        if b == d:
            return Scalar(a + c, b)
        if b.is_one:
            return Scalar(a * d + c, d)
        if d.is_one:
            return Scalar(a + c * b, b)
        w = d.exact_div(b)
        if w is not None:
            return Scalar(a * w + c, d)
        w = b.exact_div(d)
        if w is not None:
            return Scalar(a + c * w, b)
        g = _poly_gcd(b, d)
        if g.degree > 0:
            db = b.exact_div(g)
            dd = d.exact_div(g)
            return Scalar(a * dd + c * db, b * dd)
        return Scalar(a * d + c * b, b * d)

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self.num, self.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.num.is_zero or other.num.is_zero:
            return ZERO
        if self.den.is_one and other.den.is_one:
            return Scalar._make(self.num * other.num, _QP_ONE)
        return Scalar(self.num * other.num, self.den * other.den)

    def inverse(self) -> "Scalar":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        lc = den.leading
        if lc != 1:
            inv = _invc(lc)
            num = num.scale(inv)
            den = den.scale(inv)
        return Scalar._make(num, den)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if self.num.is_zero:
            return "0"
        ns = str(self.num)
        if self.den.is_one:
            return ns
        ds = str(self.den)
        if len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            ns = f"({ns})"
        if len(self.den.coeffs) - self.den.coeffs.count(0) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def latex(self, fold: bool = True) -> str:
        if self.num.is_zero:
            return "0"
        ns = _latex_side(self.num, fold)
        if self.den.is_one:
            return ns
        return r"\frac{%s}{%s}" % (ns, _latex_side(self.den, fold))


ZERO = Scalar._make(_QP_ZERO, _QP_ONE)
ONE = Scalar._make(_QP_ONE, _QP_ONE)


# ---------------------------------------------------------------------------
# string rendering
# ---------------------------------------------------------------------------


def _coeff_str(c: Coeff, power: int) -> str:
    if power == 0:
        return str(c)
    if power == 1:
        var = "q"
    else:
        var = f"q^{power}"
    if c == 1:
        return var
    if type(c) is Fraction:
        return f"({c}){var}"
    return f"{c}{var}"


def _format_poly(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        term = _coeff_str(abs(c), k)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    return "".join(parts)


def _latex_coeff(c: Coeff, power: int) -> str:
    if power == 0:
        var = ""
    elif power == 1:
        var = "q"
    else:
        var = "q^{%d}" % power
    if type(c) is Fraction:
        cs = r"\tfrac{%d}{%d}" % (c.numerator, c.denominator)
    else:
        cs = "" if (c == 1 and var) else str(c)
    return (cs + var) or "1"

def _latex_poly(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        term = _latex_coeff(abs(c), k)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+" if c > 0 else "-") + term)
    return "".join(parts)


def _fold_q_integers(p: QPolynomial):
    """Try to write p as c * q**v * prod [n]_q**e_n; return (c, v, factors) or None."""
    if p.is_zero:
        return None
    v = p.valuation
    work = p.shifted(-v) if v else p
    scale, ints = work._int_primitive()
    work = QPolynomial(ints)
    factors: dict = {}
    n = work.degree + 1
    while work.degree > 0 and n >= 2:
        qi = QPolynomial._raw((1,) * n)
        quot = work.exact_div(qi)
        if quot is not None:
            factors[n] = factors.get(n, 0) + 1
            work = quot
        else:
            n -= 1
    if work.degree > 0:
        return None
    scale = scale * Fraction(work.coeffs[0])
    return _norm(scale), v, factors


def _latex_side(p: QPolynomial, fold: bool) -> str:
    if fold:
        folded = _fold_q_integers(p)
        if folded is not None and folded[2]:
            c, v, factors = folded
            out = ""
            if c == -1:
                out += "-"
            elif c != 1:
                out += _latex_coeff(abs(c), 0) if c > 0 else "-" + _latex_coeff(abs(c), 0)
            if v == 1:
                out += "q"
            elif v:
                out += "q^{%d}" % v
            for n in sorted(factors, reverse=True):
                e = factors[n]
                out += "[%d]_q" % n if e == 1 else "[%d]_q^{%d}" % (n, e)
            return out
    return _latex_poly(p.coeffs)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_integer(n: int, squared: bool = False) -> Scalar:
    """[n]_q = 1 + q + ... + q**(n-1), or [n]_{q^2} with the squared flag."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    if n == 0:
        return ZERO
    step = 2 if squared else 1
    coeffs = [0] * ((n - 1) * step + 1)
    for i in range(n):
        coeffs[i * step] = 1
    return Scalar._make(QPolynomial._raw(tuple(coeffs)), _QP_ONE)


@lru_cache(maxsize=None)
def q_factorial(n: int, squared: bool = False) -> Scalar:
    """[n]!_q = prod_{i=1..n} [i]_q; the empty product is 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1, squared) * q_integer(n, squared)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, squared: bool = False) -> Scalar:
    """Gaussian binomial [n over k]_q; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    num = q_factorial(n, squared)
    den = q_factorial(k, squared).num * q_factorial(n - k, squared).num
    return Scalar(num.num, den)


@lru_cache(maxsize=None)
def m_q(n: int) -> Scalar:
    """[n]_q [n-2]_q [n-4]_q ... over strictly positive factors; 1 for n <= 0."""
    if n <= 0:
        return ONE
    return q_integer(n) * m_q(n - 2)


def series_coefficient(k: int, which: str, squared: bool = False) -> Scalar:
    """Coefficient of x**k in the series e or E over the chosen base.

    e: 1/[k]!;  E: q**(k(k-1)/2)/[k]!_q in the plain base and
    q**(k(k-1))/[k]!_{q^2} in the squared base.
    """
    if k < 0:
        raise ValueError("series_coefficient needs k >= 0")
    if which == "e":
        return q_factorial(k, squared).inverse()
    if which == "E":
        exp = k * (k - 1) if squared else k * (k - 1) // 2
        return Scalar.q_power(exp) / q_factorial(k, squared)
    raise ValueError("series name must be 'e' or 'E'")


def evaluate_at(s: Scalar, q0) -> Fraction:
    """Evaluate s at q = q0, cancelling any common (q - q0) factors first."""
    x = _norm(Fraction(q0))
    num, den = s.num, s.den
    nv = num(x)
    dv = den(x)
    while dv == 0 and nv == 0:
        num = num.deflate_root(x)
        den = den.deflate_root(x)
        nv = num(x)
        dv = den(x)
    if dv == 0:
        raise PoleError(f"pole at q = {q0}")
    return Fraction(nv) / Fraction(dv)
