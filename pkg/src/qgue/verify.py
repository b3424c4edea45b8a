"""The errata harness: compare closed forms against definitional oracles.

Every suite walks a parameter grid, evaluates a closed form and an oracle
for each point, and classifies the point as exactly equal or discrepant.
Discrepant points carry the symbolic ratio closed/oracle whenever the
oracle is nonzero, and when that ratio is plus or minus a single power of
q the (sign, exponent) pair is extracted, which localizes a defect to a
sign or exponent slip rather than a structural error.

Grid points are independent pure computations; QGUE_THREADS > 1 evaluates
them on a thread pool, and results are merged in grid order either way.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .exactq import ZERO, Scalar, q_factorial, series_coefficient
from .qxpoly import XPoly, functional_L, hermite, truncated_in_shadow_basis
from .symschur import (
    Partition,
    apply_M2,
    hook_partition,
    partitions,
    power_sum_monomials,
    power_sum_vector,
    sigma_at_zero,
)
from .moments import (
    DegenerateDenominator,
    gaussian_moment,
    hook_moment_closed_form,
    integrate_schur,
    integrate_symmetric,
    level_density_moment,
    normalization,
    p2m_closed_form,
    qhz_lhs,
    qhz_rhs,
    sigma_closed_form,
    theorem5_lhs,
    theorem5_rhs,
)

__all__ = [
    "SUITE_NAMES",
    "PointResult",
    "SuiteResult",
    "verify_suite",
    "report_to_json",
    "render_json",
    "summary_table",
    "has_discrepancies",
]

SUITE_NAMES = (
    "duality",
    "orthogonality",
    "theorem1",
    "theorem2",
    "theorem3",
    "theorem4",
    "sigma",
    "theorem5",
    "qhz",
    "truncation",
)

Params = Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class PointResult:
    params: Params
    status: str  # "equal" | "discrepant"
    ratio: Optional[Scalar] = None
    sign: Optional[int] = None
    qpower: Optional[int] = None
    note: Optional[str] = None

    @property
    def is_equal(self) -> bool:
        return self.status == "equal"

    @property
    def is_monomial(self) -> bool:
        return self.sign is not None


@dataclass
class SuiteResult:
    identity: str
    grid: Dict[str, int]
    points: List[PointResult] = field(default_factory=list)

    @property
    def discrepancies(self) -> List[PointResult]:
        return [p for p in self.points if not p.is_equal]

    def find(self, **params) -> Optional[PointResult]:
        want = set(params.items())
        for p in self.points:
            if want <= set(p.params):
                return p
        return None

    def summary(self) -> Dict[str, object]:
        disc = self.discrepancies
        out: Dict[str, object] = {
            "points": len(self.points),
            "equal": len(self.points) - len(disc),
            "discrepant": len(disc),
            "monomial_ratios": sum(1 for p in disc if p.is_monomial),
        }
        if self.identity == "theorem5":
            out["printed_normalization_matches"] = sum(
                1 for p in self.points if p.is_equal
            )
            out["shifted_normalization_matches"] = sum(
                1 for p in self.points if p.note == "index-shifted normalization matches"
            )
        return out


def _classify(params: Params, closed: Scalar, oracle: Scalar, note: str = None) -> PointResult:
    if closed == oracle:
        return PointResult(params, "equal", note=note)
    if oracle.is_zero:
        return PointResult(
            params, "discrepant", note=(note or "oracle value is zero; no ratio")
        )
    ratio = closed / oracle
    mono = ratio.as_signed_q_power()
    if mono is None:
        return PointResult(params, "discrepant", ratio=ratio, note=note)
    return PointResult(params, "discrepant", ratio=ratio, sign=mono[0], qpower=mono[1], note=note)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

Point = Tuple[Params, Callable[[], PointResult]]


def _duality_points(max_n: int) -> List[Point]:
    def make(d: int, squared: bool) -> Point:
        params = (("d", d), ("base", "q^2" if squared else "q"))

        def run() -> PointResult:
            # sums are cleared by [d]! so every term reduces to a polynomial
            factor = q_factorial(d, squared)
            total = ZERO
            for j in range(d + 1):
                t = series_coefficient(j, "e", squared) * series_coefficient(
                    d - j, "E", squared
                )
                if (d - j) % 2:
                    t = -t
                total = total + t * factor
            expected = factor if d == 0 else ZERO
            return _classify(params, total, expected)

        return params, run

    return [make(d, sq) for sq in (False, True) for d in range(max_n + 1)]


def _orthogonality_points(max_n: int) -> List[Point]:
    def make(n: int, m: int) -> Point:
        params = (("n", n), ("m", m))

        def run() -> PointResult:
            oracle = functional_L(hermite(n) * hermite(m))
            closed = (
                Scalar.q_power(n * (n - 1) // 2) * q_factorial(n) if n == m else ZERO
            )
            if closed.is_zero and not oracle.is_zero:
                return PointResult(params, "discrepant", ratio=None, note="expected zero")
            return _classify(params, closed, oracle)

        return params, run

    return [make(n, m) for n in range(max_n + 1) for m in range(max_n + 1)]


def _theorem1_points(max_m: int, max_vars: int) -> List[Point]:
    def make(m: int, n: int) -> Point:
        params = (("m", m), ("N", n))

        def run() -> PointResult:
            closed = level_density_moment(XPoly.x_power(2 * m), n)
            oracle = integrate_symmetric(power_sum_vector(m, n))
            return _classify(params, closed, oracle)

        return params, run

    return [make(m, n) for m in range(1, max_m + 1) for n in range(1, max_vars + 1)]


def _theorem2_points(max_vars: int, max_ell: int) -> List[Point]:
    def make(n: int, ell: int, i: int) -> Point:
        params = (("N", n), ("ell", ell), ("i", i))

        def run() -> PointResult:
            coeffs = truncated_in_shadow_basis(n, ell, "direct")
            value = coeffs.get(n - 1 - i, ZERO)
            closed = -value if (n - 1 - i) % 2 else value
            oracle = sigma_at_zero(hook_partition(ell + 1, i), n)
            return _classify(params, closed, oracle)

        return params, run

    return [
        make(n, ell, i)
        for n in range(1, max_vars + 1)
        for ell in range(1, max_ell + 1)
        for i in range(n)
    ]


def _theorem3_points(grid: List[Tuple[int, int]]) -> List[Point]:
    def make(kappa: Partition, n: int) -> Point:
        params = (("kappa", str(kappa)), ("N", n))

        def run() -> PointResult:
            return _classify(
                params,
                integrate_schur(kappa, n, "fast"),
                integrate_schur(kappa, n, "oracle"),
            )

        return params, run

    points = []
    for n, max_weight in grid:
        for kappa in sorted(partitions(max_weight, n)):
            points.append(make(kappa, n))
    return points


def _theorem4_points(max_m: int, max_vars: int) -> List[Point]:
    def make(m: int, n: int, ell: int) -> Point:
        params = (("m", m), ("N", n), ("ell", ell))

        def run() -> PointResult:
            closed = hook_moment_closed_form(ell, m, n)
            mu = hook_partition(ell + 1, 2 * m - ell - 1)
            oracle = integrate_schur(mu, n, "oracle")
            return _classify(params, closed, oracle)

        return params, run

    points = []
    for m in range(1, max_m + 1):
        for n in range(1, max_vars + 1):
            for ell in range(2 * m):
                if 2 * m - ell <= n:  # hook length fits in n variables
                    points.append(make(m, n, ell))
    return points


def _oracle_hook_integral(first: int, ones: int, n: int) -> Scalar:
    """Oracle integral of a hook Schur polynomial, zero when invalid or too long."""
    if first < 1 or ones < 0 or ones + 1 > n:
        return ZERO
    return integrate_schur(hook_partition(first, ones), n, "oracle")


def _sigma_points(max_m: int, max_vars: int) -> List[Point]:
    points: List[Point] = []

    def make_sigma(m: int, t: int, n: int) -> Point:
        params = (("target", "sigma"), ("m", m), ("t", t), ("N", n))

        def run() -> PointResult:
            closed = sigma_closed_form(m, t, n)
            oracle = _oracle_hook_integral(2 * t, 2 * m - 2 * t, n) - _oracle_hook_integral(
                2 * t + 1, 2 * m - 2 * t - 1, n
            )
            return _classify(params, closed, oracle)

        return params, run

    def make_p2m(m: int, n: int) -> Point:
        params = (("target", "p2m"), ("m", m), ("N", n))

        def run() -> PointResult:
            closed = p2m_closed_form(m, n)
            oracle = apply_M2(power_sum_monomials(m, n), gaussian_moment) / normalization(n)
            return _classify(params, closed, oracle)

        return params, run

    for m in range(1, max_m + 1):
        for n in range(1, max_vars + 1):
            for t in range(m + 1):
                points.append(make_sigma(m, t, n))
            points.append(make_p2m(m, n))
    return points


def _theorem5_points(max_m: int, max_s: int) -> List[Point]:
    def make(m: int, s: int) -> Point:
        params = (("m", m), ("s", s))

        def run() -> PointResult:
            try:
                closed = theorem5_rhs(m, s)
            except DegenerateDenominator as exc:
                return PointResult(params, "discrepant", note=str(exc))
            shifted_matches = closed == qhz_lhs(m, s)
            note = (
                "index-shifted normalization matches"
                if shifted_matches
                else "index-shifted normalization differs"
            )
            return _classify(params, closed, theorem5_lhs(m, s), note=note)

        return params, run

    return [make(m, s) for m in range(1, max_m + 1) for s in range(max_s + 1)]


def _qhz_points(max_m: int, max_s: int) -> List[Point]:
    def make(m: int, s: int) -> Point:
        params = (("m", m), ("s", s))

        def run() -> PointResult:
            return _classify(params, qhz_rhs(m, s), qhz_lhs(m, s))

        return params, run

    return [make(m, s) for m in range(1, max_m + 1) for s in range(max_s + 1)]


def _truncation_points(max_total: int) -> List[Point]:
    def make(n: int, ell: int, variant: str) -> Point:
        params = (("N", n), ("ell", ell), ("variant", variant))

        def run() -> PointResult:
            direct = truncated_in_shadow_basis(n, ell, "direct")
            other = truncated_in_shadow_basis(n, ell, variant)
            if direct == other:
                return PointResult(params, "equal")
            # coefficient maps: report the ratio at the lowest disagreeing degree
            bad = sorted(
                k
                for k in set(direct) | set(other)
                if direct.get(k, ZERO) != other.get(k, ZERO)
            )
            k = bad[0]
            return _classify(
                params,
                other.get(k, ZERO),
                direct.get(k, ZERO),
                note=f"first mismatch at S_{k} (of {len(bad)} degrees)",
            )

        return params, run

    return [
        make(n, ell, variant)
        for variant in ("closed", "printed")
        for n in range(1, max_total)
        for ell in range(1, max_total + 1 - n)
    ]


_SUITE_DEFAULTS = {
    "duality": {"max_n": 30},
    "orthogonality": {"max_n": 10},
    "theorem1": {"max_weight": 6, "max_vars": 3},
    "theorem2": {"max_vars": 5, "max_n": 4},
    "theorem3": {"max_weight": 6, "max_vars": 3},
    "theorem4": {"max_weight": 8, "max_vars": 4},
    "sigma": {"max_weight": 6, "max_vars": 3},
    "theorem5": {"max_weight": 6, "max_n": 3},
    "qhz": {"max_weight": 6, "max_n": 3},
    "truncation": {"max_n": 10},
}


def _build_suite(name: str, max_weight, max_vars, max_n) -> Tuple[SuiteResult, List[Point]]:
    d = _SUITE_DEFAULTS[name]
    w = max_weight if max_weight is not None else d.get("max_weight")
    v = max_vars if max_vars is not None else d.get("max_vars")
    n = max_n if max_n is not None else d.get("max_n")
    if name == "duality":
        return SuiteResult(name, {"max_n": n}), _duality_points(n)
    if name == "orthogonality":
        return SuiteResult(name, {"max_n": n}), _orthogonality_points(n)
    if name == "theorem1":
        return SuiteResult(name, {"max_weight": w, "max_vars": v}), _theorem1_points(w // 2, v)
    if name == "theorem2":
        return SuiteResult(name, {"max_vars": v, "max_ell": n}), _theorem2_points(v, n)
    if name == "theorem3":
        if max_weight is None and max_vars is None:
            grid = [(i, 6) for i in range(1, 4)] + [(4, 4)]
            label = {"max_weight": 6, "max_vars": 4}
        else:
            grid = [(i, w) for i in range(1, v + 1)]
            label = {"max_weight": w, "max_vars": v}
        return SuiteResult(name, label), _theorem3_points(grid)
    if name == "theorem4":
        return SuiteResult(name, {"max_weight": w, "max_vars": v}), _theorem4_points(w // 2, v)
    if name == "sigma":
        return SuiteResult(name, {"max_weight": w, "max_vars": v}), _sigma_points(w // 2, v)
    if name == "theorem5":
        return SuiteResult(name, {"max_weight": w, "max_s": n}), _theorem5_points(w // 2, n)
    if name == "qhz":
        return SuiteResult(name, {"max_weight": w, "max_s": n}), _qhz_points(w // 2, n)
    if name == "truncation":
        return SuiteResult(name, {"max_total": n}), _truncation_points(n)
    raise ValueError(f"unknown suite {name!r}")


def verify_suite(
    suites=("all",),
    max_weight: Optional[int] = None,
    max_vars: Optional[int] = None,
    max_n: Optional[int] = None,
    threads: Optional[int] = None,
) -> List[SuiteResult]:
    """Run the named identity suites and return per-suite reports.

    Bounds default per suite; passing a bound overrides it for every suite
    that uses it.  Guardrail violations surface as SizeError.
    """
    if isinstance(suites, str):
        suites = (suites,)
    names = list(SUITE_NAMES) if "all" in suites else list(suites)
    for name in names:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    if threads is None:
        threads = int(os.environ.get("QGUE_THREADS", "1"))
    results = []
    for name in names:
        suite, points = _build_suite(name, max_weight, max_vars, max_n)
        runners = [run for _, run in points]
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                suite.points = list(pool.map(lambda r: r(), runners))
        else:
            suite.points = [run() for run in runners]
        results.append(suite)
    return results


def has_discrepancies(results: List[SuiteResult]) -> bool:
    return any(suite.discrepancies for suite in results)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _point_obj(p: PointResult) -> Dict[str, object]:
    obj: Dict[str, object] = {"params": dict(p.params), "status": p.status}
    if p.ratio is not None:
        obj["ratio"] = str(p.ratio)
    if p.sign is not None:
        obj["sign"] = p.sign
        obj["qpower"] = p.qpower
    if p.note is not None:
        obj["note"] = p.note
    return obj


def report_to_json(results: List[SuiteResult]) -> Dict[str, object]:
    suites = [
        {
            "identity": s.identity,
            "grid": s.grid,
            "points": [_point_obj(p) for p in s.points],
            "summary": s.summary(),
        }
        for s in results
    ]
    total = sum(len(s.points) for s in results)
    disc = sum(len(s.discrepancies) for s in results)
    return {
        "suites": suites,
        "summary": {
            "suites": len(results),
            "points": total,
            "equal": total - disc,
            "discrepant": disc,
        },
    }


def render_json(results: List[SuiteResult]) -> str:
    return json.dumps(report_to_json(results), indent=2, sort_keys=True) + "\n"


def summary_table(results: List[SuiteResult]) -> str:
    lines = [f"{'suite':<14} {'points':>7} {'equal':>7} {'discrepant':>11}  notes"]
    for s in results:
        disc = s.discrepancies
        note = ""
        if disc:
            mono = sum(1 for p in disc if p.is_monomial)
            note = f"{mono} with ratio +/-q^j"
        lines.append(
            f"{s.identity:<14} {len(s.points):>7} {len(s.points) - len(disc):>7} "
            f"{len(disc):>11}  {note}"
        )
    return "\n".join(lines)
