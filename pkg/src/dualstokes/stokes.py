"""Two-sided verification of the boundary theorem on cubical chains.

For a (k-1)-form w and a k-chain c the claim under test is that the
integral of dw over c matches the integral of w over the normalized
boundary of c.  Both sides are computed as Darboux brackets, so each
carries an explicit gap; the verdict compares the bracket midpoints
against a tolerance derived from those gaps (with an absolute floor),
which keeps the check honest — a sloppy bracket widens the tolerance
instead of silently passing.

Scenarios bundle a form, a chain, and refinement settings into a plain
dict (JSON-friendly); reports serialize the same way and have a schema
constant for downstream validation.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, replace

from .cubes import Chain, CubeDomain, SingularCube, boundary, chain_normalize
from .darboux import (DEFAULT_BASE_SUBDIVISIONS, DEFAULT_MAX_DOUBLINGS,
                      DEFAULT_TOL_RE, DEFAULT_TOL_ZE, IntegralEstimate,
                      MODE_ENCLOSURE, MODE_SAMPLE, NotConverged,
                      integral_estimate)
from .dual import Dual, Theta
from .expr import ExprMap, ParseError, eval_dual, parse_expr
from .forms import DiffForm, exterior_derivative, pullback

DEFAULT_STOKES_TOL = 1e-3
REPORT_SCHEMA_VERSION = "stokes-report/1"


class ScenarioError(ValueError):
    """Malformed scenario configuration."""


@dataclass(frozen=True)
class Refinement:
    """Refinement budget and convergence targets for one integration."""

    tol_re: float = DEFAULT_TOL_RE
    tol_ze: float = DEFAULT_TOL_ZE
    base_subdivisions: int = DEFAULT_BASE_SUBDIVISIONS
    max_doublings: int = DEFAULT_MAX_DOUBLINGS
    mode: str = MODE_ENCLOSURE

    @staticmethod
    def from_dict(data: dict) -> "Refinement":
        if not isinstance(data, dict):
            raise ScenarioError("refinement must be an object")
        known = {"tol_re", "tol_ze", "base_subdivisions", "max_doublings",
                 "mode"}
        extra = set(data) - known
        if extra:
            raise ScenarioError(f"unknown refinement keys: {sorted(extra)}")
        ref = replace(Refinement(), **data)
        if ref.tol_re < 0 or ref.tol_ze < 0:
            raise ScenarioError("refinement tolerances must be nonnegative")
        if ref.mode not in (MODE_ENCLOSURE, MODE_SAMPLE):
            raise ScenarioError(f"unknown mode {ref.mode!r}")
        if not isinstance(ref.base_subdivisions, int) \
                or ref.base_subdivisions < 1:
            raise ScenarioError("base_subdivisions must be a positive integer")
        if not isinstance(ref.max_doublings, int) or ref.max_doublings < 0:
            raise ScenarioError("max_doublings must be a nonnegative integer")
        return ref

    def to_dict(self) -> dict:
        return {"tol_re": self.tol_re, "tol_ze": self.tol_ze,
                "base_subdivisions": self.base_subdivisions,
                "max_doublings": self.max_doublings, "mode": self.mode}


# ---------------------------------------------------------------------------
# integration of forms over cubes and chains


def integrate_top_form(f_coeff, rect, refinement: Refinement) -> IntegralEstimate:
    return integral_estimate(
        f_coeff, rect,
        tol_re=refinement.tol_re, tol_ze=refinement.tol_ze,
        base_subdivisions=refinement.base_subdivisions,
        max_doublings=refinement.max_doublings, mode=refinement.mode)


def integrate_over_cube(w: DiffForm, cube: SingularCube,
                        refinement: Refinement) -> IntegralEstimate:
    """Pull the form back through the cube's map and integrate the result."""
    if w.n != cube.n:
        raise ValueError(
            f"form lives in dimension {w.n} but the cube maps into {cube.n}")
    if w.k != cube.k:
        raise ValueError(
            f"cannot integrate a {w.k}-form over a {cube.k}-cube")
    if cube.k == 0:
        point = cube.mapping.eval(())
        return IntegralEstimate.exact(eval_dual(w.coefficient(()), point))
    pulled = pullback(cube.mapping, w)
    coeff = pulled.coefficient(tuple(range(cube.k)))
    return integrate_top_form(coeff, cube.domain.rectangle(), refinement)


def integrate_over_chain(w: DiffForm, chain: Chain, refinement: Refinement,
                         normalize: bool = True) -> IntegralEstimate:
    """Weighted sum of per-cube brackets; gaps accumulate by |weight|."""
    if normalize:
        chain = chain_normalize(chain)
    lo_re = hi_re = lo_ze = hi_ze = 0.0
    finest = 0
    for weight, cube in chain.terms:
        est = integrate_over_cube(w, cube, refinement)
        a, b = weight * est.lower.re, weight * est.upper.re
        lo_re += min(a, b)
        hi_re += max(a, b)
        a, b = weight * est.lower.ze, weight * est.upper.ze
        lo_ze += min(a, b)
        hi_ze += max(a, b)
        finest = max(finest, est.subdivisions)
    if chain.theta.sign > 0:
        lower, upper = Dual(lo_re, lo_ze), Dual(hi_re, hi_ze)
    else:
        lower, upper = Dual(lo_re, hi_ze), Dual(hi_re, lo_ze)
    return IntegralEstimate.from_bounds(lower, upper, finest)


# ---------------------------------------------------------------------------
# reports


def _side_to_dict(est: IntegralEstimate | None) -> dict | None:
    if est is None:
        return None
    return {"re": est.value.re, "ze": est.value.ze,
            "gap_re": est.gap_re, "gap_ze": est.gap_ze,
            "subdivisions": est.subdivisions}


def _side_from_dict(data: dict | None, theta: Theta) -> IntegralEstimate | None:
    if data is None:
        return None
    value = Dual(data["re"], data["ze"])
    half = Dual(data["gap_re"] / 2.0, theta.sign * data["gap_ze"] / 2.0)
    return IntegralEstimate(
        value=value, lower=value - half, upper=value + half,
        gap_re=data["gap_re"], gap_ze=data["gap_ze"],
        subdivisions=data["subdivisions"])


@dataclass(frozen=True)
class StokesReport:
    """Outcome of one boundary-theorem check, JSON-serializable."""

    scenario: str | None
    theta: Theta
    r: float
    k: int
    n: int
    converged: bool
    passed: bool
    lhs: IntegralEstimate | None
    rhs: IntegralEstimate | None
    diff_re: float | None
    diff_ze: float | None
    tol_re: float
    tol_ze: float
    note: str = ""

    def to_dict(self) -> dict:
        diff = None
        if self.diff_re is not None:
            diff = {"re": self.diff_re, "ze": self.diff_ze}
        return {
            "schema": REPORT_SCHEMA_VERSION,
            "scenario": self.scenario,
            "theta": int(self.theta),
            "r": self.r,
            "k": self.k,
            "n": self.n,
            "converged": self.converged,
            "passed": self.passed,
            "lhs": _side_to_dict(self.lhs),
            "rhs": _side_to_dict(self.rhs),
            "diff": diff,
            "tolerance": {"re": self.tol_re, "ze": self.tol_ze},
            "note": self.note,
        }

    @staticmethod
    def from_dict(data: dict) -> "StokesReport":
        if data.get("schema") != REPORT_SCHEMA_VERSION:
            raise ValueError(
                f"unsupported report schema {data.get('schema')!r}")
        theta = Theta(data["theta"])
        diff = data.get("diff")
        return StokesReport(
            scenario=data.get("scenario"),
            theta=theta, r=data["r"], k=data["k"], n=data["n"],
            converged=data["converged"], passed=data["passed"],
            lhs=_side_from_dict(data.get("lhs"), theta),
            rhs=_side_from_dict(data.get("rhs"), theta),
            diff_re=None if diff is None else diff["re"],
            diff_ze=None if diff is None else diff["ze"],
            tol_re=data["tolerance"]["re"], tol_ze=data["tolerance"]["ze"],
            note=data.get("note", ""))


_SIDE_SCHEMA = {
    "type": ["object", "null"],
    "properties": {
        "re": {"type": "number"},
        "ze": {"type": "number"},
        "gap_re": {"type": "number", "minimum": 0},
        "gap_ze": {"type": "number", "minimum": 0},
        "subdivisions": {"type": "integer", "minimum": 0},
    },
    "required": ["re", "ze", "gap_re", "gap_ze", "subdivisions"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Boundary-theorem verification report",
    "type": "object",
    "properties": {
        "schema": {"const": REPORT_SCHEMA_VERSION},
        "scenario": {"type": ["string", "null"]},
        "theta": {"enum": [1, 2]},
        "r": {"type": "number", "minimum": 0},
        "k": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1},
        "converged": {"type": "boolean"},
        "passed": {"type": "boolean"},
        "lhs": _SIDE_SCHEMA,
        "rhs": _SIDE_SCHEMA,
        "diff": {
            "type": ["object", "null"],
            "properties": {"re": {"type": "number", "minimum": 0},
                           "ze": {"type": "number", "minimum": 0}},
            "required": ["re", "ze"],
            "additionalProperties": False,
        },
        "tolerance": {
            "type": "object",
            "properties": {"re": {"type": "number", "minimum": 0},
                           "ze": {"type": "number", "minimum": 0}},
            "required": ["re", "ze"],
            "additionalProperties": False,
        },
        "note": {"type": "string"},
    },
    "required": ["schema", "scenario", "theta", "r", "k", "n", "converged",
                 "passed", "lhs", "rhs", "diff", "tolerance"],
    "additionalProperties": False,
}


# ---------------------------------------------------------------------------
# the verdict


def verify_stokes(w: DiffForm, chain: Chain,
                  refinement: Refinement = Refinement(),
                  tol_floor: float = DEFAULT_STOKES_TOL,
                  scenario: str | None = None) -> StokesReport:
    """Compare the chain integral of dw with the boundary integral of w.

    The pass tolerance per component is the larger of `tol_floor` and
    ten times the summed bracket gaps, so the verdict never claims more
    precision than the integrations delivered.  A blown refinement
    budget yields converged=False rather than an exception.
    """
    if w.k != chain.k - 1:
        raise ValueError(
            f"need a {chain.k - 1}-form against a {chain.k}-chain, "
            f"got degree {w.k}")
    if w.n != chain.n:
        raise ValueError(
            f"form dimension {w.n} does not match chain dimension {chain.n}")
    meta = dict(scenario=scenario, theta=chain.theta, r=chain.r,
                k=chain.k, n=chain.n)
    try:
        lhs = integrate_over_chain(exterior_derivative(w), chain, refinement)
        rhs = integrate_over_chain(
            w, chain_normalize(boundary(chain)), refinement)
    except NotConverged as exc:
        return StokesReport(
            converged=False, passed=False, lhs=None, rhs=None,
            diff_re=None, diff_ze=None, tol_re=tol_floor, tol_ze=tol_floor,
            note=str(exc), **meta)
    diff_re = abs(lhs.value.re - rhs.value.re)
    diff_ze = abs(lhs.value.ze - rhs.value.ze)
    tol_re = max(10.0 * (lhs.gap_re + rhs.gap_re), tol_floor)
    tol_ze = max(10.0 * (lhs.gap_ze + rhs.gap_ze), tol_floor)
    return StokesReport(
        converged=True, passed=(diff_re <= tol_re and diff_ze <= tol_ze),
        lhs=lhs, rhs=rhs, diff_re=diff_re, diff_ze=diff_ze,
        tol_re=tol_re, tol_ze=tol_ze, **meta)


# ---------------------------------------------------------------------------
# scenarios


@dataclass(frozen=True)
class Scenario:
    """A form, a chain, and settings, all expressed with grammar strings."""

    name: str
    theta: Theta
    r: float
    n: int
    k: int
    form_degree: int
    form_coeffs: tuple  # ((ascending 0-based index tuple, expr text), ...)
    cubes: tuple        # ((integer weight, (component text, ...)), ...)
    refinement: Refinement
    description: str = ""
    expected: tuple | None = None  # (re, ze) of both sides, if known
    tol_floor: float = DEFAULT_STOKES_TOL

    def build_form(self) -> DiffForm:
        try:
            coeffs = {index: parse_expr(text, self.n)
                      for index, text in self.form_coeffs}
            return DiffForm(self.n, self.form_degree, coeffs)
        except (ParseError, ValueError) as exc:
            raise ScenarioError(f"{self.name}: bad form: {exc}") from exc

    def build_chain(self) -> Chain:
        domain = CubeDomain(self.theta, self.r, self.k)
        terms = []
        try:
            for weight, components in self.cubes:
                mapping = ExprMap(tuple(parse_expr(text, self.k)
                                        for text in components))
                if mapping.dim_out != self.n:
                    raise ScenarioError(
                        f"{self.name}: cube map has {mapping.dim_out} "
                        f"components, expected {self.n}")
                terms.append((weight, SingularCube(domain, mapping)))
        except (ParseError, ValueError) as exc:
            if isinstance(exc, ScenarioError):
                raise
            raise ScenarioError(f"{self.name}: bad cube map: {exc}") from exc
        return Chain(self.theta, self.r, self.k, self.n, tuple(terms))


def _require(data: dict, key: str, kind, what: str):
    if key not in data:
        raise ScenarioError(f"scenario is missing {key!r}")
    value = data[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioError(f"{key} must be {what}")
        return float(value)
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ScenarioError(f"{key} must be {what}")
    return value


def scenario_from_dict(data: dict) -> Scenario:
    """Validate a raw scenario dict (1-based indices) into a Scenario."""
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be an object")
    name = _require(data, "name", str, "a string")
    theta_raw = _require(data, "theta", int, "1 or 2")
    if theta_raw not in (1, 2):
        raise ScenarioError("theta must be 1 or 2")
    r = _require(data, "r", float, "a nonnegative number")
    if r < 0:
        raise ScenarioError("r must be nonnegative")
    n = _require(data, "n", int, "a positive integer")
    k = _require(data, "k", int, "a positive integer")
    if n < 1 or k < 1:
        raise ScenarioError("n and k must be positive")
    form = _require(data, "form", dict, "an object")
    degree = _require(form, "degree", int, "a nonnegative integer")
    if degree < 0:
        raise ScenarioError("form degree must be nonnegative")
    raw_coeffs = form.get("coeffs", [])
    if not isinstance(raw_coeffs, list):
        raise ScenarioError("form coeffs must be a list")
    coeffs = []
    for item in raw_coeffs:
        if not isinstance(item, dict) or set(item) != {"index", "expr"}:
            raise ScenarioError(
                "each form coefficient needs exactly 'index' and 'expr'")
        index = item["index"]
        if (not isinstance(index, list)
                or any(not isinstance(i, int) or isinstance(i, bool)
                       for i in index)):
            raise ScenarioError("coefficient index must be a list of integers")
        if len(index) != degree:
            raise ScenarioError(
                f"coefficient index {index} does not match degree {degree}")
        if any(not 1 <= i <= n for i in index):
            raise ScenarioError(f"coefficient index {index} out of range 1..{n}")
        shifted = tuple(i - 1 for i in index)
        if any(a >= b for a, b in zip(shifted, shifted[1:])):
            raise ScenarioError(
                f"coefficient index {index} must be strictly increasing")
        if not isinstance(item["expr"], str):
            raise ScenarioError("coefficient expr must be a string")
        coeffs.append((shifted, item["expr"]))
    raw_cubes = data.get("cubes")
    if raw_cubes is None:
        if n != k:
            raise ScenarioError(
                "omitting 'cubes' requires n == k (the identity cube)")
        cubes = ((1, tuple(f"x{i + 1}" for i in range(k))),)
    else:
        if not isinstance(raw_cubes, list) or not raw_cubes:
            raise ScenarioError("cubes must be a nonempty list")
        cubes = []
        for item in raw_cubes:
            if not isinstance(item, dict) or set(item) - {"weight", "map"}:
                raise ScenarioError("each cube needs 'map' (and maybe 'weight')")
            weight = item.get("weight", 1)
            if not isinstance(weight, int) or isinstance(weight, bool):
                raise ScenarioError("cube weight must be an integer")
            comps = item.get("map")
            if (not isinstance(comps, list) or len(comps) != n
                    or any(not isinstance(c, str) for c in comps)):
                raise ScenarioError(f"cube map must be a list of {n} strings")
            cubes.append((weight, tuple(comps)))
        cubes = tuple(cubes)
    refinement = Refinement.from_dict(data.get("refinement", {}))
    expected = data.get("expected")
    if expected is not None:
        if (not isinstance(expected, dict) or set(expected) != {"re", "ze"}
                or any(isinstance(v, bool) or not isinstance(v, (int, float))
                       for v in expected.values())):
            raise ScenarioError("expected must be {'re': num, 'ze': num}")
        expected = (float(expected["re"]), float(expected["ze"]))
    tol_floor = data.get("tol_floor", DEFAULT_STOKES_TOL)
    if isinstance(tol_floor, bool) or not isinstance(tol_floor, (int, float)) \
            or tol_floor < 0:
        raise ScenarioError("tol_floor must be a nonnegative number")
    description = data.get("description", "")
    if not isinstance(description, str):
        raise ScenarioError("description must be a string")
    known = {"name", "theta", "r", "n", "k", "form", "cubes", "refinement",
             "expected", "tol_floor", "description"}
    extra = set(data) - known
    if extra:
        raise ScenarioError(f"unknown scenario keys: {sorted(extra)}")
    scenario = Scenario(
        name=name, theta=Theta(theta_raw), r=r, n=n, k=k,
        form_degree=degree, form_coeffs=tuple(coeffs), cubes=tuple(cubes),
        refinement=refinement, description=description,
        expected=expected, tol_floor=float(tol_floor))
    # surface parse errors at load time, not mid-run
    scenario.build_form()
    scenario.build_chain()
    return scenario


def load_scenarios(path) -> list[Scenario]:
    """Read one scenario object or a list of them from a JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path} is not valid JSON: {exc}") from exc
    items = raw if isinstance(raw, list) else [raw]
    return [scenario_from_dict(item) for item in items]


def run_scenario(scenario: Scenario) -> StokesReport:
    """Verify the boundary theorem for one scenario."""
    if scenario.form_degree != scenario.k - 1:
        raise ScenarioError(
            f"{scenario.name}: verification needs a degree-{scenario.k - 1} "
            f"form against a {scenario.k}-chain, got degree "
            f"{scenario.form_degree}")
    return verify_stokes(
        scenario.build_form(), scenario.build_chain(), scenario.refinement,
        tol_floor=scenario.tol_floor, scenario=scenario.name)


def run_integral(scenario: Scenario) -> IntegralEstimate:
    """Integrate the scenario's form (degree k) over its chain directly."""
    if scenario.form_degree != scenario.k:
        raise ScenarioError(
            f"{scenario.name}: direct integration needs a degree-"
            f"{scenario.k} form, got degree {scenario.form_degree}")
    return integrate_over_chain(
        scenario.build_form(), scenario.build_chain(), scenario.refinement)


def run_suite(scenarios) -> list[StokesReport]:
    return [run_scenario(s) for s in scenarios]


def exit_code(reports) -> int:
    """0 all good, 3 if anything failed to converge, else 1 on violations."""
    reports = list(reports)
    if any(not r.converged for r in reports):
        return 3
    if any(not r.passed for r in reports):
        return 1
    return 0


# ---------------------------------------------------------------------------
# bundled scenarios

_TIGHT = {"tol_re": 1e-9, "tol_ze": 1e-9, "base_subdivisions": 4,
          "max_doublings": 2}
_POLY = {"tol_re": 0.05, "tol_ze": 0.05, "base_subdivisions": 4,
         "max_doublings": 4}

BUILTIN_SCENARIO_DICTS = (
    {
        "name": "type1-unit-square",
        "description": "Area form against the inflated square, type-1 order.",
        "theta": 1, "r": 0.5, "n": 2, "k": 2,
        "form": {"degree": 1, "coeffs": [{"index": [2], "expr": "x1"}]},
        "refinement": dict(_TIGHT),
        "expected": {"re": 1.0, "ze": 1.0},
    },
    {
        "name": "type2-unit-square",
        "description": "Same square, type-2 order: the correction flips sign.",
        "theta": 2, "r": 0.5, "n": 2, "k": 2,
        "form": {"degree": 1, "coeffs": [{"index": [2], "expr": "x1"}]},
        "refinement": dict(_TIGHT),
        "expected": {"re": 1.0, "ze": -1.0},
    },
    {
        "name": "type1-ftc-parabola",
        "description": "Fundamental-theorem check for x1^2 on an inflated "
                       "segment, type-1 order.",
        "theta": 1, "r": 0.5, "n": 1, "k": 1,
        "form": {"degree": 0, "coeffs": [{"index": [], "expr": "x1^2"}]},
        "refinement": dict(_POLY),
        "expected": {"re": 1.0, "ze": 1.0},
    },
    {
        "name": "type2-ftc-parabola",
        "description": "Fundamental-theorem check for x1^2, type-2 order.",
        "theta": 2, "r": 0.5, "n": 1, "k": 1,
        "form": {"degree": 0, "coeffs": [{"index": [], "expr": "x1^2"}]},
        "refinement": dict(_POLY),
        "expected": {"re": 1.0, "ze": -1.0},
    },
    {
        "name": "type1-saddle-surface",
        "description": "Curved surface (x1, x2, x1*x2) with a mixed 1-form.",
        "theta": 1, "r": 0.5, "n": 3, "k": 2,
        "form": {"degree": 1, "coeffs": [{"index": [2], "expr": "x1"},
                                         {"index": [1], "expr": "x3"}]},
        "cubes": [{"weight": 1, "map": ["x1", "x2", "x1*x2"]}],
        "refinement": dict(_POLY),
        "expected": {"re": 0.5, "ze": 0.25},
    },
    {
        "name": "classical-green-anchor",
        "description": "r = 0 recovers the classical Green identity on the "
                       "unit square.",
        "theta": 1, "r": 0.0, "n": 2, "k": 2,
        "form": {"degree": 1, "coeffs": [{"index": [2], "expr": "x1"}]},
        "refinement": dict(_TIGHT),
        "expected": {"re": 1.0, "ze": 0.0},
    },
    {
        "name": "type1-eps-coefficient",
        "description": "A coefficient proportional to eps; everything lands "
                       "in the correction slot.",
        "theta": 1, "r": 0.5, "n": 2, "k": 2,
        "form": {"degree": 1, "coeffs": [{"index": [2], "expr": "eps*x1"}]},
        "refinement": dict(_TIGHT),
        "expected": {"re": 0.0, "ze": 1.0},
    },
    {
        "name": "classical-ftc-anchor",
        "description": "r = 0 recovers the classical fundamental theorem "
                       "for x1^2.",
        "theta": 1, "r": 0.0, "n": 1, "k": 1,
        "form": {"degree": 0, "coeffs": [{"index": [], "expr": "x1^2"}]},
        "refinement": dict(_POLY),
        "expected": {"re": 1.0, "ze": 0.0},
    },
)


def builtin_scenarios() -> list[Scenario]:
    return [scenario_from_dict(dict(d)) for d in BUILTIN_SCENARIO_DICTS]


def builtin_scenario(name: str) -> Scenario:
    for data in BUILTIN_SCENARIO_DICTS:
        if data["name"] == name:
            return scenario_from_dict(dict(data))
    known = ", ".join(d["name"] for d in BUILTIN_SCENARIO_DICTS)
    raise ScenarioError(f"no bundled scenario named {name!r} (have: {known})")


# ---------------------------------------------------------------------------
# report output


def write_report_json(reports, fh):
    json.dump([r.to_dict() for r in reports], fh, indent=2)
    fh.write("\n")


_CSV_COLUMNS = ("scenario", "theta", "r", "k", "n", "converged", "passed",
                "lhs_re", "lhs_ze", "lhs_gap_re", "lhs_gap_ze",
                "rhs_re", "rhs_ze", "rhs_gap_re", "rhs_gap_ze",
                "diff_re", "diff_ze", "tol_re", "tol_ze")


def write_report_csv(reports, fh):
    writer = csv.writer(fh)
    writer.writerow(_CSV_COLUMNS)
    for report in reports:
        row = [report.scenario or "", int(report.theta), report.r,
               report.k, report.n, report.converged, report.passed]
        for side in (report.lhs, report.rhs):
            if side is None:
                row.extend(["", "", "", ""])
            else:
                row.extend([side.value.re, side.value.ze,
                            side.gap_re, side.gap_ze])
        row.extend(["" if report.diff_re is None else report.diff_re,
                    "" if report.diff_ze is None else report.diff_ze,
                    report.tol_re, report.tol_ze])
        writer.writerow(row)
