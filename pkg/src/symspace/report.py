"""Verification checks, reports and their table/JSON rendering."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = ["Check", "VerificationReport", "make_check", "bound_check", "render_report", "fmt_real"]


def _passes(measured, expected, tolerance):
    if not (math.isfinite(measured) and math.isfinite(expected)):
        return False
    return abs(measured - expected) <= tolerance * max(1.0, abs(expected))


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    expected: float
    tolerance: float
    passed: bool

    def __post_init__(self):
        if self.passed != _passes(self.measured, self.expected, self.tolerance):
            raise ValueError(f"check {self.name!r}: passed flag disagrees with its numbers")


def make_check(name, measured, expected, tolerance):
    """Check with ``passed`` derived from ``|measured - expected| <= tol * max(1, |expected|)``."""
    measured, expected, tolerance = float(measured), float(expected), float(tolerance)
    return Check(name, measured, expected, tolerance, _passes(measured, expected, tolerance))


def bound_check(name, value, lower=None, upper=None, tolerance=0.0):
    """Inequality ``lower <= value <= upper`` as a check on the size of the violation.

    The measured quantity is the amount by which the bound is broken (zero
    when it holds), so the expected value is always 0.
    """
    value = float(value)
    violation = 0.0
    if lower is not None:
        violation = max(violation, float(lower) - value)
    if upper is not None:
        violation = max(violation, value - float(upper))
    if not math.isfinite(value):
        violation = math.nan
    return make_check(name, violation, 0.0, tolerance)


@dataclass
class VerificationReport:
    space: str
    seed: int
    checks: list = field(default_factory=list)
    wall_time_ms: int = 0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1


def fmt_real(x):
    """Real number with 12 significant digits; non-finite values become ``None``."""
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def _as_json(report):
    # dicts keep insertion order, which fixes the field order of the output
    return {
        "space": report.space,
        "seed": int(report.seed),
        "checks": [
            {
                "name": c.name,
                "measured": fmt_real(c.measured),
                "expected": fmt_real(c.expected),
                "tolerance": fmt_real(c.tolerance),
                "passed": bool(c.passed),
            }
            for c in report.checks
        ],
        "wall_time_ms": int(report.wall_time_ms),
        "metric": "killing",
    }


def _table(report):
    header = ("check", "measured", "expected", "tolerance", "result")
    rows = [
        (c.name, f"{c.measured:.12g}", f"{c.expected:.12g}", f"{c.tolerance:.3g}", "PASS" if c.passed else "FAIL")
        for c in report.checks
    ]
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]

    def line(r):
        cells = [r[0].ljust(widths[0])] + [r[i].rjust(widths[i]) for i in range(1, 4)] + [r[4].ljust(widths[4])]
        return "  ".join(cells).rstrip()

    out = [f"space: {report.space}   seed: {report.seed}", line(header), "  ".join("-" * w for w in widths)]
    out += [line(r) for r in rows]
    failed = sum(not c.passed for c in report.checks)
    out.append(f"{len(rows) - failed}/{len(rows)} checks passed in {report.wall_time_ms} ms")
    return "\n".join(out)


def render_report(report, format="table"):
    if format == "json":
        return json.dumps(_as_json(report), indent=2, ensure_ascii=False)
    if format == "table":
        return _table(report)
    raise ValueError(f"unknown format {format!r}")
