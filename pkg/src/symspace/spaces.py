"""Parsing of space specifications such as ``sl:3``, ``so:4,1`` or ``hyperbolic:5``."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DegenerateParams, UnsupportedFamily
from .lie_core import FAMILIES, build_algebra

__all__ = ["SpaceSpec", "parse_space", "SUPPORTED_SPACES"]

# spaces covered by the acceptance suite
SUPPORTED_SPACES = ("sl:2", "sl:3", "sl:4", "so:3,1", "so:4,1", "so:3,2", "su:2,1", "sp:2")

_ARITY = {"sl": 1, "sp": 1, "so": 2, "su": 2, "hyperbolic": 1}
_PATTERN = re.compile(r"^\s*([a-z]+)\s*:\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*$")


@dataclass(frozen=True)
class SpaceSpec:
    raw: str
    family: str
    params: tuple

    @property
    def canonical(self):
        return f"{self.family}:{','.join(map(str, self.params))}"

    def build(self):
        return build_algebra(self.family, self.params)


def parse_space(raw):
    """Parse ``sl:n | so:p,q | su:p,q | sp:n | hyperbolic:n``.

    ``hyperbolic:n`` is real hyperbolic n-space, i.e. ``so:n,1``.  Compact
    and flat cases are rejected here, before any algebra is built.
    """
    m = _PATTERN.match(raw or "")
    if not m:
        raise UnsupportedFamily(f"cannot parse space {raw!r}; expected e.g. sl:3, so:4,1, hyperbolic:3")
    family = m.group(1)
    params = tuple(int(v) for v in m.group(2).split(","))
    if family not in _ARITY:
        raise UnsupportedFamily(f"unknown family {family!r}; choose from {', '.join(_ARITY)}")
    if len(params) != _ARITY[family]:
        raise UnsupportedFamily(f"{family} takes {_ARITY[family]} parameter(s), got {len(params)}")
    if family in ("so", "su") and params[1] == 0:
        raise DegenerateParams(f"{family}:{params[0]},0 is compact; q must be at least 1")
    if any(v <= 0 for v in params):
        raise DegenerateParams("parameters must be positive integers")
    if family == "hyperbolic":
        (n,) = params
        if n < 2:
            raise DegenerateParams("hyperbolic:n needs n >= 2")
        family, params = "so", (n, 1)
    assert family in FAMILIES
    # build_algebra repeats these rules; checking here gives errors before any work
    if family == "sl" and params[0] < 2:
        raise DegenerateParams("sl:1 is zero-dimensional")
    if family in ("so", "su"):
        p, q = params
        if p < q:
            raise DegenerateParams(f"write {family}:{q},{p} instead (p >= q)")
        if family == "so" and p + q < 3:
            raise DegenerateParams("so:1,1 is abelian")
    return SpaceSpec(raw, family, params)
