"""Fixture files: a small JSON (or YAML) document describing a form and,
optionally, the equation it is expected to satisfy.

    {"fixture": "free", "q": "2",
     "moments": ["1", "0", "-8"],                        # or
     "recurrence": {"betas": ["0"], "gammas": ["-8"]},  # or
     "dirac": "1/2",
     "triplet": {"phi": ["0", "1"], "psi": [...], "b": []},
     "seeds": {"1": "0"}, "b": "3", "mu": "1/2", "order": 40}

Every scalar is a string holding an exact rational.  Errors carry the JSON
path and the line/column of the offending value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import yaml

from .errors import ParseError, QLHError
from .scalar import format_scalar, parse_scalar, validate_q

FIXTURE_KINDS = ("brenke", "qclassical", "pearson", "free")
_KEYS = ("fixture", "q", "b", "mu", "a", "order", "moments", "recurrence", "dirac", "triplet", "seeds")


@dataclass(frozen=True)
class FixtureSpec:
    kind: str = "free"
    q: Optional[Fraction] = None
    b: Optional[Fraction] = None
    mu: Optional[Fraction] = None
    a: Optional[Fraction] = None
    order: Optional[int] = None
    moments: Optional[tuple] = None
    dirac: Optional[Fraction] = None
    betas: Optional[tuple] = None
    gammas: Optional[tuple] = None
    phi: Optional[tuple] = None
    psi: Optional[tuple] = None
    bb: Optional[tuple] = None
    seeds: dict = field(default_factory=dict)

    @property
    def has_triplet(self) -> bool:
        return self.phi is not None


class _Reader:
    def __init__(self, path: str):
        self.path = path

    def fail(self, node, where: str, message: str):
        mark = node.start_mark
        raise ParseError(message, mark.line + 1, mark.column + 1, f"{self.path}:{where}")

    def mapping(self, node, where):
        if not isinstance(node, yaml.MappingNode):
            self.fail(node, where, "expected an object")
        out = {}
        for k, v in node.value:
            if not isinstance(k, yaml.ScalarNode):
                self.fail(k, where, "object keys must be strings")
            if k.value in out:
                self.fail(k, where, f"duplicate key {k.value!r}")
            out[k.value] = v
        return out

    def scalar(self, node, where):
        if not isinstance(node, yaml.ScalarNode):
            self.fail(node, where, "expected a rational number")
        try:
            return parse_scalar(node.value)
        except ParseError as e:
            self.fail(node, where, str(e))

    def integer(self, node, where):
        v = self.scalar(node, where)
        if v.denominator != 1:
            self.fail(node, where, f"expected an integer, got {node.value}")
        return int(v)

    def scalars(self, node, where):
        if not isinstance(node, yaml.SequenceNode):
            self.fail(node, where, "expected a list of rationals")
        return tuple(self.scalar(n, f"{where}[{i}]") for i, n in enumerate(node.value))


def parse_fixture(text: str, path: str = "<input>", order: Optional[int] = None) -> FixtureSpec:
    """Parse a fixture document; ``order`` (the command-line value) overrides the file."""
    try:
        root = yaml.compose(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        line, col = (mark.line + 1, mark.column + 1) if mark else (None, None)
        raise ParseError(str(e.problem or e), line, col, path) from None
    if root is None:
        raise ParseError("empty fixture document", 1, 1, path)
    rd = _Reader(path)
    top = rd.mapping(root, "$")
    for k, node in top.items():
        if k not in _KEYS:
            rd.fail(node, f"$.{k}", f"unknown key {k!r}")
    kw = {}
    if "fixture" in top:
        node = top["fixture"]
        if not isinstance(node, yaml.ScalarNode) or node.value not in FIXTURE_KINDS:
            rd.fail(node, "$.fixture", f"fixture must be one of {', '.join(FIXTURE_KINDS)}")
        kw["kind"] = node.value
    if "q" in top:
        q = rd.scalar(top["q"], "$.q")
        try:
            validate_q(q)
        except QLHError as e:
            rd.fail(top["q"], "$.q", f"{type(e).__name__}: {e}")
        kw["q"] = q
    for key in ("b", "mu", "a", "dirac"):
        if key in top:
            kw[key] = rd.scalar(top[key], f"$.{key}")
    if "order" in top:
        kw["order"] = rd.integer(top["order"], "$.order")
    if "moments" in top:
        kw["moments"] = rd.scalars(top["moments"], "$.moments")
    if "recurrence" in top:
        rec = rd.mapping(top["recurrence"], "$.recurrence")
        for k, node in rec.items():
            if k not in ("betas", "gammas"):
                rd.fail(node, f"$.recurrence.{k}", f"unknown key {k!r}")
        if "betas" not in rec or "gammas" not in rec:
            rd.fail(top["recurrence"], "$.recurrence", "recurrence needs both betas and gammas")
        kw["betas"] = rd.scalars(rec["betas"], "$.recurrence.betas")
        kw["gammas"] = rd.scalars(rec["gammas"], "$.recurrence.gammas")
        if not len(kw["betas"]) - 1 <= len(kw["gammas"]) <= len(kw["betas"]):
            rd.fail(top["recurrence"], "$.recurrence", "need len(betas) - 1 <= len(gammas) <= len(betas)")
        for i, g in enumerate(kw["gammas"]):
            if g == 0:
                rd.fail(rec["gammas"].value[i], f"$.recurrence.gammas[{i}]", "gamma must be nonzero")
    if sum(k in top for k in ("moments", "recurrence", "dirac")) > 1:
        rd.fail(root, "$", "give only one of moments, recurrence and dirac")
    if "triplet" in top:
        tri = rd.mapping(top["triplet"], "$.triplet")
        for k, node in tri.items():
            if k not in ("phi", "psi", "b"):
                rd.fail(node, f"$.triplet.{k}", f"unknown key {k!r}")
        if "phi" not in tri or "psi" not in tri:
            rd.fail(top["triplet"], "$.triplet", "triplet needs phi and psi")
        kw["phi"] = rd.scalars(tri["phi"], "$.triplet.phi")
        kw["psi"] = rd.scalars(tri["psi"], "$.triplet.psi")
        kw["bb"] = rd.scalars(tri["b"], "$.triplet.b") if "b" in tri else ()
    if "seeds" in top:
        seeds = rd.mapping(top["seeds"], "$.seeds")
        out = {}
        for k, node in seeds.items():
            try:
                idx = int(k)
            except ValueError:
                rd.fail(node, f"$.seeds.{k}", f"seed index {k!r} is not an integer")
            out[idx] = rd.scalar(node, f"$.seeds.{k}")
        kw["seeds"] = out
    if order is not None:
        kw["order"] = order
    spec = FixtureSpec(**kw)
    if spec.moments is not None and spec.order is not None and len(spec.moments) < spec.order + 1:
        rd.fail(
            top["moments"],
            "$.moments",
            f"{len(spec.moments)} moments given but order {spec.order} needs {spec.order + 1}",
        )
    if spec.kind == "free" and spec.moments is None and spec.betas is None and spec.dirac is None:
        rd.fail(root, "$", "a free fixture needs moments, a recurrence or a dirac point")
    return spec


def _strs(values) -> list:
    return [format_scalar(Fraction(v)) for v in values]


def fixture_to_dict(spec: FixtureSpec) -> dict:
    out: dict = {"fixture": spec.kind}
    for key in ("q", "b", "mu", "a", "dirac"):
        v = getattr(spec, key)
        if v is not None:
            out[key] = format_scalar(Fraction(v))
    if spec.order is not None:
        out["order"] = spec.order
    if spec.moments is not None:
        out["moments"] = _strs(spec.moments)
    if spec.betas is not None:
        out["recurrence"] = {"betas": _strs(spec.betas), "gammas": _strs(spec.gammas)}
    if spec.phi is not None:
        out["triplet"] = {"phi": _strs(spec.phi), "psi": _strs(spec.psi), "b": _strs(spec.bb or ())}
    if spec.seeds:
        out["seeds"] = {str(k): format_scalar(Fraction(v)) for k, v in sorted(spec.seeds.items())}
    return out


def serialize_fixture(spec: FixtureSpec) -> str:
    """Canonical text: sorted keys, two-space indent, rationals as strings."""
    return json.dumps(fixture_to_dict(spec), sort_keys=True, indent=2) + "\n"
