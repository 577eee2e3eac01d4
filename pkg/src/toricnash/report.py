"""JSON documents: semigroup input files and command reports.

Integers outside the signed 64-bit range are written as decimal strings so
that no consumer silently rounds them; rationals are written as "p/q".
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import jsonschema

from . import __version__
from .detvar import DualConeVerdict, MinorScan, RelationReport
from .logjac import CharacteristicComparison, LogJacobianSet
from .nash import NashChart, NashNode, NashReport
from .semigroup import AffineSemigroup, SaturationReport

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

INPUT_SCHEMA = {
    "type": "object",
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"anyOf": [{"type": "integer"},
                                    {"type": "string", "pattern": "^-?[0-9]+$"}]},
                "minItems": 1,
            },
        },
        "label": {"type": ["string", "null"]},
    },
    "required": ["dim", "generators"],
    "additionalProperties": False,
}


class InputError(ValueError):
    pass


def encode_int(x: int) -> int | str:
    return x if INT64_MIN <= x <= INT64_MAX else str(x)


def decode_int(x: int | str) -> int:
    if isinstance(x, bool):
        raise InputError(f"expected integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise InputError(f"expected integer, got {x!r}")


def encode_vector(v) -> list:
    return [encode_int(x) for x in v]


def decode_vector(v) -> tuple[int, ...]:
    return tuple(decode_int(x) for x in v)


def encode_vectors(vs) -> list[list]:
    return [encode_vector(v) for v in vs]


def encode_rational(q) -> int | str:
    q = Fraction(q)
    if q.denominator == 1:
        return encode_int(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# -- input files ------------------------------------------------------------

def semigroup_document(S: AffineSemigroup) -> dict:
    doc: dict[str, Any] = {"dim": S.dim, "generators": encode_vectors(S.generators)}
    if S.label is not None:
        doc["label"] = S.label
    return doc


def parse_semigroup(doc: Any) -> AffineSemigroup:
    try:
        jsonschema.validate(doc, INPUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InputError(f"malformed semigroup file: {exc.message}") from exc
    d = doc["dim"]
    for g in doc["generators"]:
        if len(g) != d:
            raise InputError(f"generator {g} has length {len(g)}, expected dim {d}")
    return AffineSemigroup(d, tuple(decode_vector(g) for g in doc["generators"]), doc.get("label"))


def load_semigroup(path: str | Path) -> AffineSemigroup:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_semigroup(doc)


# -- payloads ---------------------------------------------------------------

def gamma_payload(g: LogJacobianSet) -> dict:
    return {
        "characteristic": g.characteristic,
        "exponents": encode_vectors(g.exponents),
        "distinct_exponents": len(g.exponents),
        "subset_count": g.subset_count,
    }


def chart_payload(c: NashChart) -> dict:
    return {
        "vertex": encode_vector(c.vertex),
        "chart_generators": encode_vectors(c.chart_generators),
        "minimal_generators": encode_vectors(c.minimal_generators),
        "minimal_generator_count": len(c.minimal_generators),
        "smooth": c.smooth,
        "isomorphic_to_source": c.isomorphic_to_source,
        "determinant": None if c.unimodular_det is None else encode_int(c.unimodular_det),
    }


def nash_payload(r: NashReport) -> dict:
    return {
        "source": semigroup_document(r.source),
        "dim": r.source.dim,
        "characteristic": r.characteristic,
        "gamma": gamma_payload(r.gamma),
        "newton_vertices": encode_vectors(r.newton_vertices),
        "charts": [chart_payload(c) for c in r.charts],
        "global_smooth": r.global_smooth,
        "char_free": r.char_free,
    }


def iterate_payload(node: NashNode) -> dict:
    return {
        "depth": node.depth,
        "report": nash_payload(node.report),
        "outcomes": [
            {
                "vertex": encode_vector(o.chart.vertex),
                "status": o.status,
                "subtree": None if o.subtree is None else iterate_payload(o.subtree),
            }
            for o in node.outcomes
        ],
        "resolved": node.resolved,
    }


def minors_payload(m: int, n: int, s: MinorScan) -> dict:
    return {
        "m": m,
        "n": n,
        "subsets": s.subsets,
        "values": {str(k): v for k, v in sorted(s.values.items())},
        "unimodular": s.unimodular,
        "violations": [{"columns": list(idx), "det": encode_int(x)} for idx, x in s.violations],
    }


def relations_payload(r: RelationReport) -> dict:
    return {"verified": r.verified, "expected": r.expected,
            "failures": [list(q) for q in r.failures], "ok": r.ok}


def charfree_payload(c: CharacteristicComparison) -> dict:
    return {
        "gamma0": gamma_payload(c.gamma0),
        "primes": {str(p): {"equal": c.equal[p], "gamma": gamma_payload(g)}
                   for p, g in c.by_prime.items()},
        "characteristic_free": c.characteristic_free,
    }


def dualcone_payload(v: DualConeVerdict) -> dict:
    return {"m": v.m, "n": v.n, "computed": encode_vectors(v.computed),
            "conjectured": encode_vectors(v.conjectured), "match": v.match}


def saturation_payload(s: SaturationReport) -> dict:
    return {
        "degree_bound": encode_rational(s.degree_bound),
        "grading": encode_vector(s.grading),
        "points_checked": s.points_checked,
        "violations": encode_vectors(s.violations),
        "consistent": s.consistent,
    }


def document(command: str, parameters: dict, payload: dict, seconds: float | None = None) -> dict:
    doc = {
        "command": {"name": command, "parameters": parameters,
                    "artifact": {"name": "toricnash", "version": __version__}},
        "payload": payload,
    }
    if seconds is not None:
        doc["timing"] = {"seconds": round(seconds, 6)}
    return doc


def canonical_json(obj: Any) -> str:
    """Deterministic serialisation: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
