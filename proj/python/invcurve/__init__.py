"""Exact invariants of plane curves: Milnor algebra, tangent 1-forms, Saito pairs."""

import json

from ._invcurve import (
    DegenerateWindow,
    InvariantViolation,
    InvcurveError,
    MissingEmbedding,
    NotTame,
    NotTangent,
    OneForm,
    Polynomial,
    StageError,
    SyntaxError,
    d,
    fixture_names,
    generates,
    is_tangent,
    minimal_generators,
    render_svg,
    saito_constant,
    same_module,
    syzygy_generators,
    wedge,
)
from . import _invcurve

__all__ = [
    "DegenerateWindow",
    "InvariantViolation",
    "InvcurveError",
    "MissingEmbedding",
    "NotTame",
    "NotTangent",
    "OneForm",
    "Polynomial",
    "StageError",
    "SyntaxError",
    "analyze",
    "corpus",
    "d",
    "fixture_names",
    "generates",
    "is_tangent",
    "jordan",
    "minimal_generators",
    "render_svg",
    "saito_constant",
    "same_module",
    "syzygy_generators",
    "wedge",
]


def analyze(f, weights=(1, 1), minpoly=None, minimal=True, timings=False):
    """Full pipeline report as a dict (same document as `invcurve analyze --json`)."""
    return json.loads(_invcurve.analyze_json(str(f), tuple(weights), minpoly, minimal, timings))


def jordan(f, weights=(1, 1), minpoly=None, relaxed=False):
    """mu, minimal polynomial of A_f and Jordan profiles per critical-value factor."""
    return json.loads(_invcurve.jordan_json(str(f), tuple(weights), minpoly, relaxed))


def corpus(only=()):
    """Runs the fixture corpus; one dict per fixture."""
    return json.loads(_invcurve.corpus_json(list(only)))
