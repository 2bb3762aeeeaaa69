"""Identifiability of linear compartmental models.

Models are dicts (or JSON strings) of the form
``{"n": 4, "edges": [[1, 2], ...], "in": [1], "out": [3], "leak": []}``.
"""

import json

from . import _lcmid

__all__ = [
    "analyze",
    "analyze_text",
    "canonical_model",
    "family",
    "run_suite",
    "suite_names",
    "vandermonde_check",
    "verify_closed_form",
]


def _as_json(model):
    return model if isinstance(model, str) else json.dumps(model)


def canonical_model(model):
    return json.loads(_lcmid.canonical_model(_as_json(model)))


def analyze(model, trials=5, seed=0):
    """Full report as a dict: model, io_equations, coefficient_map, verdict."""
    return json.loads(_lcmid.analyze(_as_json(model), trials, seed))


def analyze_text(model, trials=5, seed=0):
    return _lcmid.analyze_text(_as_json(model), trials, seed)


def family(kind, n, inputs=(1,), outputs=(1,), leaks=(), incoming=(), outgoing=()):
    return json.loads(
        _lcmid.family(kind, n, list(inputs), list(outputs), list(leaks), list(incoming), list(outgoing))
    )


def verify_closed_form(kind, n, inputs=(1,), outputs=(1,), leaks=()):
    return _lcmid.verify_closed_form(kind, n, list(inputs), list(outputs), list(leaks))


def vandermonde_check(n):
    return _lcmid.vandermonde_check(n)


def suite_names():
    return list(_lcmid.suite_names())


def run_suite(name, max_n=None, trials=5, seed=0, jobs=1):
    """Returns (report text, number of failed instances)."""
    return _lcmid.run_suite(name, max_n, trials, seed, jobs)
