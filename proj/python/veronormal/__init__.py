"""Exact splitting types of Veronese normal bundles on rational curves."""

import json as _json

from ._core import FormatError, MathError, default_seed, run_criterion
from . import _core

__all__ = ["normal", "restrict", "slopes", "splitting_type", "run_criterion",
           "default_seed", "MathError", "FormatError"]


def normal(n, d):
    return _json.loads(_core.normal(n, d))


def slopes(n, d):
    return _json.loads(_core.slopes(n, d))


def restrict(n, d, curve="line", seed=None, samples=10, path=""):
    if seed is None:
        seed = default_seed()
    return _json.loads(_core.restrict(n, d, curve, seed, samples, path))


def splitting_type(presentation):
    """Splitting type of coker(presentation); accepts the JSON dict or text."""
    if not isinstance(presentation, str):
        presentation = _json.dumps(presentation)
    return _core.splitting_type(presentation)
