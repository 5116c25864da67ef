"""Python access to the kfrob checks. Every call returns plain dicts."""

import json

from . import _core
from ._core import KfrobError, ParseError

__all__ = [
    "KfrobError",
    "ParseError",
    "chi",
    "equivariant",
    "gr_iso",
    "hypersurface",
    "normalize_bundle",
    "run_suite",
    "tau",
    "verify_arr",
]


def verify_arr(n, prime, bundle, m=None):
    return json.loads(_core.verify_arr(n, prime, bundle, m))


def tau(rank, prime):
    return json.loads(_core.tau(rank, prime))


def gr_iso(vars, prime):
    return json.loads(_core.gr_iso(vars, prime))


def hypersurface(equation, prime, samples):
    return json.loads(_core.hypersurface(equation, prime, samples))


def equivariant(l, omega, ambient="p1"):
    return json.loads(_core.equivariant(l, omega, ambient))


def run_suite(config, jobs=None):
    """config: a dict or a JSON string in the suite schema."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return json.loads(_core.run_suite(config, jobs))


def normalize_bundle(text, ambient="p1"):
    return _core.normalize_bundle(text, ambient)


def chi(n, a):
    return int(_core.chi(n, a))
