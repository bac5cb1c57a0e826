"""Fatou graph towers, anchored-cycle certificates and Apollonian packings."""

import json

from . import _core
from ._core import GasketError, descartes_fourth, tower_counts

__all__ = [
    "GasketError",
    "apollonian",
    "bundled_core",
    "bundled_names",
    "certify",
    "compare",
    "descartes_fourth",
    "enumerate_cores",
    "tower_counts",
    "validate",
]


def _source(core):
    # Accept a dict, a JSON string or "bundled:<name>".
    return core if isinstance(core, str) else json.dumps(core)


def bundled_names():
    return list(_core.bundled_names())


def bundled_core(name):
    return json.loads(_core.bundled_core(name))


def validate(core):
    return json.loads(_core.validate(_source(core)))


def certify(core, depth=3, max_arc_length=16):
    return json.loads(_core.certify(_source(core), depth, max_arc_length))


def enumerate_cores(max_vertices, threads=0):
    return json.loads(_core.enumerate_cores(max_vertices, threads))


def apollonian(root=(-1, 2, 2, 3), bound=100):
    return json.loads(_core.apollonian(list(root), float(bound)))


def compare(core_certificate, packing_certificate):
    return json.loads(_core.compare(json.dumps(core_certificate), json.dumps(packing_certificate)))
