"""Albanese varieties, fibers and invariants of hyperelliptic varieties."""

import json

from . import _core
from ._core import HyperellError

__all__ = [
    "HyperellError",
    "albanese",
    "catalog_export",
    "catalog_list",
    "catalog_run",
    "check",
    "invariants",
    "oracle",
]


def _text(document):
    if isinstance(document, (dict, list)):
        return json.dumps(document)
    return document


def check(document):
    return json.loads(_core.check(_text(document)))


def albanese(document, recurse=False):
    return json.loads(_core.albanese(_text(document), recurse))


def invariants(document):
    return json.loads(_core.invariants(_text(document)))


def oracle(document, level=None):
    return json.loads(_core.oracle(_text(document), level))


def albanese_round_trip(report):
    return _core.albanese_round_trip(_text(report))


def catalog_list():
    return list(_core.catalog_list())


def catalog_run(name):
    return json.loads(_core.catalog_run(name))


def catalog_export(name):
    return json.loads(_core.catalog_export(name))
