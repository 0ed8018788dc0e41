"""Classification of small nilpotent associative algebras over finite fields.

Algebras are plain dicts in the JSON format used by the command-line tool:
{"field": {"p": P, "m": M}, "dim": N, "labels": [...], "products": [[i, j, [[k, c], ...]], ...]}.
"""

import json

from . import _core
from ._core import GuardError, InputError

__all__ = [
    "GuardError",
    "InputError",
    "automorphisms",
    "catalog",
    "classify",
    "cohomology",
    "isomorphism",
    "properties",
    "verify",
]


def classify(dim, p, m=1, commutative=False):
    """One record per isomorphism class of dimension `dim` over F_{p^m}."""
    return json.loads(_core.classify(dim, p, m, commutative))


def verify(dim, p, m=1, commutative=False):
    """Comparison of the classification with the published reference lists."""
    return json.loads(_core.verify(dim, p, m, commutative))


def catalog(name, params=None, p=2, m=1):
    """Named algebra such as "A_{3,3}" with parameters like {"alpha": 1}."""
    return json.loads(_core.catalog(name, dict(params or {}), p, m))


def cohomology(algebra, symmetric=False):
    return json.loads(_core.cohomology(json.dumps(algebra), symmetric))


def automorphisms(algebra):
    return json.loads(_core.automorphisms(json.dumps(algebra)))


def isomorphism(a, b):
    """Matrix whose columns are the images of a's basis in b, or None."""
    w = _core.isomorphism(json.dumps(a), json.dumps(b))
    return None if w is None else json.loads(w)


def properties(algebra):
    return _core.properties(json.dumps(algebra))
