"""Elliptic curve families from Pythagorean triples.

Thin wrappers over the C++ core.  Structured results are returned as dicts;
rationals and reals are decimal strings.
"""

import json as _json

from . import _ptcurves as _core
from ._ptcurves import DegenerateParameter, NonPrimitiveTriple

__all__ = [
    "DegenerateParameter",
    "NonPrimitiveTriple",
    "enumerate_ppts",
    "construct",
    "certify",
    "point_order",
    "canonical_height",
    "regulator",
    "reproduce",
]


def enumerate_ppts(limit):
    """Primitive triples (a, b, c) with c <= limit, a < b, sorted by (c, a)."""
    return [tuple(int(v) for v in t) for t in _core.enumerate_ppts(limit)]


def construct(family, triple=None, **param):
    """construct("F1_a2c2", alpha="2") or construct("F6_frey_ac", triple=(3, 4, 5))."""
    if triple is not None:
        if param:
            raise TypeError("give either triple or one parameter")
        return _json.loads(_core.construct_triple(family, *triple))
    if len(param) != 1:
        raise TypeError("exactly one parameter keyword is required")
    (kind, value), = param.items()
    return _json.loads(_core.construct(family, kind, str(value)))


def certify(family, triple):
    return _json.loads(_core.certify(family, *triple))


def _curve(curve):
    return [str(c) for c in curve]


def point_order(curve, point):
    return _json.loads(_core.point_order(_curve(curve), str(point[0]), str(point[1])))


def canonical_height(curve, point, digits=50):
    return _core.canonical_height(_curve(curve), str(point[0]), str(point[1]), digits)


def regulator(curve, points, digits=50, epsilon="1e-4"):
    pts = [(str(x), str(y)) for x, y in points]
    return _json.loads(_core.regulator(_curve(curve), pts, digits, str(epsilon)))


def reproduce(digits=50):
    return _json.loads(_core.reproduce(digits))
