"""Zeros, factorizations and least common multiples of quaternion polynomials.

Every function returns the same JSON structure as the command line tool's
--json output, decoded into Python objects. Library errors are raised as
QuatpolyError with the error code in .code.
"""

import json as _json

from . import _quatpoly

__all__ = [
    "QuatpolyError",
    "eval",
    "roots",
    "factor",
    "divisors",
    "mult",
    "lcm",
    "decompose",
    "blaschke",
    "golden",
]


class QuatpolyError(ValueError):
    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


def _call(fn, *args, **kwargs):
    try:
        return _json.loads(fn(*args, **kwargs))
    except ValueError as e:
        text = str(e)
        if not text.startswith("quatpoly:"):
            raise
        err = _json.loads(text[len("quatpoly:"):])
        raise QuatpolyError(err["error"], err["message"]) from None


def eval(poly, point, **cfg):
    return _call(_quatpoly.eval, poly, point, **cfg)


def roots(poly, **cfg):
    return _call(_quatpoly.roots, poly, **cfg)


def factor(poly, **cfg):
    return _call(_quatpoly.factor, poly, **cfg)


def divisors(poly, point=None, **cfg):
    return _call(_quatpoly.divisors, poly, point, **cfg)


def mult(poly, point, **cfg):
    return _call(_quatpoly.mult, poly, point, **cfg)


def lcm(polys, **cfg):
    return _call(_quatpoly.lcm, list(polys), **cfg)


def decompose(poly, **cfg):
    return _call(_quatpoly.decompose, poly, **cfg)


def blaschke(roots, **cfg):
    if not isinstance(roots, str):
        roots = ", ".join(roots)
    return _call(_quatpoly.blaschke, roots, **cfg)


def golden():
    return _call(_quatpoly.golden)
