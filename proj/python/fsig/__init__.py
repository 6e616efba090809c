"""Exact F-signature computations on polarized toric varieties.

Exact rationals cross the C++ boundary as strings; this wrapper converts them
to fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "varieties",
    "class_dictionary",
    "fsignature",
    "volume",
    "is_ample",
    "is_nef",
    "free_rank",
    "splitting_dimensions",
    "max_splitting_degree",
    "vanishing_degree_oracle",
    "closed_form_p1p1",
    "closed_form_blp2",
    "boundary_limit",
    "suite_names",
    "check",
]


def varieties():
    return _core.varieties()


def class_dictionary(variety):
    return _core.class_dictionary(variety)


def fsignature(variety, divisor):
    return Fraction(_core.fsignature(variety, divisor))


def volume(variety, divisor):
    return Fraction(_core.volume(variety, divisor))


def is_ample(variety, divisor):
    return _core.is_ample(variety, divisor)


def is_nef(variety, divisor):
    return _core.is_nef(variety, divisor)


def free_rank(variety, divisor, p, e):
    raw = _core.free_rank(variety, divisor, p, e)
    return {
        "p": raw["p"],
        "e": raw["e"],
        "a_e": int(raw["a_e"]),
        "normalized": Fraction(raw["normalized"]),
    }


def splitting_dimensions(variety, divisor, p, e):
    return {deg: int(dim) for deg, dim in _core.splitting_dimensions(variety, divisor, p, e).items()}


def max_splitting_degree(variety, divisor, p, e):
    return _core.max_splitting_degree(variety, divisor, p, e)


def vanishing_degree_oracle(variety, divisor, p, e):
    return _core.vanishing_degree_oracle(variety, divisor, p, e)


def closed_form_p1p1(a, b):
    return Fraction(_core.closed_form_p1p1(str(a), str(b)))


def closed_form_blp2(a, b):
    return Fraction(_core.closed_form_blp2(str(a), str(b)))


def boundary_limit(variety, target, direction, schedule=8):
    return Fraction(_core.boundary_limit(variety, target, direction, schedule))


def suite_names():
    return _core.suite_names()


def check(suite, p=0, e=0):
    return json.loads(_core.check(suite, p, e))
