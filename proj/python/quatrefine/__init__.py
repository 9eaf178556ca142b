"""Refined class and type numbers of totally definite quaternion algebras over Q(sqrt d)."""

import json
from fractions import Fraction

from . import _quatrefine
from ._quatrefine import BudgetExceeded, ConsistencyError, ValidationError

__all__ = [
    "BudgetExceeded",
    "ConsistencyError",
    "ValidationError",
    "census",
    "class_number",
    "cmorders",
    "crosscheck_prime",
    "order_verify",
    "prime",
    "refined",
    "zeta",
]


def refined(d, tag="Hinf"):
    return json.loads(_quatrefine.refined_json(d, tag))


def prime(p):
    return json.loads(_quatrefine.prime_json(p))


def crosscheck_prime(p):
    return list(_quatrefine.crosscheck_prime(p))


def census(p):
    return json.loads(_quatrefine.census_json(p))


def zeta(d):
    return Fraction(_quatrefine.zeta(d))


def class_number(m):
    return int(_quatrefine.class_number(m))


def cmorders(d):
    return json.loads(_quatrefine.cmorders_json(d))


def order_verify(case, d):
    return json.loads(_quatrefine.order_verify_json(case, d))
