"""Regular languages, local varieties and their dual monoids.

Structured values are plain dicts in the JSON schemas of the C++ library.
"""

import json

from . import _regvar
from ._regvar import (
    InputError,
    InvariantError,
    ResourceError,
    UnsupportedModeError,
    contains,
    predicate_names,
)

__all__ = [
    "InputError",
    "InvariantError",
    "ResourceError",
    "UnsupportedModeError",
    "check_flang_morphism",
    "close",
    "compile",
    "contains",
    "describe",
    "enumerate_generated",
    "fully_invariant_check",
    "homs_into_two_count",
    "kernel_pairs",
    "leq_quo",
    "limit_of",
    "monoid_to_variety",
    "predicate_names",
    "recover_ideal",
    "square_check",
    "subdirect",
    "syntactic_monoid",
    "theory_member",
    "variety_contains",
    "variety_to_monoid",
]


def _d(x):
    return json.dumps(x)


def compile(regex, alphabet):
    return json.loads(_regvar.compile(regex, alphabet))


def close(csig, alphabet, regexes, limit=1 << 14):
    return json.loads(_regvar.close(csig, alphabet, list(regexes), limit))


def variety_contains(variety, regex):
    return _regvar.variety_contains(_d(variety), regex)


def variety_to_monoid(variety):
    return json.loads(_regvar.variety_to_monoid(_d(variety)))


def monoid_to_variety(monoid, csig):
    return json.loads(_regvar.monoid_to_variety(_d(monoid), csig))


def syntactic_monoid(regex, alphabet):
    return json.loads(_regvar.syntactic_monoid(regex, alphabet))


def describe(monoid):
    return _regvar.describe(_d(monoid))


def subdirect(monoids):
    return json.loads(_regvar.subdirect([_d(m) for m in monoids]))


def leq_quo(smaller, larger):
    return _regvar.leq_quo(_d(smaller), _d(larger))


def enumerate_generated(alphabet, dsig, bound):
    return [json.loads(m) for m in _regvar.enumerate_generated(alphabet, dsig, bound)]


def homs_into_two_count(variety):
    return _regvar.homs_into_two_count(_d(variety))


def check_flang_morphism(source, morphism, target):
    """(holds, witness)"""
    return _regvar.check_flang_morphism(_d(source), _d(morphism), _d(target))


def square_check(morphism, variety, size_bound=6, state_bound=8):
    return _regvar.square_check(_d(morphism), _d(variety), size_bound, state_bound)


def fully_invariant_check(variety, length_bound):
    return _regvar.fully_invariant_check(_d(variety), length_bound)


def limit_of(monoids):
    return json.loads(_regvar.limit_of([_d(m) for m in monoids]))


def recover_ideal(monoids, bound):
    return [json.loads(q) for q in _regvar.recover_ideal([_d(m) for m in monoids], bound)]


def kernel_pairs(monoid, length_bound):
    return [tuple(p) for p in json.loads(_regvar.kernel_pairs(_d(monoid), length_bound))]


def theory_member(predicate, monoid, bound):
    return _regvar.theory_member(predicate, _d(monoid), bound)
