"""Exact Schubert calculus on the Sato Grassmannian and Krichever pullbacks."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "bernoulli",
    "bernoulli_poly",
    "ch_hodge",
    "codimension",
    "compare_ch_p",
    "conjugate",
    "gkm_product",
    "gkm_schubert",
    "grr_ch_p",
    "lr_coefficients",
    "maya_from_partition",
    "partition_from_maya",
    "pullback",
    "pullback_class",
    "schur_mult",
    "verify",
]


def _poly(pair, as_json):
    text, payload = pair
    return json.loads(payload) if as_json else text


def pullback(kind, g, r, q=0, h=0, equivariant=False, alternate_sign=False, as_json=False):
    return _poly(_core.pullback(kind, g, r, q, h, equivariant, alternate_sign), as_json)


def pullback_class(kind, g, partition, q=0, h=0, equivariant=False, as_json=False):
    return _poly(_core.pullback_class(kind, g, list(partition), q, h, equivariant), as_json)


def lr_coefficients(a, b):
    return {tuple(nu): c for nu, c in _core.lr_coefficients(list(a), list(b))}


def schur_mult(a, b, as_json=False):
    return _poly(_core.schur_mult(list(a), list(b)), as_json)


def conjugate(p):
    return tuple(_core.conjugate(list(p)))


def maya_from_partition(p, d):
    return _core.maya_from_partition(list(p), d)


def partition_from_maya(d, head):
    return tuple(_core.partition_from_maya(d, list(head)))


def codimension(d, head):
    return _core.codimension(d, list(head))


def gkm_schubert(n, l, lam, rotation=False):
    return json.loads(_core.gkm_schubert(n, l, list(lam), rotation))


def gkm_product(n, l, a, b):
    """Forgetful image of the equivariant product and whether it passed the GKM test."""
    return _core.gkm_product(n, l, list(a), list(b))


def bernoulli(n):
    return Fraction(_core.bernoulli(n))


def bernoulli_poly(n):
    return [Fraction(c) for c in _core.bernoulli_poly(n)]


def ch_hodge(r, q, g, as_json=False):
    return _poly(_core.ch_hodge(r, q, g), as_json)


def grr_ch_p(k, as_json=False):
    return _poly(_core.grr_ch_p(k), as_json)


def compare_ch_p(k):
    rows = _core.compare_ch_p(k)
    for row in rows:
        row["expansion"] = Fraction(row["expansion"])
        row["stated"] = Fraction(row["stated"])
    return rows


def verify(suite="all", max_degree=8, threads=1):
    return _core.verify(suite, max_degree, threads)
