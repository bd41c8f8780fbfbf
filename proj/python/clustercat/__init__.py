"""Python access to the clustercat library.

Quivers and representations are passed as dicts in the same JSON layout the
command-line tool reads from files; results come back as dicts or strings.
"""

import json

from . import _clustercat
from ._clustercat import Error

__all__ = [
    "Error",
    "Service",
    "ar_quiver",
    "cc",
    "cc_table",
    "enumerate_seeds",
    "f_polynomial",
    "grassmannian",
    "laurent",
    "mutate",
    "verify",
]


def _quiver(q):
    return "" if q is None else json.dumps(q)


def laurent(text):
    return json.loads(_clustercat.laurent(text))


def f_polynomial(rep):
    return _clustercat.f_polynomial(json.dumps(rep))


def grassmannian(rep):
    return json.loads(_clustercat.grassmannian(json.dumps(rep)))


def cc(obj, quiver=None):
    return json.loads(_clustercat.cc(obj, _quiver(quiver)))


def cc_table(quiver=None):
    return json.loads(_clustercat.cc_table(_quiver(quiver)))


def ar_quiver(quiver=None):
    return json.loads(_clustercat.ar_quiver(_quiver(quiver)))


def mutate(seq, quiver=None):
    return json.loads(_clustercat.mutate(list(seq), _quiver(quiver)))


def enumerate_seeds(quiver=None, max_depth=12):
    return json.loads(_clustercat.enumerate_seeds(_quiver(quiver), max_depth))


def verify(suite="all", flip_b=False):
    return json.loads(_clustercat.verify(suite, flip_b))


class Service:
    """In-process version of the HTTP service: same routes, same payloads."""

    def __init__(self, quiver=None):
        self._impl = _clustercat.Service(_quiver(quiver))

    def request(self, method, path, body=None, query=None):
        text = "" if body is None else json.dumps(body)
        status, payload = self._impl.handle(method, path, text, query or {})
        return status, json.loads(payload)
