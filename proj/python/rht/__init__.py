"""Exact rational homotopy computations on free graded-commutative models.

Thin wrapper over the compiled core: models travel as JSON dicts, expressions
as plain strings like "3*x1*x4 + x2*x3".
"""

import json

from rht import _core

__all__ = [
    "model",
    "betti",
    "ring",
    "cup",
    "massey",
    "formality_scan",
    "symplectic",
    "projectivize",
    "blowup_betti",
    "lemma1",
    "lemma2",
    "conn_sum_survives",
]


def model(family, n=0, m=0):
    """A named model family as a dict (generators, differential, degree_cap)."""
    return json.loads(_core.family_json(family, n, m))


def betti(model_dict, max_degree=-1):
    return _core.betti(json.dumps(model_dict), max_degree)


def ring(model_dict, max_degree=-1):
    return json.loads(_core.ring(json.dumps(model_dict), max_degree))


def cup(model_dict, a, b):
    return json.loads(_core.cup(json.dumps(model_dict), a, b))


def massey(model_dict, a, b, c):
    return json.loads(_core.massey(json.dumps(model_dict), a, b, c))


def formality_scan(model_dict, max_degree=-1):
    return json.loads(_core.formality_scan(json.dumps(model_dict), max_degree))


def symplectic(model_dict, form, lefschetz=True, harmonic=True):
    return json.loads(_core.symplectic(json.dumps(model_dict), form, lefschetz, harmonic))


def projectivize(model_dict, k, chern=()):
    return json.loads(_core.projectivize(json.dumps(model_dict), k, list(chern)))


def blowup_betti(N, y_betti, k):
    return json.loads(_core.blowup_betti(N, list(y_betti), k))


def lemma1(m, k):
    return json.loads(_core.lemma1(m, k))


def lemma2(target, k):
    return json.loads(_core.lemma2(target, k))


def conn_sum_survives(q, dim):
    return _core.conn_sum_survives(q, dim)
