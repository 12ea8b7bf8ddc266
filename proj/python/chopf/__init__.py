"""Colored Hopf algebras over Q and F_p: verification, constructions and the invariant suite."""

import json

from ._chopf import ChopfError, contexts
from ._chopf import Session as _Session
from ._chopf import corpus_workspace as _corpus_workspace

__all__ = ["ChopfError", "Workspace", "contexts", "corpus_workspace", "load"]


class Workspace:
    """A loaded workspace. Results come back as plain Python objects."""

    def __init__(self, data=None):
        self._s = _Session(json.dumps({} if data is None else data))

    def to_dict(self):
        return json.loads(self._s.to_json())

    @property
    def algebras(self):
        return self._s.algebras()

    @property
    def morphisms(self):
        return self._s.morphisms()

    @property
    def subspaces(self):
        return self._s.subspaces()

    def verify(self, name):
        return json.loads(self._s.verify(name))

    def hkernel(self, morphism):
        return json.loads(self._s.hkernel(morphism))

    def cokernel(self, morphism):
        return json.loads(self._s.cokernel(morphism))

    def normal(self, subspace):
        return json.loads(self._s.normal(subspace))

    def twist(self, algebra):
        return json.loads(self._s.twist(algebra))

    def abelian(self, algebra):
        return self._s.abelian(algebra)

    def suite(self, quick=False, fail_fast=False):
        return json.loads(self._s.suite(quick, fail_fast))

    def mutate(self, algebra, kind, name=""):
        self._s.mutate(algebra, kind, name)


def corpus_workspace(context):
    return Workspace(json.loads(_corpus_workspace(context)))


def load(path):
    with open(path) as f:
        return Workspace(json.load(f))
