import json
from pathlib import Path

import pytest

import chopf

DATA = Path(__file__).resolve().parents[2] / "data" / "workspaces"


def test_contexts():
    assert set(chopf.contexts()) >= {"super", "z4", "klein", "f5"}


def test_verify_and_constructions():
    w = chopf.load(DATA / "super.json")
    assert w.verify("lambda_v")["ok"]
    assert sorted(w.hkernel("pi_z4_z2")) == ["1", "g^2"]
    assert w.cokernel("incl_z2_z4")["dim"] == 2
    assert w.normal("ks3/a3")["normal"]
    n = w.normal("ks3/c12")
    assert not n["normal"] and "image" in n
    assert w.abelian("lambda_v") and not w.abelian("ks3")
    assert "gamma" in w.twist("lambda_vw")


def test_mutation_is_caught():
    w = chopf.load(DATA / "z4.json")
    w.mutate("lambda_13", "flip_antipode_sign")
    r = w.verify("mutated_lambda_13")
    assert not r["ok"] and "antipode_left" in r["failing"]
    s = w.suite(quick=True, fail_fast=True)
    assert not s["ok"] and s["counterexample"]["subject"] == "mutated_lambda_13"


def test_suite_clean_and_round_trip():
    w = chopf.corpus_workspace("klein")
    assert w.suite(quick=True)["ok"]
    again = chopf.Workspace(json.loads(json.dumps(w.to_dict())))
    assert again.to_dict() == w.to_dict()


def test_errors():
    w = chopf.Workspace()
    assert w.suite()["checks"] == 0
    with pytest.raises(chopf.ChopfError) as e:
        w.verify("missing")
    assert e.value.args[0] == "UnknownName"
    with pytest.raises(chopf.ChopfError):
        chopf.Workspace({"field": {"kind": "nope"}})
