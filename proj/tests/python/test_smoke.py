import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import interdec

FIXTURES = Path(os.environ.get("INTERDEC_FIXTURE_DIR", Path(__file__).parent.parent / "fixtures"))


def load(name):
    return json.loads((FIXTURES / f"{name}.json").read_text())


def test_mobius_on_a_chain():
    mu = interdec.mobius({"elements": ["0", "1", "2"], "leq": [["0", "1"], ["1", "2"]]})
    assert mu[("2", "2")] == 1
    assert mu[("2", "1")] == -1
    assert mu[("2", "0")] == 0


def test_vee_family_decomposes():
    vee = load("vee")
    assert interdec.check_functorial(vee)
    assert interdec.check_presheafable(vee)
    assert interdec.check_intersection(vee)
    res = interdec.decompose(vee)
    assert res["certified"]
    assert res["dims"] == {"0": 1, "1": 1, "1'": 1, "⊤": 0}
    assert res["s"]["1"][1][1] == Fraction(1)
    assert interdec.compute_s(vee)["0"] == res["s"]["0"]


def test_bowtie_reports_a_witness():
    res = interdec.decompose(load("bowtie"))
    assert not res["certified"]
    assert res["witness"] == ("a", "b")


def test_fraction_entries_are_accepted():
    half = Fraction(1, 2)
    family = {
        "poset": {"elements": ["x"], "leq": []},
        "dim": 2,
        "projectors": {"x": [[half, half], [half, half]]},
    }
    assert interdec.compute_s(family)["x"] == [[half, half], [half, half]]


def test_measures():
    uniform = load("uniform")
    assert interdec.is_product(uniform)
    assert interdec.decompose_measure(uniform)["dims"]["{1,2}"] == 1
    correlated = load("correlated")
    assert not interdec.is_product(correlated)
    assert interdec.decompose_measure(correlated)["witness"] == ("{1}", "{2}")
    e = interdec.conditional_expectation(uniform, [])
    assert all(x == Fraction(1, 4) for row in e for x in row)


def test_split_functors():
    poset = {"elements": ["0", "1", "1'"], "leq": [["0", "1"], ["0", "1'"]]}
    doc = interdec.sum_of_components(poset, {"0": 1, "1": 1, "1'": 1})
    assert doc["dims"] == {"0": 1, "1": 2, "1'": 2}
    holds, witnesses = interdec.check_split_intersection(doc)
    assert holds and witnesses == []
    res = interdec.decompose_split(doc)
    assert res["certified"]
    assert res["dims"] == {"0": 1, "1": 1, "1'": 1}

    holds, witnesses = interdec.check_split_intersection(load("perturbed"))
    assert not holds
    assert witnesses == [("c", "a", "b")]


def test_run_matches_the_cli_contract():
    code, out = interdec.run("check", "measure", load("correlated"))
    assert code == 1
    assert json.loads(out)["witnesses"] == [{"a": "{1}", "b": "{2}"}]
    code, out = interdec.run("check", "projectors", load("non_idempotent"))
    assert code == 2
    assert json.loads(out)["verdict"] == "invalid-input"
    code, text = interdec.run("decompose", "split", load("chain_split"), format="text")
    assert code == 0
    assert "dims: 0=1 1=1" in text


def test_invalid_documents_raise():
    with pytest.raises(ValueError):
        interdec.decompose({"poset": {"elements": ["x"]}, "dim": 1, "projectors": {"x": [[2]]}})
    with pytest.raises(ValueError):
        interdec.run("frobnicate", "measure", {})
