import json
from fractions import Fraction

import pytest

from leibniz_lab.algebra import Algebra, StructureTensor
from leibniz_lab.catalog import build, build_from_name, representative_cocycle
from leibniz_lab.errors import BadNilradical, ParseError
from leibniz_lab.services import algebra_io
from leibniz_lab.services.degeneration import STATUS_VERIFIED, builtin_fixtures, run_fixture
from leibniz_lab.services.invariants import degeneration_report


def test_algebra_document_layout():
    payload = algebra_io.algebra_to_json(build("R2", 3, {"alpha": Fraction(1, 2)}))
    assert payload["name"] == "R2(3,alpha=1/2)"
    assert payload["dim"] == 4
    assert payload["basis"] == ["e1", "e2", "e3", "x"]
    assert payload["nilradical"] == [1, 2, 3]
    assert {"i": 2, "j": 4, "k": 2, "c": "3/2"} in payload["brackets"]
    assert {"i": 4, "j": 1, "k": 1, "c": "-1"} in payload["brackets"]
    assert payload["params"]["alpha"] == "1/2"
    json.dumps(payload)


CATALOG_NAMES = [
    "abelian(3)", "NF(5)", "RNF(4)", "F1g(5)", "F2g(5)", "F3g(6,alpha=1)",
    "F1fam(5,theta=2,a4=1/3,a5=-1)", "F2fam(5,gamma=-1,b4=2,b5=1)", "R1(5)", "R2(5,alpha=-3/2)",
    "R3(5)", "R4(5)", "R5(6,a4=1,a6=2)", "RL1(5)", "RL2(7,beta=3/4)", "RL3(6,j=4)",
]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_algebra_round_trip(name):
    algebra = build_from_name(name)
    restored = algebra_io.algebra_from_json(algebra_io.algebra_to_json(algebra))
    assert restored.tensor == algebra.tensor
    assert restored.name == algebra.name
    assert restored.nilradical == algebra.nilradical
    assert restored.basis_labels == algebra.basis_labels


def test_minimal_document():
    algebra = algebra_io.algebra_from_json(
        {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 2, "c": 1}]}
    )
    assert algebra.name == "algebra"
    assert algebra.basis_labels == ("e1", "e2")
    assert algebra.nilradical is None
    assert algebra.tensor.product(0, 0) == {1: 1}


@pytest.mark.parametrize(
    "document",
    [
        [],
        {"dim": -1},
        {"dim": True},
        {"dim": 2, "brackets": [{"i": 3, "j": 1, "k": 1, "c": 1}]},
        {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1}]},
        {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1.5"}]},
        {"dim": 2, "brackets": {"i": 1}},
        {"dim": 2, "basis": ["a"]},
        {"dim": 2, "nilradical": [0]},
        {"dim": 2, "params": [1]},
    ],
)
def test_malformed_algebra_documents(document):
    with pytest.raises(ParseError):
        algebra_io.algebra_from_json(document)


@pytest.mark.parametrize("nilradical", [[2], [1, 2]])
def test_declared_nilradical_must_be_a_nilpotent_ideal(nilradical):
    document = {"dim": 2, "brackets": [{"i": 1, "j": 2, "k": 1, "c": "1"}], "nilradical": nilradical}
    with pytest.raises(BadNilradical):
        algebra_io.algebra_from_json(document)
    document["nilradical"] = [1]
    assert algebra_io.algebra_from_json(document).nilradical == (0,)


def test_report_rejects_a_bogus_nilradical():
    tensor = StructureTensor.from_products(2, {(0, 1): {0: 1}})
    bogus = Algebra("toy", tensor, ("e1", "x"), nilradical=(0, 1))
    with pytest.raises(BadNilradical):
        degeneration_report(bogus, build("abelian", 2))


def test_cochain_round_trip():
    xi = representative_cocycle("R3", 5, "xi")
    payload = algebra_io.cochain_to_json(xi)
    assert payload["dim"] == 6
    assert {"i": 6, "j": 1, "k": 1, "c": "-1"} in payload["entries"]
    assert algebra_io.cochain_from_json(payload) == xi


def test_fixture_round_trip():
    fixture = builtin_fixtures(4)[0]
    payload = json.loads(json.dumps(algebra_io.fixture_to_json(fixture)))
    assert payload["g"][1][0] == {"-1": "-1"}
    restored = algebra_io.fixture_from_json(payload)
    assert restored.family == fixture.family
    assert run_fixture(restored).status == STATUS_VERIFIED


def test_fixture_with_catalog_names():
    one = {"0": "1"}
    t = {"1": "1"}
    inverse = {"-1": "1"}
    g = [[one if r == c == 0 or r == c == 4 else (t if r == c else "0") for c in range(5)] for r in range(5)]
    g_inverse = [[one if r == c == 0 or r == c == 4 else (inverse if r == c else "0") for c in range(5)] for r in range(5)]
    fixture = algebra_io.fixture_from_json(
        {"source": "R1(4)", "target": "R2(4,alpha=0)", "g": g, "g_inverse": g_inverse}
    )
    assert fixture.name == "R1(4) -> R2(4,alpha=0)"
    assert run_fixture(fixture).status == STATUS_VERIFIED


def test_fixture_requires_matrices():
    with pytest.raises(ParseError):
        algebra_io.fixture_from_json({"source": "R1(4)", "target": "R2(4)"})


def test_files(tmp_path):
    algebra = build("NF", 3)
    path = algebra_io.write_json(tmp_path / "nested" / "nf.json", algebra_io.algebra_to_json(algebra))
    assert path.exists()
    assert algebra_io.load_algebra(str(path)).tensor == algebra.tensor
    assert algebra_io.load_algebra("NF(3)").tensor == algebra.tensor

    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        algebra_io.read_json(broken)
