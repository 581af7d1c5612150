from fractions import Fraction

import pytest

from leibniz_lab.algebra import is_leibniz, verify_nilpotent_ideal
from leibniz_lab.catalog import build, build_from_name, format_name, get_entry, list_entries, parse_name
from leibniz_lab.errors import BadParams, ParseError


def _samples(n):
    cases = [("NF", {}), ("RNF", {}), ("F1g", {}), ("F2g", {}), ("F3g", {}), ("R1", {}), ("R3", {}), ("R4", {}), ("RL1", {})]
    for alpha in {Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(1 - n), Fraction(2 - n)}:
        cases.append(("R2", {"alpha": alpha}))
    if n % 2 == 0:
        cases.append(("F3g", {"alpha": 1}))
    if n >= 4:
        cases += [
            ("R5", {}),
            ("R5", {"a4": 1}),
            ("R5", {f"a{k}": k for k in range(4, n + 1)}),
            ("F1fam", {"theta": 2, **{f"a{k}": Fraction(1, k) for k in range(4, n + 1)}}),
            ("F2fam", {"gamma": -1, **{f"b{k}": k - 3 for k in range(4, n + 1)}}),
        ]
        cases += [("RL3", {"j": j}) for j in range(4, n + 1)]
    if n % 2 == 1 and n >= 5:
        cases += [("RL2", {"beta": 1}), ("RL2", {"beta": Fraction(-3, 2)})]
    return cases


@pytest.mark.parametrize("n", range(3, 9))
def test_every_catalog_algebra_is_leibniz(n):
    for key, params in _samples(n):
        algebra = build(key, n, params)
        assert is_leibniz(algebra.tensor), algebra.name
        assert verify_nilpotent_ideal(algebra.tensor, algebra.nilradical), algebra.name


def test_dimensions_and_labels():
    assert build("NF", 4).dim == 4
    rnf = build("RNF", 4)
    assert rnf.dim == 5
    assert rnf.basis_labels == ("e1", "e2", "e3", "e4", "x")
    assert rnf.nilradical == (0, 1, 2, 3)


def test_null_filiform_table():
    t = build("NF", 4).tensor
    assert t.table == {(0, 0): {1: 1}, (1, 0): {2: 1}, (2, 0): {3: 1}}


def test_r2_at_alpha_one_scales_by_index():
    t = build("R2", 5, {"alpha": 1}).tensor
    for i in range(1, 5):
        assert t.product(i, 5) == {i: i + 1}


def test_r4_square_of_x():
    t = build("R4", 4).tensor
    assert t.product(4, 4) == {2: -1}


def test_rl3_products():
    t = build("RL3", 6, {"j": 4}).tensor
    assert t.product(6, 1) == {1: -2, 2: -1}
    assert t.product(0, 1) == {3: 1}


def test_rl1_weights_are_degrees():
    t = build("RL1", 5).tensor
    assert t.product(1, 5) == {1: 2}
    assert t.product(2, 5) == {2: 2}
    assert t.product(4, 5) == {4: 4}


@pytest.mark.parametrize(
    "key, n, params",
    [
        ("NF", 0, {}),
        ("R2", 2, {}),
        ("RL2", 6, {}),
        ("RL2", 3, {}),
        ("RL3", 6, {"j": 3}),
        ("RL3", 6, {"j": 7}),
        ("RL3", 6, {}),
        ("F3g", 5, {"alpha": 1}),
        ("R5", 3, {}),
        ("R5", 5, {"a6": 1}),
        ("R2", 4, {"beta": 1}),
        ("XYZ", 4, {}),
    ],
)
def test_bad_params(key, n, params):
    with pytest.raises(BadParams):
        build(key, n, params)


def test_parse_name():
    assert parse_name("R2(5,alpha=1/2)") == ("R2", 5, {"alpha": Fraction(1, 2)})
    assert parse_name(" r5( 6, a4=1 ) ") == ("R5", 6, {"a4": Fraction(1)})
    assert parse_name("abelian(3)") == ("abelian", 3, {})
    for text in ("R2", "R2()", "R2(x)", "R2(5,alpha)", "R2(5,alpha=0.5)"):
        with pytest.raises(ParseError):
            parse_name(text)


def test_format_name_round_trips():
    algebra = build_from_name("R5(6,a5=2,a4=1)")
    assert algebra.name == "R5(6,a4=1,a5=2)"
    assert build_from_name(algebra.name).tensor == algebra.tensor
    assert format_name("RL3", 6, {"j": Fraction(4)}) == "RL3(6,j=4)"


def test_entries():
    keys = [entry.key for entry in list_entries()]
    assert len(keys) == len(set(keys)) == 16
    assert get_entry("rnf").key == "RNF"
    assert get_entry("R4").solvable
    assert not get_entry("F2fam").solvable
