from fractions import Fraction

import pytest

from leibniz_lab.algebra import StructureTensor
from leibniz_lab.algebra.cochains import Cochain2
from leibniz_lab.catalog import build, build_from_name, list_representatives, representative_cocycle, scaling_combination
from leibniz_lab.data import expected_values as expected
from leibniz_lab.errors import DimensionMismatch, NotCocycle, NotLeibniz, Undefined
from leibniz_lab.linalg import ExactMatrix
from leibniz_lab.services.cohomology import (
    classes_independent,
    coboundary_of,
    coboundary_space,
    cocycle_space,
    cohomology_summary,
    d2_apply,
    derivation_space,
    hl2_dim,
    is_coboundary,
    is_cocycle,
    is_derivation,
)


def _cases(n):
    return [(key, params) for key, params in expected.table_cases(n) if expected.expected_der(key, n, params) is not None]


@pytest.mark.parametrize("n", range(4, 9))
def test_derivation_and_coboundary_dimensions(n):
    for key, params in _cases(n):
        tensor = build(key, n, params).tensor
        assert len(derivation_space(tensor)) == expected.expected_der(key, n, params), (key, params)
        assert coboundary_space(tensor).dimension == expected.expected_bl2(key, n, params), (key, params)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_cocycle_and_cohomology_dimensions(n):
    for key, params in _cases(n):
        tensor = build(key, n, params).tensor
        summary = cohomology_summary(tensor)
        assert summary.zl2 == expected.expected_zl2(key, n, params), (key, params)
        assert summary.hl2 == expected.expected_hl2(key, n, params), (key, params)
        assert summary.zl2 == summary.bl2 + summary.hl2


@pytest.mark.parametrize(
    "alpha, hl2",
    [(-1, 4), (0, 2), (1, 2), (-2, 2), (Fraction(1, 2), 1), (3, 1)],
)
def test_r2_in_dimension_four(alpha, hl2):
    tensor = build("R2", 3, {"alpha": alpha}).tensor
    assert hl2_dim(tensor) == hl2 == expected.expected_hl2("R2", 3, {"alpha": alpha})


def test_abelian_everything_is_a_cocycle():
    tensor = build("abelian", 3).tensor
    assert cohomology_summary(tensor).as_dict() == {"der": 9, "zl2": 27, "bl2": 0, "hl2": 27}


@pytest.mark.parametrize("name, der", [("F1g", 5), ("F2g", 6), ("NF", 4)])
def test_nilpotent_derivations(name, der):
    tensor = build(name, 4).tensor
    assert len(derivation_space(tensor)) == der
    # dim BL^2 = d^2 - dim Der
    assert coboundary_space(tensor).dimension == 16 - der


def test_right_multiplications_are_derivations():
    tensor = build("R2", 4, {"alpha": Fraction(1, 2)}).tensor
    for j in range(tensor.dim):
        assert is_derivation(tensor, ExactMatrix.from_rows(tensor.right_operator(j)))
    identity = ExactMatrix.identity(tensor.dim)
    assert not is_derivation(tensor, identity)


def test_derivation_basis_satisfies_the_rule():
    tensor = build("RNF", 4).tensor
    for matrix in derivation_space(tensor):
        assert coboundary_of(tensor, matrix).is_zero()


@pytest.mark.parametrize("name", ["R3(5)", "R2(4,alpha=1/2)", "F2g(4)"])
def test_coboundaries_are_cocycles(name):
    tensor = build_from_name(name).tensor
    for phi in coboundary_space(tensor).cochains(tensor.dim):
        assert is_cocycle(tensor, phi)
        assert is_coboundary(tensor, phi)
    for phi in cocycle_space(tensor).cochains(tensor.dim):
        assert is_cocycle(tensor, phi)


@pytest.mark.parametrize("n", range(4, 8))
def test_listed_representatives_form_a_basis(n):
    cases = [("RNF", {}), ("R3", {}), ("R4", {}), ("R5", {}), ("R5", {"a4": 1})]
    cases += [("R2", {"alpha": alpha}) for alpha in expected.r2_samples(n)]
    for key, params in cases:
        tensor = build(key, n, params).tensor
        names = list_representatives(key, n, params)
        reps = [representative_cocycle(key, n, name, params) for name in names]
        assert len(reps) == expected.expected_hl2(key, n, params), (key, params)
        assert classes_independent(tensor, reps), (key, params)


def test_r5_scaling_combination_is_a_coboundary():
    params = {"a4": 1, "a5": 2}
    tensor = build("R5", 5, params).tensor
    combination = scaling_combination(5, params)
    assert not combination.is_zero()
    assert is_cocycle(tensor, combination)
    assert is_coboundary(tensor, combination)


@pytest.mark.parametrize(
    "params, dropped",
    [({}, None), ({"a4": 1}, "psi4"), ({"a5": 3}, "psi5"), ({"a4": 0, "a5": -1}, "psi5")],
)
def test_r5_basis_drops_one_psi(params, dropped):
    names = list_representatives("R5", 5, params)
    full = ["rho", "psi4", "psi5", "phi2", "phi3", "phi4"]
    assert names == [name for name in full if name != dropped]
    assert len(names) == expected.expected_hl2("R5", 5, params)


@pytest.mark.parametrize(
    "n, params",
    [(4, {"a4": 1}), (5, {"a5": 3}), (6, {"a4": 1, "a6": 2}), (6, {"a5": -2, "a6": 1})],
)
def test_r5_representatives_are_cocycles_with_last_parameter(n, params):
    tensor = build("R5", n, params).tensor
    for name in ["rho"] + [f"psi{k}" for k in range(4, n + 1)] + [f"phi{k}" for k in range(2, n)]:
        assert is_cocycle(tensor, representative_cocycle("R5", n, name, params)), name


def test_r5_corrections_for_last_parameter():
    params = {"a4": 1}
    rho = representative_cocycle("R5", 4, "rho", params)
    assert rho.value(4, 0) == (-1, 1, 0, -1, 0)
    phi2 = representative_cocycle("R5", 4, "phi2", params)
    assert phi2.value(0, 0) == (0, -1, 0, 0, 0)
    phi3 = representative_cocycle("R5", 4, "phi3", params)
    assert phi3.value(0, 4) == (0, 1, 0, 0, 0)


@pytest.mark.parametrize(
    "name",
    [
        "abelian(3)", "NF(4)", "RNF(4)", "F1g(4)", "F2g(4)", "F3g(4,alpha=1)",
        "F1fam(4,theta=2,a4=1)", "F2fam(4,gamma=-1,b4=1)", "R1(4)", "R2(4,alpha=1/2)",
        "R3(4)", "R4(4)", "R5(4,a4=1)", "RL1(4)", "RL2(5,beta=2)", "RL3(4,j=4)",
    ],
)
def test_coboundary_of_every_endomorphism_is_a_cocycle(name):
    tensor = build_from_name(name).tensor
    d = tensor.dim
    for a in range(d):
        for b in range(d):
            rows = [[1 if (r, c) == (a, b) else 0 for c in range(d)] for r in range(d)]
            assert is_cocycle(tensor, coboundary_of(tensor, ExactMatrix.from_rows(rows))), (a, b)


def test_non_cocycle_is_rejected():
    tensor = build("R3", 4).tensor
    phi = Cochain2.from_entries(tensor.dim, {(0, 0): {0: 1}})
    assert not is_cocycle(tensor, phi)
    assert d2_apply(tensor, phi, 4, 0, 0) == [-1, 0, 0, 0, 0]
    with pytest.raises(NotCocycle):
        classes_independent(tensor, [phi])


def test_dependent_classes():
    tensor = build("R3", 5).tensor
    xi = representative_cocycle("R3", 5, "xi")
    boundary = coboundary_space(tensor).cochains(tensor.dim)[0]
    assert classes_independent(tensor, [xi])
    assert not classes_independent(tensor, [xi, xi + boundary])
    assert not classes_independent(tensor, [boundary])


@pytest.mark.parametrize(
    "key, n, which, params",
    [
        ("R2", 4, "psi2", {"alpha": 0}),
        ("R2", 4, "psi4", {"alpha": -1}),
        ("R2", 5, "toward_r3", {"alpha": 1}),
        ("R3", 5, "nope", {}),
    ],
)
def test_undefined_representatives(key, n, which, params):
    with pytest.raises(Undefined):
        representative_cocycle(key, n, which, params)


@pytest.mark.parametrize("key, n, params", [("R4", 3, {}), ("NF", 4, {}), ("RL1", 5, {})])
def test_unlisted_bases(key, n, params):
    with pytest.raises(Undefined):
        list_representatives(key, n, params)


def test_non_leibniz_input():
    tensor = StructureTensor.from_products(1, {(0, 0): {0: 1}})
    with pytest.raises(NotLeibniz):
        derivation_space(tensor)
    with pytest.raises(NotLeibniz):
        cocycle_space(tensor)


def test_cochain_dimension_must_match():
    tensor = build("NF", 3).tensor
    with pytest.raises(DimensionMismatch):
        d2_apply(tensor, Cochain2.zeros(2), 0, 0, 0)
