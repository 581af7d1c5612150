import random
from fractions import Fraction

import pytest

from leibniz_lab.algebra import Algebra, StructureTensor, apply_basis_change
from leibniz_lab.catalog import build, build_from_name
from leibniz_lab.data import expected_values as expected
from leibniz_lab.errors import DimensionMismatch, NotLeibniz, PreconditionError
from leibniz_lab.linalg import ExactMatrix
from leibniz_lab.services.invariants import (
    REASON_NOT_PROPORTIONAL,
    REASON_TOO_FEW_SAMPLES,
    REASON_TRACE_ZERO,
    STATUS_PASS,
    STATUS_UNKNOWN,
    VERDICT_POSSIBLE,
    VERDICT_RULED_OUT,
    c11_exact,
    cij_sampled,
    degeneration_report,
    orbit_dim,
    trace_form,
)


@pytest.mark.parametrize(
    "name, value",
    [
        ("RNF(4)", Fraction(10, 3)),
        ("R1(4)", Fraction(49, 15)),
        ("R2(4,alpha=1/2)", Fraction(289, 87)),
        ("R2(5,alpha=1/2)", Fraction(169, 42)),
        ("R3(5)", Fraction(5, 3)),
        ("R4(4)", Fraction(1, 3)),
        ("R4(5)", Fraction(1, 7)),
        ("R4(6)", Fraction(1)),
        ("R5(6,a4=1)", Fraction(5)),
        ("RL1(5)", Fraction(72, 17)),
        ("RL1(4)", Fraction(45, 13)),
        ("RL2(5,beta=1)", Fraction(72, 17)),
        ("RL3(4,j=4)", Fraction(32, 9)),
        ("RL3(5,j=4)", Fraction(72, 17)),
        ("RL3(5,j=5)", Fraction(13, 3)),
    ],
)
def test_c11_values(name, value):
    result = c11_exact(build_from_name(name).tensor)
    assert result.defined
    assert result.value == value
    assert result.render() == str(value)


@pytest.mark.parametrize("n", range(4, 9))
def test_c11_matches_closed_forms(n):
    for key, params in expected.table_cases(n):
        result = c11_exact(build(key, n, params).tensor)
        wanted = expected.expected_c11(key, n, params)
        assert result.defined == (wanted is not None), (key, params)
        assert result.value == wanted, (key, params)


@pytest.mark.parametrize("n", range(4, 7))
def test_r2_coincidences(n):
    for key, params, other in expected.coincidence_pairs(n):
        assert c11_exact(build(key, n, params).tensor) == c11_exact(build(other, n).tensor)


@pytest.mark.parametrize("name", ["NF(4)", "F1g(5)", "abelian(3)", "R3(3)"])
def test_c11_trace_zero(name):
    result = c11_exact(build_from_name(name).tensor)
    assert not result.defined
    assert result.reason == REASON_TRACE_ZERO
    assert result.render() == f"undefined ({REASON_TRACE_ZERO})"


def _two_torus() -> StructureTensor:
    # two copies of [e1, e2] = e1, [e2, e1] = -e1
    return StructureTensor.from_products(
        4,
        {(0, 1): {0: 1}, (1, 0): {0: -1}, (2, 3): {2: 1}, (3, 2): {2: -1}},
    )


def test_c11_not_proportional():
    tensor = _two_torus()
    form = trace_form(tensor)
    assert form.tau == (0, 1, 0, 1)
    assert form.kappa[1][3] == 0
    result = c11_exact(tensor)
    assert not result.defined
    assert result.reason == REASON_NOT_PROPORTIONAL
    sampled = cij_sampled(tensor, 1, 1)
    assert not sampled.defined
    assert sampled.not_invariant


def test_c21_of_null_filiform_extension():
    result = cij_sampled(build("RNF", 4).tensor, 2, 1)
    assert result.defined
    assert result.value == 10


def test_sampling_is_seeded(monkeypatch):
    tensor = build("R2", 4, {"alpha": Fraction(1, 2)}).tensor
    monkeypatch.setenv("LEIBNIZ_SEED", "7")
    first = cij_sampled(tensor, 1, 2)
    monkeypatch.setenv("LEIBNIZ_SEED", "7")
    assert cij_sampled(tensor, 1, 2) == first


@pytest.mark.parametrize("n", range(3, 7))
def test_sampled_c11_agrees_with_exact(n):
    for key, params in [("NF", {}), ("RNF", {}), ("F2g", {})] + expected.table_cases(n):
        tensor = build(key, n, params).tensor
        exact = c11_exact(tensor)
        sampled = cij_sampled(tensor, 1, 1)
        assert sampled.defined == exact.defined, (key, params)
        assert sampled.value == exact.value, (key, params)


def test_trace_zero_samples_are_skipped():
    result = cij_sampled(build("NF", 4).tensor, 1, 1)
    assert result.reason == REASON_TOO_FEW_SAMPLES


@pytest.mark.parametrize("i, j, samples", [(0, 1, 12), (1, -2, 12), (1, 1, 0)])
def test_cij_preconditions(i, j, samples):
    with pytest.raises(PreconditionError):
        cij_sampled(build("RNF", 3).tensor, i, j, samples=samples)


def _random_change(rng: random.Random, d: int) -> tuple[ExactMatrix, ExactMatrix]:
    g = ExactMatrix.identity(d)
    g_inverse = ExactMatrix.identity(d)
    for _ in range(2 * d):
        a, b = rng.sample(range(d), 2)
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        step = [[Fraction(int(r == s)) for s in range(d)] for r in range(d)]
        undo = [row[:] for row in step]
        step[a][b] = c
        undo[a][b] = -c
        g = ExactMatrix.from_rows(step) @ g
        g_inverse = g_inverse @ ExactMatrix.from_rows(undo)
    scales = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4)) for _ in range(d)]
    g = ExactMatrix.diagonal(scales) @ g
    g_inverse = g_inverse @ ExactMatrix.diagonal([1 / s for s in scales])
    return g, g_inverse


@pytest.mark.parametrize("name", ["RNF(4)", "R2(4,alpha=1/2)", "R4(5)", "RL3(5,j=4)", "NF(4)"])
def test_c11_is_a_basis_change_invariant(name):
    tensor = build_from_name(name).tensor
    rng = random.Random(2024)
    original = c11_exact(tensor)
    for _ in range(20):
        g, g_inverse = _random_change(rng, tensor.dim)
        changed = apply_basis_change(tensor, g, g_inverse)
        assert c11_exact(changed) == original


@pytest.mark.parametrize("name, value", [("RNF(4)", 23), ("R3(5)", 33), ("abelian(3)", 0)])
def test_orbit_dimension(name, value):
    assert orbit_dim(build_from_name(name).tensor) == value


def test_report_for_a_known_degeneration():
    report = degeneration_report(build("RNF", 4), build("R2", 4, {"alpha": 1}))
    assert report.verdict == VERDICT_POSSIBLE
    assert report.failures == []
    assert report.condition("der").status == STATUS_PASS
    assert report.condition("c11").status == STATUS_PASS
    assert report.condition("nilradical").status == STATUS_PASS
    assert report.condition("lie").status == STATUS_UNKNOWN
    payload = report.as_dict()
    assert payload["verdict"] == VERDICT_POSSIBLE
    assert payload["conditions"][0] == {"condition": "der", "status": "pass", "lhs": 2, "rhs": 3}


def _candidates(n):
    cases = [("RNF", {}), ("R1", {}), ("R3", {}), ("R4", {}), ("R5", {}), ("R5", {"a4": 1}), ("RL1", {})]
    cases += [("R2", {"alpha": alpha}) for alpha in expected.r2_samples(n)]
    if n % 2 == 1 and n >= 5:
        cases.append(("RL2", {"beta": 1}))
    cases += [("RL3", {"j": j}) for j in range(4, n + 1)]
    return cases


@pytest.mark.parametrize("n", [4, 5, 6])
@pytest.mark.parametrize("target", [("R3", {}), ("R4", {}), ("R2", {"alpha": Fraction(1, 2)})])
def test_candidates_cannot_reach_the_component_algebras(n, target):
    key, params = target
    goal = build(key, n, params)
    for source_key, source_params in _candidates(n):
        source = build(source_key, n, source_params)
        if source.tensor == goal.tensor:
            continue
        report = degeneration_report(source, goal)
        assert report.verdict == VERDICT_RULED_OUT, source.name
        assert set(report.failures) & {"der", "c11"}, source.name


def test_report_preconditions():
    rnf = build("RNF", 4)
    with pytest.raises(DimensionMismatch):
        degeneration_report(rnf, build("RNF", 3))
    with pytest.raises(PreconditionError):
        degeneration_report(rnf, build("RNF", 4))
    broken = Algebra("broken", StructureTensor.from_products(5, {(0, 0): {0: 1}}), tuple("abcde"))
    with pytest.raises(NotLeibniz):
        degeneration_report(rnf, broken)


def test_nilradical_unknown_without_metadata():
    source = build("R2", 4, {"alpha": 1})
    target = Algebra("abelian", StructureTensor.zeros(5), tuple("abcde"))
    report = degeneration_report(source, target)
    assert report.condition("nilradical").status == STATUS_UNKNOWN
    assert report.verdict == VERDICT_POSSIBLE
