from fractions import Fraction

import pytest

from core.errors import DisagreementError, RetryExhausted, SpecializationDegenerate
from core.graph_cache import GraphCache
from core.invariants import (
    InvariantEngine,
    InvariantKind,
    InvariantRequest,
    compute,
    sample_specialization,
    sum_contributions,
)
from core.localization import ClassSelector, TorusSpec


def test_sampling_is_deterministic():
    assert sample_specialization(0, 0) == sample_specialization(0, 0)
    assert sample_specialization(0, 0) != sample_specialization(0, 1)
    assert sample_specialization(0, 0) != sample_specialization(1, 0)


def test_samples_are_distinct_and_bounded():
    for attempt in range(50):
        spec = sample_specialization(11, attempt)
        assert len(set(spec.lam)) == 4
        assert all(abs(x) <= 10 ** 6 for x in spec.lam)


@pytest.mark.parametrize("degree,kind,expected", [
    (1, InvariantKind.CONTACT, 2),
    (2, InvariantKind.CONTACT, 40),
    (3, InvariantKind.CONTACT, 4160),
    (1, InvariantKind.GW_LINES, 2),
    (2, InvariantKind.GW_LINES, 92),
    (3, InvariantKind.GW_LINES, 80160),
])
def test_published_values(graph_classes, degree, kind, expected):
    result = compute(InvariantRequest(degree, kind), seed=0, classes=graph_classes(degree))
    assert result.value == expected
    assert result.is_integer
    assert result.matches_reference is True
    assert len(result.specializations_used) == 2


@pytest.mark.parametrize("kind,expected", [
    (InvariantKind.CONTACT, 1089024),
    (InvariantKind.GW_LINES, 383306880),
])
def test_degree_four_values(graph_classes, kind, expected):
    result = compute(InvariantRequest(4, kind), seed=0, classes=graph_classes(4))
    assert result.value == expected
    assert result.graph_class_count == 756


def test_scale_invariance(graph_classes):
    classes = graph_classes(3)
    selector = ClassSelector.contact(3)
    w = sample_specialization(4, 0)
    assert sum_contributions(classes, w, selector) == sum_contributions(classes, w.scaled(7), selector)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_independent_specializations_agree(graph_classes, seed):
    result = compute(InvariantRequest(2, InvariantKind.GW_LINES), seed=seed, min_agreement=4,
                     classes=graph_classes(2))
    assert result.value == 92
    assert len(set(result.specializations_used)) == 4


def test_same_seed_same_result(graph_classes):
    request = InvariantRequest(3, InvariantKind.CONTACT)
    first = compute(request, seed=9, classes=graph_classes(3))
    second = compute(request, seed=9, classes=graph_classes(3))
    assert first.value == second.value
    assert first.specializations_used == second.specializations_used
    assert first.to_dict(timing=False) == second.to_dict(timing=False)


def test_parallel_matches_sequential(graph_classes):
    classes = graph_classes(3)
    selector = ClassSelector.gw_lines(3)
    w = sample_specialization(0, 0)
    assert sum_contributions(classes, w, selector, threads=3) == sum_contributions(classes, w, selector)


def test_explicit_specialization_used_first(graph_classes):
    explicit = TorusSpec.from_values([0, 1, 2, 3])
    result = compute(InvariantRequest(1), seed=0, classes=graph_classes(1), explicit_specs=[explicit])
    assert result.value == 2
    assert result.specializations_used[0] == explicit


def test_degenerate_explicit_specialization_raises(graph_classes):
    # (l0 + l2)/2 = l1 on a doubled edge
    with pytest.raises(SpecializationDegenerate):
        compute(InvariantRequest(2), classes=graph_classes(2),
                explicit_specs=[TorusSpec.from_values([0, 1, 2, 3])])


def test_retry_budget_exhausted(graph_classes, monkeypatch):
    monkeypatch.setattr("core.invariants.sample_specialization",
                        lambda seed, attempt: TorusSpec.from_values([0, 1, 2, 3]))
    with pytest.raises(RetryExhausted):
        compute(InvariantRequest(2), classes=graph_classes(2), retry_budget=5)


def test_degenerate_samples_are_skipped(graph_classes, monkeypatch):
    from core import invariants

    original = invariants.sample_specialization

    def flaky(seed, attempt):
        if attempt < 3:
            return TorusSpec.from_values([0, 1, 2, 3])
        return original(seed, attempt)

    monkeypatch.setattr(invariants, "sample_specialization", flaky)
    result = compute(InvariantRequest(2), classes=graph_classes(2))
    assert result.value == 40
    assert TorusSpec.from_values([0, 1, 2, 3]) not in result.specializations_used


def test_disagreement_detected(graph_classes, monkeypatch):
    from core import invariants

    calls = iter([Fraction(40), Fraction(41)])
    monkeypatch.setattr(invariants, "sum_contributions", lambda *args, **kwargs: next(calls))
    with pytest.raises(DisagreementError):
        compute(InvariantRequest(2), classes=graph_classes(2))


def test_unbalanced_custom_selector_is_not_constant(graph_classes):
    request = InvariantRequest(1, InvariantKind.CUSTOM, ClassSelector(5, False))
    with pytest.raises(DisagreementError):
        compute(request, classes=graph_classes(1), min_agreement=2)


def test_request_validation():
    with pytest.raises(ValueError):
        InvariantRequest(0)
    with pytest.raises(ValueError):
        InvariantRequest(2, InvariantKind.CUSTOM)
    with pytest.raises(ValueError):
        compute(InvariantRequest(1), min_agreement=1)
    assert InvariantKind.parse("gw-lines") is InvariantKind.GW_LINES


def test_result_json_schema(graph_classes):
    result = compute(InvariantRequest(2), classes=graph_classes(2))
    document = result.to_dict()
    assert document["degree"] == 2
    assert document["kind"] == "contact"
    assert document["value"] == {"num": "40", "den": "1"}
    assert document["is_integer"] is True
    assert document["graph_classes"] == 30
    assert all(len(spec) == 4 and all(isinstance(x, str) for x in spec) for spec in document["specializations"])
    assert "elapsed_ms" in document
    assert "elapsed_ms" not in result.to_dict(timing=False)


def test_engine_uses_cache(tmp_path):
    engine = InvariantEngine(cache=GraphCache(tmp_path))
    result = engine.compute(InvariantRequest(2, InvariantKind.GW_LINES))
    assert result.value == 92
    assert (tmp_path / "graphs_d2.json").exists()


@pytest.mark.slow
def test_degree_five_properties():
    classes = GraphCache(enabled=False).get_graphs(5)
    for kind in (InvariantKind.CONTACT, InvariantKind.GW_LINES):
        result = compute(InvariantRequest(5, kind), seed=0, min_agreement=3, classes=classes, threads=4)
        w = result.specializations_used[0]
        selector = InvariantRequest(5, kind).selector()
        assert sum_contributions(classes, w.scaled(7), selector) == result.value
        assert result.reference is None
        assert isinstance(result.is_integer, bool)
