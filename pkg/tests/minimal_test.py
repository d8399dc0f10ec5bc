from fractions import Fraction
from unittest import mock

import numpy as np
import pytest

from rankmet.code import (
    RankCode,
    classify_one_weight,
    column_rank,
    effective_length,
    generalized_rank_weights,
    random_code,
    rank_support,
    rank_weight,
    weight_distribution,
)
from rankmet.errors import (
    DimensionMismatch,
    HypothesisViolated,
    InternalInconsistency,
    InvalidArgs,
    NotMinimalInput,
)
from rankmet.geometry import hyperplane_section, linear_set, linearity_index, phi
from rankmet.gf import build_field, field_from_order
from rankmet.linalg import BaseField, enumerate_subspaces, projective_points, random_invertible
from rankmet.minimal import (
    ExistenceRegion,
    MinimalityMethod,
    SearchStrategy,
    ab_condition,
    bounds_ledger,
    construct_k_minus_1_m,
    construct_scattered_633,
    construct_simplex,
    cutting_witness,
    existence_bound,
    existence_region,
    extend_minimal,
    hyperplane_point_counts,
    is_linear_cutting_blocking_set,
    is_minimal,
    k_minus_1_m_characterization,
    minimal_from_scattered,
    search_minimal,
    verify_witness,
)


@pytest.fixture
def full_space(f4):
    return RankCode(f4, [[1, 0], [0, 1]])


@pytest.mark.parametrize("method", list(MinimalityMethod))
def test_sample_code_is_minimal(sample_code, method):
    report = is_minimal(sample_code, method)
    assert report.verdict
    assert report.method == method
    assert report.witness is None


def test_methods_agree_under_cross_check(sample_code, simplex_code, full_space):
    assert is_minimal(sample_code, cross_check=True).verdict
    assert is_minimal(simplex_code, cross_check=True).verdict
    assert not is_minimal(full_space, cross_check=True).verdict


@pytest.mark.parametrize("method", list(MinimalityMethod))
def test_full_space_is_not_minimal(full_space, method):
    report = is_minimal(full_space, method)
    assert not report.verdict
    assert verify_witness(full_space, report)


def test_cutting_witness_is_a_message_outside_the_normal(full_space):
    report = is_minimal(full_space, MinimalityMethod.CUTTING)
    normal = report.witness.hyperplane
    message = cutting_witness(phi(full_space), normal)
    assert np.linalg.matrix_rank(np.stack([message, normal])) == 2


def test_one_dimensional_codes_are_minimal(f8):
    code = RankCode(f8, [[1, 2, 4]])
    for method in MinimalityMethod:
        assert is_minimal(code, method).verdict


def test_degenerate_code_is_judged_on_its_effective_code(f8):
    code = RankCode(f8, [[1, 0, 0, 0, 0], [0, 1, 2, 4, 0]])
    assert is_minimal(code, cross_check=True).verdict


def test_verify_witness_rejects_proportional_pairs(full_space):
    report = is_minimal(full_space, MinimalityMethod.PAIRWISE)
    witness = report.witness
    forged = type(report)(
        verdict=False,
        method=report.method,
        witness=type(witness)(
            contained=witness.container,
            container=witness.container,
            contained_message=witness.container_message,
            container_message=witness.container_message,
        ),
    )
    assert not verify_witness(full_space, forged)


def test_linear_cutting_blocking_set(sample_code, full_space):
    report = is_linear_cutting_blocking_set(phi(sample_code))
    assert report.cutting
    assert report.min_section_dim == 1
    assert not is_linear_cutting_blocking_set(phi(full_space)).cutting


def test_hyperplane_point_counts(sample_code):
    normals, counts = hyperplane_point_counts(phi(sample_code))
    assert len(normals) == 9
    assert counts.tolist() == [1] * 9


@pytest.mark.parametrize(
    ("n", "k", "m", "expected"),
    [
        (3, 2, 3, ExistenceRegion.NONEXISTENT),
        (7, 2, 3, ExistenceRegion.NONEXISTENT),
        (4, 2, 3, ExistenceRegion.GUARANTEED),
        (5, 3, 3, ExistenceRegion.OPEN),
        (6, 3, 3, ExistenceRegion.OPEN),
        (7, 3, 3, ExistenceRegion.GUARANTEED),
        (6, 3, 4, ExistenceRegion.OPEN),
        (8, 3, 4, ExistenceRegion.GUARANTEED),
    ],
)
def test_existence_region(n, k, m, expected):
    assert existence_region(n, k, m) == expected


def test_ab_condition():
    assert ab_condition(2, 3, 4, 3)
    assert not ab_condition(2, 3, 4, 2)
    assert not ab_condition(2, 3, 4, 1)


def test_bounds_ledger_of_the_sample_code(sample_code):
    ledger = bounds_ledger(sample_code)
    assert (ledger.n, ledger.k, ledger.d, ledger.w_rk) == (4, 2, 1, 3)
    assert ledger.linearity_index == 1
    assert ledger.minimal
    assert ledger.n_ge_k_plus_m_minus_1
    assert ledger.wmax_le_n_minus_k_plus_1
    assert ledger.hyperplane_size_ge_q_pow_k_minus_1
    assert ledger.sufficiency_n_ge_km_minus_m_plus_1
    assert ledger.gen_lower_bound_ok is None
    assert not ledger.ab_condition_holds
    assert ledger.existence_region == ExistenceRegion.GUARANTEED
    assert ledger.k_minus_1_m is None


def test_bounds_ledger_of_the_full_space(full_space):
    ledger = bounds_ledger(full_space)
    assert not ledger.minimal
    assert not ledger.n_ge_k_plus_m_minus_1
    assert ledger.existence_region == ExistenceRegion.NONEXISTENT


def test_bounds_ledger_uses_the_effective_code(f8):
    ledger = bounds_ledger(RankCode(f8, [[1, 0, 0, 0, 0], [0, 1, 2, 4, 0]]))
    assert ledger.n == 4


def test_bounds_ledger_rejects_the_zero_code(f8):
    with pytest.raises(InvalidArgs):
        bounds_ledger(RankCode.zero(f8, 3))


def test_construct_simplex(f8):
    code = construct_simplex(f8, 2)
    assert (code.n, code.k) == (6, 2)
    assert weight_distribution(code).nonzero_weights == (3,)
    assert is_minimal(code).verdict
    with pytest.raises(InvalidArgs):
        construct_simplex(f8, 0)
    with pytest.raises(InvalidArgs, match="does not generate"):
        construct_simplex(f8, 2, alpha=1)


def test_extend_minimal(sample_code):
    extended = extend_minimal(sample_code, [1, 1], check=True)
    assert (extended.n, extended.k) == (5, 2)
    assert is_minimal(extended).verdict


def test_extend_minimal_rejects_bad_input(sample_code, full_space):
    with pytest.raises(NotMinimalInput):
        extend_minimal(full_space, [1, 1])
    with pytest.raises(DimensionMismatch):
        extend_minimal(sample_code, [1, 1, 1])


def test_construct_k_minus_1_m(f8):
    code = construct_k_minus_1_m(f8, 3)
    assert (code.n, code.k) == (6, 3)
    assert linearity_index(phi(code), cross_check=False).direct == 0
    assert generalized_rank_weights(code)[1] == 4
    assert all(k_minus_1_m_characterization(code).values())
    assert bounds_ledger(code).k_minus_1_m is not None


def test_construct_k_minus_1_m_needs_m_at_least_three(f4, f8):
    with pytest.raises(HypothesisViolated, match="m >= 3") as info:
        construct_k_minus_1_m(f4, 3)
    assert "has ℓ = 1" in info.value.message
    with pytest.raises(HypothesisViolated, match="ℓ = 2"):
        construct_k_minus_1_m(f4, 4)
    with pytest.raises(HypothesisViolated, match="No nondegenerate"):
        construct_k_minus_1_m(build_field(2, 1, 1), 3)
    with pytest.raises(InvalidArgs):
        construct_k_minus_1_m(f8, 2)


def test_construct_k_minus_1_m_rejects_a_certificate_below_k_minus_2(f4):
    with mock.patch(
        "rankmet.minimal.linearity_index", return_value=mock.Mock(direct=0)
    ):
        with pytest.raises(InternalInconsistency, match="linearity index 0 < k-2 = 1"):
            construct_k_minus_1_m(f4, 3)


def test_scattered_633_example():
    example = construct_scattered_633()
    assert (example.system.n, example.system.k) == (6, 3)
    assert (example.code.n, example.code.k) == (6, 3)
    assert example.condition_hits == 0
    assert minimal_from_scattered(example.system).verdict


def test_minimal_from_scattered_hypotheses(sample_code):
    with pytest.raises(HypothesisViolated, match="k = 3"):
        minimal_from_scattered(phi(sample_code))


def test_existence_bound():
    assert existence_bound(2, 2, 4, 2) == 217
    assert existence_bound(2, 3, 3, 2) == Fraction(73 - 1032)
    with pytest.raises(InvalidArgs):
        existence_bound(2, 2, 1, 2)
    with pytest.raises(InvalidArgs):
        existence_bound(6, 2, 4, 2)


def test_exhaustive_search_finds_a_minimal_code():
    result = search_minimal(2, 2, 3, 2)
    assert result.code is not None
    assert result.report.verdict
    assert result.strategy == SearchStrategy.EXHAUSTIVE
    assert result.examined >= 1
    assert is_minimal(result.code, cross_check=True).verdict


def test_search_outside_the_necessary_bounds():
    result = search_minimal(2, 3, 3, 2)
    assert result.code is None
    assert result.examined == 0
    assert result.certificate["bounds"]["n_ge_k_plus_m_minus_1"] is False
    assert result.bound < 0


def test_random_search():
    result = search_minimal(2, 3, 4, 2, strategy=SearchStrategy.RANDOM, trials=50, seed=1)
    assert result.strategy == SearchStrategy.RANDOM
    assert 1 <= result.examined <= 50
    if result.code is None:
        assert result.certificate["reason"] == "trial budget exhausted"
    else:
        assert is_minimal(result.code, MinimalityMethod.PAIRWISE).verdict


def test_random_search_needs_trials():
    with pytest.raises(InvalidArgs, match="trial"):
        search_minimal(2, 3, 4, 2, strategy=SearchStrategy.RANDOM, trials=0)


def test_degenerate_code_with_a_repeated_support_is_rejected_by_every_method(f8):
    code = RankCode(f8, [[1, 0, 0, 0], [2, 0, 1, 0]])
    for method in MinimalityMethod:
        assert not is_minimal(code, method).verdict
    assert not is_minimal(code, cross_check=True).verdict


@pytest.mark.parametrize(("n", "count"), [(3, 21), (4, 357)])
def test_minimality_methods_agree_on_every_two_dimensional_code(f4, n, count):
    m, k = f4.m, 2
    seen = 0
    for sub in enumerate_subspaces(f4, n, k, BaseField.EXTENSION):
        code = RankCode(f4, sub.basis)
        verdicts = {method: is_minimal(code, method).verdict for method in MinimalityMethod}
        assert len(set(verdicts.values())) == 1, verdicts
        verdict = verdicts[MinimalityMethod.PAIRWISE]
        length = effective_length(code)
        if verdict:
            assert length >= k + m - 1
            assert weight_distribution(code).max_weight <= length - k + 1
        if length >= (k - 1) * m + 1:
            assert verdict
        seen += 1
    assert seen == count


@pytest.mark.parametrize("method", list(MinimalityMethod))
def test_scattered_633_code_is_minimal_by_every_method(scattered_633, method):
    assert is_minimal(scattered_633.code, method).verdict


def test_scattered_633_system(scattered_633):
    points = linear_set(scattered_633.system)
    assert points.size == 63
    assert set(points.weights.tolist()) == {1}
    assert is_linear_cutting_blocking_set(scattered_633.system).cutting


@pytest.mark.parametrize(
    ("q", "m", "k"),
    [(q, m, k) for q in (2, 3) for m in (2, 3) for k in (2, 3) if q ** (m * k) <= 10**5],
)
def test_simplex_codes(q, m, k):
    ctx = field_from_order(q, m)
    code = construct_simplex(ctx, k)
    assert code.n == k * m
    assert column_rank(code) == code.n
    assert weight_distribution(code).nonzero_weights == (m,)
    # columns 0 and k are e_1 and α·e_1
    word = ctx.GF.Zeros(code.n)
    word[0] = ctx.generator
    word[k] = -ctx.GF(1)
    assert not np.any(code.generator @ word)
    assert rank_weight(ctx, word) == 2
    assert is_minimal(code).verdict


def test_one_weight_codes_have_effective_length_km(f8):
    rng = np.random.default_rng(7)
    simplex = construct_simplex(f8, 2)
    for _ in range(10):
        report = classify_one_weight(simplex.times(random_invertible(f8, simplex.n, rng)))
        assert report.one_weight
        assert report.effective_length == 6
    for _ in range(10):
        report = classify_one_weight(random_code(f8, 4, 2, rng))
        assert not report.one_weight or report.effective_length == 6


@pytest.mark.parametrize(
    ("q", "m", "k"),
    [(q, m, k) for q in (2, 3, 4) for m in (2, 3, 4) for k in (2, 3, 4)],
)
def test_existence_bound_is_positive_at_n_equal_2k_plus_m_minus_2(q, m, k):
    assert existence_bound(q, m, 2 * k + m - 2, k) > 0


def test_exhaustive_search_at_the_first_positive_bound():
    result = search_minimal(2, 2, 4, 2)
    assert result.bound == 217
    assert result.code is not None
    assert (result.code.n, result.code.k) == (4, 2)
    assert is_minimal(result.code, cross_check=True).verdict


@pytest.mark.parametrize("ctx_name", ["f4", "f8"])
def test_supports_reverse_the_inclusion_of_hyperplane_sections(request, ctx_name):
    ctx = request.getfixturevalue(ctx_name)
    rng = np.random.default_rng(11)
    points = projective_points(ctx, 2)
    for _ in range(10):
        n = int(rng.integers(2, 2 * ctx.m + 1))
        code = random_code(ctx, n, 2, rng, nondegenerate=True)
        system = phi(code)
        supports = [rank_support(ctx, point @ code.generator) for point in points]
        sections = [hyperplane_section(system, point) for point in points]
        for i in range(len(points)):
            for j in range(len(points)):
                assert supports[i].issubset(supports[j]) == sections[j].issubset(sections[i])
