from unittest import mock

import numpy as np
import pytest

from rankmet.code import (
    RankCode,
    classify_one_weight,
    code_support,
    column_rank,
    dual,
    effective_code,
    effective_length,
    frobenius_closed_basis,
    generalized_rank_weight,
    generalized_rank_weights,
    generalized_rank_weights_by_definition,
    is_nondegenerate,
    is_one_weight,
    max_rank,
    min_rank_distance,
    random_code,
    rank_support,
    rank_weight,
    weight_distribution,
)
from rankmet.errors import (
    Degenerate,
    DimensionMismatch,
    FullSpace,
    InternalInconsistency,
    InvalidArgs,
)
from rankmet.gf import build_field
from rankmet.linalg import random_invertible, subspace_sum


def test_rank_weight(f8):
    assert rank_weight(f8, [1, 2, 4]) == 3
    assert rank_weight(f8, [1, 1, 0]) == 1
    assert rank_weight(f8, [0, 0, 0]) == 0
    assert rank_weight(f8, [2, 4, 6]) == 2


def test_rank_support_is_basis_independent(f8):
    v = [1, 3, 0, 6]
    default = rank_support(f8, v)
    for gamma in [(1, 3, 5), (2, 4, 1), (7, 6, 4)]:
        other = build_field(2, 1, 3, (1, 1, 0, 1), gamma=gamma)
        assert rank_support(other, v).key == default.key


def test_rank_support_of_sum_is_contained_in_sum_of_supports(f8):
    rng = np.random.default_rng(0)
    for _ in range(50):
        v, w = f8.GF(rng.integers(0, 8, size=(2, 4)))
        combined = subspace_sum(rank_support(f8, v), rank_support(f8, w))
        assert rank_support(f8, v + w).issubset(combined)
        assert rank_weight(f8, v + w) <= rank_weight(f8, v) + rank_weight(f8, w)


def test_sample_code_weights(sample_code):
    distribution = weight_distribution(sample_code)
    assert distribution.counts == (1, 7, 0, 56, 0)
    assert distribution.min_distance == 1
    assert distribution.max_weight == 3
    assert min_rank_distance(sample_code, cross_check=True) == 1
    assert max_rank(sample_code) == 3
    assert not is_one_weight(sample_code)


def test_sample_code_is_nondegenerate(sample_code):
    report = is_nondegenerate(sample_code)
    assert report.nondegenerate
    assert report.column_rank == 4
    assert report.effective_length == 4
    assert report.dual_distance >= 2


def test_zero_augmented_code_is_degenerate(f8):
    code = RankCode(f8, [[1, 0, 0, 0, 0], [0, 1, 2, 4, 0]])
    report = is_nondegenerate(code)
    assert not report.nondegenerate
    assert report.effective_length == 4
    assert report.dual_distance == 1
    reduced = effective_code(code)
    assert reduced.n == 4
    assert weight_distribution(reduced).counts[:4] == weight_distribution(code).counts[:4]
    with pytest.raises(Degenerate):
        generalized_rank_weights(code)


def test_simplex_code(simplex_code):
    distribution = weight_distribution(simplex_code)
    assert distribution.counts == (1, 0, 15, 0, 0)
    assert is_one_weight(simplex_code)
    report = classify_one_weight(simplex_code)
    assert report.one_weight
    assert report.effective_length == report.expected_length == 4
    assert min_rank_distance(dual(simplex_code)) == 2


def test_dual(sample_code, f4):
    other = dual(sample_code)
    assert other.k == 2
    assert not np.any((sample_code.generator @ other.generator.T).view(np.ndarray))
    full = RankCode(f4, [[1, 0], [0, 1]])
    with pytest.raises(FullSpace, match="zero code"):
        dual(full)
    assert dual(full, allow_zero=True).k == 0
    assert weight_distribution(RankCode.zero(f4, 2)).min_distance == 3


def test_isometry_invariance(sample_code):
    rng = np.random.default_rng(11)
    expected = weight_distribution(sample_code).counts
    for _ in range(10):
        a = random_invertible(sample_code.ctx, 4, rng)
        assert weight_distribution(sample_code.times(a)).counts == expected


def test_times_rejects_extension_entries(sample_code):
    with pytest.raises(InvalidArgs, match="entries in F_q"):
        sample_code.times(sample_code.ctx.GF.Identity(4) * sample_code.ctx.GF(2))


def test_generalized_rank_weights(sample_code, simplex_code):
    assert generalized_rank_weights(sample_code) == (1, 4)
    assert generalized_rank_weights(simplex_code) == (2, 4)
    assert generalized_rank_weights_by_definition(sample_code) == (1, 4)
    assert generalized_rank_weights_by_definition(simplex_code) == (2, 4)


def test_generalized_rank_weight_from_hyperplane_sections(sample_code):
    assert generalized_rank_weight(sample_code, 1) == 1
    assert generalized_rank_weight(sample_code, 2) == 4
    with pytest.raises(InvalidArgs):
        generalized_rank_weight(sample_code, 3)


def test_generalized_rank_weights_cross_check(sample_code):
    assert generalized_rank_weights(sample_code, cross_check=True) == (1, 4)
    with mock.patch(
        "rankmet.code.generalized_rank_weights_by_definition", return_value=(1, 3)
    ):
        with pytest.raises(InternalInconsistency, match=r"differ from the definition \(1, 3\)"):
            generalized_rank_weights(sample_code, cross_check=True)


def test_generalized_rank_weights_cross_check_skipped_over_budget(sample_code, caplog):
    assert generalized_rank_weights(sample_code, budget=20, cross_check=True) == (1, 4)
    assert "skipping generalized weight cross-check" in caplog.text


def test_distance_lower_bound_from_support(f8):
    rng = np.random.default_rng(5)
    for _ in range(20):
        code = random_code(f8, 4, 2, rng)
        d = weight_distribution(code).min_distance
        assert d >= effective_length(code) - (code.k - 1) * f8.m


def test_random_nondegenerate_code(f4):
    code = random_code(f4, 4, 2, np.random.default_rng(1), nondegenerate=True)
    assert column_rank(code) == 4
    with pytest.raises(InvalidArgs, match="n > km"):
        random_code(f4, 5, 2, np.random.default_rng(1), nondegenerate=True)


def test_frobenius_closed_basis(sample_code, f8):
    assert frobenius_closed_basis(sample_code) is None
    closed = RankCode(f8, [[2, 2, 0, 0], [0, 0, 4, 4]])
    basis = frobenius_closed_basis(closed)
    assert basis.view(np.ndarray).tolist() == [[1, 1, 0, 0], [0, 0, 1, 1]]


def test_code_support(sample_code):
    assert code_support(sample_code).is_full


def test_invalid_generators(f8):
    with pytest.raises(InvalidArgs, match="not linearly independent"):
        RankCode(f8, [[1, 2, 3], [2, 4, 6]])
    with pytest.raises(InvalidArgs, match="exceeds length"):
        RankCode(f8, [[1], [2]])
    with pytest.raises(DimensionMismatch):
        RankCode(f8, [1, 2, 3])
