import numpy as np
import pytest

from rankmet.errors import BudgetExceeded, DimensionMismatch, InvalidArgs, NotContained
from rankmet.linalg import (
    BaseField,
    QuotientMap,
    all_combinations,
    enumerate_general_linear,
    enumerate_subspaces,
    full_space,
    gaussian_binomial,
    gaussian_count,
    intersection,
    normalize_projective,
    orthogonal_complement,
    projective_index,
    projective_points,
    random_invertible,
    rank,
    restrict_scalars,
    solve,
    span,
    subspace_ops,
    subspace_sum,
)


@pytest.mark.parametrize(
    ("a", "b", "Q", "expected"),
    [(4, 2, 2, 35), (3, 1, 4, 21), (4, 2, 4, 357), (2, 1, 8, 9), (5, 0, 3, 1), (5, 5, 3, 1)],
)
def test_gaussian_binomial(a, b, Q, expected):
    assert gaussian_binomial(a, b, Q) == expected


def test_gaussian_count():
    count = gaussian_count(4, 2, 2)
    assert (count.a, count.b, count.Q, count.value) == (4, 2, 2, 35)
    with pytest.raises(InvalidArgs):
        gaussian_count(2, 3, 2)


def test_gaussian_binomial_invalid():
    with pytest.raises(InvalidArgs):
        gaussian_binomial(2, 3, 2)
    with pytest.raises(InvalidArgs, match="not a prime power"):
        gaussian_binomial(3, 1, 6)


def test_enumerate_subspaces_visits_each_once(f4):
    subspaces = list(enumerate_subspaces(f4, 3, 2, BaseField.EXTENSION))
    assert len(subspaces) == 21
    assert len({sub.key for sub in subspaces}) == 21
    assert all(sub.dim == 2 for sub in subspaces)


def test_enumerate_subfield_subspaces(f8):
    subspaces = list(enumerate_subspaces(f8, 4, 2, BaseField.SUBFIELD))
    assert len(subspaces) == 35
    assert len(set(subspaces)) == 35


def test_enumeration_respects_budget(f4):
    with pytest.raises(BudgetExceeded, match="needs 21 steps, budget is 10") as exc_info:
        enumerate_subspaces(f4, 3, 2, BaseField.EXTENSION, budget=10)
    assert exc_info.value.required == gaussian_count(3, 2, 4).value


def test_projective_points_order(f8):
    points = projective_points(f8, 2)
    assert len(points) == 9
    assert points.view(np.ndarray).tolist()[0] == [1, 0]
    assert points.view(np.ndarray).tolist()[-1] == [0, 1]
    assert projective_index(f8, points).tolist() == list(range(9))
    lines = [sub.basis[0] for sub in enumerate_subspaces(f8, 2, 1)]
    assert np.array_equal(np.stack(lines), points)


def test_normalize_projective(f8):
    normalized = normalize_projective(f8, [[0, 3, 6], [2, 4, 0]])
    assert normalized.view(np.ndarray).tolist()[0][1] == 1
    assert normalized.view(np.ndarray).tolist()[1][0] == 1
    assert rank(np.concatenate([normalized[:1], f8.GF([[0, 3, 6]])])) == 1


def test_sum_and_intersection(f4):
    a = span(f4, [[1, 0, 0], [0, 1, 0]], BaseField.EXTENSION)
    b = span(f4, [[0, 1, 0], [0, 0, 1]], BaseField.EXTENSION)
    common = intersection(a, b)
    assert common.dim == 1
    assert common.contains([[0, 1, 0]])
    assert subspace_sum(a, b).is_full
    ops = subspace_ops(a, b)
    assert (ops.sum.dim, ops.intersection.dim, ops.contains) == (3, 1, False)
    with pytest.raises(NotContained):
        ops.quotient_map()


def test_subfield_span_rejects_extension_entries(f8):
    with pytest.raises(InvalidArgs, match="entries in F_q"):
        span(f8, [[1, 2]], BaseField.SUBFIELD)


def test_span_dimension_mismatch(f8):
    with pytest.raises(DimensionMismatch):
        span(f8, [[1, 0]], BaseField.EXTENSION, ambient_dim=3)


def test_orthogonal_complement(f8):
    line = span(f8, [[1, 1, 0]], BaseField.SUBFIELD)
    complement = orthogonal_complement(line)
    assert complement.dim == 2
    assert complement.contains([[1, 1, 0], [0, 0, 1]])


def test_restrict_scalars(f8):
    line = span(f8, [[1, 0]], BaseField.EXTENSION)
    restricted = restrict_scalars(line)
    assert restricted.base == BaseField.SUBFIELD
    assert (restricted.ambient_dim, restricted.dim) == (6, 3)


def test_quotient_map(f4):
    quotient = QuotientMap(
        source=full_space(f4, 3, BaseField.EXTENSION),
        kernel=span(f4, [[1, 0, 0]], BaseField.EXTENSION),
    )
    assert quotient.dim == 2
    assert quotient([[1, 2, 3]]).view(np.ndarray).tolist() == [[2, 3]]
    assert quotient([[3, 0, 0]]).view(np.ndarray).tolist() == [[0, 0]]


def test_all_combinations(f8):
    combos = all_combinations(f8, [[1, 0], [0, 1]])
    assert combos.view(np.ndarray).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_solve(f8):
    a = f8.GF([[1, 0], [0, 1], [1, 1]])
    x = f8.GF([[2], [5]])
    assert np.array_equal(solve(a, a @ x), x)
    assert solve(a, f8.GF([[1], [0], [0]])) is None
    with pytest.raises(InvalidArgs):
        solve(f8.GF([[1, 1], [1, 1]]), f8.GF([[1], [1]]))


def test_general_linear_group_sizes(f8):
    assert len(list(enumerate_general_linear(f8, 2))) == 6
    matrices = list(enumerate_general_linear(f8, 3))
    assert len(matrices) == 168
    assert all(rank(a) == 3 for a in matrices)
    assert len({a.view(np.ndarray).tobytes() for a in matrices}) == 168


def test_random_invertible(f4):
    rng = np.random.default_rng(3)
    a = random_invertible(f4, 3, rng)
    assert rank(a) == 3
    assert set(a.view(np.ndarray).ravel().tolist()) <= {0, 1}
