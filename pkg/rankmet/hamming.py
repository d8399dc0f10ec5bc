"""Hamming-metric codes over F_{q^m} and the code associated with a rank-metric code.

The associated code has one column per point of the linear set L_U, repeated
(q^{wt(P)} - 1)/(q - 1) times, points in projective_points order.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

import galois
import numpy as np

from .code import RankCode, generalized_rank_weights, weight_distribution
from .config import check_budget, resolve_budget
from .errors import DimensionMismatch, InternalInconsistency, InvalidArgs
from .gf import FieldCtx
from .geometry import QSystem, linear_set, phi
from .linalg import BaseField, enumerate_subspaces, projective_points, rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProjSystem:
    """Points of PG(k-1, q^m) with positive multiplicities, spanning the space."""

    ctx: FieldCtx = field(repr=False)
    k: int
    points: galois.FieldArray = field(repr=False)
    multiplicities: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.points) != len(self.multiplicities):
            raise DimensionMismatch("Every point needs a multiplicity")
        if np.any(self.multiplicities < 1):
            raise InvalidArgs("Multiplicities must be positive")
        if rank(self.points) != self.k:
            raise InvalidArgs("Points do not span the ambient space")

    @property
    def length(self) -> int:
        return int(self.multiplicities.sum())

    def entries(self) -> list[dict[str, Any]]:
        return [
            {"point": point, "multiplicity": multiplicity}
            for point, multiplicity in zip(
                self.points.view(np.ndarray).tolist(),
                self.multiplicities.tolist(),
                strict=True,
            )
        ]


@dataclass(frozen=True, eq=False)
class HammingCode:
    """An [N, k] code over F_{q^m} in the Hamming metric."""

    ctx: FieldCtx = field(repr=False)
    generator: galois.FieldArray

    def __post_init__(self):
        generator = self.ctx.elements(self.generator)
        if generator.ndim != 2 or rank(generator) != generator.shape[0]:
            raise InvalidArgs("Generator must be a matrix of full row rank")
        object.__setattr__(self, "generator", generator)

    @property
    def length(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def zero_columns(self) -> int:
        return int(np.sum(~np.any(self.generator.view(np.ndarray) != 0, axis=0)))

    @property
    def nondegenerate(self) -> bool:
        return self.zero_columns == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "metric": "hamming",
            "field": self.ctx.to_json(),
            "n": self.length,
            "k": self.k,
            "generator": self.generator.view(np.ndarray).tolist(),
        }


def ext_h(system: QSystem, budget: int | None = None) -> ProjSystem:
    points = linear_set(system, budget)
    result = ProjSystem(system.ctx, system.k, points.points, points.multiplicities)
    q = system.ctx.q
    if result.length != (q**system.n - 1) // (q - 1):
        raise InternalInconsistency(f"Projective system has length {result.length}")
    return result


def psi_h(points: ProjSystem) -> HammingCode:
    columns = np.repeat(points.points.view(np.ndarray), points.multiplicities, axis=0)
    return HammingCode(points.ctx, points.ctx.GF(columns.T))


def associated_code(code: RankCode, budget: int | None = None) -> HammingCode:
    """C^H, the Hamming-metric code of the linear set of phi(C)."""
    return psi_h(ext_h(phi(code), budget))


def as_hamming_code(code: RankCode) -> HammingCode:
    """The same generator read in the Hamming metric."""
    return HammingCode(code.ctx, code.generator)


def hamming_support(vectors: galois.FieldArray) -> np.ndarray:
    return vectors.view(np.ndarray) != 0


def _class_codewords(code: HammingCode, budget: int | None) -> galois.FieldArray:
    check_budget(code.ctx.order**code.k, budget, "codewords")
    messages = projective_points(code.ctx, code.k, BaseField.EXTENSION, budget=None)
    return messages @ code.generator


def hamming_weight_distribution(code: HammingCode, budget: int | None = None) -> tuple[int, ...]:
    counts = [0] * (code.length + 1)
    counts[0] = 1
    if code.k == 0:
        return tuple(counts)
    weights = hamming_support(_class_codewords(code, budget)).sum(axis=1)
    for weight, count in zip(*np.unique(weights, return_counts=True), strict=True):
        counts[int(weight)] += int(count) * (code.ctx.order - 1)
    return tuple(counts)


def hamming_min_distance(code: HammingCode, budget: int | None = None) -> int:
    counts = hamming_weight_distribution(code, budget)
    return next((j for j in range(1, len(counts)) if counts[j]), code.length + 1)


def rank_to_hamming_weight(q: int, n: int, i: int) -> int:
    return (q**n - q ** (n - i)) // (q - 1)


@dataclass(frozen=True)
class CorrespondenceReport:
    rank_counts: tuple[int, ...]
    hamming_counts: tuple[int, ...]
    length: int
    hamming_distance: int
    expected_distance: int
    holds: bool


def verify_weight_correspondence(
    code: RankCode, budget: int | None = None
) -> CorrespondenceReport:
    """A^H_j(C^H) = A^rk_i(C) for j = (q^n - q^{n-i})/(q-1), and 0 elsewhere."""
    q, n = code.ctx.q, code.n
    ranks = weight_distribution(code, budget)
    associated = associated_code(code, budget)
    hamming = hamming_weight_distribution(associated, budget)
    expected = [0] * (associated.length + 1)
    for i, count in enumerate(ranks.counts):
        if count:
            expected[rank_to_hamming_weight(q, n, i)] += count
    distance = hamming_min_distance(associated, budget)
    expected_distance = rank_to_hamming_weight(q, n, ranks.min_distance)
    holds = (
        tuple(expected) == hamming
        and associated.length == (q**n - 1) // (q - 1)
        and associated.k == code.k
        and distance == expected_distance
    )
    return CorrespondenceReport(
        rank_counts=ranks.counts,
        hamming_counts=hamming,
        length=associated.length,
        hamming_distance=distance,
        expected_distance=expected_distance,
        holds=holds,
    )


@dataclass(frozen=True, eq=False)
class HammingMinimalityReport:
    verdict: bool
    contained: galois.FieldArray | None = None
    container: galois.FieldArray | None = None


def _first_inclusion(supports: np.ndarray) -> tuple[int, int] | None:
    # (i, j) with supp_i ⊆ supp_j for distinct projective classes i != j
    outside = (~supports).astype(np.int64)
    inside = supports.astype(np.int64)
    included = (inside @ outside.T) == 0
    np.fill_diagonal(included, False)
    hits = np.argwhere(included)
    if len(hits) == 0:
        return None
    return int(hits[0][0]), int(hits[0][1])


def hamming_minimality_witness(
    code: HammingCode, budget: int | None = None
) -> HammingMinimalityReport:
    codewords = _class_codewords(code, budget)
    check_budget(len(codewords) ** 2, budget, "pairs of codeword classes")
    pair = _first_inclusion(hamming_support(codewords))
    if pair is None:
        return HammingMinimalityReport(verdict=True)
    return HammingMinimalityReport(
        verdict=False, contained=codewords[pair[0]], container=codewords[pair[1]]
    )


def is_hamming_minimal(code: HammingCode, budget: int | None = None) -> bool:
    return hamming_minimality_witness(code, budget).verdict


def find_hamming_minimal_isometry(
    code: RankCode, isometries: Iterable[galois.FieldArray], budget: int | None = None
) -> galois.FieldArray | None:
    """The first A among `isometries` with C·A Hamming-minimal, if any."""
    codewords = _class_codewords(as_hamming_code(code), budget)
    for a in isometries:
        if _first_inclusion(hamming_support(codewords @ a)) is None:
            return a
    return None


def generalized_hamming_weight(code: HammingCode, r: int, budget: int | None = None) -> int:
    """d^H_r = N - max number of columns inside a (k-r)-dimensional subspace."""
    if not 1 <= r <= code.k:
        raise InvalidArgs(f"Need 1 <= r <= k={code.k}, got r={r}")
    best = 0
    for sub in enumerate_subspaces(code.ctx, code.k, code.k - r, BaseField.EXTENSION, budget):
        if sub.is_full:
            inside = code.length
        else:
            inside = int(np.sum(~np.any((sub.annihilator @ code.generator).view(np.ndarray) != 0, axis=0)))
        best = max(best, inside)
    return code.length - best


def generalized_hamming_weights(code: HammingCode, budget: int | None = None) -> tuple[int, ...]:
    limit = resolve_budget(budget)
    return tuple(generalized_hamming_weight(code, r, limit) for r in range(1, code.k + 1))


@dataclass(frozen=True)
class GeneralizedCorrespondenceReport:
    rank_weights: tuple[int, ...]
    hamming_weights: tuple[int, ...]
    expected: tuple[int, ...]
    holds: bool


def verify_generalized_weight_correspondence(
    code: RankCode, budget: int | None = None
) -> GeneralizedCorrespondenceReport:
    """d^H_i(C^H) = (q^n - q^{n - d^rk_i(C)})/(q - 1) for every i."""
    q, n = code.ctx.q, code.n
    ranks = generalized_rank_weights(code, budget)
    hamming = generalized_hamming_weights(associated_code(code, budget), budget)
    expected = tuple(rank_to_hamming_weight(q, n, d) for d in ranks)
    return GeneralizedCorrespondenceReport(
        rank_weights=ranks, hamming_weights=hamming, expected=expected, holds=hamming == expected
    )


@dataclass(frozen=True)
class TotalWeightReport:
    total: int
    expected: int
    holds: bool


def total_weight_check(code: HammingCode, budget: int | None = None) -> TotalWeightReport:
    """Σ_v wt(v) = N'(Q^k - Q^{k-1}) with N' the number of nonzero columns."""
    counts = hamming_weight_distribution(code, budget)
    total = sum(j * a for j, a in enumerate(counts))
    Q, k = code.ctx.order, code.k
    expected = (code.length - code.zero_columns) * (Q**k - Q ** (k - 1)) if k else 0
    return TotalWeightReport(total=total, expected=expected, holds=total == expected)
