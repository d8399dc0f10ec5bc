"""F_{q^m}-linear rank-metric codes: supports, weights, duals and generalized weights."""

import functools
import logging
from dataclasses import dataclass, field
from typing import Any

import galois
import numpy as np

from .config import check_budget, resolve_budget
from .errors import (
    BudgetExceeded,
    Degenerate,
    DimensionMismatch,
    FullSpace,
    InternalInconsistency,
    InvalidArgs,
)
from .gf import FieldCtx, gamma_expand, gamma_flatten, is_subfield_element
from .linalg import (
    BaseField,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    projective_points,
    rank,
    rref,
    span,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RankCode:
    """An [n, k] code over F_{q^m} given by a k×n generator matrix of full row rank."""

    ctx: FieldCtx = field(repr=False)
    generator: galois.FieldArray

    def __post_init__(self):
        generator = self.ctx.elements(self.generator)
        if generator.ndim != 2:
            raise DimensionMismatch(
                f"Generator must be a matrix, got shape {generator.shape}"
            )
        k, n = generator.shape
        if k > n:
            raise InvalidArgs(f"Code dimension {k} exceeds length {n}")
        if rank(generator) != k:
            raise InvalidArgs("Generator rows are not linearly independent")
        object.__setattr__(self, "generator", generator)

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "RankCode":
        return cls(ctx, ctx.GF.Zeros((0, n)))

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def parameters(self) -> dict[str, int]:
        return {"p": self.ctx.p, "q": self.ctx.q, "m": self.ctx.m, "n": self.n, "k": self.k}

    def encode(self, messages: Any) -> galois.FieldArray:
        messages = self.ctx.elements(messages)
        if self.k == 0:
            return self.ctx.GF.Zeros((*messages.shape[:-1], self.n))
        return messages @ self.generator

    def times(self, a: galois.FieldArray) -> "RankCode":
        """C·A for A ∈ GL_n(q)."""
        a = self.ctx.elements(a)
        if a.shape != (self.n, self.n) or rank(a) != self.n:
            raise InvalidArgs(f"Expected an invertible {self.n}×{self.n} matrix")
        if not np.all(is_subfield_element(self.ctx, a)):
            raise InvalidArgs("Isometries need entries in F_q")
        return RankCode(self.ctx, self.generator @ a)

    def augment(self, columns: Any) -> "RankCode":
        """Append columns (a k×t matrix) to the generator."""
        columns = self.ctx.elements(columns).reshape(self.k, -1)
        return RankCode(self.ctx, np.concatenate([self.generator, columns], axis=1))

    @functools.cached_property
    def row_space(self) -> Subspace:
        return span(self.ctx, self.generator, BaseField.EXTENSION, self.n)

    def same_code(self, other: "RankCode") -> bool:
        return self.ctx is other.ctx and self.row_space == other.row_space

    def to_json(self) -> dict[str, Any]:
        return {
            "field": self.ctx.to_json(),
            "n": self.n,
            "k": self.k,
            "generator": self.generator.view(np.ndarray).tolist(),
        }


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords by rank weight."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def nonzero_weights(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.counts) if i > 0 and a > 0)

    @property
    def min_distance(self) -> int:
        """n+1 for the zero code."""
        weights = self.nonzero_weights
        return weights[0] if weights else self.n + 1

    @property
    def max_weight(self) -> int:
        weights = self.nonzero_weights
        return weights[-1] if weights else 0

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def to_json(self) -> list[int]:
        return list(self.counts)


@dataclass(frozen=True, eq=False)
class CodewordClasses:
    """One codeword per projective class of nonzero messages, with its rank."""

    messages: galois.FieldArray
    codewords: galois.FieldArray
    ranks: np.ndarray


def rank_support(ctx: FieldCtx, v: Any) -> Subspace:
    """Column space of Γ(v) inside F_q^n."""
    v = ctx.elements(v).reshape(-1)
    return span(ctx, gamma_expand(ctx, v).T, BaseField.SUBFIELD, v.size)


def rank_weight(ctx: FieldCtx, v: Any) -> int:
    v = ctx.elements(v).reshape(-1)
    return rank(gamma_expand(ctx, v))


def rank_weights(ctx: FieldCtx, vectors: Any) -> np.ndarray:
    vectors = ctx.elements(vectors)
    expanded = gamma_expand(ctx, vectors)
    return np.array([rank(matrix) for matrix in expanded], dtype=np.int64)


def codeword_classes(code: RankCode, budget: int | None = None) -> CodewordClasses:
    check_budget(code.ctx.order**code.k, budget, "codewords")
    return _codeword_classes(code)


@functools.lru_cache(maxsize=32)
def _codeword_classes(code: RankCode) -> CodewordClasses:
    ctx = code.ctx
    if code.k == 0:
        empty = ctx.GF.Zeros((0, 0))
        return CodewordClasses(empty, ctx.GF.Zeros((0, code.n)), np.zeros(0, dtype=np.int64))
    messages = projective_points(ctx, code.k, BaseField.EXTENSION, budget=None)
    codewords = code.encode(messages)
    ranks = rank_weights(ctx, codewords)
    logger.debug("ranked %d codeword classes of an [%d,%d] code", len(ranks), code.n, code.k)
    return CodewordClasses(messages, codewords, ranks)


def code_support(code: RankCode) -> Subspace:
    """Sum of the supports of the generator rows."""
    ctx = code.ctx
    if code.k == 0:
        return span(ctx, ctx.GF.Zeros((0, code.n)), BaseField.SUBFIELD, code.n)
    columns = gamma_expand(ctx, code.generator)
    stacked = np.swapaxes(columns, 1, 2).reshape(-1, code.n)
    return span(ctx, stacked, BaseField.SUBFIELD, code.n)


def effective_length(code: RankCode) -> int:
    return code_support(code).dim


def column_rank(code: RankCode) -> int:
    """F_q-dimension of the span of the generator columns."""
    return rank(gamma_flatten(code.ctx, code.generator.T))


@dataclass(frozen=True)
class NondegeneracyReport:
    nondegenerate: bool
    effective_length: int
    column_rank: int
    dual_distance: int | None = None
    rank_2_nondegenerate: bool | None = None


def is_nondegenerate(
    code: RankCode, cross_check: bool = True, budget: int | None = None
) -> NondegeneracyReport:
    """Primary test: the generator columns span an n-dimensional F_q-space."""
    columns = column_rank(code)
    support = effective_length(code)
    if columns != support:
        raise InternalInconsistency(
            f"Column rank {columns} differs from support dimension {support}"
        )
    nondegenerate = columns == code.n
    if nondegenerate and code.n > code.k * code.ctx.m:
        raise InternalInconsistency(
            f"Nondegenerate code with n={code.n} > km={code.k * code.ctx.m}"
        )
    dual_distance = None
    if cross_check:
        try:
            dual_distance = min_rank_distance(dual(code, allow_zero=True), budget=budget)
        except BudgetExceeded as exc:
            logger.warning("skipping dual distance cross-check: %s", exc.message)
        if dual_distance is not None and (dual_distance >= 2) != nondegenerate:
            raise InternalInconsistency(
                f"Dual distance {dual_distance} contradicts nondegeneracy={nondegenerate}"
            )
    return NondegeneracyReport(
        nondegenerate=nondegenerate,
        effective_length=support,
        column_rank=columns,
        dual_distance=dual_distance,
        rank_2_nondegenerate=None if dual_distance is None else dual_distance >= 3,
    )


def dual(code: RankCode, allow_zero: bool = False) -> RankCode:
    """Null space of the generator under u·vᵀ."""
    ctx = code.ctx
    if code.k == code.n:
        if not allow_zero:
            raise FullSpace(
                f"The dual of the full space F^{code.n} is the zero code (distance {code.n + 1})"
            )
        return RankCode.zero(ctx, code.n)
    if code.k == 0:
        return RankCode(ctx, ctx.GF.Identity(code.n))
    return RankCode(ctx, code.generator.null_space())


def weight_distribution(code: RankCode, budget: int | None = None) -> WeightDistribution:
    ctx = code.ctx
    classes = codeword_classes(code, budget)
    counts = [0] * (code.n + 1)
    counts[0] = 1
    values, multiplicity = np.unique(classes.ranks, return_counts=True)
    for weight, count in zip(values.tolist(), multiplicity.tolist(), strict=True):
        counts[weight] += count * (ctx.order - 1)
    distribution = WeightDistribution(tuple(counts))

    if distribution.total != ctx.order**code.k:
        raise InternalInconsistency(
            f"Weight distribution sums to {distribution.total}, expected {ctx.order**code.k}"
        )
    if any(distribution[i] for i in range(min(code.n, ctx.m) + 1, code.n + 1)):
        raise InternalInconsistency("Codeword of rank above min(n, m)")
    if code.k > 0:
        bound = effective_length(code) - (code.k - 1) * ctx.m
        if distribution.min_distance < bound:
            raise InternalInconsistency(
                f"Minimum distance {distribution.min_distance} below {bound}"
            )
    return distribution


def min_rank_distance(
    code: RankCode, cross_check: bool = False, budget: int | None = None
) -> int:
    d = weight_distribution(code, budget).min_distance
    if cross_check and code.k > 0 and column_rank(code) == code.n:
        from .geometry import phi, system_distance

        geometric = system_distance(phi(code), budget=budget)
        if geometric != d:
            raise InternalInconsistency(
                f"Codeword distance {d} differs from hyperplane distance {geometric}"
            )
    return d


def max_rank(code: RankCode, budget: int | None = None) -> int:
    w = weight_distribution(code, budget).max_weight
    if code.k > 0 and column_rank(code) == code.n and w != min(code.n, code.ctx.m):
        raise InternalInconsistency(
            f"Nondegenerate code has maximum rank {w}, expected {min(code.n, code.ctx.m)}"
        )
    return w


def is_one_weight(code: RankCode, budget: int | None = None) -> bool:
    return len(weight_distribution(code, budget).nonzero_weights) == 1


@dataclass(frozen=True)
class OneWeightReport:
    one_weight: bool
    weights: tuple[int, ...]
    effective_length: int
    expected_length: int


def classify_one_weight(code: RankCode, budget: int | None = None) -> OneWeightReport:
    """One-weight codes of dimension k >= 2 have effective length km and d = m."""
    if code.k < 2:
        raise InvalidArgs("Classification of one-weight codes needs k >= 2")
    distribution = weight_distribution(code, budget)
    report = OneWeightReport(
        one_weight=len(distribution.nonzero_weights) == 1,
        weights=distribution.nonzero_weights,
        effective_length=effective_length(code),
        expected_length=code.k * code.ctx.m,
    )
    if report.one_weight and (
        report.effective_length != report.expected_length
        or distribution.min_distance != code.ctx.m
    ):
        raise InternalInconsistency(
            f"One-weight code with effective length {report.effective_length} "
            f"and weight {distribution.min_distance}"
        )
    return report


def generalized_rank_weight(code: RankCode, r: int, budget: int | None = None) -> int:
    """d_r = n - max dim_{F_q}(U ∩ H) over F_{q^m}-subspaces H of codimension r, U = phi(C)."""
    from .geometry import phi, system_generalized_weight

    if not 1 <= r <= code.k:
        raise InvalidArgs(f"Need 1 <= r <= k={code.k}, got r={r}")
    if column_rank(code) != code.n:
        raise Degenerate("Generalized rank weights need a nondegenerate code")
    return system_generalized_weight(phi(code), r, budget)


def generalized_rank_weights(
    code: RankCode, budget: int | None = None, cross_check: bool = False
) -> tuple[int, ...]:
    """(d_1, ..., d_k) from the q-system; `cross_check` also evaluates the definition."""
    from .geometry import phi, system_generalized_weight

    limit = resolve_budget(budget)
    if code.k == 0:
        return ()
    if column_rank(code) != code.n:
        raise Degenerate("Generalized rank weights need a nondegenerate code")
    total = sum(gaussian_binomial(code.k, r, code.ctx.order) for r in range(1, code.k + 1))
    check_budget(total, limit, "subspaces for generalized weights")
    system = phi(code)
    weights = tuple(
        system_generalized_weight(system, r, limit) for r in range(1, code.k + 1)
    )
    if any(a >= b for a, b in zip(weights, weights[1:], strict=False)):
        raise InternalInconsistency(f"Generalized weights not increasing: {weights}")
    if weights[-1] != code.n:
        raise InternalInconsistency(f"d_k = {weights[-1]}, expected n = {code.n}")
    if cross_check:
        try:
            defined = generalized_rank_weights_by_definition(code, limit)
        except BudgetExceeded as e:
            logger.warning("skipping generalized weight cross-check: %s", e.message)
        else:
            if defined != weights:
                raise InternalInconsistency(
                    f"Generalized weights {weights} differ from the definition {defined}"
                )
            logger.info("generalized weights %s agree with the definition", weights)
    return weights


def generalized_rank_weights_by_definition(
    code: RankCode, budget: int | None = None
) -> tuple[int, ...]:
    """Least dimension of a Frobenius-closed space meeting C in dimension >= r.

    Frobenius-closed spaces of dimension t are the F_{q^m}-spans of the
    t-dimensional F_q-subspaces of F_q^n.
    """
    ctx = code.ctx
    limit = resolve_budget(budget)
    total = sum(gaussian_binomial(code.n, t, ctx.q) for t in range(code.n + 1))
    check_budget(total, limit, "Frobenius-closed subspaces")
    best: dict[int, int] = {}
    for t in range(1, code.n + 1):
        top = 0
        for sub in enumerate_subspaces(ctx, code.n, t, BaseField.SUBFIELD, limit):
            stacked = np.concatenate([code.generator, sub.basis])
            top = max(top, code.k + t - rank(stacked))
        for r in range(1, top + 1):
            best.setdefault(r, t)
        if top >= code.k:
            break
    return tuple(best[r] for r in range(1, code.k + 1))


def frobenius_closed_basis(code: RankCode) -> galois.FieldArray | None:
    """A basis with entries in F_q when C is fixed by x ↦ x^q, else None."""
    ctx = code.ctx
    if code.k == 0:
        return code.generator
    stacked = np.concatenate([code.generator, code.generator**ctx.q])
    if rank(stacked) != code.k:
        return None
    basis = rref(code.generator)
    if not np.all(is_subfield_element(ctx, basis)):
        raise InternalInconsistency("Frobenius-closed code without an F_q-basis")
    return basis


def effective_code(code: RankCode) -> RankCode:
    """The nondegenerate code C' with C = C'·B for B of full rank over F_q."""
    support = code_support(code)
    if support.is_full:
        return code
    columns = np.argmax(support.basis.view(np.ndarray) != 0, axis=1)
    reduced = RankCode(code.ctx, code.generator[:, columns])
    logger.debug("effective length %d of an [%d,%d] code", support.dim, code.n, code.k)
    return reduced


def random_code(
    ctx: FieldCtx,
    n: int,
    k: int,
    rng: np.random.Generator,
    nondegenerate: bool = False,
) -> RankCode:
    if not 0 <= k <= n:
        raise InvalidArgs(f"Need 0 <= k <= n, got n={n}, k={k}")
    if nondegenerate and n > k * ctx.m:
        raise InvalidArgs(f"No nondegenerate [{n},{k}] code exists when n > km")
    while True:
        generator = ctx.GF(rng.integers(0, ctx.order, size=(k, n)))
        if rank(generator) != k:
            continue
        code = RankCode(ctx, generator)
        if not nondegenerate or column_rank(code) == n:
            return code
