"""Canonical subspaces over F_q and F_{q^m}, Gaussian binomials and enumeration.

All arithmetic happens in the top field of a FieldCtx. A subspace over the
subfield is stored with entries in the embedded F_q; its reduced row echelon
form is the same matrix whichever field it is reduced over.
"""

import functools
import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import galois
import numpy as np

from .config import check_budget
from .errors import DimensionMismatch, InternalInconsistency, InvalidArgs, NotContained
from .gf import FieldCtx, gamma_flatten, is_subfield_element

logger = logging.getLogger(__name__)


class BaseField(StrEnum):
    SUBFIELD = "subfield"
    EXTENSION = "extension"


def field_size(ctx: FieldCtx, base: BaseField) -> int:
    return ctx.q if base == BaseField.SUBFIELD else ctx.order


def field_elements(ctx: FieldCtx, base: BaseField) -> np.ndarray:
    """Integer encodings of the scalars of `base`, ascending."""
    if base == BaseField.SUBFIELD:
        return ctx.subfield_elements
    return np.arange(ctx.order, dtype=np.int64)


def rank(matrix: galois.FieldArray) -> int:
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def pivots(basis: galois.FieldArray) -> np.ndarray:
    """Column of the leading entry of each (nonzero) row."""
    return np.argmax(basis.view(np.ndarray) != 0, axis=1)


def rref(matrix: galois.FieldArray) -> galois.FieldArray:
    """Reduced row echelon form with the zero rows removed."""
    if matrix.shape[0] == 0 or matrix.size == 0:
        return matrix[:0]
    reduced = matrix.row_reduce()
    nonzero = np.any(reduced.view(np.ndarray) != 0, axis=1)
    return reduced[nonzero]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^N in reduced row echelon form, F = F_q or F_{q^m}."""

    ctx: FieldCtx = field(repr=False)
    base: BaseField
    ambient_dim: int
    basis: galois.FieldArray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @functools.cached_property
    def key(self) -> tuple[Any, ...]:
        raw = self.basis.view(np.ndarray).astype(np.int64)
        return (self.base.value, self.ambient_dim, self.dim, raw.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ctx is other.ctx and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @functools.cached_property
    def annihilator(self) -> galois.FieldArray:
        """Rows spanning the orthogonal complement under u·vᵀ."""
        GF = self.ctx.GF
        if self.is_zero:
            return GF.Identity(self.ambient_dim)
        if self.is_full:
            return GF.Zeros((0, self.ambient_dim))
        return self.basis.null_space()

    def contains(self, vectors: Any) -> bool:
        vectors = _as_rows(self.ctx, vectors, self.ambient_dim)
        if vectors.shape[0] == 0 or self.is_full:
            return True
        if self.base == BaseField.SUBFIELD and not np.all(
            is_subfield_element(self.ctx, vectors)
        ):
            return False
        return not np.any((self.annihilator @ vectors.T).view(np.ndarray))

    def issubset(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return self.dim <= other.dim and other.contains(self.basis)

    def to_json(self) -> dict[str, Any]:
        return {
            "base": self.base.value,
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "basis": self.basis.view(np.ndarray).tolist(),
        }


def _as_rows(ctx: FieldCtx, vectors: Any, ambient_dim: int | None) -> galois.FieldArray:
    vectors = ctx.elements(vectors)
    if vectors.ndim == 1:
        if vectors.size == 0:
            return ctx.GF.Zeros((0, ambient_dim or 0))
        vectors = vectors.reshape(1, -1)
    if vectors.ndim != 2:
        raise DimensionMismatch(f"Expected a list of vectors, got shape {vectors.shape}")
    if ambient_dim is not None and vectors.shape[1] != ambient_dim:
        if vectors.shape[0] == 0:
            return ctx.GF.Zeros((0, ambient_dim))
        raise DimensionMismatch(
            f"Vectors have length {vectors.shape[1]}, ambient dimension is {ambient_dim}"
        )
    return vectors


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ctx is not b.ctx or a.base != b.base or a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"Subspaces live in different spaces: {a.base}^{a.ambient_dim} and {b.base}^{b.ambient_dim}"
        )


def span(
    ctx: FieldCtx,
    vectors: Any,
    base: BaseField = BaseField.SUBFIELD,
    ambient_dim: int | None = None,
) -> Subspace:
    vectors = _as_rows(ctx, vectors, ambient_dim)
    if base == BaseField.SUBFIELD and not np.all(is_subfield_element(ctx, vectors)):
        raise InvalidArgs("Vectors of an F_q-subspace must have entries in F_q")
    return Subspace(ctx=ctx, base=base, ambient_dim=vectors.shape[1], basis=rref(vectors))


def zero_subspace(ctx: FieldCtx, n: int, base: BaseField = BaseField.SUBFIELD) -> Subspace:
    return Subspace(ctx=ctx, base=base, ambient_dim=n, basis=ctx.GF.Zeros((0, n)))


def full_space(ctx: FieldCtx, n: int, base: BaseField = BaseField.SUBFIELD) -> Subspace:
    return Subspace(ctx=ctx, base=base, ambient_dim=n, basis=ctx.GF.Identity(n))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return span(a.ctx, np.concatenate([a.basis, b.basis]), a.base, a.ambient_dim)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    if a.is_full:
        return b
    if b.is_full:
        return a
    stacked = np.concatenate([a.annihilator, b.annihilator])
    if rank(stacked) == a.ambient_dim:
        return zero_subspace(a.ctx, a.ambient_dim, a.base)
    return span(a.ctx, stacked.null_space(), a.base, a.ambient_dim)


def orthogonal_complement(s: Subspace) -> Subspace:
    return span(s.ctx, s.annihilator, s.base, s.ambient_dim)


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """Coordinates of vectors of `source` modulo `kernel` ⊆ `source`."""

    source: Subspace
    kernel: Subspace

    @functools.cached_property
    def _kernel_pivots(self) -> np.ndarray:
        return pivots(self.kernel.basis)

    def _reduce(self, vectors: galois.FieldArray) -> galois.FieldArray:
        if self.kernel.is_zero or vectors.shape[0] == 0:
            return vectors
        return vectors - vectors[:, self._kernel_pivots] @ self.kernel.basis

    @functools.cached_property
    def complement(self) -> galois.FieldArray:
        return rref(self._reduce(self.source.basis))

    @property
    def dim(self) -> int:
        return self.source.dim - self.kernel.dim

    def __call__(self, vectors: Any) -> galois.FieldArray:
        vectors = _as_rows(self.source.ctx, vectors, self.source.ambient_dim)
        if not self.source.contains(vectors):
            raise NotContained("Vectors do not lie in the source of the quotient")
        return self._reduce(vectors)[:, pivots(self.complement)]


@dataclass(frozen=True, eq=False)
class SubspaceOps:
    sum: Subspace
    intersection: Subspace
    contains: bool
    a: Subspace = field(repr=False)
    b: Subspace = field(repr=False)

    def quotient_map(self) -> QuotientMap:
        if not self.contains:
            raise NotContained("Quotient needs the second subspace inside the first")
        return QuotientMap(source=self.a, kernel=self.b)


def subspace_ops(a: Subspace, b: Subspace) -> SubspaceOps:
    """Sum, intersection and containment of two subspaces of the same space."""
    total = subspace_sum(a, b)
    common = intersection(a, b)
    if total.dim + common.dim != a.dim + b.dim:
        raise InternalInconsistency(
            f"dim(A+B) + dim(A∩B) = {total.dim + common.dim}, dim A + dim B = {a.dim + b.dim}"
        )
    return SubspaceOps(sum=total, intersection=common, contains=b.issubset(a), a=a, b=b)


def restrict_scalars(w: Subspace) -> Subspace:
    """An F_{q^m}-subspace of F_{q^m}^k as an F_q-subspace of F_q^{km}."""
    if w.base != BaseField.EXTENSION:
        raise InvalidArgs("Only F_{q^m}-subspaces can be restricted to F_q")
    ctx = w.ctx
    width = w.ambient_dim * ctx.m
    if w.is_zero:
        return zero_subspace(ctx, width)
    scaled = ctx.gamma[np.newaxis, :, np.newaxis] * w.basis[:, np.newaxis, :]
    flat = gamma_flatten(ctx, scaled.reshape(-1, w.ambient_dim))
    return span(ctx, flat, BaseField.SUBFIELD, width)


def gaussian_binomial(a: int, b: int, Q: int) -> int:
    """Number of b-dimensional subspaces of F_Q^a."""
    if not 0 <= b <= a:
        raise InvalidArgs(f"Gaussian binomial needs 0 <= b <= a, got a={a}, b={b}")
    if Q < 2 or not galois.is_prime_power(Q):
        raise InvalidArgs(f"{Q} is not a prime power")
    numerator = 1
    denominator = 1
    for i in range(b):
        numerator *= Q ** (a - i) - 1
        denominator *= Q ** (b - i) - 1
    return numerator // denominator


@dataclass(frozen=True)
class GaussianCount:
    a: int
    b: int
    Q: int
    value: int


def gaussian_count(a: int, b: int, Q: int) -> GaussianCount:
    return GaussianCount(a=a, b=b, Q=Q, value=gaussian_binomial(a, b, Q))


def _grid(values: np.ndarray, length: int) -> np.ndarray:
    """Every tuple of `values` of the given length, first coordinate slowest."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(values, repeat=length)), dtype=np.int64)


def enumerate_subspaces(
    ctx: FieldCtx,
    ambient_dim: int,
    dim: int,
    base: BaseField = BaseField.EXTENSION,
    budget: int | None = None,
) -> Iterator[Subspace]:
    """Every `dim`-dimensional subspace of F^ambient_dim exactly once.

    Order: pivot columns in lexicographic order, then the free entries row by
    row with the field elements in ascending encoding.
    """
    Q = field_size(ctx, base)
    count = gaussian_count(ambient_dim, dim, Q)
    check_budget(count.value, budget, f"{dim}-dim subspaces of F_{Q}^{ambient_dim}")
    logger.debug("enumerating %d subspaces of dim %d in F_%d^%d", count.value, dim, Q, ambient_dim)
    return _iter_subspaces(ctx, ambient_dim, dim, base)


def _iter_subspaces(
    ctx: FieldCtx, ambient_dim: int, dim: int, base: BaseField
) -> Iterator[Subspace]:
    values = field_elements(ctx, base)
    for pivot_cols in itertools.combinations(range(ambient_dim), dim):
        rows, cols = [], []
        for i, pivot in enumerate(pivot_cols):
            for col in range(pivot + 1, ambient_dim):
                if col not in pivot_cols:
                    rows.append(i)
                    cols.append(col)
        template = np.zeros((dim, ambient_dim), dtype=np.int64)
        template[np.arange(dim), np.array(pivot_cols, dtype=np.intp)] = 1
        grid = _grid(values, len(rows))
        matrices = np.repeat(template[np.newaxis], len(grid), axis=0)
        matrices[:, np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)] = grid
        matrices = ctx.GF(matrices)
        for matrix in matrices:
            yield Subspace(ctx=ctx, base=base, ambient_dim=ambient_dim, basis=matrix)


def projective_points(
    ctx: FieldCtx,
    k: int,
    base: BaseField = BaseField.EXTENSION,
    budget: int | None = None,
) -> galois.FieldArray:
    """Normalized representatives of PG(k-1, F), same order as enumerate_subspaces(k, 1)."""
    Q = field_size(ctx, base)
    check_budget((Q**k - 1) // (Q - 1), budget, f"points of PG({k - 1}, {Q})")
    return _projective_points(ctx, k, base)


@functools.lru_cache(maxsize=32)
def _projective_points(ctx: FieldCtx, k: int, base: BaseField) -> galois.FieldArray:
    values = field_elements(ctx, base)
    blocks = []
    for lead in range(k):
        tails = _grid(values, k - lead - 1)
        block = np.zeros((len(tails), k), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = tails
        blocks.append(block)
    if not blocks:
        return ctx.GF.Zeros((0, 0))
    return ctx.GF(np.concatenate(blocks))


def projective_index(
    ctx: FieldCtx, vectors: galois.FieldArray, base: BaseField = BaseField.EXTENSION
) -> np.ndarray:
    """Position of normalized nonzero vectors in the projective_points order."""
    values = field_elements(ctx, base)
    Q = len(values)
    k = vectors.shape[-1]
    digits = np.searchsorted(values, vectors.view(np.ndarray)).astype(np.int64)
    weights = Q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(weights)])
    lead = pivots(vectors)
    return offsets[lead] + (digits * weights).sum(axis=-1) - weights[lead]


def normalize_projective(ctx: FieldCtx, vectors: Any) -> galois.FieldArray:
    """Scale every nonzero row so its first nonzero entry is 1."""
    vectors = _as_rows(ctx, vectors, None)
    if vectors.shape[0] == 0:
        return vectors
    raw = vectors.view(np.ndarray)
    lead = pivots(vectors)
    heads = raw[np.arange(raw.shape[0]), lead]
    heads = np.where(heads == 0, 1, heads)
    return vectors / ctx.GF(heads)[:, np.newaxis]


def all_combinations(
    ctx: FieldCtx,
    basis: Any,
    base: BaseField = BaseField.SUBFIELD,
    budget: int | None = None,
) -> galois.FieldArray:
    """Every `base`-linear combination of the rows of `basis`; row 0 is zero."""
    basis = _as_rows(ctx, basis, None)
    values = field_elements(ctx, base)
    check_budget(len(values) ** basis.shape[0], budget, "linear combinations")
    if basis.shape[0] == 0:
        return ctx.GF.Zeros((1, basis.shape[1]))
    coefficients = ctx.GF(_grid(values, basis.shape[0]))
    return coefficients @ basis


def solve(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray | None:
    """X with a @ X = b, or None when there is none. `a` needs full column rank."""
    rows, cols = a.shape
    if rank(a) != cols:
        raise InvalidArgs("Coefficient matrix must have full column rank")
    if cols == 0:
        return a.Zeros((0, b.shape[1])) if not np.any(b.view(np.ndarray)) else None
    reduced = np.concatenate([a, b], axis=1).row_reduce()
    if np.any(reduced[cols:].view(np.ndarray)):
        return None
    return reduced[:cols, cols:]


def random_invertible(
    ctx: FieldCtx, n: int, rng: np.random.Generator
) -> galois.FieldArray:
    """A uniformly random element of GL_n(q)."""
    while True:
        candidate = ctx.GF(rng.choice(ctx.subfield_elements, size=(n, n)))
        if rank(candidate) == n:
            return candidate


def enumerate_general_linear(
    ctx: FieldCtx, n: int, budget: int | None = None
) -> Iterator[galois.FieldArray]:
    """Every matrix of GL_n(q), rows chosen depth-first outside the span so far."""
    q = ctx.q
    count = 1
    for i in range(n):
        count *= q**n - q**i
    check_budget(count, budget, f"GL_{n}({q})")
    return _iter_general_linear(ctx, n)


def _iter_general_linear(ctx: FieldCtx, n: int) -> Iterator[galois.FieldArray]:
    vectors = all_combinations(ctx, ctx.GF.Identity(n))
    values = ctx.subfield_elements
    scalars = ctx.GF(values)
    weights = len(values) ** np.arange(n - 1, -1, -1, dtype=np.int64)

    def index(rows: galois.FieldArray) -> np.ndarray:
        return np.searchsorted(values, rows.view(np.ndarray)) @ weights

    def extend(chosen: list[int], spanned: galois.FieldArray) -> Iterator[galois.FieldArray]:
        outside = np.ones(len(vectors), dtype=bool)
        outside[index(spanned)] = False
        candidates = np.flatnonzero(outside)
        if len(chosen) == n - 1:
            for i in candidates:
                yield vectors[[*chosen, i]]
            return
        for i in candidates:
            grown = spanned[:, np.newaxis, :] + scalars[np.newaxis, :, np.newaxis] * vectors[i]
            yield from extend([*chosen, i], grown.reshape(-1, n))

    if n == 0:
        yield ctx.GF.Zeros((0, 0))
        return
    yield from extend([], ctx.GF.Zeros((1, n)))
