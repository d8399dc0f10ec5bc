"""q-systems and their linear sets.

A q-system is an n-dimensional F_q-subspace U of F_{q^m}^k whose F_{q^m}-span
is the whole space. Codes and systems correspond through phi (span of the
generator columns) and psi (generator whose columns are a basis of U).
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Any

import galois
import numpy as np

from .code import (
    RankCode,
    column_rank,
    generalized_rank_weights,
    rank_weight,
    rank_weights,
)
from .config import check_budget, resolve_budget
from .errors import (
    Degenerate,
    InternalInconsistency,
    InvalidArgs,
    NoSpanningSubspace,
    NotContained,
    NotLinearOverExtension,
    NotScattered,
    NotSpanning,
)
from .gf import FieldCtx, gamma_flatten, gamma_unflatten
from .linalg import (
    BaseField,
    QuotientMap,
    Subspace,
    all_combinations,
    enumerate_subspaces,
    full_space,
    gaussian_binomial,
    intersection,
    normalize_projective,
    orthogonal_complement,
    projective_index,
    projective_points,
    rank,
    restrict_scalars,
    solve,
    span,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QSystem:
    """An [n, k]_{q^m/q} system, stored by its canonical F_q-basis."""

    ctx: FieldCtx = field(repr=False)
    k: int
    basis: galois.FieldArray

    @classmethod
    def from_vectors(cls, ctx: FieldCtx, k: int, vectors: Any) -> "QSystem":
        """The F_q-span of `vectors` (rows in F_{q^m}^k), which must span F_{q^m}^k."""
        vectors = ctx.elements(vectors).reshape(-1, k)
        flat = span(ctx, gamma_flatten(ctx, vectors), BaseField.SUBFIELD, k * ctx.m)
        basis = gamma_unflatten(ctx, flat.basis, k)
        if rank(basis) != k:
            raise NotSpanning(f"Vectors span only {rank(basis)} of {k} dimensions over F_q^m")
        system = cls(ctx, k, basis)
        system.__dict__["flat"] = flat
        return system

    @property
    def n(self) -> int:
        return self.basis.shape[0]

    @property
    def generator(self) -> galois.FieldArray:
        return self.basis.T

    @functools.cached_property
    def flat(self) -> Subspace:
        return span(
            self.ctx, gamma_flatten(self.ctx, self.basis), BaseField.SUBFIELD, self.k * self.ctx.m
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSystem):
            return NotImplemented
        return self.k == other.k and self.flat == other.flat

    def __hash__(self) -> int:
        return hash(self.flat)

    def contains(self, vectors: Any) -> bool:
        vectors = self.ctx.elements(vectors).reshape(-1, self.k)
        return self.flat.contains(gamma_flatten(self.ctx, vectors))

    def to_json(self) -> dict[str, Any]:
        return {
            "field": self.ctx.to_json(),
            "k": self.k,
            "n": self.n,
            "basis": self.basis.view(np.ndarray).tolist(),
        }


def phi(code: RankCode) -> QSystem:
    if column_rank(code) != code.n:
        raise Degenerate(
            f"Code has effective length {column_rank(code)} < n = {code.n}"
        )
    return QSystem.from_vectors(code.ctx, code.k, code.generator.T)


def psi(system: QSystem) -> RankCode:
    return RankCode(system.ctx, system.generator)


def code_transform(c: RankCode, d: RankCode) -> galois.FieldArray | None:
    """A ∈ GL_n(q) with G_D = G_C·A, or None when no such A exists."""
    if c.ctx is not d.ctx or c.generator.shape != d.generator.shape:
        return None
    ctx = c.ctx
    source = gamma_flatten(ctx, c.generator.T)
    target = gamma_flatten(ctx, d.generator.T)
    if rank(source) != c.n:
        raise Degenerate("Transforms are only unique between nondegenerate codes")
    # columns of D are F_q-combinations of columns of C: target = Aᵀ·source
    a = solve(source.T, target.T)
    if a is None:
        return None
    if rank(a) != c.n or not np.array_equal(
        (c.generator @ a).view(np.ndarray), d.generator.view(np.ndarray)
    ):
        return None
    return a


def subspace_weight(system: QSystem, w: Subspace) -> int:
    """dim_{F_q}(U ∩ W) for an F_{q^m}-subspace W of F_{q^m}^k."""
    if w.base != BaseField.EXTENSION:
        raise NotLinearOverExtension("Expected a subspace over F_q^m")
    restricted = restrict_scalars(w)
    stacked = np.concatenate([system.flat.basis, restricted.basis])
    return system.n + restricted.dim - rank(stacked)


def system_generalized_weight(system: QSystem, r: int, budget: int | None = None) -> int:
    """n - max dim_{F_q}(U ∩ H) over the F_{q^m}-subspaces H of codimension r."""
    if not 1 <= r <= system.k:
        raise InvalidArgs(f"Need 1 <= r <= k={system.k}, got r={r}")
    best = max(
        subspace_weight(system, h)
        for h in enumerate_subspaces(
            system.ctx, system.k, system.k - r, BaseField.EXTENSION, budget
        )
    )
    return system.n - best


def point_weight(system: QSystem, point: Any) -> int:
    line = span(system.ctx, point, BaseField.EXTENSION, system.k)
    if line.dim != 1:
        raise InvalidArgs("A projective point needs a nonzero vector")
    return subspace_weight(system, line)


def hyperplane(ctx: FieldCtx, v: Any) -> Subspace:
    """⟨v⟩^⊥ inside F_{q^m}^k."""
    line = span(ctx, v, BaseField.EXTENSION)
    return orthogonal_complement(line)


def hyperplane_weight(system: QSystem, v: Any) -> int:
    """dim_{F_q}(U ∩ ⟨v⟩^⊥) = n - rk(vG)."""
    v = system.ctx.elements(v).reshape(1, system.k)
    return system.n - rank_weight(system.ctx, v @ system.generator)


def hyperplane_weights(
    system: QSystem, budget: int | None = None
) -> tuple[galois.FieldArray, np.ndarray]:
    """Normals of every F_{q^m}-hyperplane and the weight of U on each."""
    normals = projective_points(system.ctx, system.k, BaseField.EXTENSION, budget)
    weights = system.n - rank_weights(system.ctx, normals @ system.generator)
    return normals, weights


def hyperplane_section(system: QSystem, v: Any) -> Subspace:
    """U ∩ ⟨v⟩^⊥ as an F_q-subspace of F_q^{km}."""
    return intersection(system.flat, restrict_scalars(hyperplane(system.ctx, v)))


def system_distance(system: QSystem, budget: int | None = None) -> int:
    """d = n - max over hyperplanes of dim(U ∩ H)."""
    _, weights = hyperplane_weights(system, budget)
    return system.n - int(weights.max())


@dataclass(frozen=True)
class HyperplaneLawReport:
    checked: int
    holds: bool
    first_failure: list[int] | None = None


def hyperplane_weight_law(system: QSystem, budget: int | None = None) -> HyperplaneLawReport:
    """Compare n - rk(vG) with a direct intersection for every hyperplane."""
    normals, weights = hyperplane_weights(system, budget)
    for normal, weight in zip(normals, weights, strict=True):
        direct = subspace_weight(system, hyperplane(system.ctx, normal))
        if direct != weight:
            return HyperplaneLawReport(
                checked=len(weights),
                holds=False,
                first_failure=normal.view(np.ndarray).tolist(),
            )
    return HyperplaneLawReport(checked=len(weights), holds=True)


@dataclass(frozen=True, eq=False)
class LinearSet:
    """Points of PG(k-1, q^m) met by U, with their weights."""

    q: int
    rank: int
    points: galois.FieldArray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def multiplicities(self) -> np.ndarray:
        return (self.q**self.weights - 1) // (self.q - 1)

    @property
    def is_scattered(self) -> bool:
        return bool(np.all(self.weights == 1))

    def entries(self) -> list[dict[str, Any]]:
        return [
            {"point": point, "weight": weight, "multiplicity": multiplicity}
            for point, weight, multiplicity in zip(
                self.points.view(np.ndarray).tolist(),
                self.weights.tolist(),
                self.multiplicities.tolist(),
                strict=True,
            )
        ]

    def to_json(self) -> list[dict[str, Any]]:
        return self.entries()


def linear_set(system: QSystem, budget: int | None = None) -> LinearSet:
    """Group the nonzero vectors of U by projective point."""
    ctx = system.ctx
    q = ctx.q
    vectors = all_combinations(ctx, system.basis, BaseField.SUBFIELD, budget)[1:]
    normalized = normalize_projective(ctx, vectors)
    index = projective_index(ctx, normalized)
    _, first, counts = np.unique(index, return_index=True, return_counts=True)
    by_count = {q**w - 1: w for w in range(1, system.n + 1)}
    weights = np.array([by_count[int(c)] for c in counts], dtype=np.int64)
    result = LinearSet(q=q, rank=system.n, points=normalized[first], weights=weights)
    total = int(result.multiplicities.sum())
    if total != (q**system.n - 1) // (q - 1):
        raise InternalInconsistency(
            f"Point multiplicities sum to {total}, expected {(q**system.n - 1) // (q - 1)}"
        )
    return result


def is_scattered(system: QSystem, budget: int | None = None) -> bool:
    scattered = linear_set(system, budget).is_scattered
    m = system.ctx.m
    if scattered and m >= 2 and 2 * system.n > system.k * m:
        raise InternalInconsistency(
            f"Scattered system with n={system.n} > km/2={system.k * m / 2}"
        )
    return scattered


@dataclass(frozen=True)
class StandardEquationsReport:
    r: int
    lhs: int
    rhs: int
    holds: bool


def standard_equations_check(
    system: QSystem, r: int, budget: int | None = None
) -> StandardEquationsReport:
    """Sum over r-dimensional H of |H ∩ U∖{0}| against (q^n - 1)·[k-1, r-1]_{q^m}."""
    ctx = system.ctx
    if not 1 <= r <= system.k:
        raise InvalidArgs(f"Need 1 <= r <= k={system.k}, got r={r}")
    lhs = sum(
        ctx.q ** subspace_weight(system, sub) - 1
        for sub in enumerate_subspaces(ctx, system.k, r, BaseField.EXTENSION, budget)
    )
    rhs = (ctx.q**system.n - 1) * gaussian_binomial(system.k - 1, r - 1, ctx.order)
    return StandardEquationsReport(r=r, lhs=lhs, rhs=rhs, holds=lhs == rhs)


@dataclass(frozen=True, eq=False)
class LinearityIndexReport:
    direct: int
    formula: int | None
    discrepancy: bool
    witness: Subspace | None = field(default=None, repr=False)


def linearity_index(
    system: QSystem, cross_check: bool = True, budget: int | None = None
) -> LinearityIndexReport:
    """Largest dimension of an F_{q^m}-subspace contained in U."""
    ctx = system.ctx
    limit = resolve_budget(budget)
    top = min(system.k, system.n // ctx.m)
    check_budget(
        sum(gaussian_binomial(system.k, t, ctx.order) for t in range(1, top + 1)),
        limit,
        "F_q^m-subspaces for the linearity index",
    )
    direct, witness = 0, None
    for t in range(top, 0, -1):
        witness = next(
            (
                sub
                for sub in enumerate_subspaces(ctx, system.k, t, BaseField.EXTENSION, limit)
                if restrict_scalars(sub).issubset(system.flat)
            ),
            None,
        )
        if witness is not None:
            direct = t
            break
    lower = system.n - system.k * (ctx.m - 1)
    if direct < lower:
        raise InternalInconsistency(f"Linearity index {direct} below n - k(m-1) = {lower}")

    formula = None
    if cross_check:
        weights = generalized_rank_weights(psi(system), limit)
        r_min = next(
            r
            for r in range(1, system.k + 1)
            if weights[r - 1] == system.n - (system.k - r) * ctx.m
        )
        formula = system.k - r_min
    discrepancy = formula is not None and formula != direct
    if discrepancy:
        if system.n < system.k * ctx.m:
            raise InternalInconsistency(
                f"Linearity index {direct} differs from the generalized-weight value {formula}"
            )
        logger.info(
            "linearity index of the full space is %d, generalized-weight formula gives %d",
            direct,
            formula,
        )
    return LinearityIndexReport(
        direct=direct, formula=formula, discrepancy=discrepancy, witness=witness
    )


@dataclass(frozen=True)
class LadderReport:
    weights: tuple[int, ...]
    linearity_index: int
    steps: tuple[int, ...]
    holds: bool


def generalized_weight_ladder(system: QSystem, budget: int | None = None) -> LadderReport:
    """d_{i+1} - d_i = m exactly for i >= k - ℓ."""
    m = system.ctx.m
    weights = generalized_rank_weights(psi(system), budget)
    ell = linearity_index(system, cross_check=False, budget=budget).direct
    steps = tuple(b - a for a, b in zip(weights, weights[1:], strict=False))
    holds = all(
        (step == m) == (i >= system.k - ell) for i, step in enumerate(steps, start=1)
    )
    return LadderReport(weights=weights, linearity_index=ell, steps=steps, holds=holds)


def quotient_system(system: QSystem, t: Subspace, check_cutting: bool = False) -> QSystem:
    """U/T in F_{q^m}^k / T, an [n - ℓm, k - ℓ] system for T ⊆ U of dimension ℓ."""
    ctx = system.ctx
    if t.base != BaseField.EXTENSION:
        raise NotLinearOverExtension("The quotient needs an F_q^m-subspace")
    if t.ambient_dim != system.k:
        raise InvalidArgs(f"Subspace lives in F^{t.ambient_dim}, system in F^{system.k}")
    if t.dim == system.k:
        raise InvalidArgs("Quotient by the whole space leaves no ambient space")
    if not restrict_scalars(t).issubset(system.flat):
        raise NotContained("Subspace is not contained in the system")
    projection = QuotientMap(source=full_space(ctx, system.k, BaseField.EXTENSION), kernel=t)
    image = projection(system.basis)
    result = QSystem.from_vectors(ctx, system.k - t.dim, image)
    if result.n != system.n - t.dim * ctx.m:
        raise InternalInconsistency(
            f"Quotient has dimension {result.n}, expected {system.n - t.dim * ctx.m}"
        )
    if check_cutting:
        from .minimal import is_linear_cutting_blocking_set

        if is_linear_cutting_blocking_set(system).cutting and not (
            is_linear_cutting_blocking_set(result).cutting
        ):
            raise InternalInconsistency("Quotient of a cutting system is not cutting")
    return result


def shrink_scattered(system: QSystem, budget: int | None = None) -> QSystem:
    """A spanning (n-1)-dimensional F_q-subspace of a scattered U."""
    ctx = system.ctx
    if system.n <= system.k:
        raise NotScattered(f"Shrinking needs n > k, got n={system.n}, k={system.k}")
    if not is_scattered(system, budget):
        raise NotScattered("System is not scattered")
    for sub in enumerate_subspaces(ctx, system.n, system.n - 1, BaseField.SUBFIELD, budget):
        vectors = sub.basis @ system.basis
        if rank(vectors) == system.k:
            return QSystem.from_vectors(ctx, system.k, vectors)
    raise NoSpanningSubspace("No spanning hyperplane of a scattered system with n > k")


def random_system(ctx: FieldCtx, n: int, k: int, rng: np.random.Generator) -> QSystem:
    if not 1 <= k <= n <= k * ctx.m:
        raise InvalidArgs(f"Need 1 <= k <= n <= km, got n={n}, k={k}, m={ctx.m}")
    while True:
        vectors = ctx.GF(rng.integers(0, ctx.order, size=(n, k)))
        if rank(vectors) != k or rank(gamma_flatten(ctx, vectors)) != n:
            continue
        return QSystem.from_vectors(ctx, k, vectors)


def is_linear_cutting_by_definition(system: QSystem, budget: int | None = None) -> bool:
    """No hyperplane section of U is contained in a different one."""
    normals = projective_points(system.ctx, system.k, BaseField.EXTENSION, budget)
    check_budget(len(normals) ** 2, budget, "pairs of hyperplane sections")
    sections = [hyperplane_section(system, normal) for normal in normals]
    for i, smaller in enumerate(sections):
        for j, larger in enumerate(sections):
            if i != j and smaller.dim <= larger.dim and smaller.issubset(larger):
                return False
    return True
