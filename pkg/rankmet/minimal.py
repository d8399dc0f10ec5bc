"""Minimal rank-metric codes: three decision procedures, bounds, constructions and search."""

import itertools
import logging
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any

import galois
import numpy as np

from .code import (
    RankCode,
    codeword_classes,
    column_rank,
    effective_code,
    generalized_rank_weights,
    random_code,
    rank_support,
    weight_distribution,
)
from .config import check_budget, resolve_budget
from .errors import (
    DimensionMismatch,
    HypothesisViolated,
    InternalInconsistency,
    InvalidArgs,
    NotMinimalInput,
)
from .gf import FieldCtx, build_field, field_from_order, gamma_expand, gamma_unflatten
from .geometry import (
    QSystem,
    hyperplane_section,
    hyperplane_weights,
    is_scattered,
    linear_set,
    linearity_index,
    phi,
    psi,
)
from .linalg import (
    BaseField,
    enumerate_subspaces,
    gaussian_binomial,
    normalize_projective,
    orthogonal_complement,
    projective_index,
    projective_points,
    rank,
    span,
)

logger = logging.getLogger(__name__)


class MinimalityMethod(StrEnum):
    PAIRWISE = "pairwise"
    CUTTING = "cutting"
    LAMBDA_SUM = "lambda_sum"


@dataclass(frozen=True, eq=False)
class Witness:
    """A codeword `container` whose support contains that of a non-proportional `contained`."""

    contained: galois.FieldArray
    container: galois.FieldArray
    contained_message: galois.FieldArray
    container_message: galois.FieldArray
    hyperplane: galois.FieldArray | None = None


@dataclass(frozen=True, eq=False)
class MinimalityReport:
    verdict: bool
    method: MinimalityMethod
    witness: Witness | None = None


def is_minimal(
    code: RankCode,
    method: MinimalityMethod = MinimalityMethod.CUTTING,
    cross_check: bool = False,
    budget: int | None = None,
) -> MinimalityReport:
    method = MinimalityMethod(method)
    if not cross_check:
        return _METHODS[method](code, budget)
    reports = {name: run(code, budget) for name, run in _METHODS.items()}
    verdicts = {name.value: report.verdict for name, report in reports.items()}
    if len(set(verdicts.values())) != 1:
        raise InternalInconsistency(f"Minimality methods disagree: {verdicts}")
    return reports[method]


def _trivial(code: RankCode, method: MinimalityMethod) -> MinimalityReport | None:
    # with k <= 1 every pair of nonzero codewords is proportional
    if code.k <= 1:
        return MinimalityReport(verdict=True, method=method)
    return None


def _pairwise(code: RankCode, budget: int | None) -> MinimalityReport:
    if (report := _trivial(code, MinimalityMethod.PAIRWISE)) is not None:
        return report
    ctx = code.ctx
    classes = codeword_classes(code, budget)
    count = len(classes.ranks)
    check_budget(count * count, budget, "pairs of codeword classes")
    hamming = classes.codewords.view(np.ndarray) != 0
    supports = [rank_support(ctx, codeword) for codeword in classes.codewords]
    for j in np.argsort(-classes.ranks, kind="stable"):
        for i in range(count):
            if i == j or classes.ranks[i] > classes.ranks[j]:
                continue
            if np.any(hamming[i] & ~hamming[j]):
                continue
            if supports[i].issubset(supports[j]):
                witness = Witness(
                    contained=classes.codewords[i],
                    container=classes.codewords[j],
                    contained_message=classes.messages[i],
                    container_message=classes.messages[j],
                )
                _check_reverse_inclusion(code, witness)
                return MinimalityReport(False, MinimalityMethod.PAIRWISE, witness)
    return MinimalityReport(True, MinimalityMethod.PAIRWISE)


def _check_reverse_inclusion(code: RankCode, witness: Witness) -> None:
    """σ(uG) ⊆ σ(vG) forces U ∩ ⟨u⟩^⊥ ⊇ U ∩ ⟨v⟩^⊥."""
    if column_rank(code) != code.n:
        return
    system = phi(code)
    larger = hyperplane_section(system, witness.contained_message)
    smaller = hyperplane_section(system, witness.container_message)
    if not smaller.issubset(larger):
        raise InternalInconsistency("Support inclusion without reverse section inclusion")


@dataclass(frozen=True, eq=False)
class CuttingReport:
    cutting: bool
    hyperplane: galois.FieldArray | None = None
    min_section_dim: int | None = None


def is_linear_cutting_blocking_set(system: QSystem, budget: int | None = None) -> CuttingReport:
    """Every F_{q^m}-hyperplane H satisfies ⟨H ∩ U⟩_{F_q^m} = H."""
    ctx = system.ctx
    normals, weights = hyperplane_weights(system, budget)
    min_dim = int(weights.min())
    for normal in normals:
        section = hyperplane_section(system, normal)
        spanned = span(ctx, _unflat(system, section.basis), BaseField.EXTENSION, system.k)
        if spanned.dim != system.k - 1:
            return CuttingReport(cutting=False, hyperplane=normal, min_section_dim=min_dim)
    if min_dim < system.k - 1:
        raise InternalInconsistency(
            f"Cutting system with a hyperplane section of size q^{min_dim} < q^{system.k - 1}"
        )
    return CuttingReport(cutting=True, min_section_dim=min_dim)


def _unflat(system: QSystem, flat: galois.FieldArray) -> galois.FieldArray:
    return gamma_unflatten(system.ctx, flat, system.k)


def cutting_witness(system: QSystem, normal: galois.FieldArray) -> galois.FieldArray:
    """A message u, not proportional to `normal`, with ⟨u⟩^⊥ ⊇ ⟨H ∩ U⟩ for H = ⟨normal⟩^⊥."""
    ctx = system.ctx
    section = hyperplane_section(system, normal)
    spanned = span(ctx, _unflat(system, section.basis), BaseField.EXTENSION, system.k)
    for candidate in orthogonal_complement(spanned).basis:
        if rank(np.stack([candidate, normal])) == 2:
            return candidate
    raise InternalInconsistency("Hyperplane section spans the hyperplane")


def _cutting(code: RankCode, budget: int | None) -> MinimalityReport:
    if (report := _trivial(code, MinimalityMethod.CUTTING)) is not None:
        return report
    reduced = effective_code(code)
    system = phi(reduced)
    cutting = is_linear_cutting_blocking_set(system, budget)
    if cutting.cutting:
        return MinimalityReport(True, MinimalityMethod.CUTTING)
    normal = cutting.hyperplane
    message = normalize_projective(code.ctx, cutting_witness(system, normal))[0]
    witness = Witness(
        contained=code.encode(message),
        container=code.encode(normal),
        contained_message=message,
        container_message=normal,
        hyperplane=normal,
    )
    return MinimalityReport(False, MinimalityMethod.CUTTING, witness)


def _lambda_sum(code: RankCode, budget: int | None) -> MinimalityReport:
    """Σ_{λ≠0} q^{n-rk(a+λb)} = (Q-1)q^{n-rk a} - q^{n-rk b} + q^n iff σ(b) ⊆ σ(a)."""
    if (report := _trivial(code, MinimalityMethod.LAMBDA_SUM)) is not None:
        return report
    ctx = code.ctx
    q, n, k, Q = ctx.q, code.n, code.k, ctx.order
    classes = codeword_classes(code, budget)
    count = len(classes.ranks)
    check_budget(count * count * (Q - 1), budget, "λ-sums over pairs of classes")

    weights = Q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    messages = ctx.GF(np.array(list(itertools.product(range(Q), repeat=k)), dtype=np.int64))
    table = np.zeros(Q**k, dtype=np.int64)
    nonzero = messages[1:]
    table[1:] = classes.ranks[projective_index(ctx, normalize_projective(ctx, nonzero))]

    powers = np.array([q ** (n - r) for r in range(n + 1)], dtype=object)
    scalars = ctx.GF(np.arange(1, Q, dtype=np.int64))
    for a in range(count):
        combos = classes.messages[a] + scalars[np.newaxis, :, np.newaxis] * classes.messages[:, np.newaxis, :]
        ranks = table[combos.view(np.ndarray) @ weights]
        lhs = powers[ranks].sum(axis=1)
        rhs = (Q - 1) * powers[classes.ranks[a]] - powers[classes.ranks] + q**n
        equal = np.array([x == y for x, y in zip(lhs, rhs, strict=True)])
        equal[a] = False
        hits = np.flatnonzero(equal)
        if len(hits):
            b = int(hits[0])
            witness = Witness(
                contained=classes.codewords[b],
                container=classes.codewords[a],
                contained_message=classes.messages[b],
                container_message=classes.messages[a],
            )
            return MinimalityReport(False, MinimalityMethod.LAMBDA_SUM, witness)
    return MinimalityReport(True, MinimalityMethod.LAMBDA_SUM)


_METHODS = {
    MinimalityMethod.PAIRWISE: _pairwise,
    MinimalityMethod.CUTTING: _cutting,
    MinimalityMethod.LAMBDA_SUM: _lambda_sum,
}


def verify_witness(code: RankCode, report: MinimalityReport) -> bool:
    """Re-check a non-minimality witness against the definition."""
    witness = report.witness
    if witness is None:
        return report.verdict
    ctx = code.ctx
    if not code.row_space.contains(np.stack([witness.contained, witness.container])):
        return False
    if rank(np.stack([witness.contained, witness.container])) != 2:
        return False
    return rank_support(ctx, witness.contained).issubset(rank_support(ctx, witness.container))


def hyperplane_point_counts(
    system: QSystem, budget: int | None = None
) -> tuple[galois.FieldArray, np.ndarray]:
    """Number of points of L_U on each F_{q^m}-hyperplane."""
    points = linear_set(system, budget).points
    normals = projective_points(system.ctx, system.k, BaseField.EXTENSION, budget)
    incidence = (normals @ points.T).view(np.ndarray) == 0
    return normals, incidence.sum(axis=1)


class ExistenceRegion(StrEnum):
    NONEXISTENT = "nonexistent"
    OPEN = "open"
    GUARANTEED = "guaranteed"


def existence_region(n: int, k: int, m: int) -> ExistenceRegion:
    """Where a nondegenerate minimal [n, k]_{q^m/q} code is known (not) to exist, k >= 2."""
    if n < k + m - 1 or n > k * m:
        return ExistenceRegion.NONEXISTENT
    if n >= min(2 * k + m - 2, (k - 1) * m + 1):
        return ExistenceRegion.GUARANTEED
    return ExistenceRegion.OPEN


@dataclass(frozen=True)
class BoundsLedger:
    q: int
    m: int
    n: int
    k: int
    d: int
    w_rk: int
    linearity_index: int
    minimal: bool
    n_ge_k_plus_m_minus_1: bool
    wmax_le_n_minus_k_plus_1: bool
    hyperplane_size_ge_q_pow_k_minus_1: bool
    sufficiency_n_ge_km_minus_m_plus_1: bool
    gen_lower_bound_ok: bool | None
    ab_condition_holds: bool
    existence_region: ExistenceRegion | None
    k_minus_1_m: dict[str, bool] | None = None


def ab_condition(q: int, m: int, n: int, d: int) -> bool:
    """(q^n - q^{n-m})(q^m - 1) < q^m(q^n - q^{n-d})."""
    q = Fraction(q)
    return (q**n - q ** (n - m)) * (q**m - 1) < q**m * (q**n - q ** (n - d))


def bounds_ledger(code: RankCode, budget: int | None = None) -> BoundsLedger:
    """Evaluate the length, rank and cutting bounds on the effective code."""
    limit = resolve_budget(budget)
    reduced = effective_code(code)
    q, m, n, k = code.ctx.q, code.ctx.m, reduced.n, reduced.k
    if k == 0:
        raise InvalidArgs("Bounds need a nonzero code")
    distribution = weight_distribution(reduced, limit)
    d, w = distribution.min_distance, distribution.max_weight
    system = phi(reduced)
    ell = linearity_index(system, cross_check=False, budget=limit).direct
    minimal = is_minimal(reduced, MinimalityMethod.CUTTING, budget=limit).verdict
    _, section_dims = hyperplane_weights(system, limit)

    characterization = None
    if k >= 3 and n == (k - 1) * m:
        characterization = k_minus_1_m_characterization(reduced, limit)

    ledger = BoundsLedger(
        q=q,
        m=m,
        n=n,
        k=k,
        d=d,
        w_rk=w,
        linearity_index=ell,
        minimal=minimal,
        n_ge_k_plus_m_minus_1=n >= k + m - 1,
        wmax_le_n_minus_k_plus_1=w <= n - k + 1,
        hyperplane_size_ge_q_pow_k_minus_1=bool(section_dims.min() >= k - 1),
        sufficiency_n_ge_km_minus_m_plus_1=n >= (k - 1) * m + 1,
        gen_lower_bound_ok=n - k >= (ell + 1) * (m - 1) if k - ell >= 2 else None,
        ab_condition_holds=ab_condition(q, m, n, d),
        existence_region=existence_region(n, k, m) if k >= 2 else None,
        k_minus_1_m=characterization,
    )
    _check_ledger(ledger)
    return ledger


def _check_ledger(ledger: BoundsLedger) -> None:
    if ledger.minimal and ledger.k >= 2:
        necessary = {
            "n >= k+m-1": ledger.n_ge_k_plus_m_minus_1,
            "w <= n-k+1": ledger.wmax_le_n_minus_k_plus_1,
            "|H ∩ U| >= q^(k-1)": ledger.hyperplane_size_ge_q_pow_k_minus_1,
            "n-k >= (ℓ+1)(m-1)": ledger.gen_lower_bound_ok is not False,
        }
        broken = [name for name, holds in necessary.items() if not holds]
        if broken:
            raise InternalInconsistency(f"Minimal code violates {', '.join(broken)}")
    if ledger.sufficiency_n_ge_km_minus_m_plus_1 and not ledger.minimal:
        raise InternalInconsistency("Code with n >= (k-1)m+1 is not minimal")
    if ledger.ab_condition_holds != (ledger.d == ledger.m):
        raise InternalInconsistency(
            f"Rank Ashikhmin-Barg condition is {ledger.ab_condition_holds} with d={ledger.d}, m={ledger.m}"
        )


def k_minus_1_m_characterization(code: RankCode, budget: int | None = None) -> dict[str, bool]:
    """For a nondegenerate [(k-1)m, k] code: ℓ < k-2, minimal and d_2 > m coincide."""
    m, k = code.ctx.m, code.k
    system = phi(code)
    flags = {
        "linearity_index_lt_k_minus_2": linearity_index(system, False, budget).direct < k - 2,
        "minimal": is_minimal(code, MinimalityMethod.CUTTING, budget=budget).verdict,
        "d2_gt_m": generalized_rank_weights(code, budget)[1] > m,
    }
    if len(set(flags.values())) != 1:
        raise InternalInconsistency(f"[(k-1)m, k] characterization disagrees: {flags}")
    return flags


def construct_simplex(ctx: FieldCtx, k: int, alpha: Any = None) -> RankCode:
    """Generator (I_k | αI_k | ... | α^{m-1}I_k)."""
    if k < 1:
        raise InvalidArgs(f"Simplex code needs k >= 1, got {k}")
    alpha = ctx.generator if alpha is None else ctx.elements(alpha)
    powers = alpha ** np.arange(ctx.m)
    if rank(gamma_expand(ctx, powers)) != ctx.m:
        raise InvalidArgs(f"{int(alpha)} does not generate F_q^m over F_q")
    identity = ctx.GF.Identity(k)
    return RankCode(ctx, np.concatenate([identity * power for power in powers], axis=1))


def minimal_from_scattered(system: QSystem, budget: int | None = None) -> MinimalityReport:
    """psi(U) is minimal for a scattered [n, 3] system with n >= m + 2."""
    q, m, n = system.ctx.q, system.ctx.m, system.n
    if system.k != 3:
        raise HypothesisViolated(f"Needs k = 3, got k = {system.k}")
    if n < m + 2:
        raise HypothesisViolated(f"Needs n >= m+2 = {m + 2}, got n = {n}")
    if not is_scattered(system, budget):
        raise HypothesisViolated("System is not scattered")
    report = is_minimal(psi(system), MinimalityMethod.CUTTING, budget=budget)
    _, counts = hyperplane_point_counts(system, budget)
    floor = (q ** (n - m) - 1) // (q - 1)
    if counts.min() < floor or floor < q + 1:
        raise InternalInconsistency(
            f"A hyperplane meets L_U in {counts.min()} points, expected at least {floor}"
        )
    if not report.verdict:
        raise InternalInconsistency("Scattered [n,3] system with n >= m+2 is not cutting")
    return report


def extend_minimal(code: RankCode, v: Any, check: bool = False) -> RankCode:
    """The [n+1, k] code generated by (G | vᵀ)."""
    if not is_minimal(code).verdict:
        raise NotMinimalInput("Only minimal codes can be extended")
    column = code.ctx.elements(v).reshape(-1)
    if column.size != code.k:
        raise DimensionMismatch(f"Extension column needs {code.k} entries, got {column.size}")
    extended = code.augment(column.reshape(code.k, 1))
    if check and not is_minimal(extended, MinimalityMethod.PAIRWISE).verdict:
        raise InternalInconsistency("Extension of a minimal code is not minimal")
    return extended


ETA_MODULUS = (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1)
LAMBDA_MODULUS = (1, 1, 0, 0, 1)
LAMBDA_EXPONENT = 273
SPAN_EXPONENTS = (6, 22, 63, 89, 166, 289)
PRINTED_GENERATOR = (
    (4, 10, 8, 3, 9, 7),
    (14, 8, 1, 8, None, 8),
    (10, None, 6, 5, 11, 3),
)


@dataclass(frozen=True, eq=False)
class ScatteredExample:
    system: QSystem
    code: RankCode
    condition_hits: int = field(default=0)


def construct_scattered_633(budget: int | None = None) -> ScatteredExample:
    """The scattered [6,3]_{16/2} system spanned by six powers of η in F_{2^12}."""
    big = build_field(2, 4, 3, ETA_MODULUS)
    small = build_field(2, 1, 4, LAMBDA_MODULUS)
    lam = big.power(LAMBDA_EXPONENT)
    if int(lam**4 + lam + big.GF(1)) != 0:
        raise InternalInconsistency("η^273 is not a root of x^4 + x + 1")

    coords = gamma_expand(big, big.GF(big.antilog[list(SPAN_EXPONENTS)]))
    raw = coords.view(np.ndarray)
    exponents = big.log[raw] // LAMBDA_EXPONENT
    mapped = small.GF(np.where(raw == 0, 0, small.antilog[exponents % (small.order - 1)]))
    system = QSystem.from_vectors(small, 3, mapped)

    printed = small.GF(
        [[0 if e is None else int(small.antilog[e]) for e in row] for row in PRINTED_GENERATOR]
    )
    code = RankCode(small, printed)
    if not np.array_equal(printed.view(np.ndarray), mapped.T.view(np.ndarray)):
        raise InternalInconsistency("Coordinates of the span differ from the printed generator")
    if phi(code) != system or system.n != 6:
        raise InternalInconsistency("Printed generator does not realize the spanned system")
    if not is_scattered(system, budget) or linear_set(system, budget).size != 63:
        raise InternalInconsistency("Example system is not scattered")
    if not is_linear_cutting_blocking_set(system, budget).cutting:
        raise InternalInconsistency("Example system is not cutting")

    gamma = big.GF(np.arange(big.order))
    values = gamma**64 + big.power(64) * gamma**3 + big.power(7)
    hits = int(np.count_nonzero(values.view(np.ndarray) == 0))
    logger.info("γ^64 + η^64 γ^3 + η^7 = 0 has %d solutions in GF(2^12)", hits)
    return ScatteredExample(system=system, code=code, condition_hits=hits)


def _k_minus_1_m_certificate(ctx: FieldCtx, k: int, budget: int | None) -> int:
    """Linearity index of a spanning [2(k-1), k]_{q^2/q} system; at least k-2."""
    GF = ctx.GF
    vectors = []
    for j in range(k - 2):
        for i in range(ctx.m):
            vector = GF.Zeros(k)
            vector[j] = ctx.generator**i
            vectors.append(vector)
    for j in (k - 2, k - 1):
        vector = GF.Zeros(k)
        vector[j] = 1
        vectors.append(vector)
    system = QSystem.from_vectors(ctx, k, np.stack(vectors))
    ell = linearity_index(system, cross_check=False, budget=budget).direct
    if ell < k - 2:
        raise InternalInconsistency(
            f"[{system.n},{k}] system with linearity index {ell} < k-2 = {k - 2}"
        )
    logger.info("[%d,%d] system over F_q^2 has linearity index %d", system.n, k, ell)
    return ell


def construct_k_minus_1_m(ctx: FieldCtx, k: int, budget: int | None = None) -> RankCode:
    """A minimal [(k-1)m, k] code with linearity index at most k-3."""
    m = ctx.m
    if k < 3:
        raise InvalidArgs(f"Construction needs k >= 3, got k = {k}")
    if m == 1:
        raise HypothesisViolated(
            f"No nondegenerate [{k - 1},{k}] code exists; minimal [(k-1)m,k] codes "
            "exist if and only if m >= 3"
        )
    alpha = ctx.generator
    if m == 2:
        ell = _k_minus_1_m_certificate(ctx, k, budget)
        raise HypothesisViolated(
            f"No minimal [{2 * (k - 1)},{k}]_{{q^2/q}} code exists: every such code has "
            f"linearity index ℓ >= n - k(m-1) = {k - 2}, and the spanning system "
            f"⟨α^i e_j (j < k-2), e_(k-2), e_(k-1)⟩ has ℓ = {ell}; minimal [(k-1)m,k] codes "
            "exist if and only if m >= 3"
        )
    vectors = []
    for j in range(k):
        top = m if j < k - 3 else m - 1
        for i in range(top):
            vector = ctx.GF.Zeros(k)
            vector[j] = alpha**i
            vectors.append(vector)
    vectors = np.stack(vectors)
    target = (k - 1) * m
    for chosen in itertools.combinations(range(len(vectors)), target):
        subset = vectors[list(chosen)]
        if rank(subset) != k:
            continue
        system = QSystem.from_vectors(ctx, k, subset)
        if linearity_index(system, cross_check=False, budget=budget).direct <= k - 3:
            code = psi(system)
            k_minus_1_m_characterization(code, budget)
            return code
    raise InternalInconsistency("No spanning subsystem with linearity index <= k-3")


def existence_bound(q: int, m: int, n: int, k: int) -> Fraction:
    """A positive value certifies a minimal [n, k]_{q^m/q} code."""
    if not n >= k >= 2:
        raise InvalidArgs(f"Needs n >= k >= 2, got n={n}, k={k}")
    if m < 1 or q < 2 or not galois.is_prime_power(q):
        raise InvalidArgs(f"Needs a prime power q and m >= 1, got q={q}, m={m}")
    Q = q**m
    first = Fraction((Q**n - 1) * (Q ** (n - 1) - 1), (Q**k - 1) * (Q ** (k - 1) - 1))
    total = Fraction(0)
    for i in range(2, m + 1):
        product = 1
        for j in range(i):
            product *= q**n - q**j
        total += Fraction(
            gaussian_binomial(m, i, q) * product * ((Q**i - 1) // (Q - 1) - 1), Q - 1
        )
    value = first - total / 2
    if m >= 2 and n == 2 * k + m - 2 and value <= 0:
        raise InternalInconsistency(f"Existence bound {value} is not positive at n = 2k+m-2")
    return value


class SearchStrategy(StrEnum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass(frozen=True, eq=False)
class SearchResult:
    code: RankCode | None
    report: MinimalityReport | None
    strategy: SearchStrategy
    examined: int
    bound: Fraction | None
    certificate: dict[str, Any] | None = None


def search_minimal(
    q: int,
    m: int,
    n: int,
    k: int,
    strategy: SearchStrategy = SearchStrategy.EXHAUSTIVE,
    trials: int = 100,
    seed: int = 0,
    budget: int | None = None,
) -> SearchResult:
    """Look for a nondegenerate minimal [n, k]_{q^m/q} code."""
    strategy = SearchStrategy(strategy)
    ctx = field_from_order(q, m)
    if not 1 <= k <= n:
        raise InvalidArgs(f"Needs 1 <= k <= n, got n={n}, k={k}")
    bound = existence_bound(q, m, n, k) if k >= 2 else None
    necessary = {
        "n_ge_k_plus_m_minus_1": n >= k + m - 1 or k < 2,
        "n_le_km": n <= k * m,
    }
    examined = 0
    if all(necessary.values()):
        if strategy == SearchStrategy.EXHAUSTIVE:
            candidates = (
                RankCode(ctx, sub.basis)
                for sub in enumerate_subspaces(ctx, n, k, BaseField.EXTENSION, budget)
            )
        else:
            if trials < 1:
                raise InvalidArgs(f"Random search needs a positive trial count, got {trials}")
            rng = np.random.default_rng(seed)
            candidates = (random_code(ctx, n, k, rng, nondegenerate=True) for _ in range(trials))
        for code in candidates:
            examined += 1
            if column_rank(code) != n:
                continue
            report = is_minimal(code, MinimalityMethod.CUTTING, budget=budget)
            if report.verdict:
                logger.info("minimal [%d,%d] code found after %d candidates", n, k, examined)
                return SearchResult(code, report, strategy, examined, bound)

    certificate = {
        "exhaustive": strategy == SearchStrategy.EXHAUSTIVE,
        "examined": examined,
        "bounds": necessary,
        "reason": (
            "no nondegenerate minimal code exists"
            if strategy == SearchStrategy.EXHAUSTIVE
            else "trial budget exhausted"
        ),
    }
    if (
        strategy == SearchStrategy.EXHAUSTIVE
        and all(necessary.values())
        and bound is not None
        and bound > 0
    ):
        raise InternalInconsistency(
            f"Exhaustive search found nothing although the existence bound is {bound}"
        )
    return SearchResult(None, None, strategy, examined, bound, certificate)
