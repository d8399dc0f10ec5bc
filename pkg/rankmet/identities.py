"""q-analogues of the Pless identities and statistics of q^{n - rk(v)}."""

import logging
from dataclasses import dataclass
from fractions import Fraction

import galois

from .code import RankCode, column_rank, dual, weight_distribution
from .config import resolve_budget
from .errors import Degenerate, InternalInconsistency, InvalidArgs
from .linalg import gaussian_binomial

logger = logging.getLogger(__name__)


def f_q(q: int, n: int, m: int, k: int, j: int, r: int) -> Fraction:
    """Σ_{ν=j}^{r} q^{m(k-ν)} [n-j, ν-j]_q [r, ν]_q ∏_{ℓ<ν} (q^ν - q^ℓ).

    Exact; a Fraction since q^{m(k-ν)} has a negative exponent when ν > k.
    """
    if q < 2 or not galois.is_prime_power(q):
        raise InvalidArgs(f"{q} is not a prime power")
    if not 0 <= j <= r <= n:
        raise InvalidArgs(f"Needs 0 <= j <= r <= n, got j={j}, r={r}, n={n}")
    total = Fraction(0)
    for nu in range(j, r + 1):
        product = 1
        for ell in range(nu):
            product *= q**nu - q**ell
        coefficient = gaussian_binomial(n - j, nu - j, q) * gaussian_binomial(r, nu, q) * product
        total += Fraction(q) ** (m * (k - nu)) * coefficient
    return total


@dataclass(frozen=True)
class PlessReport:
    r: int
    lhs: Fraction
    rhs: Fraction
    equal: bool


def pless_check(code: RankCode, r: int, budget: int | None = None) -> PlessReport:
    """Σ_{v∈C} q^{r(n-rk v)} against Σ_j A_j(C^⊥) f_q(n, m, k, j, r)."""
    ctx = code.ctx
    q, m, n, k = ctx.q, ctx.m, code.n, code.k
    if not 0 <= r <= n:
        raise InvalidArgs(f"Needs 0 <= r <= n={n}, got r={r}")
    limit = resolve_budget(budget)
    counts = weight_distribution(code, limit).counts
    dual_counts = weight_distribution(dual(code, allow_zero=True), limit).counts
    lhs = Fraction(sum(a * q ** (r * (n - i)) for i, a in enumerate(counts)))
    rhs = sum(
        (dual_counts[j] * f_q(q, n, m, k, j, r) for j in range(r + 1) if dual_counts[j]),
        Fraction(0),
    )
    if lhs != rhs:
        raise InternalInconsistency(f"Pless identity fails for r={r}: {lhs} != {rhs}")
    return PlessReport(r=r, lhs=lhs, rhs=rhs, equal=True)


def pless_table(code: RankCode, budget: int | None = None) -> tuple[PlessReport, ...]:
    limit = resolve_budget(budget)
    return tuple(pless_check(code, r, limit) for r in range(code.n + 1))


@dataclass(frozen=True)
class TotalWeightStats:
    """Mean and variance of q^{n - rk(v)} over the nonzero codewords."""

    mean: Fraction
    variance: Fraction
    formula_mean: Fraction
    formula_var_bound: Fraction
    rank_2_nondegenerate: bool

    @property
    def variance_bound_attained(self) -> bool:
        return self.variance == self.formula_var_bound


def formula_mean(q: int, m: int, n: int, k: int) -> Fraction:
    Q = q ** (m * k)
    return Fraction(-(q**n) + Q + q ** (m * (k - 1)) * (q**n - 1), Q - 1)


def formula_variance_bound(q: int, m: int, n: int, k: int) -> Fraction:
    second = f_q(q, n, m, k, 0, 2) if n >= 2 else _f_0_2_closed(q, m, n, k)
    return (second - q ** (2 * n)) / (q ** (m * k) - 1) - formula_mean(q, m, n, k) ** 2


def _f_0_2_closed(q: int, m: int, n: int, k: int) -> Fraction:
    q = Fraction(q)
    return (
        q ** (m * k)
        + q ** (m * (k - 1)) * (q**n - 1) * (q + 1)
        + q ** (m * (k - 2) + 1) * (q**n - 1) * (q ** (n - 1) - 1)
    )


def total_weight_stats(code: RankCode, budget: int | None = None) -> TotalWeightStats:
    ctx = code.ctx
    q, m, n, k = ctx.q, ctx.m, code.n, code.k
    if k == 0:
        raise InvalidArgs("The zero code has no nonzero codewords")
    if column_rank(code) != n:
        raise Degenerate(f"Code has effective length {column_rank(code)} < n = {n}")
    limit = resolve_budget(budget)
    counts = weight_distribution(code, limit).counts
    nonzero = ctx.order**k - 1
    mean = Fraction(sum(a * q ** (n - i) for i, a in enumerate(counts) if i), nonzero)
    second = Fraction(sum(a * q ** (2 * (n - i)) for i, a in enumerate(counts) if i), nonzero)
    variance = second - mean**2

    if n >= 2 and f_q(q, n, m, k, 0, 2) != _f_0_2_closed(q, m, n, k):
        raise InternalInconsistency("f_q(n,m,k,0,2) differs from its closed form")
    stats = TotalWeightStats(
        mean=mean,
        variance=variance,
        formula_mean=formula_mean(q, m, n, k),
        formula_var_bound=formula_variance_bound(q, m, n, k),
        rank_2_nondegenerate=_rank_2_nondegenerate(code, limit),
    )
    if stats.mean != stats.formula_mean:
        raise InternalInconsistency(f"Mean {stats.mean} differs from {stats.formula_mean}")
    if stats.variance < stats.formula_var_bound:
        raise InternalInconsistency(
            f"Variance {stats.variance} is below the bound {stats.formula_var_bound}"
        )
    if stats.variance_bound_attained != stats.rank_2_nondegenerate:
        raise InternalInconsistency(
            "Variance bound attained "
            f"{stats.variance_bound_attained}, dual distance >= 3 {stats.rank_2_nondegenerate}"
        )
    return stats


def _rank_2_nondegenerate(code: RankCode, budget: int) -> bool:
    other = dual(code, allow_zero=True)
    if other.k == 0:
        return True
    return weight_distribution(other, budget).min_distance >= 3


def asymptotic_mean_ratio(q: int, m: int, n: int, k: int) -> Fraction:
    """Exact mean divided by its large-q form. Diagnostic only."""
    if n <= m - 1:
        form = Fraction(1)
    elif n == m:
        form = Fraction(2)
    else:
        form = Fraction(q) ** (n - m)
    return formula_mean(q, m, n, k) / form


def asymptotic_variance_ratio(q: int, m: int, n: int, k: int) -> Fraction | None:
    """Variance bound divided by its large-q form, for k >= 3 and n <= mk/2. Diagnostic only."""
    if k < 3 or 2 * n > m * k:
        return None
    if n == m - 1:
        form = Fraction(1)
    elif n == m:
        form = Fraction(q)
    elif n == m + 1:
        form = Fraction(q) ** 2
    elif k <= n <= m - 2 or n >= m + 2:
        form = Fraction(q) ** (n - m + 1)
    else:
        return None
    ratio = formula_variance_bound(q, m, n, k) / form
    logger.debug("variance ratio for q=%d, m=%d, n=%d, k=%d is %s", q, m, n, k, float(ratio))
    return ratio
