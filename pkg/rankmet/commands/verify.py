import argparse
import asyncio
import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import Any, ClassVar

from ..code import (
    RankCode,
    classify_one_weight,
    column_rank,
    effective_code,
)
from ..errors import BudgetExceeded, InternalInconsistency
from ..geometry import (
    code_transform,
    hyperplane_weight_law,
    phi,
    psi,
    standard_equations_check,
)
from ..hamming import (
    as_hamming_code,
    associated_code,
    hamming_minimality_witness,
    is_hamming_minimal,
    total_weight_check,
    verify_generalized_weight_correspondence,
    verify_weight_correspondence,
)
from ..identities import pless_table, total_weight_stats
from ..minimal import MinimalityMethod, bounds_ledger, is_minimal, verify_witness
from ..serialization import load_code
from .base import BaseCommand, CommandResult
from .run import run

logger = logging.getLogger(__name__)


class Suite(StrEnum):
    CORRESPONDENCE = "correspondence"
    IDENTITIES = "identities"
    MINIMALITY = "minimality"
    ALL = "all"


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    actual: Any
    passed: bool
    detail: Any = None


def _check(name: str, expected: Any, compute: Callable[[], Any], detail: Any = None) -> Check:
    """Compare a computed value with its expectation; a raised inconsistency fails the check."""
    try:
        actual = compute()
    except InternalInconsistency as e:
        return Check(name=name, expected=expected, actual=None, passed=False, detail=e.message)
    return Check(name=name, expected=expected, actual=actual, passed=actual == expected, detail=detail)


def correspondence_suite(code: RankCode, budget: int) -> list[Check]:
    reduced = effective_code(code)
    system = phi(reduced)
    round_trip = psi(system)
    checks = [
        _check("phi_psi_equivalent", True, lambda: code_transform(reduced, round_trip) is not None),
        _check("hyperplane_weight_law", True, lambda: hyperplane_weight_law(system, budget).holds),
    ]
    for r in range(1, reduced.k):
        checks.append(
            _check(
                f"standard_equations_r{r}",
                True,
                lambda r=r: standard_equations_check(system, r, budget).holds,
            )
        )
    weights = verify_weight_correspondence(reduced, budget)
    checks.append(
        Check(
            name="weight_correspondence",
            expected=True,
            actual=weights.holds,
            passed=weights.holds,
            detail=weights,
        )
    )
    generalized = verify_generalized_weight_correspondence(reduced, budget)
    checks.append(
        Check(
            name="generalized_weight_correspondence",
            expected=generalized.expected,
            actual=generalized.hamming_weights,
            passed=generalized.holds,
        )
    )
    total = total_weight_check(associated_code(reduced, budget), budget)
    checks.append(
        Check(name="hamming_total_weight", expected=total.expected, actual=total.total, passed=total.holds)
    )
    return checks


def identities_suite(code: RankCode, budget: int) -> list[Check]:
    checks = []
    try:
        for report in pless_table(code, budget):
            checks.append(
                Check(name=f"pless_r{report.r}", expected=report.rhs, actual=report.lhs, passed=True)
            )
    except InternalInconsistency as e:
        checks.append(Check(name="pless", expected=True, actual=False, passed=False, detail=e.message))
    if code.k > 0 and column_rank(code) == code.n:
        try:
            stats = total_weight_stats(code, budget)
        except InternalInconsistency as e:
            checks.append(Check(name="total_weight_stats", expected=True, actual=False, passed=False, detail=e.message))
        else:
            checks.append(
                Check(name="mean", expected=stats.formula_mean, actual=stats.mean, passed=True)
            )
            checks.append(
                Check(
                    name="variance_bound_attained",
                    expected=stats.rank_2_nondegenerate,
                    actual=stats.variance_bound_attained,
                    passed=True,
                    detail={"variance": stats.variance, "bound": stats.formula_var_bound},
                )
            )
    return checks


def minimality_suite(code: RankCode, budget: int) -> tuple[list[Check], dict[str, Any]]:
    checks = []
    try:
        report = is_minimal(code, MinimalityMethod.PAIRWISE, cross_check=True, budget=budget)
    except InternalInconsistency as e:
        checks.append(Check(name="methods_agree", expected=True, actual=False, passed=False, detail=e.message))
        return checks, {}
    checks.append(Check(name="methods_agree", expected=True, actual=True, passed=True))
    checks.append(
        Check(
            name="rank_minimal",
            expected=True,
            actual=report.verdict,
            passed=report.verdict,
            detail=report.witness,
        )
    )
    if report.witness is not None:
        checks.append(_check("witness_verified", True, lambda: verify_witness(code, report)))
    reduced = effective_code(code)
    checks.append(
        _check(
            "associated_hamming_minimal",
            report.verdict,
            lambda: is_hamming_minimal(associated_code(reduced, budget), budget),
        )
    )
    checks.append(_check("bounds_consistent", True, lambda: bounds_ledger(code, budget) is not None))
    if code.k >= 2:
        checks.append(
            _check(
                "one_weight_classification",
                True,
                lambda: classify_one_weight(code, budget) is not None,
            )
        )
    raw = hamming_minimality_witness(as_hamming_code(code), budget)
    observations = {"raw_hamming_minimal": raw.verdict}
    if not raw.verdict:
        observations["raw_hamming_witness"] = {"contained": raw.contained, "container": raw.container}
    return checks, observations


def run_suite(suite: Suite, file: Path, budget: int) -> CommandResult:
    """One suite on the code stored in `file`; a budget overrun skips the suite."""
    code = load_code(file)
    try:
        match suite:
            case Suite.CORRESPONDENCE:
                checks, observations = correspondence_suite(code, budget), None
            case Suite.IDENTITIES:
                checks, observations = identities_suite(code, budget), None
            case Suite.MINIMALITY:
                checks, observations = minimality_suite(code, budget)
    except BudgetExceeded as e:
        return CommandResult(output={"skipped": e.message}, exit_code=e.exit_code)
    passed = all(check.passed for check in checks)
    output: dict[str, Any] = {"passed": passed, "checks": checks}
    if observations is not None:
        output["observations"] = observations
    return CommandResult(output=output, exit_code=0 if passed else 1)


class VerifyCommand(BaseCommand):
    """Cross-check the correspondences, identities and minimality tests on one code."""

    name: ClassVar[str] = "verify"
    help: ClassVar[str] = "run verification suites on a code or system file"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", type=Path, help="code or system JSON file")
        parser.add_argument(
            "suite", nargs="?", choices=[suite.value for suite in Suite], default=Suite.ALL.value
        )

    async def __call__(self, *, file: Path, suite: str = Suite.ALL.value, **kwargs) -> CommandResult:
        code = load_code(file)
        return await self.verify(code, file, Suite(suite))

    async def verify(self, code: RankCode, file: Path, suite: Suite) -> CommandResult:
        budget, timeout = self.config.budget, self.config.timeout
        selected = list(Suite)[:-1] if suite == Suite.ALL else [suite]
        results = await asyncio.gather(
            *(run(run_suite, name, file, budget, timeout=timeout) for name in selected)
        )

        output: dict[str, Any] = {"parameters": code.parameters, "suites": {}}
        exit_code = 0
        for name, result in zip(selected, results, strict=True):
            report = dict(result.output)
            if "observations" in report:
                output["observations"] = report.pop("observations")
            output["suites"][name.value] = report
            exit_code = max(exit_code, result.exit_code)
        output["passed"] = exit_code == 0
        logger.info("verification finished with exit code %d", exit_code)
        return CommandResult(output=output, exit_code=exit_code)
