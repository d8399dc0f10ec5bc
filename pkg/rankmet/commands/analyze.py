import argparse
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, ClassVar

from ..code import (
    RankCode,
    effective_code,
    generalized_rank_weights,
    is_nondegenerate,
    is_one_weight,
    weight_distribution,
)
from ..errors import BudgetExceeded, InternalInconsistency, RankMetError
from ..geometry import linearity_index, phi
from ..minimal import MinimalityMethod, bounds_ledger, is_minimal
from ..serialization import load_code
from .base import BaseCommand, CommandResult
from .run import run

logger = logging.getLogger(__name__)

METHOD_CHOICES = ("pairwise", "cutting", "lambda-sum", "all")


def parse_method(name: str) -> tuple[MinimalityMethod, bool]:
    """CLI method name to (method, cross_check)."""
    if name == "all":
        return MinimalityMethod.CUTTING, True
    return MinimalityMethod(name.replace("-", "_")), False


class AnalyzeCommand(BaseCommand):
    """Parameters, weights, minimality and bounds of one code."""

    name: ClassVar[str] = "analyze"
    help: ClassVar[str] = "analyze a code or system file"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", type=Path, help="code or system JSON file")
        parser.add_argument("--method", choices=METHOD_CHOICES, default="cutting")

    async def __call__(self, *, file: Path, method: str = "cutting", **kwargs) -> CommandResult:
        return await run(self.analyze_file, file, method, timeout=self.config.timeout)

    def analyze_file(self, file: Path, method: str = "cutting") -> CommandResult:
        return self.analyze(load_code(file), method)

    def analyze(self, code: RankCode, method: str = "cutting") -> CommandResult:
        budget = self.config.budget
        minimality_method, cross_check = parse_method(method)
        report: dict[str, Any] = {"parameters": code.parameters}
        skipped: dict[str, str] = {}
        exceeded = False

        def record(name: str, compute: Callable[[], Any]) -> None:
            nonlocal exceeded
            try:
                report[name] = compute()
            except BudgetExceeded as e:
                exceeded = True
                skipped[name] = e.message
            except InternalInconsistency:
                raise
            except RankMetError as e:
                skipped[name] = e.message

        def nondegeneracy():
            found = is_nondegenerate(code, budget=budget)
            report["effective_length"] = found.effective_length
            return found

        record("nondegeneracy", nondegeneracy)
        distribution = None
        try:
            distribution = weight_distribution(code, budget)
        except BudgetExceeded as e:
            exceeded = True
            skipped["weight_distribution"] = e.message
        if distribution is not None:
            report["weight_distribution"] = distribution.counts
            report["d"] = distribution.min_distance
            report["w_rk"] = distribution.max_weight
            report["one_weight"] = code.k > 0 and is_one_weight(code, budget)

        if code.k == 0:
            skipped["geometry"] = "The zero code has no q-system"
            report["skipped"] = skipped
            return CommandResult(output=report, exit_code=3 if exceeded else 0)

        reduced = effective_code(code)
        record(
            "generalized_weights",
            lambda: generalized_rank_weights(reduced, budget, cross_check=True),
        )
        record(
            "linearity_index",
            lambda: linearity_index(phi(reduced), cross_check=True, budget=budget),
        )
        record(
            "minimality",
            lambda: is_minimal(code, minimality_method, cross_check, budget),
        )
        record("bounds_ledger", lambda: bounds_ledger(code, budget))
        if skipped:
            report["skipped"] = skipped
        logger.info("analyzed [%d,%d] code, %d fields skipped", code.n, code.k, len(skipped))
        return CommandResult(output=report, exit_code=3 if exceeded else 0)
