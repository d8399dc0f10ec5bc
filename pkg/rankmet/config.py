"""Run-wide constants and the enumeration budget."""

import logging
import os
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path

from .errors import BudgetExceeded, InvalidArgs

logger = logging.getLogger(__name__)

DEFAULT_BUDGET: int = 10**7
MAX_FIELD_ORDER: int = 2**20
SCHEMA_VERSION: int = 1
BUDGET_ENV_VAR: str = "RANKMET_BUDGET"


class OutputFormat(StrEnum):
    JSON = "json"
    TEXT = "text"


def default_budget() -> int:
    """The budget from the environment, falling back to DEFAULT_BUDGET."""
    raw = os.getenv(BUDGET_ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        budget = int(raw)
    except ValueError as exc:
        raise InvalidArgs(
            f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from exc
    if budget <= 0:
        raise InvalidArgs(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    return budget


def resolve_budget(budget: int | None) -> int:
    if budget is None:
        return default_budget()
    if budget <= 0:
        raise InvalidArgs(f"Budget must be positive, got {budget}")
    return budget


def check_budget(required: int, budget: int | None, what: str) -> int:
    """Raise BudgetExceeded when `required` steps exceed the budget."""
    limit = resolve_budget(budget)
    logger.debug("budget check for %s: %d of %d", what, required, limit)
    if required > limit:
        raise BudgetExceeded(what, required, limit)
    return limit


@dataclass(kw_only=True, frozen=True)
class RunConfig:
    """Settings shared by every subcommand of one invocation."""

    budget: int = field(default_factory=default_budget)
    seed: int = 0
    output: Path | None = None
    format: OutputFormat = OutputFormat.JSON
    timeout: float | None = None

    def __post_init__(self):
        if self.budget <= 0:
            raise InvalidArgs(f"Budget must be positive, got {self.budget}")
        if not 0 <= self.seed < 2**64:
            raise InvalidArgs(f"Seed must fit in 64 bits, got {self.seed}")
