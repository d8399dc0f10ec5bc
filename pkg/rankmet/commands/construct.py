import argparse
from enum import StrEnum
from pathlib import Path
from typing import Any, ClassVar

from ..errors import InvalidArgs
from ..gf import field_from_order, parse_element
from ..minimal import (
    construct_k_minus_1_m,
    construct_scattered_633,
    construct_simplex,
    extend_minimal,
)
from ..serialization import code_to_json, load_code
from .base import BaseCommand, CommandResult
from .run import run


class ConstructionKind(StrEnum):
    SIMPLEX = "simplex"
    SCATTERED633 = "scattered633"
    KM1M = "km1m"
    EXTEND = "extend"


class ConstructCommand(BaseCommand):
    """Write the code file of a known construction."""

    name: ClassVar[str] = "construct"
    help: ClassVar[str] = "build simplex, scattered [6,3], [(k-1)m,k] or extended codes"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", choices=[kind.value for kind in ConstructionKind])
        parser.add_argument("--q", type=int, default=2)
        parser.add_argument("--m", type=int, default=2)
        parser.add_argument("--k", type=int, default=2)
        parser.add_argument("--file", type=Path, help="minimal code to extend")
        parser.add_argument(
            "--column", nargs="+", help="new column for extend, as integers or g^i"
        )

    async def __call__(
        self,
        *,
        kind: str,
        q: int = 2,
        m: int = 2,
        k: int = 2,
        file: Path | None = None,
        column: list[str] | None = None,
        **kwargs,
    ) -> CommandResult:
        return await run(
            self.construct,
            ConstructionKind(kind),
            q=q,
            m=m,
            k=k,
            file=file,
            column=column,
            timeout=self.config.timeout,
        )

    def construct(
        self,
        kind: ConstructionKind,
        *,
        q: int,
        m: int,
        k: int,
        file: Path | None = None,
        column: list[str] | None = None,
    ) -> CommandResult:
        budget = self.config.budget
        properties: dict[str, Any] = {"kind": kind.value}
        match kind:
            case ConstructionKind.SIMPLEX:
                code = construct_simplex(field_from_order(q, m), k)
            case ConstructionKind.SCATTERED633:
                example = construct_scattered_633(budget)
                code = example.code
                properties["condition_hits"] = example.condition_hits
            case ConstructionKind.KM1M:
                code = construct_k_minus_1_m(field_from_order(q, m), k, budget)
            case ConstructionKind.EXTEND:
                if file is None or not column:
                    raise InvalidArgs("extend needs --file and --column")
                base = load_code(file)
                values = [parse_element(base.ctx, token) for token in column]
                code = extend_minimal(base, values, check=True)
        return CommandResult(output={**code_to_json(code), "construction": properties})
