import argparse
from typing import ClassVar

from ..errors import InvalidArgs
from ..gf import build_field, field_from_order, field_info, parse_element
from .base import BaseCommand, CommandResult


def _coefficients(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",")]
    except ValueError as exc:
        raise InvalidArgs(f"Modulus must be comma-separated integers, got {text!r}") from exc


class FieldCommand(BaseCommand):
    """Describe a field tower and convert elements between notations."""

    name: ClassVar[str] = "field"
    help: ClassVar[str] = "describe F_q^m over F_q and convert elements"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--q", type=int, help="base field order (prime power)")
        parser.add_argument("--p", type=int, help="characteristic, with --e")
        parser.add_argument("--e", type=int, default=1)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument(
            "--modulus", help="ascending coefficients c_0,...,c_em of the defining polynomial"
        )
        parser.add_argument("elements", nargs="*", help="integers or g^i")

    async def __call__(
        self,
        *,
        m: int,
        q: int | None = None,
        p: int | None = None,
        e: int = 1,
        modulus: str | None = None,
        elements: list[str] | None = None,
        **kwargs,
    ) -> CommandResult:
        coefficients = None if modulus is None else _coefficients(modulus)
        if p is not None:
            ctx = build_field(p, e, m, coefficients)
        elif q is not None:
            ctx = field_from_order(q, m, modulus=coefficients)
        else:
            raise InvalidArgs("field needs --q or --p")
        conversions = []
        for token in elements or []:
            value = parse_element(ctx, token)
            conversions.append({"input": token, "value": value, "power": ctx.label(value)})
        output = field_info(ctx)
        if conversions:
            output["elements"] = conversions
        return CommandResult(output=output)
