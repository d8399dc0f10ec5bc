import argparse
from typing import Any, ClassVar

from ..minimal import SearchStrategy, search_minimal
from ..serialization import code_to_json
from .base import BaseCommand, CommandResult
from .run import run


class SearchCommand(BaseCommand):
    """Look for a minimal code with given parameters."""

    name: ClassVar[str] = "search"
    help: ClassVar[str] = "search for a nondegenerate minimal [n,k]_{q^m/q} code"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--k", type=int, required=True)
        strategy = parser.add_mutually_exclusive_group()
        strategy.add_argument(
            "--exhaustive",
            dest="strategy",
            action="store_const",
            const=SearchStrategy.EXHAUSTIVE.value,
        )
        strategy.add_argument(
            "--random",
            dest="strategy",
            action="store_const",
            const=SearchStrategy.RANDOM.value,
        )
        parser.set_defaults(strategy=SearchStrategy.EXHAUSTIVE.value)
        parser.add_argument("--trials", type=int, default=100)

    async def __call__(
        self,
        *,
        q: int,
        m: int,
        n: int,
        k: int,
        strategy: str = SearchStrategy.EXHAUSTIVE.value,
        trials: int = 100,
        **kwargs,
    ) -> CommandResult:
        return await run(
            search,
            q,
            m,
            n,
            k,
            strategy=SearchStrategy(strategy),
            trials=trials,
            seed=self.config.seed,
            budget=self.config.budget,
            timeout=self.config.timeout,
        )


def search(
    q: int,
    m: int,
    n: int,
    k: int,
    *,
    strategy: SearchStrategy,
    trials: int,
    seed: int,
    budget: int,
) -> CommandResult:
    result = search_minimal(
        q, m, n, k, strategy=strategy, trials=trials, seed=seed, budget=budget
    )
    output: dict[str, Any] = {
        "parameters": {"q": q, "m": m, "n": n, "k": k},
        "strategy": result.strategy,
        "examined": result.examined,
        "existence_bound": result.bound,
        "found": result.code is not None,
    }
    if result.code is not None:
        output["code"] = code_to_json(result.code)
        output["minimality"] = result.report
    else:
        output["certificate"] = result.certificate
    return CommandResult(output=output)
