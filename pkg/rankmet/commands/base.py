import argparse
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, replace
from typing import Any, ClassVar

from ..config import RunConfig


class BaseCommand(metaclass=ABCMeta):
    """Abstract base class for rankmet subcommands."""

    name: ClassVar[str]
    help: ClassVar[str]

    def __init__(self, config: RunConfig):
        self.config = config

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        raise NotImplementedError

    @abstractmethod
    async def __call__(self, **kwargs) -> "CommandResult":
        """Executes the command with the parsed arguments."""
        ...


@dataclass(kw_only=True, frozen=True)
class CommandResult:
    """Represents the result of a command execution."""

    output: dict[str, Any] | None = None
    error: str | None = None
    exit_code: int = 0

    def replace(self, **kwargs):
        """Returns a new CommandResult with the given fields replaced."""
        return replace(self, **kwargs)


class CommandFailure(CommandResult):
    """A CommandResult that represents a failure."""
