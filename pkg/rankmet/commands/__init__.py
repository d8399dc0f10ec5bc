from .analyze import AnalyzeCommand
from .base import BaseCommand, CommandFailure, CommandResult
from .collection import CommandCollection
from .construct import ConstructCommand
from .field import FieldCommand
from .search import SearchCommand
from .verify import VerifyCommand

COMMANDS: tuple[type[BaseCommand], ...] = (
    AnalyzeCommand,
    ConstructCommand,
    VerifyCommand,
    SearchCommand,
    FieldCommand,
)

__all__ = [
    "COMMANDS",
    "AnalyzeCommand",
    "BaseCommand",
    "CommandCollection",
    "CommandFailure",
    "CommandResult",
    "ConstructCommand",
    "FieldCommand",
    "SearchCommand",
    "VerifyCommand",
]
