"""Collection class for dispatching subcommands."""

import logging
from typing import Any

from ..errors import RankMetError
from .base import BaseCommand, CommandFailure, CommandResult

logger = logging.getLogger(__name__)


class CommandCollection:
    """A collection of rankmet subcommands."""

    def __init__(self, *commands: BaseCommand):
        self.commands = commands
        self.command_map = {command.name: command for command in commands}

    async def run(self, *, name: str, command_input: dict[str, Any]) -> CommandResult:
        command = self.command_map.get(name)
        if not command:
            return CommandFailure(error=f"Command {name} is invalid", exit_code=2)
        try:
            return await command(**command_input)
        except RankMetError as e:
            logger.info("%s failed with %s", name, type(e).__name__)
            return CommandFailure(
                output={"error": type(e).__name__, "message": e.message},
                error=e.message,
                exit_code=e.exit_code,
            )
        except TimeoutError as e:
            return CommandFailure(
                output={"error": "Timeout", "message": str(e)},
                error=str(e),
                exit_code=2,
            )

