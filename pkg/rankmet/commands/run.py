"""Utility to run blocking computations off the event loop with a timeout."""

import asyncio
import multiprocessing
from collections.abc import Callable
from typing import Any, TypeVar

from ..serialization import to_jsonable
from .base import CommandResult

T = TypeVar("T")


def _call_in_worker(func: Callable[..., T], args: tuple, kwargs: dict[str, Any]) -> T:
    result = func(*args, **kwargs)
    # field arrays do not pickle; reports travel back as JSON-ready data
    if isinstance(result, CommandResult) and result.output is not None:
        return result.replace(output=to_jsonable(result.output))
    return result


async def run(
    func: Callable[..., T],
    *args: Any,
    timeout: float | None = None,  # seconds
    **kwargs: Any,
) -> T:
    """Run `func(*args, **kwargs)` and give up after `timeout`.

    Without a timeout the call runs in a thread. With one it runs in a worker
    process that is terminated when the timeout expires, so `func` and its
    arguments must pickle. A CommandResult then comes back with its output
    already converted by `to_jsonable`.
    """
    if timeout is None:
        return await asyncio.to_thread(func, *args, **kwargs)

    loop = asyncio.get_running_loop()
    future: asyncio.Future = loop.create_future()

    def settle(value: Any, failed: bool) -> None:
        if future.done():
            return
        if failed:
            future.set_exception(value)
        else:
            future.set_result(value)

    pool = multiprocessing.get_context().Pool(processes=1)
    try:
        pool.apply_async(
            _call_in_worker,
            (func, args, kwargs),
            callback=lambda value: loop.call_soon_threadsafe(settle, value, False),
            error_callback=lambda exc: loop.call_soon_threadsafe(settle, exc, True),
        )
        return await asyncio.wait_for(future, timeout=timeout)
    except asyncio.TimeoutError as exc:
        raise TimeoutError(
            f"Computation '{getattr(func, '__name__', func)}' timed out after {timeout} seconds"
        ) from exc
    finally:
        pool.terminate()
