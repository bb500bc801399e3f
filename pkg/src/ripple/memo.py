"""Plain and DCG-aware memoization.

``memoize`` is the classic argument-keyed cache and is unsound once its
arguments can change underneath it. ``amemo_lazy`` memoizes the *thunk* for
each argument tuple instead of the value, so equal arguments share one node
and the engine keeps that node consistent; ``amemo`` forces the shared node.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable
from dataclasses import dataclass
import functools
from typing import Any

from ripple.graph import Engine
from ripple.idset import NodeId
from ripple.observe import force, suspend
from ripple.values import Pair

ArgKey = tuple[Hashable, ...]


@dataclass(frozen=True, slots=True)
class Hit:
    value: Any


def _key_of(value: Any) -> Hashable:
    # bool is an int subclass; tag it so True and 1 stay distinct keys
    if isinstance(value, bool):
        return ("#bool", value)
    if isinstance(value, Pair):
        return ("#pair", _key_of(value.car), _key_of(value.cdr))
    return value


def arg_key(args: tuple[Any, ...]) -> ArgKey:
    return tuple(_key_of(arg) for arg in args)


class MemoTable:
    """Unbounded argument-key store; adding an existing key replaces its binding."""

    __slots__ = ("_entries",)

    def __init__(self) -> None:
        self._entries: dict[ArgKey, Any] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def add(self, key: ArgKey, value: Any) -> None:
        self._entries[key] = value

    def lookup(self, key: ArgKey) -> Hit | None:
        try:
            return Hit(self._entries[key])
        except KeyError:
            return None


def memoize(func: Callable[..., Any]) -> Callable[..., Any]:
    table = MemoTable()

    @functools.wraps(func)
    def wrapped(*args: Any) -> Any:
        key = arg_key(args)
        hit = table.lookup(key)
        if hit is not None:
            return hit.value
        result = func(*args)
        table.add(key, result)
        return result

    wrapped.memo_table = table  # type: ignore[attr-defined]
    return wrapped


def amemo_lazy(
    engine: Engine,
    func: Callable[..., Any],
    describe: Callable[..., str] | None = None,
) -> Callable[..., NodeId]:
    name = getattr(func, "__name__", "amemo")

    def make_node(*args: Any) -> NodeId:
        label = describe(*args) if describe else f"{name}{args!r}"
        return suspend(engine, lambda: func(*args), label=label)

    lazy = memoize(make_node)
    functools.update_wrapper(lazy, func)
    return lazy


def amemo(engine: Engine, func: Callable[..., Any]) -> Callable[..., Any]:
    lazy = amemo_lazy(engine, func)

    @functools.wraps(func)
    def wrapped(*args: Any) -> Any:
        return force(engine, lazy(*args))

    wrapped.lazy = lazy  # type: ignore[attr-defined]
    return wrapped
