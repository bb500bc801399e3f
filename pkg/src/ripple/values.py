from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ripple.idset import NodeId


class Nil:
    __slots__ = ()

    def __repr__(self) -> str:
        return "NIL"


NIL = Nil()


@dataclass(frozen=True, slots=True)
class Pair:
    car: Any
    cdr: Any


@dataclass(eq=False, slots=True)
class MutablePair:
    """A cons cell that can be edited in place.

    Equality and hashing are by identity: a mutated cell is still the same
    key, which is exactly what makes plain memoization go stale.
    """

    car: Any
    cdr: Any


# what computations may return; strings double as symbols
Value = int | float | bool | str | Pair | MutablePair | Nil | NodeId


def is_pair(value: object) -> bool:
    return isinstance(value, (Pair, MutablePair))


def from_list(items: list[Any]) -> Any:
    result: Any = NIL
    for item in reversed(items):
        result = Pair(item, result)
    return result


def to_list(value: Any) -> list[Any]:
    items: list[Any] = []
    while is_pair(value):
        items.append(value.car)
        value = value.cdr
    if value is not NIL:
        raise ValueError(f"improper list tail: {render_value(value)}")
    return items


def render_value(value: Any) -> str:
    """Print a value the way a Scheme REPL would, dotted pairs included."""
    if value is NIL:
        return "()"
    if isinstance(value, bool):
        return "#t" if value else "#f"
    if is_pair(value):
        parts = [render_value(value.car)]
        tail = value.cdr
        while is_pair(tail):
            parts.append(render_value(tail.car))
            tail = tail.cdr
        if tail is not NIL:
            parts.extend([".", render_value(tail)])
        return f"({' '.join(parts)})"
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)
