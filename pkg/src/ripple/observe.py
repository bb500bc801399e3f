from __future__ import annotations

from typing import Any

from ripple.graph import Computation, Engine
from ripple.idset import NodeId
from ripple.values import Pair, Value


def force(engine: Engine, node_id: NodeId) -> Any:
    """Compute ``node_id`` and record it as a subcomputation of the caller.

    The caller is whatever node the engine is currently adapting; a
    top-level force records nothing. The adapting slot is restored even when
    the computation raises, but an edge is only added on success.
    """
    previous = engine.adapting
    engine.adapting = node_id
    try:
        result = engine.compute(node_id)
    finally:
        engine.adapting = previous
    if previous is not None:
        engine.add_edge(previous, node_id)
    return result


def suspend(engine: Engine, comp: Computation, label: str | None = None) -> NodeId:
    return engine.make_thunk(comp, label=label)


def remove_adapton(engine: Engine, value: Value) -> Value:
    """Deep-copy ``value`` with every node reference replaced by its forced value."""
    if isinstance(value, Pair):
        return Pair(remove_adapton(engine, value.car), remove_adapton(engine, value.cdr))
    if isinstance(value, NodeId):
        return remove_adapton(engine, force(engine, value))
    return value
