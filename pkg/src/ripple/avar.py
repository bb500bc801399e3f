"""Adapton variables: refs whose contents are suspended expressions.

Assigning an avar swaps in a new expression, not a value, so everything that
read the variable is re-evaluated against the new expression on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ripple.errors import usage_error
from ripple.graph import Computation, Engine, NodeKind
from ripple.idset import NodeId
from ripple.observe import force, suspend


@dataclass(frozen=True, slots=True)
class AVar:
    engine: Engine = field(compare=False, repr=False)
    ref: NodeId


def avar_of(engine: Engine, thunk: NodeId, label: str | None = None) -> AVar:
    _expect_thunk(engine, thunk)
    return AVar(engine=engine, ref=engine.make_ref(thunk, label=label))


def avar_new(engine: Engine, comp: Computation, label: str | None = None) -> AVar:
    return avar_of(engine, suspend(engine, comp, label=label), label=label)


def avar_get(var: AVar) -> Any:
    thunk = force(var.engine, var.ref)
    return force(var.engine, thunk)


def avar_assign(var: AVar, thunk: NodeId) -> None:
    _expect_thunk(var.engine, thunk)
    var.engine.ref_set(var.ref, thunk)


def avar_set(var: AVar, comp: Computation, label: str | None = None) -> None:
    avar_assign(var, suspend(var.engine, comp, label=label))


def _expect_thunk(engine: Engine, thunk: NodeId) -> None:
    if engine.node(thunk).kind is not NodeKind.THUNK:
        raise usage_error(
            f"{engine.describe(thunk)} is a ref; an avar must hold a thunk.",
            "Wrap the expression with suspend before storing it in an avar.",
        )
