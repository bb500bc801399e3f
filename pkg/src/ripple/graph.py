"""The demanded computation graph: nodes, edges, compute and dirtying.

Nothing here records edges automatically; that is the job of
``ripple.observe.force``. Code that drives the engine directly must add its
own edges inside its computations, before they are cleared by the next
recompute.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
import itertools
import logging
from typing import Any

from ripple.errors import cycle_error, usage_error
from ripple.idset import IdSet, NodeId
from ripple.values import Value

logger = logging.getLogger(__name__)

Computation = Callable[[], Any]


class NodeKind(Enum):
    THUNK = "thunk"
    REF = "ref"


class _Absent:
    __slots__ = ()

    def __repr__(self) -> str:
        return "ABSENT"


ABSENT = _Absent()


@dataclass(slots=True)
class Node:
    kind: NodeKind
    comp: Computation
    result: Any
    subs: IdSet = field(default_factory=IdSet)
    supers: IdSet = field(default_factory=IdSet)
    clean: bool = False
    label: str | None = None
    recomputes: int = 0


@dataclass(slots=True)
class EngineStats:
    recomputes: int = 0
    dirtied: int = 0


class Engine:
    """Owner of one DCG.

    An engine is single-threaded: it can move between threads but must never
    be used from two at once.
    """

    _serials = itertools.count(1)

    def __init__(self) -> None:
        self.serial = next(Engine._serials)
        self.adapting: NodeId | None = None
        self.stats = EngineStats()
        self._nodes: list[Node] = []
        self._in_progress: set[NodeId] = set()

    def __len__(self) -> int:
        return len(self._nodes)

    def node(self, node_id: NodeId) -> Node:
        if not isinstance(node_id, NodeId) or node_id.engine != self.serial:
            raise usage_error(
                f"{node_id!r} does not belong to this engine.",
                "Only pass node ids created by the same engine.",
            )
        try:
            return self._nodes[node_id.index]
        except IndexError:
            raise usage_error(
                f"Unknown node {node_id!r}.",
                "Create nodes with make_thunk or make_ref before using them.",
            ) from None

    def describe(self, node_id: NodeId) -> str:
        label = self.node(node_id).label
        return f"`{label}`" if label else repr(node_id)

    def is_computing(self) -> bool:
        return bool(self._in_progress)

    def make_thunk(self, comp: Computation, label: str | None = None) -> NodeId:
        return self._register(Node(kind=NodeKind.THUNK, comp=comp, result=ABSENT, label=label))

    def make_ref(self, value: Value, label: str | None = None) -> NodeId:
        node = Node(kind=NodeKind.REF, comp=lambda: node.result, result=value, clean=True, label=label)
        return self._register(node)

    def add_edge(self, a_super: NodeId, a_sub: NodeId) -> None:
        self.node(a_super).subs.add(a_sub)
        self.node(a_sub).supers.add(a_super)

    def del_edge(self, a_super: NodeId, a_sub: NodeId) -> None:
        self.node(a_super).subs.discard(a_sub)
        self.node(a_sub).supers.discard(a_super)

    def compute(self, node_id: NodeId) -> Any:
        node = self.node(node_id)
        if node_id in self._in_progress:
            logger.debug("cycle through %s", self.describe(node_id))
            raise cycle_error(
                f"Cycle detected: {self.describe(node_id)} was demanded while it was being computed.",
                "Break the circular dependency so every computation bottoms out in refs or constants.",
            )

        while not node.clean:
            for sub in node.subs.snapshot():
                self.del_edge(node_id, sub)
            node.clean = True
            self._in_progress.add(node_id)
            try:
                node.result = node.comp()
            except BaseException:
                node.clean = False
                raise
            finally:
                self._in_progress.discard(node_id)
            if node.kind is NodeKind.THUNK:
                node.recomputes += 1
                self.stats.recomputes += 1
                logger.debug("recomputed %s", self.describe(node_id))
        return node.result

    def dirty(self, node_id: NodeId) -> None:
        flipped = 0
        pending = [node_id]
        while pending:
            node = self.node(pending.pop())
            if not node.clean:
                continue
            node.clean = False
            flipped += 1
            pending.extend(node.supers.snapshot())
        self.stats.dirtied += flipped
        if flipped:
            logger.debug("dirty wave from %s flipped %d node(s)", self.describe(node_id), flipped)

    def ref_set(self, node_id: NodeId, value: Value) -> None:
        node = self.node(node_id)
        if node.kind is not NodeKind.REF:
            raise usage_error(
                f"{self.describe(node_id)} is a thunk, not a ref.",
                "Only refs can be assigned; create one with make_ref.",
            )
        if self._in_progress:
            raise usage_error(
                f"Cannot assign {self.describe(node_id)} while a computation is running.",
                "Perform mutations between forces, never inside a computation.",
            )
        node.result = value
        self.dirty(node_id)

    def _register(self, node: Node) -> NodeId:
        node_id = NodeId(engine=self.serial, index=len(self._nodes))
        self._nodes.append(node)
        return node_id
