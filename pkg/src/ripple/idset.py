"""Node identities and the identity-keyed sets that hold DCG edges.

The set operations come in two flavours. ``IdSet`` itself is mutable and is
what the engine edits in place when it adds or drops an edge. The module
functions (``set_insert``, ``set_union`` ...) never touch their arguments and
always hand back a set, which keeps them usable as a persistent interface.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class NodeId:
    """Opaque handle for one node of one engine.

    ``engine`` is the owning engine's serial, so ids minted by different
    engines never compare equal even when their indices match.
    """

    engine: int
    index: int

    def __repr__(self) -> str:
        return f"NodeId({self.engine}:{self.index})"


class IdSet:
    __slots__ = ("_members",)

    def __init__(self, members: Iterable[NodeId] = ()) -> None:
        # dict keys keep insertion order, so iteration is deterministic
        self._members: dict[NodeId, None] = dict.fromkeys(members)

    def __contains__(self, item: object) -> bool:
        return item in self._members

    def __iter__(self) -> Iterator[NodeId]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdSet):
            return NotImplemented
        return self._members.keys() == other._members.keys()

    def __repr__(self) -> str:
        return f"IdSet({list(self._members)!r})"

    def add(self, item: NodeId) -> None:
        self._members[item] = None

    def discard(self, item: NodeId) -> None:
        self._members.pop(item, None)

    def copy(self) -> IdSet:
        return IdSet(self._members)

    def snapshot(self) -> tuple[NodeId, ...]:
        return tuple(self._members)


def set_empty() -> IdSet:
    return IdSet()


def set_mem(item: NodeId, members: IdSet) -> bool:
    return item in members


def set_insert(item: NodeId, members: IdSet) -> IdSet:
    if item in members:
        return members
    extended = members.copy()
    extended.add(item)
    return extended


def set_remove(item: NodeId, members: IdSet) -> IdSet:
    if item not in members:
        return members
    reduced = members.copy()
    reduced.discard(item)
    return reduced


def set_union(left: IdSet, right: IdSet) -> IdSet:
    merged = left.copy()
    for item in right:
        merged.add(item)
    return merged


def set_intersect(left: IdSet, right: IdSet) -> IdSet:
    return IdSet(item for item in left if item in right)


def set_for_each(action: Callable[[NodeId], object], members: IdSet) -> None:
    # iterate a snapshot: callers are allowed to edit the set they walk
    for item in members.snapshot():
        action(item)


def set_to_list(members: IdSet) -> list[NodeId]:
    return list(members)
