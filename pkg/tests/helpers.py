from __future__ import annotations

from collections.abc import Callable
from functools import partial
from pathlib import Path
import shutil
from typing import Any

from ripple.avar import AVar, avar_get, avar_new
from ripple.graph import Engine
from ripple.idset import NodeId
from ripple.memo import amemo, memoize
from ripple.observe import force
from ripple.values import NIL, Pair, is_pair

FIXTURES = Path(__file__).parent / "fixtures"


def copy_fixture(tmp_path: Path, name: str) -> Path:
    source = FIXTURES / name
    destination = tmp_path / name
    if source.is_dir():
        shutil.copytree(source, destination)
    else:
        shutil.copyfile(source, destination)
    return destination


def write_script(tmp_path: Path, *lines: str) -> Path:
    script = tmp_path / "session.sheet"
    script.write_text("".join(f"{line}\n" for line in lines))
    return script


def plain_max_tree() -> tuple[Callable[[Any], Any], Callable[[Any], Any]]:
    """max-tree and max-tree-path memoized the naive way."""

    @memoize
    def max_tree(tree: Any) -> Any:
        if is_pair(tree):
            return max(max_tree(tree.car), max_tree(tree.cdr))
        return tree

    @memoize
    def max_tree_path(tree: Any) -> Any:
        if is_pair(tree):
            if max_tree(tree.car) > max_tree(tree.cdr):
                return Pair("left", max_tree_path(tree.car))
            return Pair("right", max_tree_path(tree.cdr))
        return NIL

    return max_tree, max_tree_path


def adapton_max_tree(engine: Engine) -> tuple[Callable[[Any], Any], Callable[[Any], Any]]:
    """The same pair of functions, memoized through the engine."""

    @partial(amemo, engine)
    def max_tree(tree: Any) -> Any:
        if isinstance(tree, NodeId):
            return max_tree(force(engine, tree))
        if isinstance(tree, Pair):
            return max(max_tree(tree.car), max_tree(tree.cdr))
        return tree

    @partial(amemo, engine)
    def max_tree_path(tree: Any) -> Any:
        if isinstance(tree, NodeId):
            return max_tree_path(force(engine, tree))
        if isinstance(tree, Pair):
            if max_tree(tree.car) > max_tree(tree.cdr):
                return Pair("left", max_tree_path(tree.car))
            return Pair("right", max_tree_path(tree.cdr))
        return NIL

    return max_tree, max_tree_path


def avar_tree(engine: Engine) -> dict[str, AVar]:
    lucky = avar_new(engine, lambda: 7, label="lucky")
    t1 = avar_new(engine, lambda: Pair(1, 2), label="t1")
    t2 = avar_new(engine, lambda: Pair(3, 4), label="t2")
    some_tree = avar_new(engine, lambda: Pair(avar_get(t1), avar_get(t2)), label="some-tree")
    return {"lucky": lucky, "t1": t1, "t2": t2, "some_tree": some_tree}


def counting(func: Callable[..., Any]) -> tuple[Callable[..., Any], list[int]]:
    calls = [0]

    def wrapped(*args: Any) -> Any:
        calls[0] += 1
        return func(*args)

    return wrapped, calls


def assert_edges_symmetric(engine: Engine, nodes: list[NodeId]) -> None:
    for node_id in nodes:
        node = engine.node(node_id)
        for sub in node.subs:
            assert node_id in engine.node(sub).supers
        for sup in node.supers:
            assert node_id in engine.node(sup).subs
