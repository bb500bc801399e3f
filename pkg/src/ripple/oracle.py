"""Referee for the sheet: cache-free evaluation and random command traces.

``oracle_eval`` knows nothing about nodes, edges or dirty bits. It walks the
formula graph from scratch on every call, so any disagreement with
``Sheet.get_cell`` points at the incremental machinery.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
import random

from ripple.errors import RippleError, cycle_error, lookup_error
from ripple.formula import Formula, evaluate
from ripple.repl import GetCommand, SetCommand, parse_command
from ripple.sheet import Sheet


@dataclass(slots=True)
class SpecGraph:
    cells: dict[str, Formula] = field(default_factory=dict)

    def set(self, name: str, formula: Formula) -> None:
        self.cells[name] = formula


@dataclass(slots=True)
class Divergence:
    step: int
    command: str
    expected: str
    actual: str


def oracle_eval(graph: SpecGraph, name: str) -> float:
    # values found during this one call are shared between its branches and
    # thrown away afterwards; nothing survives to the next query
    finished: dict[str, float] = {}

    def visit(cell: str, visiting: frozenset[str]) -> float:
        if cell in visiting:
            raise cycle_error(
                f"Cycle detected: `{cell}` refers back to itself.",
                "Break the circular reference between cells.",
            )
        if cell in finished:
            return finished[cell]
        formula = graph.cells.get(cell)
        if formula is None:
            raise lookup_error(f"Unknown cell `{cell}`.", f"Define it first with `set {cell} = <formula>`.")
        value = evaluate(formula, lambda ref: visit(ref, visiting | {cell}))
        finished[cell] = value
        return value

    return visit(name, frozenset())


def random_trace(seed: int, n_cells: int, n_ops: int, set_ratio: float = 0.4) -> list[str]:
    """Define every cell once, then mix ``n_ops`` random sets and gets.

    Cell ``c<i>`` only ever refers to cells with a smaller index, so every
    trace is acyclic.
    """
    if n_cells < 1:
        raise ValueError("n_cells must be at least 1")
    rng = random.Random(seed)
    commands = [f"set c{index} = {_random_formula(rng, index)}" for index in range(n_cells)]
    for _ in range(n_ops):
        index = rng.randrange(n_cells)
        if rng.random() < set_ratio:
            commands.append(f"set c{index} = {_random_formula(rng, index)}")
        else:
            commands.append(f"get c{index}")
    return commands


def _random_formula(rng: random.Random, index: int) -> str:
    constant = str(rng.randint(0, 9))
    if index == 0 or rng.random() < 0.3:
        return constant
    a = f"c{rng.randrange(index)}"
    b = f"c{rng.randrange(index)}"
    shapes = [
        f"{a} + {b}",
        f"{a} - {b}",
        f"{a} * {rng.randint(1, 3)}",
        f"-{a} + {constant}",
        f"({a} + {b}) / 2",
    ]
    return rng.choice(shapes)


def run_against_oracle(commands: list[str], sheet: Sheet | None = None) -> list[Divergence]:
    """Replay ``commands`` on a sheet and a SpecGraph in lockstep, collecting every disagreement."""
    sheet = sheet or Sheet()
    graph = SpecGraph()
    divergences: list[Divergence] = []
    for step, line in enumerate(commands):
        command = parse_command(line)
        match command:
            case SetCommand(cell, formula):
                sheet.set_cell(cell, formula)
                graph.set(cell, formula)
            case GetCommand(cell):
                expected = _outcome(lambda: oracle_eval(graph, cell))
                actual = _outcome(lambda: sheet.get_cell(cell))
                if expected != actual:
                    divergences.append(Divergence(step=step, command=line, expected=expected, actual=actual))
    return divergences


def _outcome(read: Callable[[], float]) -> str:
    try:
        return repr(read())
    except RippleError as exc:
        return f"error[{exc.category}]"
