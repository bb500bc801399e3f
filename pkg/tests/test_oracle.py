import pytest

from ripple.errors import RippleError
from ripple.formula import parse_formula, references
from ripple.memo import memoize
from ripple.oracle import SpecGraph, oracle_eval, random_trace, run_against_oracle
from ripple.repl import SetCommand, parse_command
from ripple.sheet import Sheet


def graph_of(**formulas: str) -> SpecGraph:
    graph = SpecGraph()
    for name, text in formulas.items():
        graph.set(name, parse_formula(text))
    return graph


def test_oracle_evaluates_from_scratch() -> None:
    graph = graph_of(n1="1", n2="2", n3="3", p1="n1 + n2", p2="p1 + n3")

    assert oracle_eval(graph, "p2") == 6
    graph.set("n1", parse_formula("5"))
    assert oracle_eval(graph, "p2") == 10


def test_oracle_small_graphs() -> None:
    graph = graph_of(a="1", b="a + 2", c="b * a - (b - a) / 2")

    assert oracle_eval(graph, "b") == 3
    assert oracle_eval(graph, "c") == 2


def test_oracle_reports_cycles_and_unknown_cells() -> None:
    graph = graph_of(a="b", b="a + 1", c="d")

    with pytest.raises(RippleError) as exc_info:
        oracle_eval(graph, "a")
    assert exc_info.value.category == "cycle"

    with pytest.raises(RippleError) as exc_info:
        oracle_eval(graph, "c")
    assert exc_info.value.category == "lookup"


def test_oracle_shares_work_within_one_call() -> None:
    # 40 cells, each reading the previous one twice
    formulas = {"c0": "1"} | {f"c{index}": f"c{index - 1} + c{index - 1}" for index in range(1, 40)}

    assert oracle_eval(graph_of(**formulas), "c39") == 2.0**39


def test_random_trace_is_deterministic() -> None:
    assert random_trace(7, 5, 50) == random_trace(7, 5, 50)
    assert random_trace(7, 5, 50) != random_trace(8, 5, 50)


def test_random_trace_defines_every_cell_first() -> None:
    trace = random_trace(3, n_cells=6, n_ops=30)

    assert len(trace) == 36
    assert [line.split(" = ")[0] for line in trace[:6]] == [f"set c{index}" for index in range(6)]


def test_random_trace_only_refers_to_lower_cells() -> None:
    for line in random_trace(11, n_cells=20, n_ops=500, set_ratio=0.7):
        command = parse_command(line)
        if isinstance(command, SetCommand):
            own = int(command.cell[1:])
            assert all(int(name[1:]) < own for name in references(command.formula))


def test_random_trace_needs_a_cell() -> None:
    with pytest.raises(ValueError):
        random_trace(1, n_cells=0, n_ops=10)


def test_sheet_agrees_with_the_oracle_on_random_traces() -> None:
    for seed in range(100):
        assert run_against_oracle(random_trace(seed, n_cells=20, n_ops=1000)) == []


def test_sheet_agrees_with_the_oracle_on_errors() -> None:
    commands = ["set a = b", "get a", "set b = a", "get a", "set b = 2", "get a", "set c = 1 / (b - 2)", "get c"]

    assert run_against_oracle(commands) == []


class ValueCachingSheet(Sheet):
    """A sheet that memoizes answers by cell name and never invalidates them."""

    def __init__(self) -> None:
        super().__init__()
        self.get_cell = memoize(super().get_cell)


def test_referee_catches_a_sheet_with_stale_answers() -> None:
    commands = ["set n1 = 1", "set p1 = n1 + 1", "get p1", "set n1 = 5", "get p1"]

    divergences = run_against_oracle(commands, sheet=ValueCachingSheet())

    assert len(divergences) == 1
    assert divergences[0].step == 4
    assert divergences[0].expected == "6.0"
    assert divergences[0].actual == "2.0"
