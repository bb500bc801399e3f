"""A spreadsheet whose cells are avars holding compiled formulas.

Formula thunks are memoized on the formula itself, so two cells with the
same formula share a node, and putting a cell back to a formula it held
earlier picks up that formula's still-valid result.
"""

from __future__ import annotations

import logging
import sys

from ripple.avar import AVar, avar_assign, avar_get, avar_of
from ripple.config import SheetSettings
from ripple.errors import evaluation_error, lookup_error, usage_error
from ripple.formula import CELL_NAME, Formula, evaluate, format_number
from ripple.graph import Engine
from ripple.memo import amemo_lazy

logger = logging.getLogger(__name__)


class Sheet:
    def __init__(self, settings: SheetSettings | None = None, engine: Engine | None = None) -> None:
        self.settings = settings or SheetSettings()
        self.engine = engine or Engine()
        self.cells: dict[str, AVar] = {}
        self._baseline = self.engine.stats.recomputes
        self._formula_thunk = amemo_lazy(self.engine, self._evaluate, describe=str)
        if sys.getrecursionlimit() < self.settings.recursion_limit:
            sys.setrecursionlimit(self.settings.recursion_limit)

    def set_cell(self, name: str, formula: Formula) -> None:
        if not CELL_NAME.fullmatch(name):
            raise usage_error(
                f"Invalid cell name `{name}`.",
                "Cell names start with a letter followed by letters or digits, for example `p1`.",
            )
        thunk = self._formula_thunk(formula)
        var = self.cells.get(name)
        if var is None:
            self.cells[name] = avar_of(self.engine, thunk, label=name)
        else:
            avar_assign(var, thunk)
        logger.debug("set %s = %s", name, formula)

    def get_cell(self, name: str) -> float:
        try:
            return self._resolve(name)
        except RecursionError:
            raise evaluation_error(
                f"Formula chain behind `{name}` is too deep to evaluate.",
                "Raise [engine].recursion_limit in ripple.toml.",
            ) from None

    def peek_cell(self, name: str) -> float | None:
        """Return the cached value of a cell, or None while it is dirty."""
        var = self.cells[name]
        ref = self.engine.node(var.ref)
        if not ref.clean:
            return None
        thunk = self.engine.node(ref.result)
        return thunk.result if thunk.clean else None

    def listing(self) -> list[tuple[str, float | None]]:
        return [(name, self.peek_cell(name)) for name in sorted(self.cells)]

    def take_recomputes(self) -> int:
        current = self.engine.stats.recomputes
        delta = current - self._baseline
        self._baseline = current
        return delta

    def format(self, value: float) -> str:
        return format_number(value, self.settings.precision)

    def _evaluate(self, formula: Formula) -> float:
        return evaluate(formula, self._resolve)

    def _resolve(self, name: str) -> float:
        var = self.cells.get(name)
        if var is None:
            raise lookup_error(
                f"Unknown cell `{name}`.",
                f"Define it first with `set {name} = <formula>`.",
            )
        return avar_get(var)
