from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
import re
from typing import TextIO

from ripple.config import SheetSettings
from ripple.errors import RippleError, usage_error
from ripple.formula import Formula, parse_formula
from ripple.sheet import Sheet

_SET = re.compile(r"set\s+(?P<cell>[^\s=]+)\s*=(?P<formula>.*)")
_GET = re.compile(r"get\s+(?P<cell>\S+)")


@dataclass(slots=True)
class SetCommand:
    cell: str
    formula: Formula


@dataclass(slots=True)
class GetCommand:
    cell: str


@dataclass(slots=True)
class BareCommand:
    name: str


Command = SetCommand | GetCommand | BareCommand


def parse_command(line: str) -> Command | None:
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    if text in ("cells", "stats", "quit"):
        return BareCommand(text)
    if match := _SET.fullmatch(text):
        return SetCommand(cell=match["cell"], formula=parse_formula(match["formula"].strip()))
    if match := _GET.fullmatch(text):
        return GetCommand(cell=match["cell"])
    raise usage_error(
        f"Unknown command `{text}`.",
        "Use `set <cell> = <formula>`, `get <cell>`, `cells`, `stats` or `quit`.",
    )


def execute(sheet: Sheet, command: Command, out: TextIO) -> None:
    match command:
        case SetCommand(cell, formula):
            sheet.set_cell(cell, formula)
        case GetCommand(cell):
            print(sheet.format(sheet.get_cell(cell)), file=out)
        case BareCommand("cells"):
            for name, value in sheet.listing():
                print(f"{name}={'?' if value is None else sheet.format(value)}", file=out)
        case BareCommand("stats"):
            print(f"recomputes: {sheet.take_recomputes()}", file=out)


def run_repl(sheet: Sheet, stream_in: TextIO, out: TextIO, interactive: bool = False) -> int:
    """Process commands line by line; in script mode any failure makes the exit code 1."""
    failed = False
    while True:
        if interactive:
            out.write(sheet.settings.prompt)
            out.flush()
        line = stream_in.readline()
        if not line:
            break
        try:
            command = parse_command(line)
            if command is None:
                continue
            if command == BareCommand("quit"):
                break
            execute(sheet, command, out)
        except RippleError as exc:
            failed = True
            print(f"error: {exc.message}", file=out)
    if interactive:
        return 0
    return 1 if failed else 0


def run_script(script: Path, settings: SheetSettings, out: TextIO) -> int:
    if not script.is_file():
        raise usage_error(
            f"Script {script} does not exist.",
            "Pass a readable file with one sheet command per line.",
        )
    with script.open() as stream:
        return run_repl(Sheet(settings), stream, out)
