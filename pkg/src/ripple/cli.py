from __future__ import annotations

import logging
from pathlib import Path
import sys

import typer

from ripple.config import load_sheet_settings
from ripple.errors import RippleError, usage_error
from ripple.repl import run_repl, run_script
from ripple.sheet import Sheet
from ripple.watch import run_watch_loop

app = typer.Typer(
    name="sheet",
    add_completion=False,
    help="Incremental spreadsheet REPL backed by a demanded computation graph.",
)


def _handle_error(exc: RippleError) -> None:
    first, second = exc.render()
    typer.secho(first, err=True, fg=typer.colors.RED)
    typer.echo(second, err=True)
    raise typer.Exit(exc.exit_code)


@app.command()
def run(
    script: Path | None = typer.Option(None, "--script", help="Replay commands from FILE instead of stdin."),
    watch_script: bool = typer.Option(False, "--watch", help="Replay the script again whenever it changes."),
    config: Path | None = typer.Option(None, "--config", help="Settings file (default: ./ripple.toml)."),
    verbose: bool = typer.Option(False, "--verbose", help="Log engine activity to stderr."),
) -> None:
    """Start the sheet REPL, or replay a script of sheet commands."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        settings = load_sheet_settings(config)
        if watch_script:
            if script is None:
                raise usage_error("--watch needs a script to replay.", "Run `sheet --script FILE --watch`.")
            exit_code = run_watch_loop(script, settings)
        elif script is not None:
            exit_code = run_script(script, settings, sys.stdout)
        else:
            exit_code = run_repl(Sheet(settings), sys.stdin, sys.stdout, interactive=True)
    except RippleError as exc:
        _handle_error(exc)
    raise typer.Exit(exit_code)


def main() -> None:
    app()
