from __future__ import annotations

from pathlib import Path
import sys
from typing import Iterable, TextIO

from watchfiles import watch

from ripple.config import SheetSettings
from ripple.errors import tooling_error
from ripple.repl import run_script


def touches_script(script: Path, changed_paths: Iterable[str]) -> bool:
    target = script.resolve()
    return any(Path(raw_path).resolve() == target for raw_path in changed_paths)


def run_watch_loop(script: Path, settings: SheetSettings, stdout: TextIO | None = None) -> int:
    stream = stdout or sys.stdout
    replay(script, settings, stream, "initial")

    try:
        # editors often replace the file, so watch its directory
        for changes in watch(script.resolve().parent, raise_interrupt=False):
            if not touches_script(script, [path for _, path in changes]):
                continue
            replay(script, settings, stream, "change")
    except KeyboardInterrupt:
        return 0
    except OSError as exc:
        raise tooling_error(
            "The file watcher failed.",
            "Check that the script's directory exists and is readable.",
        ) from exc
    return 0


def replay(script: Path, settings: SheetSettings, stream: TextIO, reason: str) -> None:
    print(f"==> run: {reason}", file=stream)
    if not script.is_file():
        print("FAILED run: script is missing", file=stream)
        return
    exit_code = run_script(script, settings, stream)
    print("OK run" if exit_code == 0 else "FAILED run", file=stream)
