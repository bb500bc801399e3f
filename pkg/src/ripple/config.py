from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any
import tomllib

from ripple.errors import config_error

CONFIG_FILE = "ripple.toml"


@dataclass(slots=True)
class SheetSettings:
    precision: int = 12
    recursion_limit: int = 20000
    prompt: str = "> "


def load_sheet_settings(config_path: Path | None = None) -> SheetSettings:
    if config_path is not None and not config_path.exists():
        raise config_error(
            f"Config file {config_path} does not exist.",
            f"Pass an existing file to --config or drop the option to use ./{CONFIG_FILE}.",
        )
    path = config_path if config_path is not None else Path.cwd() / CONFIG_FILE
    if not path.exists():
        return SheetSettings()

    try:
        data = tomllib.loads(path.read_text())
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
        raise config_error(
            f"Could not parse {path.name}.",
            "Fix the TOML syntax or remove the file and rely on defaults.",
        ) from exc

    validate_top_level_keys(data)

    display = expect_table(data, "display", optional=True)
    engine = expect_table(data, "engine", optional=True)
    repl = expect_table(data, "repl", optional=True)

    defaults = SheetSettings()
    return SheetSettings(
        precision=read_int(display, "precision", 1, 17) if display and "precision" in display else defaults.precision,
        recursion_limit=(
            read_int(engine, "recursion_limit", 1000, None)
            if engine and "recursion_limit" in engine
            else defaults.recursion_limit
        ),
        prompt=read_string(repl, "prompt") if repl and "prompt" in repl else defaults.prompt,
    )


def validate_top_level_keys(data: dict[str, Any]) -> None:
    allowed_keys = {"display", "engine", "repl"}
    unknown = sorted(key for key in data if key not in allowed_keys)
    if unknown:
        raise config_error(
            f"Unknown top-level keys in {CONFIG_FILE}: {', '.join(unknown)}.",
            "Use only [display], [engine], and [repl] in ripple.toml.",
        )


def expect_table(data: dict[str, Any], key: str, optional: bool = False) -> dict[str, Any] | None:
    value = data.get(key)
    if value is None and optional:
        return None
    if value is None:
        raise config_error(f"Missing [{key}] table in {CONFIG_FILE}.", f"Add [{key}] or remove {CONFIG_FILE}.")
    if not isinstance(value, dict):
        raise config_error(f"[{key}] must be a table.", f"Rewrite [{key}] as a TOML table.")
    return value


def read_int(table: dict[str, Any], key: str, minimum: int, maximum: int | None) -> int:
    value = table.get(key)
    in_range = isinstance(value, int) and not isinstance(value, bool) and value >= minimum
    if in_range and maximum is not None:
        in_range = value <= maximum
    if not in_range:
        bounds = f"between {minimum} and {maximum}" if maximum is not None else f"at least {minimum}"
        raise config_error(f"[{key}] must be an integer {bounds}.", f"Set `{key}` to an integer {bounds}.")
    return value


def read_string(table: dict[str, Any], key: str) -> str:
    value = table.get(key)
    if not isinstance(value, str) or not value:
        raise config_error(
            f"[{key}] must be a non-empty string.",
            f"Set `{key}` to a short string such as `'> '`.",
        )
    return value
