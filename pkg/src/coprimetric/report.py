"""Deterministic rendering of command results.

Rules shared by every command: JSON carries all integers as decimal
strings (nothing is squeezed through binary64, so no 53-bit loss), real
numbers are rendered with 12 significant digits, CSV uses plain decimal
digits with a fixed header row, and identical inputs produce
byte-identical output (no timestamps, no environment echoes).
"""

from __future__ import annotations

import io
import json
import os
import sys


def fmt_real(x: float) -> str:
    """Display-grade real: 12 significant digits."""
    return f"{x:.12g}"


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _jsonable(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt_real(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_json(payload: dict) -> str:
    return json.dumps(_jsonable(payload), indent=2) + "\n"


def render_csv(header: list[str], rows: list[list[str]]) -> str:
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(row) + "\n")
    return out.getvalue()


def color_enabled(stream) -> bool:
    """ANSI color for table output only on a tty and when NO_COLOR is unset."""
    return stream.isatty() and not os.environ.get("NO_COLOR")


def paint(text: str, code: str, enable: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if enable else text


def render_table(columns: list[str], rows: list[list[str]]) -> str:
    widths = [len(c) for c in columns]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def emit(text: str, output_path: str | None) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
