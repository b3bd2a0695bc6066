"""Deterministic CSV emission.

All float values are printed in lowercase scientific notation with six
significant digits and files end every line with LF, so repeated runs of
the same configuration produce byte-identical output.
"""

from __future__ import annotations

from pathlib import Path


def fmt(value: float) -> str:
    """Format a float as lowercase scientific with 6 significant digits."""
    return format(float(value), ".5e")


def render(lines: list[str]) -> str:
    return "\n".join(lines) + "\n"


def write_csv(path: Path, lines: list[str]) -> None:
    path.write_text(render(lines), encoding="utf-8", newline="\n")
