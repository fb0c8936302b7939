"""Fixture polygons shipped with the package.

``paths()`` lists the valid fixtures; the ``invalid/`` directory holds inputs
that must be rejected (self-crossing, non-integer, out of range).
"""

from pathlib import Path

HERE = Path(__file__).parent


def paths() -> list[Path]:
    return sorted(p for p in HERE.iterdir() if p.suffix in (".txt", ".json"))


def invalid_paths() -> dict[str, Path]:
    return {p.stem: p for p in sorted((HERE / "invalid").iterdir())}
