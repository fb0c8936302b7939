"""Reading and writing polygon files.

Two formats are accepted:

* plain text, one vertex per line as two whitespace-separated integers,
  with ``#`` starting a comment;
* a single JSON array of ``[x, y]`` integer pairs.

The format is detected from the first non-blank character (``[`` means
JSON).
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import ParseError
from .polygon import Polygon

_INT = re.compile(r"[+-]?\d+\Z")


def _reject_nonint(token):
    raise ParseError(f"non-integer value {token!r}")


def _parse_json(text: str) -> list[tuple[int, int]]:
    try:
        data = json.loads(
            text, parse_float=_reject_nonint, parse_constant=_reject_nonint
        )
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(data, list):
        raise ParseError("top level must be an array of [x, y] pairs")
    out = []
    for i, item in enumerate(data):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(type(c) is int for c in item)
        ):
            raise ParseError(f"entry {i} is not an [x, y] integer pair: {item!r}")
        out.append((item[0], item[1]))
    return out


def _parse_text(text: str) -> list[tuple[int, int]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {body!r}")
        for tok in tokens:
            if not _INT.match(tok):
                raise ParseError(f"line {lineno}: {tok!r} is not an integer")
        out.append((int(tokens[0]), int(tokens[1])))
    return out


def parse_vertices(text: str) -> list[tuple[int, int]]:
    """Vertex pairs from file contents, without geometric validation."""
    if text.lstrip().startswith("["):
        vs = _parse_json(text)
    else:
        vs = _parse_text(text)
    if len(vs) < 3:
        raise ParseError(f"need at least 3 vertices, found {len(vs)}")
    return vs


def read_polygon(path) -> Polygon:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8 text") from None
    return Polygon(tuple(parse_vertices(text)))


def format_polygon(vertices, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([[int(x), int(y)] for x, y in vertices]) + "\n"
    if fmt == "text":
        return "".join(f"{x} {y}\n" for x, y in vertices)
    raise ValueError(f"unknown polygon format {fmt!r}")


def write_polygon(path, vertices, fmt: str = "text") -> None:
    Path(path).write_text(format_polygon(vertices, fmt), encoding="utf-8")
