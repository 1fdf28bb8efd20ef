"""JSON-lines and text encodings for trees, paths, sequence pairs and polynomials."""

from __future__ import annotations

import json
from typing import IO, Iterator

from .dyck import LabelledDyckPath2, SequencePair
from .genfunc import GenPolynomial
from .trees import TieredRootedTree


def dumps(obj) -> str:
    """One compact JSON line for any value in this package."""
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, separators=(",", ":"))


def from_dict(data: dict):
    """Rebuild a tree, path, sequence pair or polynomial from its JSON object."""
    if "parent" in data:
        return TieredRootedTree.from_dict(data)
    if "steps" in data:
        return LabelledDyckPath2.from_dict(data)
    if "a" in data and "b" in data:
        return SequencePair.from_dict(data)
    if "terms" in data:
        return GenPolynomial.from_dict(data)
    raise ValueError(f"unrecognised object with keys {sorted(data)}")


def loads(line: str):
    return from_dict(json.loads(line))


def to_text(obj) -> str:
    if isinstance(obj, GenPolynomial):
        return obj.to_text().rstrip("\n")
    return obj.text()


def from_text(line: str):
    """Parse the one-line text forms; the shape of the line decides the type."""
    fields = line.strip().split(";")
    if len(fields) == 3 and fields[0][:1] in ("N", "E"):
        steps, pix, piy = fields
        return LabelledDyckPath2(steps, _ints(pix), _ints(piy))
    if len(fields) == 3:
        return TieredRootedTree.from_text(line)
    if len(fields) == 2:
        return SequencePair(_ints(fields[0]), _ints(fields[1]))
    raise ValueError(f"cannot parse {line!r}")


def _ints(s: str) -> list[int]:
    return [int(x) for x in s.split(",") if x.strip()]


def read_lines(stream: IO[str]) -> Iterator[tuple[int, str]]:
    for number, line in enumerate(stream, start=1):
        if line.strip():
            yield number, line


def read_objects(stream: IO[str]) -> Iterator[tuple[int, object]]:
    """Yield ``(line_number, object)`` from JSON lines or text lines."""
    for number, line in read_lines(stream):
        stripped = line.strip()
        obj = loads(stripped) if stripped.startswith("{") else from_text(stripped)
        yield number, obj
