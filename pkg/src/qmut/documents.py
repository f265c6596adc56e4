"""Quiver document format: JSON with decimal-string weights.

Shape:

    {
      "vertices": [{"id": "A", "frozen": true}, ...],
      "arrows": [{"from": "A", "to": "B", "weight": "2"}, ...]
    }

Weights travel as decimal strings so arbitrary-precision multiplicities
round-trip exactly.  Field order and two-space indentation are fixed for
reproducible diffs; vertex order is the quiver's insertion order.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError, QmutError
from .quiver import Quiver

_WEIGHT_RE = re.compile(r"^(0|[1-9][0-9]*)$")


def quiver_to_document(q: Quiver) -> dict:
    return {
        "vertices": [
            {"id": name, "frozen": frozen}
            for name, frozen in zip(q.names, q.frozen_flags)
        ],
        "arrows": [
            {"from": src, "to": dst, "weight": str(weight)}
            for src, dst, weight in q.arrows()
        ],
    }


def serialize_quiver(q: Quiver) -> str:
    return json.dumps(quiver_to_document(q), indent=2) + "\n"


def _parse_weight(raw, where: str) -> int:
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        if not _WEIGHT_RE.match(raw):
            raise ParseError(f"{where}: weight must be a decimal integer string, got {raw!r}")
        return int(raw)
    raise ParseError(f"{where}: weight must be a decimal string, got {type(raw).__name__}")


def quiver_from_document(doc) -> Quiver:
    if not isinstance(doc, dict):
        raise ParseError(f"document must be an object, got {type(doc).__name__}")
    vertices_raw = doc.get("vertices")
    if not isinstance(vertices_raw, list) or not vertices_raw:
        raise ParseError("vertices: expected a nonempty list")
    vertices = []
    for idx, item in enumerate(vertices_raw):
        where = f"vertices[{idx}]"
        if not isinstance(item, dict) or "id" not in item:
            raise ParseError(f"{where}: expected an object with an 'id' field")
        vid = item["id"]
        if not isinstance(vid, str):
            raise ParseError(f"{where}.id: expected a string")
        frozen = item.get("frozen", False)
        if not isinstance(frozen, bool):
            raise ParseError(f"{where}.frozen: expected a boolean")
        vertices.append((vid, frozen))

    arrows_raw = doc.get("arrows", [])
    if not isinstance(arrows_raw, list):
        raise ParseError("arrows: expected a list")
    arrows = []
    for idx, item in enumerate(arrows_raw):
        where = f"arrows[{idx}]"
        if not isinstance(item, dict):
            raise ParseError(f"{where}: expected an object")
        for fieldname in ("from", "to", "weight"):
            if fieldname not in item:
                raise ParseError(f"{where}: missing field {fieldname!r}")
        src, dst = item["from"], item["to"]
        if not isinstance(src, str) or not isinstance(dst, str):
            raise ParseError(f"{where}: 'from' and 'to' must be strings")
        arrows.append((src, dst, _parse_weight(item["weight"], f"{where}.weight")))

    try:
        return Quiver(vertices, arrows)
    except QmutError:
        raise


def parse_quiver(data) -> Quiver:
    """Parse a serialized quiver document (bytes or text)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as err:
        raise ParseError(f"line {err.lineno}, column {err.colno}: {err.msg}") from None
    return quiver_from_document(doc)
