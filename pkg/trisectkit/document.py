"""JSON diagram documents.

Canonical layout (keys always in this order, one family per line):

    {
      "format_version": "1",
      "surface": {"genus": 2, "boundary": 2},
      "families": {
        "alpha": [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0]],
        "beta": [...],
        "gamma": [...]
      },
      "metadata": {"name": "D1", "description": "..."}
    }

``metadata`` is optional. Parsing checks structure only; homological validation is separate.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .config import COORDINATE_MAGNITUDE_CAP, FORMAT_VERSION
from .diagram import FAMILIES, ClosedTrisectionDiagram, RelativeTrisectionDiagram, TrisectionDiagram
from .errors import DocumentSchemaError, DocumentSyntaxError
from .surface import H1Class, SurfaceModel

LOGGER = logging.getLogger(__name__)

TOP_LEVEL_KEYS = ("format_version", "surface", "families", "metadata")
SURFACE_KEYS = ("genus", "boundary")
METADATA_KEYS = ("name", "description")


@dataclass(frozen=True)
class DiagramDocument:
    diagram: TrisectionDiagram
    format_version: str = FORMAT_VERSION
    metadata: dict[str, str] = field(default_factory=dict)


def _warn_unknown(where: str, payload: dict[str, Any], known: tuple[str, ...]) -> None:
    for key in payload:
        if key not in known:
            LOGGER.warning("ignoring unknown field %r in %s", key, where)


def _require_mapping(value: Any, where: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise DocumentSchemaError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _require_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentSchemaError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_surface(payload: Any) -> SurfaceModel:
    surface = _require_mapping(payload, "surface")
    _warn_unknown("surface", surface, SURFACE_KEYS)
    values = {}
    for key in SURFACE_KEYS:
        if key not in surface:
            raise DocumentSchemaError(f"surface: missing field {key!r}")
        values[key] = _require_int(surface[key], f"surface.{key}")
        if values[key] < 0:
            raise DocumentSchemaError(f"surface.{key}: must be non-negative, got {values[key]}")
    return SurfaceModel(values["genus"], values["boundary"])


def _parse_family(name: str, payload: Any, s: SurfaceModel) -> tuple[H1Class, ...]:
    if not isinstance(payload, list):
        raise DocumentSchemaError(f"family {name}: expected a list of integer tuples")
    classes = []
    for index, row in enumerate(payload, start=1):
        where = f"family {name}, curve {index}"
        if not isinstance(row, list):
            raise DocumentSchemaError(f"{where}: expected a list of integers")
        if len(row) != s.dimension:
            raise DocumentSchemaError(f"{where}: expected length {s.dimension}, got {len(row)}")
        coords = tuple(_require_int(x, where) for x in row)
        if any(abs(x) > COORDINATE_MAGNITUDE_CAP for x in coords):
            raise DocumentSchemaError(f"{where}: coordinate magnitude exceeds {COORDINATE_MAGNITUDE_CAP}")
        classes.append(H1Class(coords))
    return tuple(classes)


def _parse_metadata(payload: Any) -> dict[str, str]:
    if payload is None:
        return {}
    metadata = _require_mapping(payload, "metadata")
    _warn_unknown("metadata", metadata, METADATA_KEYS)
    out = {}
    for key in METADATA_KEYS:
        if key in metadata:
            if not isinstance(metadata[key], str):
                raise DocumentSchemaError(f"metadata.{key}: expected a string")
            out[key] = metadata[key]
    return out


def parse_document(text: str) -> DiagramDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    root = _require_mapping(payload, "document")
    _warn_unknown("document", root, TOP_LEVEL_KEYS)

    for key in ("format_version", "surface", "families"):
        if key not in root:
            raise DocumentSchemaError(f"document: missing field {key!r}")
    version = root["format_version"]
    if version != FORMAT_VERSION:
        raise DocumentSchemaError(f"format_version: unsupported value {version!r}, expected {FORMAT_VERSION!r}")

    s = _parse_surface(root["surface"])
    families_payload = _require_mapping(root["families"], "families")
    _warn_unknown("families", families_payload, FAMILIES)
    families = {}
    for name in FAMILIES:
        if name not in families_payload:
            raise DocumentSchemaError(f"families: missing family {name!r}")
        families[name] = _parse_family(name, families_payload[name], s)

    if s.is_closed:
        diagram: TrisectionDiagram = ClosedTrisectionDiagram(s, **families)
    else:
        diagram = RelativeTrisectionDiagram(s, **families)
    return DiagramDocument(diagram, version, _parse_metadata(root.get("metadata")))


def parse_diagram(text: str) -> TrisectionDiagram:
    return parse_document(text).diagram


def serialize_diagram(diagram: TrisectionDiagram, metadata: dict[str, str] | None = None) -> str:
    s = diagram.surface
    lines = [
        "{",
        f'  "format_version": {json.dumps(FORMAT_VERSION)},',
        f'  "surface": {{"genus": {s.genus}, "boundary": {s.boundary}}},',
        '  "families": {',
    ]
    for i, name in enumerate(FAMILIES):
        rows = json.dumps([list(x.coords) for x in diagram.family(name)])
        comma = "," if i < len(FAMILIES) - 1 else ""
        lines.append(f'    "{name}": {rows}{comma}')
    meta = {key: metadata[key] for key in METADATA_KEYS if metadata and key in metadata}
    if meta:
        lines.append("  },")
        lines.append(f'  "metadata": {json.dumps(meta, ensure_ascii=False)}')
    else:
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_document(path: Path) -> DiagramDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def read_diagram(path: Path) -> TrisectionDiagram:
    return read_document(path).diagram


def write_diagram(path: Path, diagram: TrisectionDiagram, metadata: dict[str, str] | None = None) -> None:
    Path(path).write_text(serialize_diagram(diagram, metadata), encoding="utf-8")
