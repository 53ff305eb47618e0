import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from .config import PACKS_DIR
from .diagram import FAMILIES, ClosedTrisectionDiagram, RelativeTrisectionDiagram, TrisectionDiagram
from .surface import SurfaceModel, parse_class

LOGGER = logging.getLogger(__name__)

PACK_S2XD2 = "s2xd2"
PACK_MODELS = "models"


def _pack_path(name: str) -> Path:
    return PACKS_DIR / f"{name.strip().lower()}.yaml"


def load_pack_file(path: Path) -> dict[str, Any]:
    with path.open("r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def list_packs() -> list[str]:
    if not PACKS_DIR.exists():
        return []
    return sorted(p.stem for p in PACKS_DIR.glob("*.yaml"))


def list_diagrams(pack_name: str) -> list[str]:
    pack = load_pack_file(_pack_path(pack_name))
    return [d["name"] for d in pack.get("diagrams", []) if "name" in d]


def get_pack(pack_name: str) -> dict[str, Any]:
    path = _pack_path(pack_name)
    pack = load_pack_file(path) if path.exists() else {}
    if not pack:
        raise ValueError(f"No pack found with name '{pack_name}'")
    return pack


def get_entry(pack_name: str, diagram_name: str) -> dict[str, Any]:
    pack = get_pack(pack_name)
    entry = next((d for d in pack.get("diagrams", []) if str(d.get("name", "")).lower() == diagram_name.lower()), None)
    if not entry:
        raise ValueError(f"No diagram '{diagram_name}' found in pack '{pack_name}'")
    return entry


def diagram_from_entry(entry: dict[str, Any]) -> TrisectionDiagram:
    surface_spec = entry.get("surface") or {}
    s = SurfaceModel(int(surface_spec.get("genus", 0)), int(surface_spec.get("boundary", 0)))
    families = {name: tuple(parse_class(str(expr), s) for expr in entry.get(name) or []) for name in FAMILIES}
    if s.is_closed:
        return ClosedTrisectionDiagram(s, **families)
    return RelativeTrisectionDiagram(s, **families)


def get_diagram(pack_name: str, diagram_name: str) -> TrisectionDiagram:
    return diagram_from_entry(get_entry(pack_name, diagram_name))


def expected_invariants(pack_name: str, diagram_name: str) -> dict[str, Any]:
    return dict(get_entry(pack_name, diagram_name).get("expected") or {})


@dataclass(frozen=True)
class BundledExamples:
    d1: RelativeTrisectionDiagram
    d2: RelativeTrisectionDiagram
    models: dict[str, ClosedTrisectionDiagram] = field(default_factory=dict)


def bundled_examples() -> BundledExamples:
    models = {name: get_diagram(PACK_MODELS, name) for name in list_diagrams(PACK_MODELS)}
    LOGGER.debug("loaded %d model diagrams from %s", len(models), PACKS_DIR)
    return BundledExamples(
        d1=get_diagram(PACK_S2XD2, "D1"),
        d2=get_diagram(PACK_S2XD2, "D2"),
        models=models,
    )
