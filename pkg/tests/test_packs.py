import pytest

from trisectkit.diagram import ClosedTrisectionDiagram, RelativeTrisectionDiagram, validate
from trisectkit.packs import (
    PACK_MODELS,
    PACK_S2XD2,
    expected_invariants,
    get_diagram,
    get_pack,
    list_diagrams,
    list_packs,
)
from trisectkit.surface import SurfaceModel


def test_bundled_packs_are_listed():
    packs = list_packs()
    assert PACK_S2XD2 in packs
    assert PACK_MODELS in packs


def test_s2xd2_pack_contents(d1, d2):
    assert list_diagrams(PACK_S2XD2) == ["D1", "D2"]
    s = SurfaceModel(2, 2)
    assert isinstance(d1, RelativeTrisectionDiagram)
    assert d1.alpha == (s.a(1), s.a(2))
    assert d1.beta == (s.b(1), s.b(2))
    assert d1.gamma == (s.a(1) + s.b(2), s.a(2) + s.b(1))
    assert d2.gamma == (s.a(1) + s.b(1), s.a(2) - s.b(2))
    assert get_pack(PACK_S2XD2)["boundary"] == "s2xs1"


def test_every_pack_diagram_matches_its_expected_type():
    for pack in (PACK_S2XD2, PACK_MODELS):
        for name in list_diagrams(pack):
            report = validate(get_diagram(pack, name))
            assert report.ok, (pack, name, report.failures)
            assert list(report.inferred_type) == expected_invariants(pack, name)["type"]


def test_models_are_closed(models):
    assert set(models) == {"S4", "S1xS3", "CP2", "CP2bar", "S2xS2", "CP2#CP2bar"}
    assert all(isinstance(d, ClosedTrisectionDiagram) for d in models.values())


def test_lookup_errors():
    with pytest.raises(ValueError, match="No pack found"):
        get_pack("kirby")
    with pytest.raises(ValueError, match="No diagram"):
        get_diagram(PACK_MODELS, "RP4")


def test_lookup_is_case_insensitive():
    assert get_diagram(PACK_MODELS, "cp2") == get_diagram(PACK_MODELS, "CP2")
