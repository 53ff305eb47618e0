import random

import pytest

from conftest import random_full_class, random_moves
from trisectkit.diagram import (
    FAIL_CARDINALITY,
    FAIL_CLOSED_COUNT,
    FAIL_DISJOINT,
    FAIL_INCONSISTENT,
    FAIL_PAIR,
    FAIL_PRIMITIVE,
    FAIL_REL_BOUNDARY,
    FAIL_SURFACE,
    PAIRS,
    ClosedTrisectionDiagram,
    RelativeTrisectionDiagram,
    pair_type,
    standard_closed_diagram,
    standard_relative_diagram,
    validate,
    validate_closed,
    validate_relative,
)
from trisectkit.errors import NonstandardPairError, SurfaceMismatchError, TypeConstraintError
from trisectkit.moves import Transvection, apply_moves, cap_off
from trisectkit.params import is_admissible
from trisectkit.surface import H1Class, SurfaceModel

S2 = SurfaceModel(2, 0)
S22 = SurfaceModel(2, 2)


def test_pair_type_examples():
    assert pair_type([S2.a(1), S2.a(2)], [S2.a(1), S2.a(2)], S2) == 0
    assert pair_type([S2.a(1), S2.a(2)], [S2.b(1), S2.b(2)], S2) == 2
    assert pair_type([S2.a(1), S2.a(2)], [S2.b(1), S2.a(2)], S2) == 1


def test_pair_type_rejects_nonstandard_pairs():
    with pytest.raises(NonstandardPairError, match="nonstandard pair"):
        pair_type([S2.a(1)], [2 * S2.b(1)], S2)
    # parallel classes that span more than a standard pair would
    with pytest.raises(NonstandardPairError):
        pair_type([S2.a(1)], [S2.a(2)], S2)


def test_pair_type_errors_on_length_and_surface():
    with pytest.raises(ValueError):
        pair_type([S2.a(1)], [], S2)
    with pytest.raises(SurfaceMismatchError):
        pair_type([S22.a(1)], [S2.a(1)], S2)


def test_bundled_diagrams_validate_as_2_1_0_2(d1, d2):
    for diagram in (d1, d2):
        report = validate_relative(diagram)
        assert report.ok, report.failures
        assert report.inferred_type == (2, 1, 0, 2)
        assert set(report.pair_types.values()) == {2}
        assert report.type_label() == "(2,1;0,2)"


def test_closed_standard_round_trip():
    for g in range(0, 6):
        for k in range(0, g + 1):
            report = validate_closed(standard_closed_diagram(g, k))
            assert report.ok, report.failures
            assert report.inferred_type == (g, k)


def test_relative_standard_round_trip():
    for g in range(0, 5):
        for p in range(0, g + 1):
            for b in range(1, 4):
                for k in range(0, g + p + b):
                    if not is_admissible(g, k, p, b):
                        continue
                    report = validate_relative(standard_relative_diagram(g, k, p, b))
                    assert report.ok, (g, k, p, b, report.failures)
                    assert report.inferred_type == (g, k, p, b)


def test_standard_generators_reject_inadmissible_types():
    with pytest.raises(TypeConstraintError, match="type constraint violated"):
        standard_relative_diagram(1, 5, 0, 1)
    with pytest.raises(TypeConstraintError):
        standard_closed_diagram(1, 2)


def test_ball_has_the_empty_diagram():
    diagram = standard_relative_diagram(0, 0, 0, 1)
    assert diagram.curve_count == 0
    assert validate(diagram).inferred_type == (0, 0, 0, 1)


def test_non_primitive_class_is_reported():
    diagram = ClosedTrisectionDiagram(S2, (2 * S2.a(1), S2.a(2)), (S2.b(1), S2.b(2)), (S2.a(1), S2.a(2)))
    report = validate_closed(diagram)
    assert not report.ok
    assert any(f.startswith(FAIL_PRIMITIVE) for f in report.failures)


def test_non_disjoint_family_is_reported():
    diagram = ClosedTrisectionDiagram(S2, (S2.a(1), S2.b(1)), (S2.a(1), S2.a(2)), (S2.a(1), S2.a(2)))
    report = validate_closed(diagram)
    assert any(f.startswith(FAIL_DISJOINT) for f in report.failures)


def test_inconsistent_pair_types():
    diagram = ClosedTrisectionDiagram(S2, (S2.a(1), S2.a(2)), (S2.a(1), S2.b(2)), (S2.b(1), S2.b(2)))
    report = validate_closed(diagram)
    assert report.pair_types == {"alpha/beta": 1, "beta/gamma": 1, "gamma/alpha": 2}
    assert any(f.startswith(FAIL_INCONSISTENT) for f in report.failures)
    assert report.inferred_type is None


def test_nonstandard_pair_is_reported():
    diagram = ClosedTrisectionDiagram(SurfaceModel(1, 0), (H1Class((1, 0)),), (H1Class((1, 2)),), (H1Class((1, 0)),))
    report = validate_closed(diagram)
    assert any(f.startswith(FAIL_PAIR) for f in report.failures)


def test_cardinality_and_count_failures():
    report = validate_closed(ClosedTrisectionDiagram(S2, (S2.a(1),), (S2.b(1), S2.b(2)), (S2.a(1),)))
    assert report.failures[0].startswith(FAIL_CARDINALITY)
    report = validate_closed(ClosedTrisectionDiagram(S2, (S2.a(1),), (S2.b(1),), (S2.a(1),)))
    assert report.failures[0].startswith(FAIL_CLOSED_COUNT)


def test_wrong_surface_is_reported():
    diagram = RelativeTrisectionDiagram(S22, (S2.a(1),), (S2.b(1),), (S2.a(1),))
    report = validate_relative(diagram)
    assert report.failures[0].startswith(FAIL_SURFACE)


def test_diagram_kinds_check_boundary():
    with pytest.raises(ValueError):
        RelativeTrisectionDiagram(S2, (), (), ())
    with pytest.raises(ValueError):
        ClosedTrisectionDiagram(S22, (), (), ())


def test_report_to_dict(d1):
    payload = validate_relative(d1).to_dict()
    assert payload["ok"] is True
    assert payload["status"] == "homologically valid"
    assert payload["inferred_type"] == [2, 1, 0, 2]


def test_family_collapsing_rel_boundary_is_reported():
    family = (S22.a(1), S22.a(1) + S22.d(1))
    report = validate_relative(RelativeTrisectionDiagram(S22, family, family, family))
    assert not report.ok
    assert report.failures == tuple(f"{FAIL_REL_BOUNDARY}: {name}" for name in ("alpha", "beta", "gamma"))


def test_family_with_divisible_handle_part_is_reported():
    s = SurfaceModel(1, 2)
    family = (H1Class((2, 0, 1)),)
    report = validate_relative(RelativeTrisectionDiagram(s, family, family, family))
    assert report.inferred_type == (1, 2, 0, 2)
    assert report.failures == tuple(f"{FAIL_REL_BOUNDARY}: {name}" for name in ("alpha", "beta", "gamma"))


def _random_relative(rng: random.Random) -> RelativeTrisectionDiagram:
    if rng.random() < 0.5:
        g, b = rng.randint(1, 2), rng.randint(1, 3)
        s = SurfaceModel(g, b)
        n = rng.randint(0, g)
        families = [
            tuple(H1Class(tuple(rng.randint(-1, 1) for _ in range(s.dimension))) for _ in range(n))
            for _ in range(3)
        ]
        return RelativeTrisectionDiagram(s, *families)
    while True:
        g, b = rng.randint(0, 3), rng.randint(1, 3)
        p = rng.randint(0, g)
        k = rng.randint(0, g + p + b - 1)
        if is_admissible(g, k, p, b):
            break
    diagram = standard_relative_diagram(g, k, p, b)
    moves = random_moves(rng, diagram, rng.randint(0, 8))
    if diagram.surface.dimension:
        moves.append(Transvection(random_full_class(rng, diagram.surface), rng.choice((-1, 1))))
    return apply_moves(diagram, moves)


def test_accepted_relative_diagrams_satisfy_the_type_bounds():
    rng = random.Random(1009)
    accepted = 0
    for _ in range(400):
        diagram = _random_relative(rng)
        report = validate_relative(diagram)
        if not report.ok:
            continue
        accepted += 1
        s = diagram.surface
        g, k, p, b = report.inferred_type
        assert (g, b) == (s.genus, s.boundary)
        assert p == g - diagram.curve_count
        (a,) = set(report.pair_types.values())
        assert 2 * p + b - 1 <= k <= g + p + b - 1
        assert 0 <= a <= g - p
        if p == 0:
            capped = validate_closed(cap_off(diagram))
            assert capped.ok
            assert capped.inferred_type == (g, k - b + 1)
    assert accepted >= 120


def _pair_outcome(delta, epsilon, s):
    try:
        return pair_type(delta, epsilon, s)
    except NonstandardPairError:
        return None


def test_pair_type_is_symmetric():
    rng = random.Random(4242)
    for _ in range(200):
        diagram = _random_relative(rng)
        s = diagram.surface
        for first, second in PAIRS:
            delta, epsilon = diagram.family(first), diagram.family(second)
            assert _pair_outcome(delta, epsilon, s) == _pair_outcome(epsilon, delta, s)
