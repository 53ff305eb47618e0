from trisectkit.params import BOUNDARY_S3
from trisectkit.services.paper_demo import STATUS_MISMATCH, STATUS_REPRODUCED, DemoOptions, run_paper_demo, summary_json


def test_demo_reproduces_every_check():
    summary = run_paper_demo()
    assert summary["status"] == STATUS_REPRODUCED
    assert all(summary["checks"].values())
    assert summary["params"]["enumerated"] == ["(1,0;0,1)"]
    assert summary["params"]["surviving"] == []
    assert summary["params"]["minimal_genus"] == 2
    assert "(2,1;0,2)" in summary["params"]["minimal_genus_evidence"]
    assert summary["capped"] == {"D1": "(2,0)", "D2": "(2,0)"}
    assert summary["distinguish"] == {
        "outcome": "distinguished",
        "witness": "intersection form parity: even vs odd",
    }


def test_demo_reports_both_forms():
    invariants = run_paper_demo()["invariants"]
    assert invariants["D1"]["intersection_form"]["parity"] == "even"
    assert invariants["D2"]["intersection_form"]["parity"] == "odd"
    for name in ("D1", "D2"):
        assert invariants[name]["homology"]["h1"] == {"free_rank": 0, "torsion": []}
        assert invariants[name]["homology"]["h2"]["free_rank"] == 2


def test_demo_summary_is_byte_stable():
    assert summary_json(run_paper_demo()) == summary_json(run_paper_demo())


def test_demo_flags_a_mismatch_for_other_boundaries():
    summary = run_paper_demo(DemoOptions(boundary=BOUNDARY_S3))
    assert summary["status"] == STATUS_MISMATCH
    assert summary["checks"]["low_genus_excluded"] is False
