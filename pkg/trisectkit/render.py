from typing import Iterable

from .diagram import ValidationReport
from .invariants import DistinguishVerdict, InvariantReport
from .params import FilteredType


def render_validation(report: ValidationReport) -> str:
    status = "homologically valid" if report.ok else "not homologically valid"
    lines = [f"status: {status}", f"type: {report.type_label()}"]
    for pair, value in report.pair_types.items():
        lines.append(f"pair {pair}: {'nonstandard' if value is None else value}")
    for failure in report.failures:
        lines.append(f"failure: {failure}")
    return "\n".join(lines)


def render_matrix(rows: list[list[int]]) -> str:
    if not rows:
        return "  (empty)"
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join("  [" + " ".join(str(x).rjust(width) for x in row) + "]" for row in rows)


def render_invariants(report: InvariantReport) -> str:
    g, k = report.closed_type
    h = report.homology
    form = report.form
    lines = [
        f"closed type: ({g},{k})",
        f"euler characteristic: {report.euler_characteristic}",
    ]
    lines.extend(f"H{i}: {group}" for i, group in enumerate(h.groups()))
    if h.reduced_confidence:
        lines.append("note: H1 has torsion; H2 torsion inferred by duality (reduced confidence)")
    lines.append("intersection form:")
    lines.append(render_matrix(form.matrix.to_lists()))
    lines.append(f"rank: {form.rank}")
    lines.append(f"signature: {form.signature}")
    lines.append(f"parity: {form.parity}")
    lines.append(f"determinant: {form.determinant}")
    return "\n".join(lines)


def render_verdict(verdict: DistinguishVerdict) -> str:
    lines = [f"outcome: {verdict.outcome}"]
    if verdict.witness is not None:
        lines.append(f"witness: {verdict.witness}")
    else:
        lines.append("no computed invariant differs; this does not imply equivalence")
    return "\n".join(lines)


def render_types_table(types: Iterable[FilteredType]) -> str:
    header = f"{'g':>3} {'k':>3} {'p':>3} {'b':>3} {'A':>3} {'chi':>4}  page      constraint"
    lines = [header]
    for item in types:
        t = item.type
        lines.append(f"{t.g:>3} {t.k:>3} {t.p:>3} {t.b:>3} {t.A:>3} {t.chi:>4}  {t.page.kind:<9} {item.constraint}")
    if len(lines) == 1:
        lines.append("(no admissible types)")
    return "\n".join(lines)
