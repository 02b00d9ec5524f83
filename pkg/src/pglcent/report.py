"""Deterministic text and JSON renderings, and the built-in SL_3 suite."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .compgroup import ComponentGroupReport, component_group
from .cyclofield import CycNum
from .families import FamilySpec, build_family
from .twistcent import DEFAULT_COEFF_BOUND, DEFAULT_TRIALS, Stratum

__all__ = [
    "PAPER_CASES",
    "PaperCase",
    "SuiteRow",
    "SuiteResult",
    "report_dict",
    "centralizer_dict",
    "emit_report",
    "emit_centralizer",
    "run_paper_suite",
    "emit_suite",
    "parse_suite_text",
]


def _twist_str(t):
    return "(" + ",".join(str(e) for e in t) + ")"


def _stratum_dict(s: Stratum):
    d = {"twist": list(s.twist), "dim": s.dim}
    if s.witness is not None:
        d["witness"] = s.witness.to_lists()
    return d


def report_dict(report: ComponentGroupReport, case: str | None = None) -> dict:
    return {
        "case": case,
        "dim": report.n,
        "order": report.order,
        "centralizer_dim": report.centralizer_dim,
        "strata": [_stratum_dict(s) for s in report.strata],
        "invariant_factors": list(report.invariant_factors),
        "iso_label": report.iso_label,
    }


def _stratum_line(s: Stratum):
    if s.witness is not None:
        tail = f"witness {s.witness.to_text()}"
    elif s.dim:
        tail = "no invertible element"
    else:
        tail = "empty"
    return f"  {_twist_str(s.twist)}: dim {s.dim}, {tail}"


def emit_report(report: ComponentGroupReport, fmt: str = "text", case: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(report_dict(report, case), indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"case: {case if case is not None else '-'}",
        f"dim: {report.n}",
        f"order: {report.order}",
        f"centralizer dim: {report.centralizer_dim}",
        "strata:",
        *(_stratum_line(s) for s in report.strata),
        "nonempty twists: " + " ".join(_twist_str(t) for t in report.nonempty_twists),
        "invariant factors: [" + ", ".join(map(str, report.invariant_factors)) + "]",
        f"component group: {report.iso_label}",
    ]
    return "\n".join(lines) + "\n"


def centralizer_dict(stratum: Stratum, n: int, order: int, case: str | None = None) -> dict:
    return {
        "case": case,
        "dim": n,
        "order": order,
        "centralizer_dim": stratum.dim,
        "basis": [B.to_lists() for B in stratum.space.basis],
        "witness": stratum.witness.to_lists() if stratum.witness is not None else None,
    }


def emit_centralizer(
    stratum: Stratum, n: int, order: int, fmt: str = "text", case: str | None = None
) -> str:
    if fmt == "json":
        return json.dumps(centralizer_dict(stratum, n, order, case), indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"case: {case if case is not None else '-'}",
        f"dim: {n}",
        f"order: {order}",
        f"centralizer dim: {stratum.dim}",
        "basis:",
        *(f"  {B.to_text()}" for B in stratum.space.basis),
        f"witness: {stratum.witness.to_text() if stratum.witness is not None else 'none'}",
    ]
    return "\n".join(lines) + "\n"


# -- the SL_3 classification ----------------------------------------------


@dataclass(frozen=True)
class PaperCase:
    name: str
    specs: tuple[FamilySpec, ...]
    expected: str


def _paper_cases():
    w = CycNum.root(3)
    return (
        PaperCase(
            "principal-series-generic",
            (FamilySpec("principal-series", {"a1": 2, "a2": 3}),),
            "trivial",
        ),
        PaperCase(
            "principal-series-cube-root",
            (FamilySpec("principal-series", {"a1": w, "a2": w * w}),),
            "Z/3Z",
        ),
        PaperCase("steinberg3", (FamilySpec("steinberg3"),), "trivial"),
        PaperCase("dihedral-chi", (FamilySpec("dihedral-chi", {"c": 5}),), "trivial"),
        PaperCase(
            "tetrahedral-chi=octahedral-chi",
            (
                FamilySpec("tetrahedral-chi", {"c": 5}),
                FamilySpec("octahedral-chi", {"c": 5}),
            ),
            "trivial",
        ),
        PaperCase("steinberg2-chi", (FamilySpec("steinberg2-chi", {"k": 5}),), "trivial"),
    )


PAPER_CASES = _paper_cases()


@dataclass(frozen=True)
class SuiteRow:
    case: str
    report: ComponentGroupReport
    expected: str
    matches: bool


@dataclass(frozen=True)
class SuiteResult:
    rows: tuple[SuiteRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.matches for r in self.rows)


def run_paper_suite(
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    expected: dict | None = None,
) -> SuiteResult:
    """Run the six built-in SL_3 cases against their known component groups.

    ``expected`` overrides the stored labels by case name (used as a negative
    control).  A row whose case has several families matches only when all of
    them agree with each other and with the expectation.
    """
    overrides = dict(expected or {})
    unknown = set(overrides) - {c.name for c in PAPER_CASES}
    if unknown:
        raise KeyError(f"unknown suite case(s): {', '.join(sorted(unknown))}")
    rows = []
    for case in PAPER_CASES:
        want = overrides.get(case.name, case.expected)
        reports = [
            component_group(build_family(s), seed=seed, trials=trials, coeff_bound=coeff_bound)
            for s in case.specs
        ]
        first = reports[0]
        consistent = all(
            r.iso_label == first.iso_label
            and r.centralizer_dim == first.centralizer_dim
            and r.nonempty_twists == first.nonempty_twists
            for r in reports
        )
        rows.append(SuiteRow(case.name, first, want, consistent and first.iso_label == want))
    return SuiteResult(tuple(rows))


_COLUMNS = ("case", "centralizer_dim", "nonempty_twists", "iso_label", "matches-paper")


def emit_suite(result: SuiteResult, fmt: str = "text") -> str:
    if fmt == "json":
        cases = []
        for row in result.rows:
            d = report_dict(row.report, row.case)
            d["expected"] = row.expected
            d["matches_paper"] = row.matches
            cases.append(d)
        return json.dumps({"cases": cases, "all_match": result.all_match}, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    table = [_COLUMNS]
    for row in result.rows:
        table.append(
            (
                row.case,
                str(row.report.centralizer_dim),
                " ".join(_twist_str(t) for t in row.report.nonempty_twists),
                row.report.iso_label,
                "yes" if row.matches else "no",
            )
        )
    widths = [max(len(r[i]) for r in table) for i in range(len(_COLUMNS))]
    lines = [" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    lines.append(f"all match: {'yes' if result.all_match else 'no'}")
    return "\n".join(lines) + "\n"


def parse_suite_text(text: str) -> list[dict]:
    """Read back the rows of :func:`emit_suite` text output."""
    rows = []
    for line in text.splitlines()[2:]:
        if line.startswith("all match:"):
            break
        cells = [c.strip() for c in line.split("|")]
        case, cdim, twists, label, match = cells
        rows.append(
            {
                "case": case,
                "centralizer_dim": int(cdim),
                "nonempty_twists": [
                    [int(e) for e in t.strip("()").split(",")] for t in twists.split()
                ],
                "iso_label": label,
                "matches_paper": match == "yes",
            }
        )
    return rows
