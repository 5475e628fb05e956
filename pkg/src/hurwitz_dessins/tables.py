"""The g=0, h=2 tables: build rows from the closed forms, compare with the embedded golden copies."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .branch_data import FamilyDatum, Partition, family_data
from .closed_form import CaseLabel, classify_g0h2, nu
from .realizations import RealizationDescriptor, realizations_g0h2, sort_descriptors
from .records import OutputRecord

GOLDEN_KS = (6, 7)


@dataclass(frozen=True)
class GoldenRow:
    pi: Partition
    case: CaseLabel
    nu: int
    realizations: tuple[RealizationDescriptor, ...]


@dataclass(frozen=True)
class Erratum:
    pi: Partition
    field: str
    printed: int
    correct: int
    note: str


def load_golden(k: int) -> tuple[list[GoldenRow], list[Erratum]]:
    text = resources.files("hurwitz_dessins.data").joinpath(f"table_k{k}.json").read_text()
    data = json.loads(text)
    rows = [
        GoldenRow(
            Partition(r["pi"]),
            CaseLabel.from_json({"tag": r["case"], "params": r["params"]}),
            r["nu"],
            tuple(RealizationDescriptor.parse(s) for s in r["realizations"]),
        )
        for r in data["rows"]
    ]
    errata = [Erratum(Partition(e["pi"]), e["field"], e["printed"], e["correct"], e["note"]) for e in data["errata"]]
    return rows, errata


def table_rows(k: int) -> list[OutputRecord]:
    """One record per 3-part partition of 2k, in descending order."""
    if k < 3:
        raise ValueError(f"tables need k >= 3, got {k}")
    errata = {e.pi for e in load_golden(k)[1]} if k in GOLDEN_KS else set()
    out = []
    for fd in family_data(0, 2, k):
        out.append(
            OutputRecord(
                datum=fd,
                nu_formula=nu(fd),
                case=classify_g0h2(k, fd.pi),
                realizations=tuple(sort_descriptors(realizations_g0h2(k, fd.pi))),
                status="erratum" if fd.pi in errata else "ok",
            )
        )
    return out


@dataclass(frozen=True)
class CellResult:
    pi: Partition
    column: str
    expected: object
    computed: object
    ok: bool
    erratum: bool = False


@dataclass
class TableCheck:
    k: int
    cells: list[CellResult]
    missing_rows: list[Partition]
    extra_rows: list[Partition]

    @property
    def failures(self) -> list[CellResult]:
        return [c for c in self.cells if not c.ok and not c.erratum]

    @property
    def errata(self) -> list[CellResult]:
        return [c for c in self.cells if c.erratum]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.missing_rows and not self.extra_rows

    def summary(self) -> str:
        rows = len({c.pi for c in self.cells})
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"k={self.k}: {verdict}, {rows} rows compared, {len(self.failures)} mismatching cells, {len(self.errata)} registered errata"]
        for c in self.errata:
            lines.append(f"  erratum at {c.pi} {c.column}: printed {c.expected}, computed {c.computed}")
        for c in self.failures:
            lines.append(f"  MISMATCH at {c.pi} {c.column}: table {c.expected}, computed {c.computed}")
        for pi in self.missing_rows:
            lines.append(f"  row {pi} in the table but not computed")
        for pi in self.extra_rows:
            lines.append(f"  row {pi} computed but not in the table")
        return "\n".join(lines)


def check_table(k: int) -> TableCheck:
    """Cell-by-cell comparison; a cell listed in the errata registry is reported, not failed."""
    if k not in GOLDEN_KS:
        raise ValueError(f"no golden table for k={k}; available: {GOLDEN_KS}")
    golden, errata = load_golden(k)
    registry = {(e.pi, e.field): e for e in errata}
    computed = {rec.datum.pi: rec for rec in table_rows(k)}
    cells = []
    for row in golden:
        rec = computed.get(row.pi)
        if rec is None:
            continue
        pairs = [
            ("case", (row.case.tag, row.case.params), (rec.case.tag, rec.case.params)),
            ("nu", row.nu, rec.nu_formula),
            ("realizations", frozenset(row.realizations), frozenset(rec.realizations)),
        ]
        for column, expected, got in pairs:
            ok = expected == got
            err = registry.get((row.pi, column))
            is_erratum = not ok and err is not None and err.correct == got and err.printed == expected
            cells.append(CellResult(row.pi, column, expected, got, ok, is_erratum))
    golden_pis = [r.pi for r in golden]
    missing = [pi for pi in golden_pis if pi not in computed]
    extra = [pi for pi in computed if pi not in set(golden_pis)]
    return TableCheck(k, cells, missing, extra)


def _row_cells(rec: OutputRecord) -> list[str]:
    return [str(rec.datum.pi), str(rec.case), str(rec.nu_formula), ", ".join(map(str, rec.realizations))]


def render_table(records: list[OutputRecord], fmt: str = "text") -> str:
    header = ["pi", "case", "nu", "realizations"]
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(_row_cells(r)) + " |" for r in records]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        return "".join(", ".join(c for c in _row_cells(r) if c) + "\n" for r in records)
    raise ValueError(f"render_table handles text and md, not {fmt!r}")
