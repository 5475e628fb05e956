"""Output records shared by the CLI commands, with JSON and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .branch_data import FamilyDatum
from .closed_form import CaseLabel
from .realizations import RealizationDescriptor

STATUSES = ("ok", "mismatch", "erratum", "oracle-skipped")


@dataclass(frozen=True)
class OutputRecord:
    datum: FamilyDatum
    nu_formula: int | None = None
    nu_oracle: int | None = None
    case: CaseLabel | None = None
    realizations: tuple[RealizationDescriptor, ...] | None = None
    status: str = field(default="oracle-skipped")

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict:
        return {
            "datum": self.datum.to_json(),
            "nu_formula": self.nu_formula,
            "nu_oracle": self.nu_oracle,
            "case": None if self.case is None else self.case.to_json(),
            "realizations": None if self.realizations is None else [str(r) for r in self.realizations],
            "status": self.status,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OutputRecord":
        reals = obj.get("realizations")
        return cls(
            datum=FamilyDatum.from_json(obj["datum"]),
            nu_formula=obj.get("nu_formula"),
            nu_oracle=obj.get("nu_oracle"),
            case=None if obj.get("case") is None else CaseLabel.from_json(obj["case"]),
            realizations=None if reals is None else tuple(RealizationDescriptor.parse(r) for r in reals),
            status=obj["status"],
        )

    def render_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def render_text(self) -> str:
        parts = [str(self.datum)]
        if self.case is not None:
            params = ", ".join(f"{k}={v}" for k, v in self.case.params)
            parts.append(f"case {self.case} [{params}]")
        if self.nu_formula is not None:
            parts.append(f"nu_formula={self.nu_formula}")
        if self.nu_oracle is not None:
            parts.append(f"nu_oracle={self.nu_oracle}")
        if self.realizations is not None:
            parts.append("realizations: " + (", ".join(map(str, self.realizations)) or "none"))
        parts.append(f"status={self.status}")
        return "  ".join(parts)


CSV_FIELDS = ("g", "h", "k", "pi", "case", "nu_formula", "nu_oracle", "realizations", "status")


def _csv_row(rec: OutputRecord) -> list:
    fd = rec.datum
    return [
        fd.g,
        fd.h,
        fd.k,
        " ".join(map(str, fd.pi)),
        "" if rec.case is None else rec.case.tag,
        "" if rec.nu_formula is None else rec.nu_formula,
        "" if rec.nu_oracle is None else rec.nu_oracle,
        "" if rec.realizations is None else " ".join(map(str, rec.realizations)),
        rec.status,
    ]


def render_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for rec in records:
        w.writerow(_csv_row(rec))
    return buf.getvalue()


def status_for(nu_formula, nu_oracle, erratum: bool = False) -> str:
    if nu_formula is None or nu_oracle is None:
        return "oracle-skipped" if nu_oracle is None else "ok"
    if nu_formula != nu_oracle:
        return "erratum" if erratum else "mismatch"
    return "ok"
