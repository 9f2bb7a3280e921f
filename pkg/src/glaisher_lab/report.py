"""Verification report record and its JSON/CSV serialisation."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

COLUMNS = (
    "family", "n", "a", "k", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
    "abs_err", "tol", "pass", "evals", "runtime_ms", "notes",
)
CSV_COLUMNS = tuple(c for c in COLUMNS if c != "runtime_ms")


def fmt17(x: float) -> str:
    return format(x, ".17g")


@dataclass
class VerificationReport:
    family: str
    lhs: complex
    rhs: complex
    tol: float
    n: int | None = None
    a: float | None = None
    k: int | None = None
    converged: bool = True
    side_checks_ok: bool = True
    evaluations: int = 0
    runtime_ms: float = 0.0
    notes: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def abs_err(self) -> float:
        d = complex(self.lhs) - complex(self.rhs)
        return math.hypot(d.real, d.imag)  # abs() raises on overflow

    @property
    def passed(self) -> bool:
        return self.converged and self.side_checks_ok and math.isfinite(self.abs_err) and self.abs_err <= self.tol

    def sort_key(self):
        return (
            self.family,
            -1 if self.n is None else self.n,
            -1.0 if self.a is None else self.a,
            -1 if self.k is None else self.k,
        )

    def as_record(self, timing: bool = True) -> dict:
        lhs, rhs = complex(self.lhs), complex(self.rhs)
        return {
            "family": self.family,
            "n": self.n,
            "a": self.a,
            "k": self.k,
            "lhs_re": lhs.real,
            "lhs_im": lhs.imag,
            "rhs_re": rhs.real,
            "rhs_im": rhs.imag,
            "abs_err": self.abs_err,
            "tol": self.tol,
            "pass": self.passed,
            "evals": self.evaluations,
            "runtime_ms": round(self.runtime_ms, 3) if timing else None,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        params = " ".join(
            f"{name}={val}" for name, val in (("n", self.n), ("a", self.a), ("k", self.k)) if val is not None
        )
        lhs, rhs = complex(self.lhs), complex(self.rhs)
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"[{status}] {self.family} {params}: lhs={lhs.real:.10g}{lhs.imag:+.10g}i "
            f"rhs={rhs.real:.10g}{rhs.imag:+.10g}i err={self.abs_err:.3g} tol={self.tol:.1g}"
        )
        for note in self.notes:
            line += f"\n    note: {note}"
        return line


def reports_to_json(reports, timing: bool = False) -> str:
    """One JSON object per line, floats printed with 17 significant digits."""
    lines = []
    for r in reports:
        rec = r.as_record(timing=timing)
        parts = []
        for key, val in rec.items():
            if isinstance(val, float):
                parts.append(f"{json.dumps(key)}: {fmt17(val) if math.isfinite(val) else 'null'}")
            else:
                parts.append(f"{json.dumps(key)}: {json.dumps(val)}")
        lines.append("{" + ", ".join(parts) + "}")
    return "\n".join(lines) + ("\n" if lines else "")


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        rec = r.as_record(timing=False)
        row = []
        for col in CSV_COLUMNS:
            val = rec[col]
            if isinstance(val, float):
                row.append(fmt17(val))
            elif isinstance(val, bool):
                row.append("true" if val else "false")
            elif isinstance(val, list):
                row.append("; ".join(val))
            elif val is None:
                row.append("")
            else:
                row.append(str(val))
        writer.writerow(row)
    return buf.getvalue()
