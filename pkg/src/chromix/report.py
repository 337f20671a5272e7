"""Per-k ledgers for checked identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polynomial import serialize_rational

THEOREMS = (
    "weak-reciprocity",
    "strong-reciprocity",
    "stanley-order",
    "stanley-graph",
    "prop-3.1",
    "prop-3.2",
    "prop-3.3",
    "prop-3.4",
    "lemma-4",
    "lemma-5",
)


@dataclass(frozen=True)
class Row:
    k: int
    lhs: Fraction
    rhs: Fraction
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        out = {"k": self.k, "lhs": serialize_rational(self.lhs), "rhs": serialize_rational(self.rhs), "pass": self.passed}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    subject: str
    theorem: str
    rows: list[Row] = field(default_factory=list)

    def add(self, k, lhs, rhs, note: str = "") -> Row:
        row = Row(k, Fraction(lhs), Fraction(rhs), note)
        self.rows.append(row)
        return row

    @property
    def verdict(self) -> bool:
        if not self.rows:
            raise ValueError("a verification report needs at least one row")
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[Row]:
        return [r for r in self.rows if not r.passed]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "theorem": self.theorem,
            "rows": [r.to_json() for r in self.rows],
            "verdict": self.verdict,
        }

    def format_table(self) -> str:
        def fmt(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        show_note = any(r.note for r in self.rows)
        header = ["k", "lhs", "rhs", "pass"] + (["note"] if show_note else [])
        body = [
            [str(r.k), fmt(r.lhs), fmt(r.rhs), "yes" if r.passed else "NO"] + ([r.note] if show_note else [])
            for r in self.rows
        ]
        widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
        lines = [f"{self.theorem}: {self.subject}"]
        for line in [header] + body:
            lines.append("  ".join(cell.rjust(w) if i < 4 else cell for i, (cell, w) in enumerate(zip(line, widths))).rstrip())
        lines.append(f"verdict: {'PASS' if self.verdict else 'FAIL'}")
        return "\n".join(lines)
