"""Graded dimension tables and their text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


ENGINES = ("general", "closed_form", "model", "localized")


@dataclass
class DimTable:
    exponents: tuple[int, ...] | None
    entries: dict[int, int]
    engine: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("dimensions must be nonnegative")

    @classmethod
    def over(cls, exponents, t_min: int, t_max: int, dims, engine: str, **meta) -> "DimTable":
        """Build a table from ``dims(t)`` for every t in ``[t_min, t_max]``."""
        check_range(t_min, t_max)
        return cls(
            tuple(exponents) if exponents is not None else None,
            {t: dims(t) for t in range(t_min, t_max + 1)},
            engine,
            dict(meta),
        )

    @property
    def degrees(self) -> list[int]:
        """Degrees in presentation order (descending)."""
        return sorted(self.entries, reverse=True)

    def __getitem__(self, t: int) -> int:
        return self.entries[t]

    def row(self) -> list[int]:
        return [self.entries[t] for t in self.degrees]

    def to_dict(self, weights=None, checks=()) -> dict:
        return {
            "exponents": list(self.exponents) if self.exponents is not None else None,
            "weights": weights.as_dict() if weights is not None else None,
            "entries": [{"t": t, "dim": self.entries[t]} for t in self.degrees],
            "engine": self.engine,
            "checks": list(checks),
        }


def check_range(t_min: int, t_max: int) -> None:
    if t_min > t_max:
        raise ValueError(f"empty degree range: {t_min} > {t_max}")


def render_json(table: DimTable, weights=None, checks=()) -> str:
    return json.dumps(table.to_dict(weights, checks), indent=2) + "\n"


def render_csv(table: DimTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "dim"])
    for t in table.degrees:
        w.writerow([t, table.entries[t]])
    return buf.getvalue()


def render_md(table: DimTable, label: str | None = None) -> str:
    """One-row Markdown table, degrees as columns in descending order."""
    if label is None:
        label = ",".join(map(str, table.exponents)) if table.exponents else table.engine
    head = ["p"] + [str(t) for t in table.degrees]
    body = [label] + [str(v) for v in table.row()]
    lines = [
        "| " + " | ".join(head) + " |",
        "|" + "|".join("---" for _ in head) + "|",
        "| " + " | ".join(body) + " |",
    ]
    return "\n".join(lines) + "\n"


def render(table: DimTable, fmt: str, weights=None, checks=()) -> str:
    if fmt == "json":
        return render_json(table, weights, checks)
    if fmt == "csv":
        return render_csv(table)
    if fmt == "md":
        return render_md(table)
    raise ValueError(f"unknown format {fmt!r}")
