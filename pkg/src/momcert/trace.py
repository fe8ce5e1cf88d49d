"""Run traces: fixed-schema numeric tables plus a JSON-able summary.

A Trace is what every run driver returns. Columns are solver specific
(documented on the drivers); rows are one record per iteration or time
sample. CSV output is byte-deterministic for a given trace: floats are
rendered with %.17g so values round-trip exactly and two runs of the same
seeded configuration produce identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = ["Trace"]


def _fmt(v: float) -> str:
    return "%.17g" % v


@dataclass
class Trace:
    kind: str                      # "agm" | "pgm" | "ode"
    columns: tuple[str, ...]
    data: np.ndarray               # shape (n_rows, len(columns))
    summary: dict[str, Any] = field(default_factory=dict)
    certificates: list = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        self.data = np.asarray(self.data, dtype=float)
        if self.data.ndim != 2 or self.data.shape[1] != len(self.columns):
            raise ValueError(
                f"data shape {self.data.shape} does not match {len(self.columns)} columns"
            )

    @property
    def n_rows(self) -> int:
        return self.data.shape[0]

    def column(self, name: str) -> np.ndarray:
        try:
            j = self.columns.index(name)
        except ValueError:
            raise KeyError(f"no column {name!r}; have {self.columns}") from None
        return self.data[:, j]

    def write_csv(self, path) -> None:
        lines = [",".join(self.columns)]
        for row in self.data:
            lines.append(",".join(_fmt(v) for v in row))
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")

    def write_json(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(_clean(self.summary), fh, indent=2, sort_keys=True)
            fh.write("\n")


def _clean(v):
    """Make a summary strictly JSON-safe (NaN becomes null)."""
    if isinstance(v, dict):
        return {k: _clean(u) for k, u in v.items()}
    if isinstance(v, (list, tuple)):
        return [_clean(u) for u in v]
    if isinstance(v, np.ndarray):
        return [_clean(u) for u in v.tolist()]
    if isinstance(v, (np.floating, np.integer)):
        v = v.item()
    if isinstance(v, float) and not np.isfinite(v):
        return None
    return v
