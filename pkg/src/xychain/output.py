"""Run manifests and CSV/JSON/SVG emission for the CLI.

CSV layout: `#`-prefixed manifest lines, one header row, then data rows
(comma separated, `.` decimal point, shortest round-trip float formatting).
The JSON encoding of the same run carries identical numeric values.
Outputs are byte-reproducible for identical manifests; no timestamps are
emitted by default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, IO

from . import __version__


@dataclass(frozen=True)
class RunManifest:
    """Header block identifying a run: command, parameters, grid, version."""

    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    def lines(self) -> list[str]:
        out = [f"# xychain {self.version}", f"# command = {self.command}"]
        for key, value in self.parameters.items():
            out.append(f"# {key} = {_fmt(value)}")
        return out

    def as_dict(self) -> dict[str, Any]:
        return {"tool": "xychain", "version": self.version,
                "command": self.command, "parameters": dict(self.parameters)}


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(stream: IO[str], manifest: RunManifest, header: list[str],
              rows: list[list[Any]], footer: list[str] | None = None) -> None:
    for line in manifest.lines():
        stream.write(line + "\n")
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(_fmt(x) for x in row) + "\n")
    for line in footer or []:
        stream.write("# " + line + "\n")


def write_json(stream: IO[str], manifest: RunManifest, header: list[str],
               rows: list[list[Any]], extra: dict[str, Any] | None = None
               ) -> None:
    payload = {"manifest": manifest.as_dict(),
               "columns": header,
               "rows": rows}
    if extra:
        payload.update(extra)
    json.dump(payload, stream, indent=1)
    stream.write("\n")


def plot_evolution(path: str, times, c1, c2_i, c2_ii, xlabel: str) -> None:
    """Static SVG of C1(t) and the two C2 types (type II dashed)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(times, c1, color="tab:blue", lw=1.2, label="C1")
    ax.plot(times, c2_i, color="tab:red", lw=1.0, label="C2 type I")
    ax.plot(times, c2_ii, color="lightcoral", lw=1.0, ls="--",
            label="C2 type II")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("concurrence")
    ax.set_ylim(bottom=0.0)
    ax.legend(loc="best", frameon=False)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_scan(path: str, b, c1_sampled, c1_envelope, c2_i, c2_ii) -> None:
    """Static SVG of a field sweep: sampled solid, envelope dotted."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(b, c1_sampled, color="tab:blue", lw=1.2, label="C1 max (sampled)")
    ax.plot(b, c1_envelope, color="tab:blue", lw=1.0, ls=":",
            label="C1 max (envelope)")
    ax.plot(b, c2_i, color="tab:red", lw=1.0, label="C2 max type I")
    ax.plot(b, c2_ii, color="lightcoral", lw=1.0, ls="--",
            label="C2 max type II")
    ax.set_xlabel("b")
    ax.set_ylabel("maximum concurrence")
    ax.set_ylim(bottom=0.0)
    ax.legend(loc="best", frameon=False)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
