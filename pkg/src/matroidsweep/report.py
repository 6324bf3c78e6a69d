"""Rendering of sweep tables and poset diagrams.

Tables carry four columns (vertex, order swept, restriction set, witness
functional) with rationals shown both exactly and as three-significant-digit
decimals; the decimal form is display-only, all comparisons elsewhere happen
on exact rationals.  Hasse diagrams are drawn rank-layered with matplotlib
(Agg) and written to files next to the delimited table output.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .matroid import Matroid
from .multicomplex import MonomialLabeling, NoLabeling, monomial_string
from .polytope import Functional
from .poset import RestrictionPoset
from .sweep import SweepRecord

__all__ = [
    "decimal3",
    "rational_str",
    "functional_decimal",
    "sweep_table_rows",
    "format_sweep_table",
    "sweep_table_csv",
    "poset_dot",
    "render_hasse",
    "write_report",
]


def decimal3(q: Fraction) -> str:
    """Three significant digits, trailing zeros kept (1 -> '1.00')."""
    return f"{float(q):#.3g}"


def rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def functional_decimal(f: Functional) -> str:
    return "(" + ", ".join(decimal3(c) for c in f.coords) + ")"


def sweep_table_rows(m: Matroid, rec: SweepRecord) -> list[dict]:
    rows = []
    for pos, bi in enumerate(rec.sweep.order):
        chi = tuple(1 if e in m.bases[bi] else 0 for e in range(m.n))
        rows.append(
            {
                "vertex": chi,
                "order_swept": pos,
                "ip_set": sorted(rec.rsets.rsets[pos]),
                "functional": rec.sweep.witnesses[pos],
            }
        )
    return rows


def format_sweep_table(m: Matroid, rec: SweepRecord) -> str:
    lines = ["vertex\torder swept\tIP set\tlinear functional"]
    for row in sweep_table_rows(m, rec):
        lines.append(
            "\t".join(
                [
                    "(" + ", ".join(map(str, row["vertex"])) + ")",
                    str(row["order_swept"]),
                    "[" + ", ".join(map(str, row["ip_set"])) + "]",
                    functional_decimal(row["functional"]),
                ]
            )
        )
    # decimals above are display-only; list each distinct witness exactly
    seen: list[Functional] = []
    for f in rec.sweep.witnesses:
        if f not in seen:
            seen.append(f)
    for f in seen:
        exact = ", ".join(rational_str(c) for c in f.coords)
        lines.append(f"# exact witness: ({exact})")
    return "\n".join(lines)


def sweep_table_csv(m: Matroid, rec: SweepRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["vertex", "order_swept", "ip_set", "functional_decimal", "functional_exact"])
    for row in sweep_table_rows(m, rec):
        writer.writerow(
            [
                " ".join(map(str, row["vertex"])),
                row["order_swept"],
                " ".join(map(str, row["ip_set"])),
                functional_decimal(row["functional"]),
                " ".join(rational_str(c) for c in row["functional"].coords),
            ]
        )
    return buf.getvalue()


def poset_dot(p: RestrictionPoset, labeling: MonomialLabeling | NoLabeling | None = None) -> str:
    """Hasse diagram in DOT, nodes named by sweep position."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=ellipse];"]
    names = labeling.variable_names() if isinstance(labeling, MonomialLabeling) else None
    blocked = set(labeling.blocked) if isinstance(labeling, NoLabeling) else set()
    for i in range(len(p)):
        extra = ""
        if names is not None:
            extra = "\\n" + monomial_string(labeling.labels[i], names)
        color = ' color="red"' if p.labels[i] in blocked else ""
        rset = ",".join(map(str, sorted(p.rsets[i])))
        lines.append(f'  n{i} [label="{p.labels[i]}\\n{{{rset}}}{extra}"{color}];')
    for i in range(len(p)):
        for j in p.covers[i]:
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layered_positions(p: RestrictionPoset) -> dict[int, tuple[float, float]]:
    by_rank: dict[int, list[int]] = {}
    for i in range(len(p)):
        by_rank.setdefault(p.rank(i), []).append(i)
    pos: dict[int, tuple[float, float]] = {}
    for r in sorted(by_rank):
        nodes = by_rank[r]
        if r > 0:
            # order by mean x of lower neighbours to reduce crossings
            def mean_lower(i: int) -> float:
                lows = [pos[j][0] for j in range(len(p)) if i in p.covers[j]]
                return sum(lows) / len(lows) if lows else 0.0

            nodes.sort(key=lambda i: (mean_lower(i), p.labels[i]))
        width = len(nodes)
        for k, i in enumerate(nodes):
            pos[i] = (k - (width - 1) / 2.0, float(r))
    return pos


def render_hasse(
    p: RestrictionPoset,
    path: str | Path,
    labeling: MonomialLabeling | NoLabeling | None = None,
    title: str | None = None,
) -> None:
    """Draw the rank-layered Hasse diagram to an image file (png/svg)."""
    pos = _layered_positions(p)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * max(1, len(p)) ** 0.5 * 2), 4.5))
    for i in range(len(p)):
        for j in p.covers[i]:
            (x1, y1), (x2, y2) = pos[i], pos[j]
            ax.plot([x1, x2], [y1, y2], color="0.6", linewidth=1.0, zorder=1)
    names = labeling.variable_names() if isinstance(labeling, MonomialLabeling) else None
    blocked = set(labeling.blocked) if isinstance(labeling, NoLabeling) else set()
    for i in range(len(p)):
        x, y = pos[i]
        bad = p.labels[i] in blocked
        text = str(p.labels[i])
        if names is not None:
            text += "\n" + monomial_string(labeling.labels[i], names)
        ax.annotate(
            text,
            (x, y),
            ha="center",
            va="center",
            fontsize=9,
            zorder=2,
            bbox={
                "boxstyle": "round,pad=0.25",
                "facecolor": "#ffd6d6" if bad else "white",
                "edgecolor": "red" if bad else "0.3",
            },
        )
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(
    m: Matroid,
    records: Sequence[SweepRecord],
    posets: Sequence[tuple[RestrictionPoset, MonomialLabeling | NoLabeling | None]],
    outdir: str | Path,
) -> list[Path]:
    """Write delimited sweep tables plus one Hasse figure per poset."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for i, rec in enumerate(records):
        path = out / f"sweep_{i:03d}.csv"
        path.write_text(sweep_table_csv(m, rec))
        written.append(path)
    for i, (p, labeling) in enumerate(posets):
        fig_path = out / f"poset_{i:03d}.png"
        render_hasse(p, fig_path, labeling=labeling, title=f"poset {i}")
        written.append(fig_path)
        dot_path = out / f"poset_{i:03d}.dot"
        dot_path.write_text(poset_dot(p, labeling))
        written.append(dot_path)
    return written
