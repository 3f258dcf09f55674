"""Census of controllability verdicts over streams of graph6 lines.

Each input line is analyzed independently (full-subset verdict, per-vertex
verdicts, irreducibility of the characteristic polynomial, optionally all
subsets), so the work parallelizes over lines.  Results are buffered and
emitted in input order: the CSV and JSON outputs are byte-identical no
matter how many workers ran.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import multiprocessing
from dataclasses import dataclass, field

from . import control
from .errors import Graph6Error
from .graphs import parse_graph6

SUBSET_GUARD = 16

CSV_COLUMNS = [
    "line",
    "graph6",
    "n",
    "rank_full",
    "dual_degree_full",
    "controllable_full",
    "controllable_vertices",
    "irreducible_charpoly",
    "controllable_subsets",
    "total_subsets",
    "error",
]

CSV_FORMAT_VERSION = 1


@dataclass
class CensusConfig:
    modes: tuple[str, ...] = ("full", "vertices")  # any of full/vertices/subsets
    workers: int = 1
    lenient: bool = False
    max_n: int | None = None


@dataclass
class CensusRow:
    line: int
    graph6: str
    n: int | None = None
    rank_full: int | None = None
    dual_degree_full: int | None = None
    controllable_full: bool | None = None
    controllable_vertices: int | None = None
    irreducible_charpoly: bool | None = None
    controllable_subsets: int | None = None
    total_subsets: int | None = None
    error: str | None = None


@dataclass
class CensusSummary:
    per_n: dict = field(default_factory=dict)
    errors: int = 0
    total: int = 0


def analyze_line(task) -> CensusRow:
    line_no, text, modes, max_n = task
    row = CensusRow(line=line_no, graph6=text)
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        row.error = str(exc)
        return row
    row.graph6 = text.strip()
    row.n = g.v
    if max_n is not None and g.v > max_n:
        row.error = f"graph on {g.v} vertices exceeds --max-n {max_n}"
        return row
    if "full" in modes:
        p = control.PairSpec.from_subset(g, range(g.v))
        rep = control.full_report(p)
        row.rank_full = rep.rank_of_w
        row.dual_degree_full = rep.dual_degree
        row.controllable_full = rep.controllable
        row.irreducible_charpoly = control.is_charpoly_irreducible(g)
    if "vertices" in modes:
        row.controllable_vertices = sum(
            1 for u in range(g.v) if control.is_vertex_controllable(g, u)
        )
    if "subsets" in modes:
        if g.v > SUBSET_GUARD:
            row.error = f"subset enumeration guarded at v <= {SUBSET_GUARD}"
            return row
        count = 0
        for r in range(g.v + 1):
            for s in itertools.combinations(range(g.v), r):
                if control.is_controllable_rank(control.PairSpec.from_subset(g, s)):
                    count += 1
        row.controllable_subsets = count
        row.total_subsets = 2**g.v
    return row


def run_census(lines, config: CensusConfig):
    """Analyze every line; returns (rows, summary) in input order."""
    tasks = [
        (i + 1, line, tuple(config.modes), config.max_n)
        for i, line in enumerate(lines)
        if line.strip()
    ]
    if config.workers > 1:
        with multiprocessing.Pool(config.workers) as pool:
            rows = list(pool.imap(analyze_line, tasks, chunksize=64))
    else:
        rows = [analyze_line(t) for t in tasks]
    return rows, summarize(rows)


def summarize(rows) -> CensusSummary:
    summary = CensusSummary()
    for row in rows:
        summary.total += 1
        if row.error is not None:
            summary.errors += 1
            continue
        bucket = summary.per_n.setdefault(
            row.n,
            {
                "graphs": 0,
                "controllable": 0,
                "with_controllable_vertex": 0,
                "irreducible_charpoly": 0,
            },
        )
        bucket["graphs"] += 1
        if row.controllable_full:
            bucket["controllable"] += 1
        if row.controllable_vertices:
            bucket["with_controllable_vertex"] += 1
        if row.irreducible_charpoly:
            bucket["irreducible_charpoly"] += 1
    return summary


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            ["" if getattr(row, col) is None else getattr(row, col) for col in CSV_COLUMNS]
        )
    return buf.getvalue()


def row_to_json(row: CensusRow) -> dict:
    out = {}
    for col in CSV_COLUMNS:
        val = getattr(row, col)
        if val is not None:
            out[col] = val
    return out


def summary_to_json(summary: CensusSummary) -> dict:
    return {
        "format_version": CSV_FORMAT_VERSION,
        "total_lines": summary.total,
        "error_lines": summary.errors,
        "per_n": {
            str(n): summary.per_n[n] for n in sorted(summary.per_n)
        },
    }


def census_json_document(rows, summary) -> str:
    doc = {
        "summary": summary_to_json(summary),
        "rows": [row_to_json(r) for r in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
