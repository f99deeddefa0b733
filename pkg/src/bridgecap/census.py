"""Census of 2-bridge knots by crossing number and the crosscap distribution."""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

from .contfrac import even_cf, positive_cf
from .crosscap import crosscap_of_even_vector
from .depth import depth_auto
from .farey import KnotClass, canonicalize


@dataclass(frozen=True)
class CensusRow:
    knot: KnotClass
    cr: int
    gamma: int
    genus: int
    depth: int

    @property
    def p(self) -> int:
        return self.knot.canonical.p

    @property
    def q(self) -> int:
        return self.knot.canonical.q


@dataclass
class DistributionTable:
    counts: dict = field(default_factory=dict)  # (cr, gamma) -> count
    totals: dict = field(default_factory=dict)  # cr -> count

    def cell(self, cr: int, gamma: int) -> int:
        return self.counts.get((cr, gamma), 0)

    def as_dict(self) -> dict:
        crs = sorted(self.totals)
        gammas = range(1, max((g for _, g in self.counts), default=0) + 1)
        return {
            "counts": {str(c): {str(g): self.cell(c, g) for g in gammas} for c in crs},
            "totals": {str(c): self.totals[c] for c in crs},
        }


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def denominator_bound(max_cr: int) -> int:
    """Largest denominator of a fraction whose positive expansion sums to at
    most ``max_cr``.

    Among expansions with a fixed entry sum the denominator is largest for
    ``[1, 1, ..., 1, 2]``, whose denominators are Fibonacci numbers, so
    ``q <= F(max_cr + 1)``.
    """
    return fibonacci(max_cr + 1)


def _rows_for_denominators(qs: Sequence[int], max_cr: int) -> list[CensusRow]:
    rows = []
    for q in qs:
        for p in range(2, q, 2):
            if gcd(p, q) != 1:
                continue
            x = canonicalize(p, q)
            if x.canonical.p != p:
                continue
            cr = sum(positive_cf(x.canonical).entries)
            if cr > max_cr:
                continue
            a = even_cf(x.canonical).entries
            rows.append(CensusRow(x, cr, crosscap_of_even_vector(a), len(a) // 2, depth_auto(a)))
    return rows


def _sort_key(row: CensusRow):
    return (row.cr, row.p, row.q)


def enumerate_knots(
    max_cr: int,
    denominators: Optional[Iterable[int]] = None,
    workers: Optional[int] = None,
) -> list[CensusRow]:
    """One row per 2-bridge knot with crossing number at most ``max_cr``,
    sorted by ``(cr, p, q)``.

    ``denominators`` overrides the scan (any order); ``workers`` defaults to
    ``BRIDGECAP_THREADS`` or 1.
    """
    if max_cr < 3:
        return []
    if denominators is None:
        denominators = range(3, denominator_bound(max_cr) + 1, 2)
    qs = [q for q in denominators if q >= 3 and q % 2]
    if workers is None:
        workers = int(os.environ.get("BRIDGECAP_THREADS", "1") or 1)
    if workers <= 1 or len(qs) < 64:
        rows = _rows_for_denominators(qs, max_cr)
    else:
        chunks = [qs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_rows_for_denominators, chunks, [max_cr] * workers)
            rows = [r for part in parts for r in part]
    return sorted(rows, key=_sort_key)


def distribution(rows: Iterable[CensusRow]) -> DistributionTable:
    counts = Counter((r.cr, r.gamma) for r in rows)
    totals: Counter = Counter()
    for (cr, _), n in counts.items():
        totals[cr] += n
    return DistributionTable(dict(counts), dict(totals))


CSV_HEADER = ["p", "q", "crossing_number", "crosscap", "genus", "depth"]


def rows_to_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.p, r.q, r.cr, r.gamma, r.genus, r.depth])
    return buf.getvalue()


def table_to_json(table: DistributionTable, max_cr: int) -> str:
    payload = {"max_cr": max_cr, **table.as_dict()}
    return json.dumps(payload, indent=2) + "\n"


def format_table(table: DistributionTable) -> str:
    """Plain-text grid: one line per crossing number, crosscap columns, total."""
    gammas = range(1, max((g for _, g in table.counts), default=0) + 1)
    head = "cr  " + "".join(f"{g:>6}" for g in gammas) + "   total"
    lines = [head]
    for c in sorted(table.totals):
        cells = "".join(f"{table.cell(c, g):>6}" for g in gammas)
        lines.append(f"{c:<4}{cells}{table.totals[c]:>8}")
    return "\n".join(lines) + "\n"
