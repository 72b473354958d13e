"""Tables of Berge knots of types VII and VIII by surgery coefficient, and
the reports built from them (genus and Alexander-polynomial coincidences).

Every function returns plain data in a deterministic order; the formatters
turn rows into CSV, JSON or a markdown table byte-for-byte reproducibly.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from typing import Iterable, NamedTuple

from .exact_poly import LaurentPoly, normalize_doteq
from .knots import StandardParam, alexander_berge, genus_berge
from .quadratic import enumerate_preimages

__all__ = [
    "TableRow",
    "TABLE_FORMATS",
    "berge_params",
    "berge_table",
    "format_rows",
    "genus_collisions",
    "format_collisions",
    "AlexanderCollisionReport",
    "alexander_collisions",
]

TABLE_FORMATS = ("csv", "json", "md")
_FIELDS = ("p", "sign", "m", "n", "g")


class TableRow(NamedTuple):
    p: int
    sign: str  # "+" or "-"
    m: int
    n: int
    g: int

    @classmethod
    def from_param(cls, par: StandardParam) -> TableRow:
        p = (par.m + par.n) ** 2 - par.sign * par.m * par.n
        return cls(p, par.sign_char, par.m, par.n, genus_berge(par))

    def param(self) -> StandardParam:
        return StandardParam(self.sign, self.m, self.n)

    def sort_key(self) -> tuple[int, int, int]:
        return (self.p, 0 if self.sign == "+" else 1, self.m)


def berge_params(max_p: int, *, nontrivial: bool = False) -> list[StandardParam]:
    """Standard parameters with p <= max_p, ordered by (p, + before -, m).

    (1, 1) is always left out: it is the unknot with p = 3 or 5.
    ``nontrivial`` also drops the torus knots m = 1.
    """
    out = []
    for p in range(2, max_p + 1):
        for sign in (1, -1):
            for m, n in enumerate_preimages(p, sign):
                if n == 1 or (nontrivial and m == 1):
                    continue
                out.append(StandardParam(sign, m, n))
    return out


def berge_table(max_p: int) -> list[TableRow]:
    if max_p < 2:
        raise ValueError("max_p must be at least 2")
    rows = [TableRow.from_param(par) for par in berge_params(max_p)]
    return sorted(rows, key=TableRow.sort_key)


def _csv(rows: Iterable[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_FIELDS)
    writer.writerows(rows)
    return buf.getvalue()


def _json(rows: Iterable[TableRow]) -> str:
    return json.dumps([row._asdict() for row in rows], indent=2) + "\n"


def _md(rows: Iterable[TableRow]) -> str:
    """p, (sign, m, n), g with p left blank when it repeats the row above."""
    lines = ["| p | (±, m, n) | g |", "|---:|:---:|---:|"]
    last_p = None
    for row in rows:
        p = "" if row.p == last_p else str(row.p)
        lines.append(f"| {p} | ({row.sign}, {row.m}, {row.n}) | {row.g} |")
        last_p = row.p
    return "\n".join(lines) + "\n"


_FORMATTERS = {"csv": _csv, "json": _json, "md": _md}


def format_rows(rows: Iterable[TableRow], fmt: str) -> str:
    try:
        return _FORMATTERS[fmt](list(rows))
    except KeyError:
        raise ValueError(f"format must be one of {TABLE_FORMATS}, got {fmt!r}") from None


def _is_torus_pair(group: list[TableRow]) -> bool:
    """{(+, 1, n), (-, 1, n - 1)}: both are T(n, n + 1), so g always agrees."""
    if len(group) != 2:
        return False
    a, b = sorted(group, key=TableRow.sort_key)
    if a.sign == b.sign:
        return False
    plus, minus = (a, b) if a.sign == "+" else (b, a)
    return plus.m == minus.m == 1 and minus.n == plus.n - 1


def genus_collisions(max_p: int) -> list[list[TableRow]]:
    """Groups of two or more table rows sharing g, ordered by smallest p.

    The pairs (+, 1, n), (-, 1, n - 1) are the same torus knot and are dropped.
    """
    by_genus: dict[int, list[TableRow]] = defaultdict(list)
    for row in berge_table(max_p):
        by_genus[row.g].append(row)
    groups = [rows for rows in by_genus.values() if len(rows) >= 2 and not _is_torus_pair(rows)]
    return sorted(groups, key=lambda rows: rows[0].sort_key())


def format_collisions(groups: list[list[TableRow]], fmt: str) -> str:
    """CSV with a 1-based ``group`` column, JSON as a list of groups, or one markdown table per group."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("group",) + _FIELDS)
        for i, group in enumerate(groups, 1):
            writer.writerows((i,) + tuple(row) for row in group)
        return buf.getvalue()
    if fmt == "json":
        doc = [{"g": group[0].g, "rows": [row._asdict() for row in group]} for group in groups]
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "md":
        return "\n".join(f"g = {group[0].g}\n\n" + _md(group) for group in groups)
    raise ValueError(f"format must be one of {TABLE_FORMATS}, got {fmt!r}")


class AlexanderCollisionReport(NamedTuple):
    parameters: int
    pairs_compared: int
    collisions: tuple[tuple[StandardParam, ...], ...]


def alexander_collisions(max_p: int) -> AlexanderCollisionReport:
    """Group the nontrivial parameters with p <= max_p by normalized Alexander polynomial.

    Grouping by the normalized polynomial compares every pair at once, so
    ``pairs_compared`` is N(N - 1)/2.
    """
    params = berge_params(max_p, nontrivial=True)
    classes: dict[LaurentPoly, list[StandardParam]] = defaultdict(list)
    for par in params:
        classes[normalize_doteq(alexander_berge(par))].append(par)
    hits = tuple(tuple(pars) for pars in classes.values() if len(pars) > 1)
    n = len(params)
    return AlexanderCollisionReport(n, n * (n - 1) // 2, tuple(sorted(hits)))
