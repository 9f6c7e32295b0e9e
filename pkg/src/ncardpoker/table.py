"""Counts table construction, crossover search, and emitters.

Counts are serialized as exact decimal integer strings everywhere (CSV cells,
JSON values); values reach ~5e14 and would silently lose precision as 64-bit
floats in downstream consumers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .counting import (
    CATEGORIES,
    count_category,
    decimal_string,
    total_hands,
)

CSV_HEADER = "n,total,straight,flush,full_house"


@dataclass(frozen=True)
class TableRow:
    n: int
    total: int
    straight: int
    flush: int
    full_house: int

    def count(self, category: str) -> int:
        if category == "total":
            return self.total
        if category not in CATEGORIES:
            raise ValueError(f"unknown category {category!r}")
        return getattr(self, category)

    def probability(self, category: str) -> Fraction:
        return Fraction(self.count(category), self.total)


@dataclass(frozen=True)
class CountsTable:
    rows: tuple[TableRow, ...]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> TableRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(f"no row for n={n}")


def _check_bounds(n_min: int, n_max: int) -> None:
    if not (5 <= n_min <= n_max <= 52):
        raise ValueError(
            f"range must satisfy 5 <= n_min <= n_max <= 52, got [{n_min}, {n_max}]"
        )


def build_row(n: int) -> TableRow:
    return TableRow(
        n=n,
        total=total_hands(n),
        straight=count_category(n, "straight"),
        flush=count_category(n, "flush"),
        full_house=count_category(n, "full_house"),
    )


def build_table(n_min: int = 5, n_max: int = 52) -> CountsTable:
    """Exact counts for every n in [n_min, n_max] (defaults to the full 5..52)."""
    _check_bounds(n_min, n_max)
    return CountsTable(tuple(build_row(n) for n in range(n_min, n_max + 1)))


@dataclass(frozen=True)
class CrossoverReport:
    """Smallest n in [n_min, n_max] where count(first) exceeds count(second),
    or first_n = None when that never happens in the range."""

    first_category: str
    second_category: str
    first_n: int | None
    n_min: int
    n_max: int


def find_crossover(
    first_category: str,
    second_category: str,
    n_min: int = 5,
    n_max: int = 52,
) -> CrossoverReport:
    """Scan the range for the first n where one category's count overtakes
    the other's."""
    for category in (first_category, second_category):
        if category not in CATEGORIES:
            raise ValueError(f"unknown category {category!r}, expected one of {CATEGORIES}")
    if first_category == second_category:
        raise ValueError("crossover categories must be distinct")
    _check_bounds(n_min, n_max)
    first_n = None
    for n in range(n_min, n_max + 1):
        if count_category(n, first_category) > count_category(n, second_category):
            first_n = n
            break
    return CrossoverReport(first_category, second_category, first_n, n_min, n_max)


def to_csv(table: CountsTable) -> str:
    """CSV with exact integer cells, LF line endings, no thousands separators."""
    lines = [CSV_HEADER]
    for r in table:
        lines.append(f"{r.n},{r.total},{r.straight},{r.flush},{r.full_house}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> CountsTable:
    """Inverse of to_csv;  round-trips bit-exactly."""
    lines = [line for line in text.split("\n") if line]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"expected header {CSV_HEADER!r}")
    rows = []
    for line in lines[1:]:
        fields = line.split(",")
        if len(fields) != 5:
            raise ValueError(f"expected 5 fields, got {line!r}")
        n, total, straight, flush, full_house = (int(f) for f in fields)
        rows.append(TableRow(n, total, straight, flush, full_house))
    return CountsTable(tuple(rows))


def to_json(table: CountsTable) -> str:
    """JSON array of row objects; counts are decimal strings, key order fixed."""
    payload = [
        {
            "n": r.n,
            "total": str(r.total),
            "straight": str(r.straight),
            "flush": str(r.flush),
            "full_house": str(r.full_house),
        }
        for r in table
    ]
    return json.dumps(payload, indent=2) + "\n"


def to_markdown(table: CountsTable, probabilities: bool = False, digits: int = 6) -> str:
    """Markdown table of the counts, optionally with probability columns."""
    headers = ["n", "total", "straight", "flush", "full house"]
    if probabilities:
        headers += ["p(straight)", "p(flush)", "p(full house)"]
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("---:" for _ in headers) + "|",
    ]
    for r in table:
        cells = [str(r.n), str(r.total), str(r.straight), str(r.flush), str(r.full_house)]
        if probabilities:
            cells += [
                decimal_string(r.probability(cat), digits)
                for cat in ("straight", "flush", "full_house")
            ]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


# Fixed geometry for the probability chart; plain static SVG, no dependencies.
_SVG_WIDTH = 640
_SVG_HEIGHT = 480
_MARGIN_LEFT = 56
_MARGIN_RIGHT = 16
_MARGIN_TOP = 24
_MARGIN_BOTTOM = 48
_SERIES_COLORS = {"straight": "#1f77b4", "flush": "#d62728", "full_house": "#2ca02c"}


def to_svg(table: CountsTable) -> str:
    """Probability-vs-n chart: one polyline per category, y in [0, 1],
    x ticks every 5 hands."""
    if len(table) < 2:
        raise ValueError("svg plot needs at least two rows")
    ns = [r.n for r in table]
    x0, x1 = min(ns), max(ns)
    plot_w = _SVG_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _SVG_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def x_pos(n: int) -> float:
        return _MARGIN_LEFT + plot_w * (n - x0) / (x1 - x0)

    def y_pos(p: float) -> float:
        return _MARGIN_TOP + plot_h * (1.0 - p)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_WIDTH} {_SVG_HEIGHT}">',
        f'<rect width="{_SVG_WIDTH}" height="{_SVG_HEIGHT}" fill="white"/>',
    ]
    # axes
    ax_bottom = _MARGIN_TOP + plot_h
    parts.append(
        f'<line x1="{_MARGIN_LEFT}" y1="{ax_bottom}" x2="{_MARGIN_LEFT + plot_w}" '
        f'y2="{ax_bottom}" stroke="black"/>'
    )
    parts.append(
        f'<line x1="{_MARGIN_LEFT}" y1="{_MARGIN_TOP}" x2="{_MARGIN_LEFT}" '
        f'y2="{ax_bottom}" stroke="black"/>'
    )
    for n in range(x0 + (-x0) % 5, x1 + 1, 5):
        x = x_pos(n)
        parts.append(
            f'<line x1="{x:.1f}" y1="{ax_bottom}" x2="{x:.1f}" y2="{ax_bottom + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x:.1f}" y="{ax_bottom + 20}" font-size="12" text-anchor="middle">{n}</text>'
        )
    for tick in range(0, 11, 2):
        p = tick / 10
        y = y_pos(p)
        parts.append(
            f'<line x1="{_MARGIN_LEFT - 5}" y1="{y:.1f}" x2="{_MARGIN_LEFT}" y2="{y:.1f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_LEFT - 8}" y="{y + 4:.1f}" font-size="12" text-anchor="end">{p:.1f}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:.1f}" y="{_SVG_HEIGHT - 10}" '
        f'font-size="13" text-anchor="middle">cards in hand (n)</text>'
    )
    for idx, category in enumerate(CATEGORIES):
        points = " ".join(
            f"{x_pos(r.n):.2f},{y_pos(float(r.probability(category))):.2f}" for r in table
        )
        color = _SERIES_COLORS[category]
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
        label_y = _MARGIN_TOP + 16 * (idx + 1)
        parts.append(
            f'<line x1="{_MARGIN_LEFT + 10}" y1="{label_y - 4}" x2="{_MARGIN_LEFT + 34}" '
            f'y2="{label_y - 4}" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_LEFT + 40}" y="{label_y}" font-size="12">'
            f'{category.replace("_", " ")}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


_EMITTERS = {
    "csv": to_csv,
    "markdown": to_markdown,
    "json": to_json,
    "svg-plot": to_svg,
}

FORMATS = tuple(_EMITTERS)


def emit(table: CountsTable, format: str) -> str:
    """Serialize a table as one of csv, markdown, json, svg-plot."""
    if not table.rows:
        raise ValueError("cannot emit an empty table")
    try:
        emitter = _EMITTERS[format]
    except KeyError:
        raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")
    return emitter(table)
