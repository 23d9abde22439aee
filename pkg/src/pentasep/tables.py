"""Count tables in the published layout and verification against the
embedded desk-scale ground truth.

Columns are nv, nf, total, ipr, sep3, sep4, sep5: the number of isomers with
pentagon separation at least 2 (the isolated-pentagon rule), 3, 4 and 5.  The
fixture rows cover every even vertex count from 20 to 60; the stretch IPR
fixtures cover 70-80.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import UnsupportedN
from .spiral import count_table

CSV_HEADER = "nv,nf,total,ipr,sep3,sep4,sep5"

# ground truth: total isomers and IPR isomers for even nv in [20, 60];
# separation >= 3, 4, 5 counts are all zero in this range
FIXTURE_COUNTS: dict[int, tuple[int, int]] = {
    20: (1, 0), 22: (0, 0), 24: (1, 0), 26: (1, 0), 28: (2, 0),
    30: (3, 0), 32: (6, 0), 34: (6, 0), 36: (15, 0), 38: (17, 0),
    40: (40, 0), 42: (45, 0), 44: (89, 0), 46: (116, 0), 48: (199, 0),
    50: (271, 0), 52: (437, 0), 54: (580, 0), 56: (924, 0), 58: (1205, 0),
    60: (1812, 1),
}

# stretch range: IPR counts only
FIXTURE_IPR_STRETCH: dict[int, int] = {
    70: 1, 72: 1, 74: 1, 76: 2, 78: 5, 80: 7,
}

COLUMNS = ("nv", "nf", "total", "ipr", "sep3", "sep4", "sep5")


def fixture_rows(n_min: int, n_max: int) -> list[tuple[int, ...]]:
    """The embedded ground-truth rows for even nv in [n_min, n_max]."""
    rows = []
    for n in range(n_min, n_max + 1, 2):
        if n not in FIXTURE_COUNTS:
            raise UnsupportedN(f"no fixture row for nv = {n}")
        total, ipr = FIXTURE_COUNTS[n]
        rows.append((n, n // 2 + 2, total, ipr, 0, 0, 0))
    return rows


def emit_table(rows: Sequence[Sequence[int]]) -> str:
    """CSV text with the published column layout."""
    lines = [CSV_HEADER]
    lines.extend(",".join(str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Mismatch:
    nv: int
    column: str
    expected: int
    actual: int


@dataclass(frozen=True)
class VerifyReport:
    rows: list[tuple[int, ...]]
    mismatches: list[Mismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_against_fixtures(n_min: int, n_max: int,
                            workers: Optional[int] = None) -> VerifyReport:
    """Regenerate counts for even nv in [n_min, n_max] and diff the fixtures."""
    expected = {r[0]: r for r in fixture_rows(n_min, n_max)}
    rows = count_table(range(n_min, n_max + 1, 2), workers=workers)
    mismatches = []
    for row in rows:
        want = expected[row[0]]
        for col, w, a in zip(COLUMNS, want, row):
            if w != a:
                mismatches.append(Mismatch(row[0], col, w, a))
    return VerifyReport(rows, mismatches)
