"""Exact dense linear algebra over the rationals and GF(2).

No floating point anywhere: rational entries are `fractions.Fraction`
(always lowest terms, positive denominator), GF(2) entries are the ints
0 and 1.  Sizes here are desk scale, so clarity beats asymptotics; the one
concession is Bareiss fraction-free elimination for integer rank queries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

RATIONALS = "rationals"
GF2 = "gf2"


def _coerce(value, field):
    if field == GF2:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not a GF(2) element")
            value = value.numerator
        if not isinstance(value, int):
            raise ValueError(f"{value!r} is not a GF(2) element")
        return value % 2
    if isinstance(value, float):
        raise ValueError("floating point entries are not allowed")
    return Fraction(value)


class ExactMatrix:
    """Immutable matrix over one of the two supported fields."""

    def __init__(self, rows: Iterable[Iterable], field: str = RATIONALS,
                 cols: int | None = None):
        if field not in (RATIONALS, GF2):
            raise ValueError(f"unknown field {field!r}")
        entries = tuple(tuple(_coerce(v, field) for v in row) for row in rows)
        widths = {len(r) for r in entries}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        self.field = field
        self.entries = entries
        self.rows = len(entries)
        self.cols = widths.pop() if widths else (cols if cols is not None else 0)

    @classmethod
    def identity(cls, n: int, field: str = RATIONALS) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: str = RATIONALS) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], field, cols=cols)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.cols, self.entries))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} {self.field})"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.entries) if self.entries else [],
                           self.field, cols=self.rows)

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        prod = [[sum(a * b for a, b in zip(row, col)) for col in zip(*other.entries)]
                for row in self.entries]
        if self.field == GF2:
            prod = [[v % 2 for v in row] for row in prod]
        return ExactMatrix(prod, self.field, cols=other.cols)

    __matmul__ = matmul

    def column_submatrix(self, cols: Sequence[int]) -> "ExactMatrix":
        cols = list(cols)
        if len(set(cols)) != len(cols):
            raise ValueError("repeated column index")
        for j in cols:
            if not 0 <= j < self.cols:
                raise ValueError(f"column index {j} out of range")
        return ExactMatrix([[row[j] for j in cols] for row in self.entries],
                           self.field, cols=len(cols))

    # -- elimination -----------------------------------------------------

    def _is_integral(self) -> bool:
        return self.field == RATIONALS and all(
            v.denominator == 1 for row in self.entries for v in row)

    def rank(self) -> int:
        if self._is_integral():
            return _bareiss_rank([[v.numerator for v in row] for row in self.entries])
        return sum(1 for row in self.rref().entries if any(row))

    def rref(self) -> "ExactMatrix":
        """Reduced row echelon form (idempotent, row space preserved)."""
        work = [list(row) for row in self.entries]
        nrows, ncols = self.rows, self.cols
        pivot_row = 0
        for col in range(ncols):
            pr = next((r for r in range(pivot_row, nrows) if work[r][col]), None)
            if pr is None:
                continue
            work[pivot_row], work[pr] = work[pr], work[pivot_row]
            pivot = work[pivot_row][col]
            if self.field == RATIONALS and pivot != 1:
                work[pivot_row] = [v / pivot for v in work[pivot_row]]
            for r in range(nrows):
                if r != pivot_row and work[r][col]:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
                    if self.field == GF2:
                        work[r] = [v % 2 for v in work[r]]
            pivot_row += 1
            if pivot_row == nrows:
                break
        return ExactMatrix(work, self.field, cols=ncols)

    def nonzero_rows(self) -> "ExactMatrix":
        kept = [row for row in self.entries if any(row)]
        return ExactMatrix(kept, self.field, cols=self.cols)

    def columns_independent(self, cols: Sequence[int]) -> bool:
        sub = self.column_submatrix(cols)
        return sub.rank() == sub.cols

    def is_skew_symmetric(self) -> bool:
        """True iff m^T == -m with an all-zero diagonal (alternating; the
        diagonal condition is what makes the test meaningful over GF(2))."""
        if self.rows != self.cols:
            raise ValueError("matrix is not square")
        e = self.entries
        for i in range(self.rows):
            if e[i][i]:
                return False
            for j in range(i + 1, self.cols):
                if self.field == GF2:
                    if e[i][j] != e[j][i]:
                        return False
                elif e[i][j] != -e[j][i]:
                    return False
        return True

    def row_space_equal(self, other: "ExactMatrix") -> bool:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return self.rref().nonzero_rows() == other.rref().nonzero_rows()

    # -- text format -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.field}"]
        for row in self.entries:
            lines.append(" ".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ExactMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        head = lines[0].split()
        if len(head) != 3:
            raise ValueError("bad matrix header")
        nrows, ncols, field = int(head[0]), int(head[1]), head[2]
        rows = []
        for ln in lines[1:1 + nrows]:
            row = [Fraction(tok) if field == RATIONALS else int(tok)
                   for tok in ln.split()]
            if len(row) != ncols:
                raise ValueError("bad matrix row width")
            rows.append(row)
        if len(rows) != nrows:
            raise ValueError("bad matrix row count")
        return cls(rows, field, cols=ncols)


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination; divisions are exact by construction."""
    if not rows or not rows[0]:
        return 0
    m = [row[:] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pr = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * pivot - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank
