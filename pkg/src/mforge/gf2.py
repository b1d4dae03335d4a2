"""Dense GF(2) linear algebra on bit-packed rows.

Rows are stored as Python integers, little-endian: column ``c`` of a row
lives at bit ``c``.  Row addition is integer XOR, which makes Gaussian
elimination a sequence of word-wide operations regardless of width.
Everything downstream (matroids, graphs, templates) is built on these
matrices, so the operations here are deliberately small, pure, and
deterministic: pivoting always picks the lowest-index row with a 1 in
the current column.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GF2Error(ValueError):
    """Contract violation in a GF(2) matrix operation (shape/index)."""


@dataclass(frozen=True)
class BitMatrix:
    """An ``n_rows x n_cols`` matrix over GF(2).

    Immutable after construction.  ``rows[i]`` holds row ``i`` packed into
    an int; bits at positions >= ``n_cols`` are zero.  The 0x0 matrix and
    0xN / Nx0 matrices are all valid.
    """

    n_rows: int
    n_cols: int
    rows: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise GF2Error("negative matrix dimension")
        if len(self.rows) != self.n_rows:
            raise GF2Error("row count does not match n_rows")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r & ~mask:
                raise GF2Error("row has bits beyond n_cols")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rows(rows: list[list[int]] | list[tuple[int, ...]], n_cols: int | None = None) -> "BitMatrix":
        """Build from 0/1 nested lists (row-major)."""
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != n_cols:
                raise GF2Error("ragged rows")
            v = 0
            for c, x in enumerate(row):
                if x not in (0, 1):
                    raise GF2Error("entries must be 0 or 1")
                v |= x << c
            packed.append(v)
        return BitMatrix(len(packed), n_cols, tuple(packed))

    @staticmethod
    def from_ints(rows: list[int], n_cols: int) -> "BitMatrix":
        return BitMatrix(len(rows), n_cols, tuple(rows))

    @staticmethod
    def identity(n: int) -> "BitMatrix":
        return BitMatrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def zero(n_rows: int, n_cols: int) -> "BitMatrix":
        return BitMatrix(n_rows, n_cols, (0,) * n_rows)

    # -- element access ----------------------------------------------

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise GF2Error("index out of range")
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> c) & 1 for c in range(self.n_cols)] for r in self.rows]

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int (bit i = entry in row i)."""
        if not 0 <= j < self.n_cols:
            raise GF2Error("column index out of range")
        v = 0
        for i, r in enumerate(self.rows):
            v |= ((r >> j) & 1) << i
        return v

    def columns(self) -> list[int]:
        """All columns packed as ints, in order."""
        return [self.column(j) for j in range(self.n_cols)]

    @staticmethod
    def from_columns(cols: list[int], n_rows: int) -> "BitMatrix":
        rows = [0] * n_rows
        for j, v in enumerate(cols):
            if v >> n_rows:
                raise GF2Error("column has bits beyond n_rows")
            for i in range(n_rows):
                if (v >> i) & 1:
                    rows[i] |= 1 << j
        return BitMatrix(n_rows, len(cols), tuple(rows))

    def __str__(self) -> str:
        return format_matrix(self)


# ---------------------------------------------------------------------
# Core elimination kernels, on raw int-row lists.
# ---------------------------------------------------------------------

def rref_ints(rows: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form of packed rows; zero rows dropped.

    Returns (reduced rows, pivot column indices).  Pivot columns are
    strictly increasing and each is a unit column in the result.
    Deterministic: the pivot for a column is the lowest-index remaining
    row with a 1 there.
    """
    work = list(rows)
    out: list[int] = []
    pivots: list[int] = []
    top = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = None
        for i in range(top, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        p = work[top]
        for i in range(len(work)):
            if i != top and (work[i] & bit):
                work[i] ^= p
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    out = work[:top]
    return out, pivots


def rank_ints(rows: list[int], n_cols: int) -> int:
    """GF(2) rank without building the reduced matrix."""
    work: list[int] = []
    for v in rows:
        for w in work:
            low = w & -w
            if v & low:
                v ^= w
        if v:
            work.append(v)
            # keep work rows pivot-sorted by lowest set bit
            work.sort(key=lambda x: x & -x)
    return len(work)


class Basis:
    """Incremental GF(2) basis over packed vectors (row-style reduction).

    Maintains vectors reduced so each has a distinct lowest set bit.
    """

    def __init__(self):
        self.vecs: list[int] = []  # sorted by lowest set bit

    def reduce(self, v: int) -> int:
        for w in self.vecs:
            if v & (w & -w):
                v ^= w
        return v

    def add(self, v: int) -> bool:
        """Insert v; returns True if it increased the rank."""
        v = self.reduce(v)
        if v == 0:
            return False
        self.vecs.append(v)
        self.vecs.sort(key=lambda x: x & -x)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.vecs)


# ---------------------------------------------------------------------
# BitMatrix-level operations.
# ---------------------------------------------------------------------

def rank(m: BitMatrix) -> int:
    return rank_ints(list(m.rows), m.n_cols)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    rows, pivots = rref_ints(list(m.rows), m.n_cols)
    return BitMatrix(len(rows), m.n_cols, tuple(rows)), pivots


def row_space_equal(a: BitMatrix, b: BitMatrix) -> bool:
    if a.n_cols != b.n_cols:
        raise GF2Error("row_space_equal: column counts differ")
    ra, _ = rref_ints(list(a.rows), a.n_cols)
    rb, _ = rref_ints(list(b.rows), b.n_cols)
    return ra == rb


def in_row_space(m: BitMatrix, v: int) -> bool:
    if v >> m.n_cols:
        raise GF2Error("vector length exceeds column count")
    basis = Basis()
    for r in m.rows:
        basis.add(r)
    return basis.contains(v)


def solve_row_combination(m: BitMatrix, v: int) -> int | None:
    """Coefficients x (packed, bit i = row i) with x . m = v, or None.

    The returned combination reproduces v exactly; when several exist,
    the one found by forward elimination is returned.
    """
    if v >> m.n_cols:
        raise GF2Error("vector length exceeds column count")
    # Eliminate with bookkeeping: carry (row, coeff) pairs.
    pairs: list[tuple[int, int]] = []  # (reduced row, coefficient mask)
    for i, r in enumerate(m.rows):
        pairs.append((r, 1 << i))
    reduced: list[tuple[int, int]] = []
    for r, c in pairs:
        for rr, cc in reduced:
            if r & (rr & -rr):
                r ^= rr
                c ^= cc
        if r:
            reduced.append((r, c))
            reduced.sort(key=lambda t: t[0] & -t[0])
    coeff = 0
    for rr, cc in reduced:
        if v & (rr & -rr):
            v ^= rr
            coeff ^= cc
    if v != 0:
        return None
    return coeff


def multiply_row(x: int, m: BitMatrix) -> int:
    """Row vector (coefficient mask over m's rows) times m."""
    acc = 0
    i = 0
    while x:
        if x & 1:
            acc ^= m.rows[i]
        x >>= 1
        i += 1
    return acc


def null_space(m: BitMatrix) -> list[int]:
    """Basis of {v : m . v^T = 0}, vectors packed over n_cols bits."""
    red, pivots = rref_ints(list(m.rows), m.n_cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.n_cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = 1 << f
        for i, p in enumerate(pivots):
            if (red[i] >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix.from_columns(list(m.rows), m.n_cols)


def submatrix(m: BitMatrix, row_idx: list[int], col_idx: list[int]) -> BitMatrix:
    for i in row_idx:
        if not 0 <= i < m.n_rows:
            raise GF2Error(f"row index {i} out of range")
    for j in col_idx:
        if not 0 <= j < m.n_cols:
            raise GF2Error(f"column index {j} out of range")
    rows = []
    for i in row_idx:
        src = m.rows[i]
        v = 0
        for k, j in enumerate(col_idx):
            v |= ((src >> j) & 1) << k
        rows.append(v)
    return BitMatrix(len(row_idx), len(col_idx), tuple(rows))


def augment_cols(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """[a | b]; requires equal row counts."""
    if a.n_rows != b.n_rows:
        raise GF2Error("augment_cols: row counts differ")
    rows = tuple(a.rows[i] | (b.rows[i] << a.n_cols) for i in range(a.n_rows))
    return BitMatrix(a.n_rows, a.n_cols + b.n_cols, rows)


def stack_rows(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """[a; b]; requires equal column counts."""
    if a.n_cols != b.n_cols:
        raise GF2Error("stack_rows: column counts differ")
    return BitMatrix(a.n_rows + b.n_rows, a.n_cols, a.rows + b.rows)


# ---------------------------------------------------------------------
# Text format: '0'/'1' rows, optional spaces, '#' comments, blank line
# or EOF terminates a block.  Shared by every module that reads matrices.
# ---------------------------------------------------------------------

def parse_matrix(text: str) -> BitMatrix:
    lines = text.splitlines()
    mat, rest = parse_matrix_block(lines, 0)
    return mat


def parse_matrix_block(lines: list[str], start: int) -> tuple[BitMatrix, int]:
    """Parse one matrix block starting at ``lines[start]``.

    Returns the matrix and the index of the first unconsumed line.
    Raises GF2Error with a line number on malformed input.
    """
    rows: list[list[int]] = []
    i = start
    while i < len(lines):
        raw = lines[i]
        stripped = raw.strip()
        if stripped.startswith("#"):
            i += 1
            continue
        if stripped == "":
            if rows:
                i += 1
                break
            i += 1
            continue
        row = []
        for ch in stripped:
            if ch in " \t":
                continue
            if ch == "0":
                row.append(0)
            elif ch == "1":
                row.append(1)
            else:
                raise GF2Error(f"line {i + 1}: unexpected character {ch!r} in matrix row")
        if rows and len(row) != len(rows[0]):
            raise GF2Error(f"line {i + 1}: row length {len(row)} != {len(rows[0])}")
        rows.append(row)
        i += 1
    if not rows:
        return BitMatrix(0, 0, ()), i
    return BitMatrix.from_rows(rows), i


def format_matrix(m: BitMatrix) -> str:
    return "\n".join(
        "".join(str((r >> c) & 1) for c in range(m.n_cols)) for r in m.rows
    )
