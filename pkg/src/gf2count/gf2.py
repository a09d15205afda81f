"""Bit-packed GF(2) matrices and word-level elimination.

A matrix row is stored as a single Python int: bit j (value ``1 << j``)
holds the entry in column j.  Row XOR is then one integer XOR and rank
computations stay fast for every width we care about without any
per-entry loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, FormatError, IndexSetError, RankError


@dataclass(frozen=True)
class BitMatrix:
    """Immutable binary matrix with int-packed rows.

    ``bits[i]`` is row i; bit j of that int is the entry in column j.
    Degenerate shapes (zero rows, as produced by the dual of a full
    [n, n] code) are allowed; text parsing is stricter.
    """

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"bad shape {self.rows} x {self.cols}")
        if len(self.bits) != self.rows:
            raise DimensionError(
                f"expected {self.rows} packed rows, got {len(self.bits)}"
            )
        mask = (1 << self.cols) - 1
        for i, r in enumerate(self.bits):
            if r < 0 or r & ~mask:
                raise DimensionError(f"row {i} has bits outside {self.cols} columns")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from nested 0/1 sequences, row major."""
        if not entries:
            raise DimensionError("no rows given")
        cols = len(entries[0])
        packed = []
        for row in entries:
            if len(row) != cols:
                raise DimensionError("ragged rows")
            acc = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise DimensionError(f"entry {e!r} is not 0 or 1")
                acc |= e << j
            packed.append(acc)
        return cls(len(entries), cols, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexSetError(f"entry ({i}, {j}) outside {self.rows} x {self.cols}")
        return (self.bits[i] >> j) & 1

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)

    def column_ints(self) -> tuple[int, ...]:
        """Transpose packing: element j has bit i set iff entry (i, j) is 1."""
        out = [0] * self.cols
        for i, r in enumerate(self.bits):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return tuple(out)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, self.column_ints())

    def row_list(self, i: int) -> list[int]:
        return [(self.bits[i] >> j) & 1 for j in range(self.cols)]

    def to_lines(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.bits]

    def __str__(self) -> str:
        return "\n".join(self.to_lines())


def from_text_rows(lines: Iterable[str]) -> BitMatrix:
    """Parse a matrix from text lines.

    One row per line, characters '0' and '1'.  Whitespace inside a row is
    ignored, as are blank lines and lines whose first non-space character
    is '#'.  Ragged or empty input raises FormatError.

    Args:
        lines: iterable of text lines, newline terminators optional.

    Returns:
        The parsed BitMatrix.
    """
    packed: list[int] = []
    cols = -1
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        acc = 0
        width = 0
        for ch in raw:
            if ch.isspace():
                continue
            if ch == "1":
                acc |= 1 << width
            elif ch != "0":
                raise FormatError(f"line {lineno}: unexpected character {ch!r}")
            width += 1
        if cols == -1:
            cols = width
        elif width != cols:
            raise FormatError(
                f"line {lineno}: row has {width} entries, previous rows have {cols}"
            )
        packed.append(acc)
    if not packed:
        raise FormatError("no matrix rows found")
    return BitMatrix(len(packed), cols, tuple(packed))


def parse_matrix(text: str) -> BitMatrix:
    """Parse a matrix from a single text blob (see from_text_rows)."""
    return from_text_rows(text.splitlines())


def rank(m: BitMatrix) -> int:
    """Rank over GF(2), by inserting each row into a leading-bit basis."""
    pivots: dict[int, int] = {}
    r = 0
    for v in m.bits:
        while v:
            h = v.bit_length()
            p = pivots.get(h)
            if p is None:
                pivots[h] = v
                r += 1
                break
            v ^= p
    return r


@dataclass(frozen=True)
class SystematicForm:
    """Result of reducing a full-row-rank matrix to [I | P].

    ``matrix`` is the reduced matrix with the identity in the first k
    columns.  ``col_perm[j]`` gives the column of ``matrix`` holding
    original column j; it is the identity permutation whenever the first
    k columns of the input were already independent.
    """

    matrix: BitMatrix
    col_perm: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def permuted(self) -> bool:
        return any(p != j for j, p in enumerate(self.col_perm))

    def parity_block(self) -> BitMatrix:
        """The k x (n - k) block P to the right of the identity."""
        k = self.k
        shifted = tuple(r >> k for r in self.matrix.bits)
        return BitMatrix(k, self.n - k, shifted)


def systematic_form(m: BitMatrix) -> SystematicForm:
    """Reduce to [I | P], permuting columns only when forced.

    Gauss-Jordan elimination sweeps columns left to right; each pivot is
    the lowest-index unused row with a 1 in the current column, and the
    pivot row is XORed into every other row holding a 1 there.  The
    reduced row echelon form this produces is unique, so the output does
    not depend on the original row order.  If the pivot columns are not
    0..k-1 they are moved to the front, pivots first in sweep order, and
    the permutation is recorded.

    Raises:
        RankError: if the matrix does not have full row rank.
    """
    k, n = m.rows, m.cols
    work = list(m.bits)
    pivot_cols: list[int] = []
    r = 0
    for j in range(n):
        if r == k:
            break
        mask = 1 << j
        src = next((i for i in range(r, k) if work[i] & mask), None)
        if src is None:
            continue
        work[r], work[src] = work[src], work[r]
        for i in range(k):
            if i != r and work[i] & mask:
                work[i] ^= work[r]
        pivot_cols.append(j)
        r += 1
    if r < k:
        raise RankError(f"matrix has rank {r}, full row rank {k} required")

    if pivot_cols == list(range(k)):
        return SystematicForm(BitMatrix(k, n, tuple(work)), tuple(range(n)))

    order = pivot_cols + [j for j in range(n) if j not in set(pivot_cols)]
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    reduced = BitMatrix(k, n, tuple(work))
    return SystematicForm(permute_columns(reduced, perm), tuple(perm))


def permute_columns(m: BitMatrix, perm: Sequence[int]) -> BitMatrix:
    """Move column j to position perm[j] for every j."""
    if sorted(perm) != list(range(m.cols)):
        raise IndexSetError(f"not a permutation of 0..{m.cols - 1}")
    out = []
    for row in m.bits:
        acc = 0
        while row:
            low = row & -row
            acc |= 1 << perm[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return BitMatrix(m.rows, m.cols, tuple(out))


def select_columns(m: BitMatrix, index_set: Sequence[int]) -> BitMatrix:
    """Submatrix of the columns named by a strictly increasing 0-based set."""
    check_index_set(index_set, m.cols)
    colv = m.column_ints()
    picked = tuple(colv[j] for j in index_set)
    return BitMatrix(len(index_set), m.rows, picked).transpose()


def check_index_set(index_set: Sequence[int], n: int) -> None:
    """Validate a column subset: non-empty, strictly increasing, within range."""
    if len(index_set) == 0:
        raise IndexSetError("empty index set")
    prev = -1
    for j in index_set:
        if not isinstance(j, int) or isinstance(j, bool):
            raise IndexSetError(f"index {j!r} is not an int")
        if j <= prev:
            raise IndexSetError("index set must be strictly increasing")
        if j >= n:
            raise IndexSetError(f"index {j} out of range for {n} columns")
        prev = j


def mat_mul_transpose(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Product A * B^T over GF(2); entry (i, j) is the parity of <A_i, B_j>."""
    if a.cols != b.cols:
        raise DimensionError(
            f"inner dimensions differ: {a.cols} columns vs {b.cols} columns"
        )
    out = []
    for ra in a.bits:
        acc = 0
        for j, rb in enumerate(b.bits):
            acc |= ((ra & rb).bit_count() & 1) << j
        out.append(acc)
    return BitMatrix(a.rows, b.rows, tuple(out))
