"""Small dense matrices over GF(2) acting on label-encoded coordinate vectors.

A vector of F_2^r is encoded with its first coordinate in the most significant
position, so the integer value of ``"110"`` is 6. Rows are stored the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import linear_rank, parity


def label_to_int(label: str) -> int:
    label = label.strip()
    if label in ("", "-"):
        return 0
    if set(label) - {"0", "1"}:
        raise ValueError(f"not a bitstring label: {label!r}")
    return int(label, 2)


def int_to_label(a: int, r: int) -> str:
    return format(a, f"0{r}b") if r > 0 else "-"


def unit(i: int, r: int) -> int:
    """Label of the standard basis vector e_{i+1} of F_2^r."""
    return 1 << (r - 1 - i)


def dot(a: int, b: int) -> int:
    return parity(a & b)


@dataclass(frozen=True)
class Gf2Matrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for row in self.rows:
            if row < 0 or row >> self.ncols:
                raise ValueError("row does not fit in the column count")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            word = 0
            for e in row:
                word = (word << 1) | (e & 1)
            rows.append(word)
        return cls(nrows, ncols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "Gf2Matrix":
        ncols = len(columns)
        rows = []
        for i in range(nrows):
            word = 0
            for c in columns:
                word = (word << 1) | ((c >> (nrows - 1 - i)) & 1)
            rows.append(word)
        return cls(nrows, ncols, tuple(rows))

    @classmethod
    def identity(cls, r: int) -> "Gf2Matrix":
        return cls(r, r, tuple(unit(i, r) for i in range(r)))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.ncols - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def column(self, j: int) -> int:
        word = 0
        for i in range(self.nrows):
            word = (word << 1) | self.entry(i, j)
        return word

    def __matmul__(self, other):
        if isinstance(other, Gf2Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = [self.apply(other.column(j)) for j in range(other.ncols)]
            return Gf2Matrix.from_columns(cols, self.nrows)
        return self.apply(other)

    def apply(self, a: int) -> int:
        out = 0
        for row in self.rows:
            out = (out << 1) | parity(row & a)
        return out

    def apply_all(self) -> list[int]:
        """Images of every label ``0 .. 2^ncols - 1``, in label order."""
        cols = [self.column(j) for j in range(self.ncols)]
        out = [0] * (1 << self.ncols)
        for a in range(1, len(out)):
            low = a & -a
            # the lowest set bit of a is coordinate ncols - bit_length
            out[a] = out[a ^ low] ^ cols[self.ncols - low.bit_length()]
        return out

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.ncols, self.nrows, tuple(self.column(j) for j in range(self.ncols)))

    def rank(self) -> int:
        return linear_rank(self.rows)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.nrows

    def inverse(self) -> "Gf2Matrix":
        if not self.is_square:
            raise ValueError("only square matrices can be inverted")
        r = self.nrows
        # augmented rows: [A | I], with A in the high r bits
        work = [(row << r) | unit(i, r) for i, row in enumerate(self.rows)]
        for col in range(r):
            bit = 1 << (2 * r - 1 - col)
            pivot = next((i for i in range(col, r) if work[i] & bit), None)
            if pivot is None:
                raise ValueError("matrix is singular over GF(2)")
            work[col], work[pivot] = work[pivot], work[col]
            for i in range(r):
                if i != col and work[i] & bit:
                    work[i] ^= work[col]
        mask = (1 << r) - 1
        return Gf2Matrix(r, r, tuple(w & mask for w in work))

    def format(self) -> str:
        return "\n".join("".join(str(e) for e in row) for row in self.to_lists())

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ",".join(map(str, row)) + "]" for row in self.to_lists()) + "]"
