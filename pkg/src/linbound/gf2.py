"""Bit-level GF(2) vectors, matrices and small linear codes.

Coordinate ``i`` of a word is bit ``i`` of an int (coordinate 0 is the least
significant bit).  The text form writes coordinate 0 leftmost, so the word
with bits ``0b0111`` and length 4 prints as ``1110``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, DomainError

MAX_LENGTH = 64

# Operations enumerating 2**m objects refuse when m exceeds this.
ENUMERATION_LIMIT = 28


def _check_budget(exponent: int, limit: int | None, what: str) -> None:
    limit = ENUMERATION_LIMIT if limit is None else limit
    if exponent > limit:
        raise CapExceededError(
            f"{what} needs 2**{exponent} steps, enumeration limit is 2**{limit}"
        )


@dataclass(frozen=True, slots=True)
class Word:
    length: int
    bits: int = 0

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise CapExceededError(
                f"word length {self.length} outside 1..{MAX_LENGTH}"
            )
        if self.bits < 0 or self.bits >> self.length:
            raise DomainError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_str(cls, text: str) -> Word:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise DomainError(f"not a 0/1 string: {text!r}")
        bits = sum(1 << i for i, ch in enumerate(text) if ch == "1")
        return cls(len(text), bits)

    @classmethod
    def unit(cls, length: int, i: int) -> Word:
        return cls(length, 1 << i)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def __xor__(self, other: Word) -> Word:
        _same_length(self, other)
        return Word(self.length, self.bits ^ other.bits)

    def __and__(self, other: Word) -> Word:
        _same_length(self, other)
        return Word(self.length, self.bits & other.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.length) if self.bits >> i & 1]


def _same_length(u: Word, v: Word) -> None:
    if u.length != v.length:
        raise DomainError(f"length mismatch: {u.length} != {v.length}")


def weight(u: Word) -> int:
    """Number of nonzero coordinates of ``u``."""
    return u.bits.bit_count()


def distance(u: Word, v: Word) -> int:
    """Hamming distance between two words of equal length."""
    _same_length(u, v)
    return (u.bits ^ v.bits).bit_count()


@dataclass(frozen=True, slots=True)
class BinaryMatrix:
    rows: int
    cols: int
    row_data: tuple[Word, ...]

    def __post_init__(self):
        if not 1 <= self.cols <= MAX_LENGTH:
            raise CapExceededError(f"matrix width {self.cols} outside 1..{MAX_LENGTH}")
        if len(self.row_data) != self.rows:
            raise DomainError(f"expected {self.rows} rows, got {len(self.row_data)}")
        for w in self.row_data:
            if w.length != self.cols:
                raise DomainError(f"row of length {w.length} in a {self.cols}-column matrix")

    @classmethod
    def from_ints(cls, rows: Sequence[int], cols: int) -> BinaryMatrix:
        return cls(len(rows), cols, tuple(Word(cols, r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> BinaryMatrix:
        """Build a matrix from column values; bit ``r`` of a column is its row ``r`` entry."""
        rows = [0] * nrows
        for j, c in enumerate(columns):
            if c >> nrows:
                raise DomainError(f"column {j} value {c} does not fit in {nrows} rows")
            for r in range(nrows):
                if c >> r & 1:
                    rows[r] |= 1 << j
        return cls.from_ints(rows, len(columns))

    @classmethod
    def from_text(cls, text: str) -> BinaryMatrix:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise DomainError("empty matrix text")
        words = tuple(Word.from_str(ln) for ln in lines)
        return cls(len(words), words[0].length, words)

    def to_text(self) -> str:
        return "\n".join(str(w) for w in self.row_data)

    def ints(self) -> list[int]:
        return [w.bits for w in self.row_data]

    def columns(self) -> list[int]:
        out = [0] * self.cols
        for r, w in enumerate(self.row_data):
            for j in range(self.cols):
                if w.bits >> j & 1:
                    out[j] |= 1 << r
        return out

    def syndrome(self, x: Word) -> int:
        """``H x^T`` packed into an int, bit ``r`` = row ``r``."""
        if x.length != self.cols:
            raise DomainError(f"length mismatch: {x.length} != {self.cols}")
        s = 0
        for r, w in enumerate(self.row_data):
            s |= ((w.bits & x.bits).bit_count() & 1) << r
        return s


def _rref(rows: Iterable[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots = []
    top = 0
    for col in range(ncols):
        pivot = next((r for r in range(top, len(work)) if work[r] >> col & 1), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for r in range(len(work)):
            if r != top and work[r] >> col & 1:
                work[r] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(m: BinaryMatrix) -> int:
    return len(_rref(m.ints(), m.cols)[1])


def kernel_basis(m: BinaryMatrix) -> list[int]:
    """Basis of ``{x : M x^T = 0}``, one vector per free column, in column order."""
    reduced, pivots = _rref(m.ints(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(reduced, pivots):
            if row >> f & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def span(basis: Sequence[int]) -> Iterator[int]:
    """All 2**len(basis) combinations, in Gray-code order starting at 0."""
    x = 0
    yield x
    for i in range(1, 1 << len(basis)):
        x ^= basis[(i & -i).bit_length() - 1]
        yield x


def null_space_enumeration(h: BinaryMatrix, limit: int | None = None) -> list[Word]:
    """Every word in the kernel of ``h``, sorted by numeric value."""
    basis = kernel_basis(h)
    _check_budget(len(basis), limit, "null space enumeration")
    return [Word(h.cols, x) for x in sorted(span(basis))]


@dataclass(frozen=True)
class LinearCode:
    n: int
    k: int
    check: BinaryMatrix
    generator: BinaryMatrix | None = field(compare=False, default=None)

    def __post_init__(self):
        if self.check.cols != self.n or self.check.rows != self.n - self.k:
            raise DomainError(
                f"check matrix {self.check.rows}x{self.check.cols} does not fit [n={self.n}, k={self.k}]"
            )
        if rank(self.check) != self.n - self.k:
            raise DomainError("check matrix rows are linearly dependent")
        if self.generator is None:
            basis = kernel_basis(self.check)
            gen = BinaryMatrix.from_ints(basis, self.n) if basis else None
            object.__setattr__(self, "generator", gen)

    @classmethod
    def from_check(cls, h: BinaryMatrix) -> LinearCode:
        """Code with check matrix ``h``; dependent rows of ``h`` are rejected."""
        return cls(h.cols, h.cols - h.rows, h)

    def codewords(self, limit: int | None = None) -> Iterator[int]:
        _check_budget(self.k, limit, "codeword enumeration")
        basis = self.generator.ints() if self.generator is not None else []
        return span(basis)

    @cached_property
    def min_distance(self) -> int:
        if self.k == 0:
            raise DomainError("the zero code has no nonzero codeword")
        best = self.n
        for x in self.codewords():
            if x:
                w = x.bit_count()
                if w < best:
                    best = w
        return best

    def is_codeword(self, x: Word) -> bool:
        return self.check.syndrome(x) == 0


def min_distance(code: LinearCode) -> int:
    """Minimum weight over the nonzero codewords (cached on the code)."""
    return code.min_distance
