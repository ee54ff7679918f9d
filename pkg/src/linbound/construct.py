"""Single-error-correcting codes of optimal length and their syndrome decoder."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import nl_single_formula
from .errors import CapExceededError, DomainError, InfeasibleError
from .gf2 import MAX_LENGTH, BinaryMatrix, LinearCode, Word

# Largest k whose code is checked by enumerating all 2**k codewords.
VERIFY_MAX_K = 20


@dataclass(frozen=True, slots=True)
class ConstructionSpec:
    k: int
    n: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.n is None:
            object.__setattr__(self, "n", nl_single_formula(self.k))
        if self.n <= self.k:
            raise InfeasibleError(f"n={self.n} leaves no redundancy for k={self.k}")
        if 1 << (self.n - self.k) < self.n + 1:
            raise InfeasibleError(
                f"2**(n-k) = {1 << (self.n - self.k)} < n + 1 = {self.n + 1}: "
                f"too few nonzero syndromes for n={self.n}, k={self.k}"
            )


def check_columns(n: int, k: int) -> list[int]:
    """Column values of the check matrix: unit vectors, then unused values ascending."""
    r = n - k
    cols = [1 << i for i in range(r)]
    v = 1
    while len(cols) < n:
        v += 1
        if v & (v - 1):
            cols.append(v)
    return cols


def build_check_matrix(spec: ConstructionSpec, verify: bool | None = None) -> LinearCode:
    """Build the code whose check matrix is ``[I | distinct nonzero columns]``.

    ``verify`` enumerates the codewords and asserts distance >= 3; by default
    this happens for ``k <= VERIFY_MAX_K``.
    """
    n, k = spec.n, spec.k
    if n > MAX_LENGTH:
        raise CapExceededError(f"n={n} exceeds the {MAX_LENGTH}-coordinate word size")
    cols = check_columns(n, k)
    if 0 in cols or len(set(cols)) != n:
        raise AssertionError("check matrix columns must be distinct and nonzero")
    code = LinearCode.from_check(BinaryMatrix.from_columns(cols, n - k))
    if verify is None:
        verify = k <= VERIFY_MAX_K
    if verify and code.min_distance < 3:
        raise AssertionError(f"constructed [{n},{k}] code has distance {code.min_distance}")
    return code


@dataclass(frozen=True)
class SyndromeTable:
    """Maps each syndrome to the error pattern of weight <= 1 producing it.

    Syndromes that no such pattern produces are absent; decoding them yields
    ``None``.
    """

    code: LinearCode
    map: dict[int, Word] = field(repr=False)

    @classmethod
    def build(cls, code: LinearCode) -> SyndromeTable:
        table = {0: Word(code.n, 0)}
        for i, c in enumerate(code.check.columns()):
            table.setdefault(c, Word.unit(code.n, i))
        return cls(code, table)


def syndrome_decode(table: SyndromeTable, received: Word) -> Word | None:
    """Correct up to one flipped bit; ``None`` when the syndrome is unused."""
    s = table.code.check.syndrome(received)
    err = table.map.get(s)
    if err is None:
        return None
    return received ^ err
