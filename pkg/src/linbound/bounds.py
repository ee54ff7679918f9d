"""Exact length bounds for binary linear codes correcting ``e`` errors.

Everything here is integer arithmetic: ``floor(log2 x)`` is
``x.bit_length() - 1`` and every inequality is compared between ints, so
boundary cases such as ``2**(n - k) == n + 1`` are never rounded away.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .errors import DomainError


class BoundKind(str, enum.Enum):
    HAM = "HAM"
    N1_SCAN = "N1_SCAN"
    N1_FORMULA = "N1_FORMULA"
    COSET_C = "COSET_C"


@dataclass(frozen=True, slots=True)
class BoundQuery:
    k: int
    e: int

    def __post_init__(self):
        if self.k < 1 or self.e < 1:
            raise DomainError(f"need k >= 1 and e >= 1, got k={self.k}, e={self.e}")


@dataclass(frozen=True, slots=True)
class BoundResult:
    """Minimal length for a query, with the defining inequality at ``n`` and ``n - 1``.

    Each witness is the ``(lhs, rhs)`` pair of the defining inequality; see
    :func:`inequality` for which comparison each kind uses.
    """

    kind: BoundKind
    query: BoundQuery
    n: int
    witness_at_n: tuple[int, int]
    witness_below: tuple[int, int]

    def __post_init__(self):
        floor = self.query.k + 2 * self.query.e
        if self.n < floor:
            raise DomainError(f"{self.kind.value} length {self.n} below the floor k + 2e = {floor}")

    @property
    def holds_at_n(self) -> bool:
        return _compare(self.kind, *self.witness_at_n)

    @property
    def fails_below(self) -> bool:
        return not _compare(self.kind, *self.witness_below)


@dataclass(frozen=True, slots=True)
class PackingInequalityEvaluation:
    n: int
    k: int
    e: int
    lhs: int
    rhs: int
    holds: bool


def _compare(kind: BoundKind, lhs: int, rhs: int) -> bool:
    if kind is BoundKind.HAM:
        return lhs <= rhs
    return lhs >= rhs


def _ball(n: int, e: int) -> int:
    # terms with i > n vanish; lets scans pass through n < e
    return sum(comb(n, i) for i in range(min(e, n) + 1))


def sphere_volume(n: int, e: int) -> int:
    """Number of words within distance ``e`` of a fixed word of length ``n``."""
    if n < 0 or e < 0 or e > n:
        raise DomainError(f"sphere_volume needs 0 <= e <= n, got n={n}, e={e}")
    return _ball(n, e)


def packing_inequality(n: int, k: int, e: int) -> PackingInequalityEvaluation:
    """Coset-packing inequality for a linear ``[n, k, 2e+1]`` code.

    ``lhs`` counts how many weight-``(e+1)`` vectors the cosets can hold at
    most: cosets with no vector of weight ``<= e`` hold ``n // (e+1)`` each,
    the ``C(n, e)`` cosets of weight ``e`` hold ``(n-e) // (e+1)`` each.
    ``rhs`` is the number of weight-``(e+1)`` vectors. The first factor may be
    negative when the Hamming bound itself fails.
    """
    if e < 0 or n < e or k < 0 or k > n:
        raise DomainError(f"packing_inequality needs 0 <= e <= n and 0 <= k <= n, got n={n}, k={k}, e={e}")
    free_cosets = (1 << (n - k)) - _ball(n, e)
    lhs = (n // (e + 1)) * free_cosets + ((n - e) // (e + 1)) * comb(n, e)
    rhs = comb(n, e + 1)
    return PackingInequalityEvaluation(n, k, e, lhs, rhs, lhs >= rhs)


def inequality(kind: BoundKind, n: int, k: int, e: int) -> tuple[int, int]:
    """``(lhs, rhs)`` of the inequality defining ``kind`` at length ``n``.

    HAM holds when ``lhs <= rhs``; the other kinds when ``lhs >= rhs``.
    """
    if kind is BoundKind.HAM:
        return _ball(n, e) << k, 1 << n
    if kind in (BoundKind.N1_SCAN, BoundKind.N1_FORMULA):
        return 1 << (n - k), n + 1
    ev = packing_inequality(n, k, e)
    return ev.lhs, ev.rhs


def _result(kind: BoundKind, q: BoundQuery, n: int) -> BoundResult:
    ke = BoundKind.N1_SCAN if kind is BoundKind.N1_FORMULA else kind
    return BoundResult(
        kind, q, n,
        inequality(ke, n, q.k, q.e),
        inequality(ke, n - 1, q.k, q.e),
    )


def _ham_length(k: int, e: int) -> int:
    n = k
    while _ball(n, e) << k > 1 << n:
        n += 1
    return n


def hamming_bound(q: BoundQuery) -> BoundResult:
    """Smallest ``n`` with ``sum_{i<=e} C(n,i) * 2**k <= 2**n``."""
    return _result(BoundKind.HAM, q, _ham_length(q.k, q.e))


def _n_single(k: int) -> int:
    n = k + 1
    while 1 << (n - k) < n + 1:
        n += 1
    return n


def n_single_scan(k: int) -> BoundResult:
    """Smallest ``n`` with ``2**(n-k) >= n + 1`` (single error correction)."""
    q = BoundQuery(k, 1)
    return _result(BoundKind.N1_SCAN, q, _n_single(k))


def floor_log2(x: int) -> int:
    if x < 1:
        raise DomainError(f"floor_log2 needs x >= 1, got {x}")
    return x.bit_length() - 1


def nl_single_formula(k: int) -> int:
    """Closed form ``k + 1 + floor(log2(k + 1 + floor(log2 k)))``."""
    if k < 1:
        raise DomainError(f"nl_single_formula needs k >= 1, got {k}")
    return k + 1 + floor_log2(k + 1 + floor_log2(k))


def nl_single_formula_result(k: int) -> BoundResult:
    return _result(BoundKind.N1_FORMULA, BoundQuery(k, 1), nl_single_formula(k))


def step_positions(k_max: int) -> list[int]:
    """Every ``k < k_max`` at which the single-error length jumps by 2."""
    if k_max < 2:
        raise DomainError(f"step_positions needs k_max >= 2, got {k_max}")
    out = []
    prev = _n_single(1)
    for k in range(1, k_max):
        cur = _n_single(k + 1)
        if cur - prev == 2:
            out.append(k)
        prev = cur
    return out


def _coset_length(k: int, e: int) -> int:
    n = k + 2 * e
    while not packing_inequality(n, k, e).holds:
        n += 1
    return n


def coset_bound(q: BoundQuery) -> BoundResult:
    """Smallest ``n >= k + 2e`` satisfying :func:`packing_inequality`."""
    return _result(BoundKind.COSET_C, q, _coset_length(q.k, q.e))
