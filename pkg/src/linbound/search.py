"""Exhaustive search for the shortest linear code correcting ``e`` errors.

Every ``[n, k]`` code is equivalent, after permuting coordinates, to one with
check matrix ``[I | A]``, so it suffices to search the ``k`` columns of ``A``.
A code corrects ``e`` errors iff every ``2e`` columns of its check matrix are
linearly independent, i.e. no new column equals the sum of ``<= 2e - 1``
columns already chosen (the empty sum being zero).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import BudgetExceededError, CapExceededError, DomainError
from .gf2 import MAX_LENGTH, BinaryMatrix

DEFAULT_BUDGET = 10**8


class SearchStatus(str, enum.Enum):
    FOUND = "FOUND"
    NONE_UP_TO_N_MAX = "NONE_UP_TO_N_MAX"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True, slots=True)
class SearchQuery:
    k: int
    e: int
    n_max: int = MAX_LENGTH
    budget: int = DEFAULT_BUDGET
    symmetry: bool = True

    def __post_init__(self):
        if self.k < 1 or self.e < 1:
            raise DomainError(f"need k >= 1 and e >= 1, got k={self.k}, e={self.e}")
        if not self.k + 2 * self.e <= self.n_max <= MAX_LENGTH:
            raise DomainError(
                f"n_max={self.n_max} outside {self.k + 2 * self.e}..{MAX_LENGTH}"
            )
        if self.budget < 1:
            raise DomainError(f"budget must be positive, got {self.budget}")


@dataclass(frozen=True, slots=True)
class Existence:
    certificate: BinaryMatrix | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    query: SearchQuery
    n: int | None = None
    certificate: BinaryMatrix | None = None
    nodes_explored: int = 0
    refuted: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "k": self.query.k,
            "e": self.query.e,
            "n_max": self.query.n_max,
            "budget": self.query.budget,
            "n": self.n,
            "certificate": None if self.certificate is None else [str(w) for w in self.certificate.row_data],
            "nodes_explored": self.nodes_explored,
            "refuted": list(self.refuted),
        }


class _Backtracker:
    def __init__(self, r: int, k: int, e: int, budget: int, symmetry: bool):
        self.r, self.k, self.e = r, k, e
        self.budget = budget
        self.symmetry = symmetry
        self.nodes = 0

    def _add(self, levels: list[frozenset[int]], c: int) -> list[frozenset[int]]:
        # levels[j] = sums of exactly j distinct chosen columns, j < 2e
        out = [levels[0]]
        for j in range(1, len(levels)):
            out.append(levels[j] | frozenset(s ^ c for s in levels[j - 1]))
        return out

    def run(self) -> list[int] | None:
        levels = [frozenset({0})] + [frozenset()] * (2 * self.e - 1)
        for i in range(self.r):
            levels = self._add(levels, 1 << i)
        return self._extend([], levels, 1)

    def _extend(self, chosen, levels, lo):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"search exceeded {self.budget} nodes", nodes_explored=self.nodes
            )
        need = self.k - len(chosen)
        if need == 0:
            return chosen
        forbidden = frozenset().union(*levels)
        cands = [c for c in range(lo, 1 << self.r) if c not in forbidden]
        if len(cands) < need:
            return None
        for i, c in enumerate(cands):
            if self.symmetry and len(cands) - i < need:
                break
            found = self._extend(chosen + [c], self._add(levels, c), c + 1 if self.symmetry else 1)
            if found is not None:
                return found
        return None


def exists_code(n: int, k: int, e: int, budget: int = DEFAULT_BUDGET, symmetry: bool = True) -> Existence:
    """Decide whether an ``[n, k, >= 2e+1]`` binary linear code exists.

    Returns a check matrix ``[I | A]`` as certificate, or ``None`` after an
    exhaustive refutation. ``symmetry`` restricts ``A`` to increasing columns.
    Raises :class:`BudgetExceededError` after ``budget`` search nodes.
    """
    if n > MAX_LENGTH:
        raise CapExceededError(f"n={n} exceeds {MAX_LENGTH}")
    r = n - k
    if r < 1 or k < 1 or e < 1:
        raise DomainError(f"need k >= 1, e >= 1, n - k >= 1; got n={n}, k={k}, e={e}")
    bt = _Backtracker(r, k, e, budget, symmetry)
    cols = bt.run()
    if cols is None:
        return Existence(None, bt.nodes)
    h = BinaryMatrix.from_columns([1 << i for i in range(r)] + cols, r)
    return Existence(h, bt.nodes)


def nl_search(q: SearchQuery) -> SearchOutcome:
    """Shortest length of a linear code with ``q.k`` data bits correcting ``q.e`` errors.

    Lengths below ``k + 2e`` are impossible and skipped; the node budget is
    shared by all lengths tried.
    """
    nodes = 0
    refuted = []
    for n in range(q.k + 2 * q.e, q.n_max + 1):
        try:
            res = exists_code(n, q.k, q.e, q.budget - nodes, q.symmetry)
        except BudgetExceededError as exc:
            return SearchOutcome(
                SearchStatus.BUDGET_EXCEEDED, q,
                nodes_explored=nodes + exc.nodes_explored, refuted=tuple(refuted),
            )
        nodes += res.nodes_explored
        if res.found:
            return SearchOutcome(SearchStatus.FOUND, q, n, res.certificate, nodes, tuple(refuted))
        refuted.append(n)
    return SearchOutcome(SearchStatus.NONE_UP_TO_N_MAX, q, nodes_explored=nodes, refuted=tuple(refuted))
