"""Coset partition of small linear codes and checks of the coset-counting lemma.

For a code of distance ``2e + 1`` the cosets satisfy:

(a) words of weight ``<= e`` lie in distinct cosets;
(b) cosets of weight ``< e`` contain no word of weight ``e + 1``;
(c) any coset holds at most ``n // (e+1)`` words of weight ``e + 1``;
(d) a coset of weight ``e`` holds at most ``(n-e) // (e+1)`` of them.

Summing the caps over all cosets gives :func:`linbound.bounds.packing_inequality`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bounds import PackingInequalityEvaluation, packing_inequality, sphere_volume
from .errors import DistanceTooSmallError, DomainError
from .gf2 import LinearCode, Word, _check_budget

LEMMA_PARTS = ("a", "b", "c", "d")


@dataclass(frozen=True, slots=True)
class CosetRecord:
    syndrome: int
    representative: Word
    coset_weight: int
    count_e_plus_1: int

    def to_dict(self) -> dict:
        return {
            "syndrome": self.syndrome,
            "representative": str(self.representative),
            "coset_weight": self.coset_weight,
            "count_e_plus_1": self.count_e_plus_1,
        }


@dataclass(frozen=True, slots=True)
class PartResult:
    passed: bool
    detail: str = ""
    counterexample: CosetRecord | None = None

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "detail": self.detail,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
        }


@dataclass(frozen=True)
class CosetReport:
    code: LinearCode
    e: int
    records: tuple[CosetRecord, ...]
    theorem_lhs: int
    theorem_rhs: int

    @property
    def lemma_checks(self) -> dict[str, PartResult]:
        return verify_lemma(self)

    def to_dict(self) -> dict:
        theorem = verify_theorem_counts(self)
        return {
            "n": self.code.n,
            "k": self.code.k,
            "e": self.e,
            "min_distance": self.code.min_distance,
            "check_matrix": [str(w) for w in self.code.check.row_data],
            "records": [r.to_dict() for r in self.records],
            "lemma_checks": {p: r.to_dict() for p, r in self.lemma_checks.items()},
            "theorem_lhs": str(self.theorem_lhs),
            "theorem_rhs": str(self.theorem_rhs),
            "theorem_holds": theorem.evaluation.holds,
            "observed_total": str(theorem.observed_total),
            "observed_cap_sum": str(theorem.observed_cap_sum),
        }


def _syndromes(code: LinearCode) -> list[int]:
    """Syndrome of every word ``0 .. 2**n - 1``, built by peeling the lowest set bit."""
    cols = code.check.columns()
    syn = [0] * (1 << code.n)
    for x in range(1, 1 << code.n):
        low = x & -x
        syn[x] = syn[x ^ low] ^ cols[low.bit_length() - 1]
    return syn


def enumerate_cosets(code: LinearCode, e: int, limit: int | None = None) -> CosetReport:
    """Partition all ``2**n`` words by syndrome and summarize each coset.

    The representative of a coset is its smallest-valued word of minimum
    weight. Records are ordered by syndrome value.
    """
    if e < 0:
        raise DomainError(f"e must be >= 0, got {e}")
    _check_budget(code.n, limit, "coset enumeration")
    if code.k > 0 and code.min_distance < 2 * e + 1:
        raise DistanceTooSmallError(
            f"distance {code.min_distance} < 2e + 1 = {2 * e + 1}"
        )
    ncosets = 1 << (code.n - code.k)
    best = [-1] * ncosets
    count = [0] * ncosets
    for x, s in enumerate(_syndromes(code)):
        w = x.bit_count()
        if best[s] < 0 or w < best[s].bit_count():
            best[s] = x
        if w == e + 1:
            count[s] += 1
    records = tuple(
        CosetRecord(s, Word(code.n, best[s]), best[s].bit_count(), count[s])
        for s in range(ncosets)
    )
    ev = packing_inequality(code.n, code.k, e)
    return CosetReport(code, e, records, ev.lhs, ev.rhs)


def verify_lemma(report: CosetReport) -> dict[str, PartResult]:
    n, e = report.code.n, report.e
    low = [r for r in report.records if r.coset_weight <= e]
    expected = sphere_volume(n, e) if e <= n else 1 << n
    parts = {}
    parts["a"] = PartResult(
        len(low) == expected,
        f"{len(low)} cosets of weight <= {e}, {expected} words of weight <= {e}",
    )

    def first(pred, cap, what):
        bad = next((r for r in report.records if pred(r)), None)
        return PartResult(bad is None, f"{what} (cap {cap})", bad)

    parts["b"] = first(
        lambda r: r.coset_weight <= e - 1 and r.count_e_plus_1 > 0,
        0, f"cosets of weight < {e} hold no weight-{e + 1} word",
    )
    cap_c = n // (e + 1)
    parts["c"] = first(
        lambda r: r.count_e_plus_1 > cap_c,
        cap_c, f"every coset holds <= {cap_c} weight-{e + 1} words",
    )
    cap_d = (n - e) // (e + 1)
    parts["d"] = first(
        lambda r: r.coset_weight == e and r.count_e_plus_1 > cap_d,
        cap_d, f"weight-{e} cosets hold <= {cap_d} weight-{e + 1} words",
    )
    return parts


@dataclass(frozen=True, slots=True)
class TheoremCheck:
    evaluation: PackingInequalityEvaluation
    observed_total: int
    observed_cap_sum: int

    @property
    def tight(self) -> bool:
        return self.evaluation.lhs == self.evaluation.rhs


def verify_theorem_counts(report: CosetReport) -> TheoremCheck:
    """Compare the counting argument with what the partition actually shows.

    ``observed_cap_sum`` applies the per-coset caps to the observed coset
    weights; it equals the formula's lhs whenever part (a) holds.
    """
    n, k, e = report.code.n, report.code.k, report.e
    ev = packing_inequality(n, k, e)
    observed_total = sum(r.count_e_plus_1 for r in report.records)
    if observed_total != comb(n, e + 1):
        raise AssertionError(f"cosets hold {observed_total} weight-{e + 1} words, expected {comb(n, e + 1)}")
    caps = 0
    for r in report.records:
        if r.coset_weight == e:
            caps += (n - e) // (e + 1)
        elif r.coset_weight > e:
            caps += n // (e + 1)
    if not observed_total <= ev.lhs:
        raise AssertionError(f"observed {observed_total} weight-{e + 1} words exceed the bound {ev.lhs}")
    return TheoremCheck(ev, observed_total, caps)
