import itertools

import pytest

from linbound import (
    BoundQuery,
    DomainError,
    LinearCode,
    SearchQuery,
    SearchStatus,
    coset_bound,
    exists_code,
    nl_search,
    nl_single_formula,
    rank,
)


def brute_exists(n, k, e):
    """Any k independent length-n vectors whose nonzero span has weight >= 2e+1."""
    heavy = [v for v in range(1, 1 << n) if v.bit_count() >= 2 * e + 1]
    for basis in itertools.combinations(heavy, k):
        span = {0}
        for b in basis:
            span |= {s ^ b for s in span}
        if len(span) == 1 << k and all(s == 0 or s.bit_count() >= 2 * e + 1 for s in span):
            return True
    return False


def brute_nl(k, e):
    n = k + 2 * e
    while not brute_exists(n, k, e):
        n += 1
    return n


@pytest.mark.parametrize("n, k, e, found", [(7, 4, 1, True), (7, 2, 2, False), (5, 1, 2, True)])
def test_exists_code_examples(n, k, e, found):
    res = exists_code(n, k, e)
    assert res.found is found
    assert brute_exists(n, k, e) is found
    if found:
        code = LinearCode.from_check(res.certificate)
        assert (code.n, code.k) == (n, k)
        assert code.min_distance >= 2 * e + 1


@pytest.mark.parametrize("k, e, n", [(2, 1, 5), (2, 2, 8), (4, 1, 7)])
def test_nl_search_examples(k, e, n):
    out = nl_search(SearchQuery(k, e))
    assert out.status is SearchStatus.FOUND
    assert out.n == n
    assert out.refuted == tuple(range(k + 2 * e, n))


@pytest.mark.parametrize("k, e", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_nl_search_matches_brute_force(k, e):
    assert nl_search(SearchQuery(k, e)).n == brute_nl(k, e)


@pytest.mark.parametrize("k", range(1, 8))
def test_single_error_agrees_with_formula(k):
    out = nl_search(SearchQuery(k, 1))
    assert out.n == nl_single_formula(k)
    code = LinearCode.from_check(out.certificate)
    assert rank(code.check) == code.n - k and code.min_distance >= 3


@pytest.mark.parametrize("k, e", [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3)])
def test_sandwich_and_soundness(k, e):
    out = nl_search(SearchQuery(k, e))
    assert out.status is SearchStatus.FOUND
    assert coset_bound(BoundQuery(k, e)).n <= out.n
    assert LinearCode.from_check(out.certificate).min_distance >= 2 * e + 1


@pytest.mark.parametrize("k, e", [(k, e) for k in (1, 2, 3) for e in (1, 2)])
def test_symmetry_pruning_is_safe(k, e):
    top = nl_search(SearchQuery(k, e)).n
    for n in range(k + 2 * e, top + 1):
        assert exists_code(n, k, e).found == exists_code(n, k, e, symmetry=False).found


def test_budget_exceeded_is_an_outcome():
    out = nl_search(SearchQuery(5, 2, budget=100))
    assert out.status is SearchStatus.BUDGET_EXCEEDED
    assert out.n is None and out.nodes_explored > 0
    assert out.refuted  # partial progress kept


def test_none_up_to_ceiling():
    out = nl_search(SearchQuery(2, 2, n_max=7))
    assert out.status is SearchStatus.NONE_UP_TO_N_MAX
    assert out.refuted == (6, 7)


def test_query_validation():
    with pytest.raises(DomainError):
        SearchQuery(2, 2, n_max=5)
    with pytest.raises(DomainError):
        SearchQuery(0, 1)
    with pytest.raises(DomainError):
        exists_code(4, 4, 1)


@pytest.mark.parametrize("k, e", [(2, 2), (4, 2), (5, 3)])
def test_small_gap_rows_are_tight(k, e):
    # shortest codes for these small k sit exactly at the coset bound, above the Hamming bound
    from linbound import hamming_bound

    out = nl_search(SearchQuery(k, e, budget=10**6))
    q = BoundQuery(k, e)
    assert out.n == coset_bound(q).n == hamming_bound(q).n + 1
