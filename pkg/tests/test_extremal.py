import pytest

from rainbowmatch.extremal import (
    brute_force_ext,
    brute_force_ext_bipartite,
    clique_term,
    clique_witness,
    ext_2k_case,
    ext_bipartite_matching,
    ext_matching,
    ext_value,
    join_term,
    join_witness,
)
from rainbowmatch.graphcore import GuardError
from rainbowmatch.matching import matching_number


def test_ext_value_fixtures():
    assert ext_value(6, 2) == 5
    assert ext_value(14, 6) == 55
    assert ext_value(4, 1) == 0
    assert ext_value(2, 1) == 0
    with pytest.raises(ValueError):
        ext_value(3, 2)
    with pytest.raises(ValueError):
        ext_value(4, 0)


def test_both_branches_tie_at_14_6():
    assert clique_term(14, 6) == join_term(14, 6) == 55
    assert ext_matching(14, 6).formula_branch == "both"


def test_witness_graphs():
    for n, k in [(6, 2), (8, 3), (10, 4), (14, 6), (12, 5)]:
        ew = ext_matching(n, k)
        ct, jt = ew.graphs
        assert len(ct.edges) == clique_term(n, k)
        assert len(jt.edges) == join_term(n, k)
        assert matching_number(ct) == k - 1
        assert matching_number(jt) == k - 1
        assert ew.value == max(len(ct.edges), len(jt.edges))


def test_witness_constructions_explicit():
    ct = clique_witness(7, 2)
    assert ct.neighbors(6) == frozenset()  # padding vertex is isolated
    jt = join_witness(7, 3)
    assert all(jt.has_edge(u, v) for u in range(2) for v in range(2, 7) if u != v)
    assert not jt.has_edge(3, 4)  # independent part


def test_crossover_at_n_equals_2k():
    # the two terms at n = 2k differ by (k-2)(k-7)/2
    for k in range(2, 21):
        diff = clique_term(2 * k, k - 1) - join_term(2 * k, k - 1)
        assert diff == (k - 2) * (k - 7) // 2


def test_ext_2k_case_branches():
    assert ext_2k_case(2) == (0, "both")
    for k in range(3, 7):
        assert ext_2k_case(k)[1] == "join"
    assert ext_2k_case(7)[1] == "both"
    for k in range(8, 13):
        assert ext_2k_case(k)[1] == "clique"


def test_brute_force_matches_formula():
    for n in range(2, 8):
        for k in range(1, n // 2 + 1):
            assert brute_force_ext(n, k) == ext_value(n, k), (n, k)
    with pytest.raises(GuardError):
        brute_force_ext(8, 2)


def test_bipartite_formula_and_oracle():
    assert ext_bipartite_matching(5, 3, 2) == 5
    with pytest.raises(ValueError):
        ext_bipartite_matching(3, 5, 2)
    with pytest.raises(ValueError):
        ext_bipartite_matching(5, 3, 4)
    for m in range(1, 7):
        for n_b in range(1, m + 1):
            if m * n_b > 20:
                continue
            for k in range(1, n_b + 1):
                assert brute_force_ext_bipartite(m, n_b, k) == m * (k - 1), (m, n_b, k)
    with pytest.raises(GuardError):
        brute_force_ext_bipartite(7, 4, 2)
