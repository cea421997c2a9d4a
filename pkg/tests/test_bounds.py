from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convcodes import bounds as B
from convcodes import catalog
from convcodes.code import profile
from convcodes.metrics import distance_report
from oracles import block_griesmer_by_definition, griesmer_by_definition, heller_terms

QS = [2, 3, 4, 5, 7, 8, 9, 16]


@st.composite
def params(draw):
    n = draw(st.integers(2, 16))
    k = draw(st.integers(1, n - 1))
    delta = draw(st.integers(0, 12))
    m_min = -(-delta // k)
    m = draw(st.integers(m_min, m_min + 3))
    q = draw(st.sampled_from(QS))
    return n, k, delta, m, q


def test_singleton_examples():
    assert B.singleton_generalized(3, 2, 3) == 6
    assert B.singleton_generalized(5, 2, 3) == 10
    for n in range(2, 10):
        for k in range(1, n):
            assert B.singleton_generalized(n, k, 0) == n - k + 1


def test_mds_forney_profile():
    assert sorted(B.mds_forney_profile(3, 2, 3)) == [1, 2]
    assert sorted(B.mds_forney_profile(5, 2, 4)) == [2, 2]
    assert B.mds_forney_profile(6, 3, 0) == (0, 0, 0)


def test_heller_spot_value():
    terms = heller_terms(5, 2, 6, 3, 2)
    assert terms[1] == 13 and terms[2] == 13
    assert min(terms.values()) == 13
    assert B.heller(5, 2, 6, 3, 2) == 13


def test_heller_block_specialization():
    for n, k, q in [(7, 4, 2), (13, 6, 2), (9, 3, 3)]:
        terms = heller_terms(n, k, 0, 0, q, i_max=12)
        assert B.heller(n, k, 0, 0, q) == min(terms.values())
        assert B.heller(n, k, 0, 0, q) == B.plotkin_block(n, k, q)


def test_heller_vs_griesmer_7_3_3():
    assert min(heller_terms(7, 3, 3, 1, 2).values()) == B.heller(7, 3, 3, 1, 2) >= 8
    assert B.griesmer_conv(7, 3, 3, 1, 2) == 8


@pytest.mark.parametrize(
    "args,expected",
    [
        ((5, 3, 4, 2, 2), 6),
        ((15, 4, 12, 3, 2), 32),
        ((9, 3, 1, 1, 8), 8),
        ((5, 2, 3, 3, 8), 10),
        ((5, 2, 6, 3, 2), 12),
    ],
)
def test_griesmer_examples(args, expected):
    assert B.griesmer_conv(*args) == expected
    assert griesmer_by_definition(*args) == expected


def test_griesmer_capped_by_singleton():
    # the inequalities alone would allow 12 here
    n, k, delta, m, q = 5, 2, 3, 3, 8
    i0 = B.griesmer_i0(n, k, delta, m, q)
    ok12 = all(B.griesmer_sum(12, k * (m + i) - delta, q) <= n * (m + i) for i in range(0, i0 + 1))
    assert ok12
    assert B.griesmer_conv(n, k, delta, m, q) == 10


def test_block_bounds_examples():
    assert B.block_bounds(13, 6, 2).griesmer == 5
    assert B.block_bounds(7, 4, 2).griesmer == 3
    assert block_griesmer_by_definition(7, 4, 2) == 3
    for n in range(2, 12):
        bb = B.block_bounds(n, 1, 3)
        assert bb.singleton == bb.plotkin == bb.griesmer == n


def test_mds_min_field():
    r = B.mds_min_field(3, 2, 3)
    assert r.bound == Fraction(3) and r.q_min == 3
    r = B.mds_min_field(3, 2, 2)
    assert r.bound == 5 and r.q_min == 5
    r = B.mds_min_field(3, 1, 3)
    assert r.bound == 4 and r.q_min == 4
    assert B.mds_min_field(5, 1, 1).bound == Fraction(10, 5)
    assert B.next_prime_power(6) == 7 and B.next_prime_power(10) == 11 and B.next_prime_power(1) == 2


def test_mds_flags_examples():
    for eid, d, M, strong in [("(3,1,1;1)_4", 6, 2, True), ("(5,1,2;2)_16", 15, 3, True)]:
        G = catalog.get(eid).G
        rep = distance_report(G)
        assert rep.d_free == d
        f = B.mds_flags(profile(G), rep.d_free, rep.coldist)
        assert f.is_mds and f.M == M and f.is_strongly_mds == strong and f.is_compact
    G = catalog.get("(5,2,6;4)_2").G
    rep = distance_report(G)
    f = B.mds_flags(profile(G), rep.d_free, rep.coldist)
    assert not f.is_mds and not f.is_compact and not f.is_strongly_mds
    with pytest.raises(B.BoundsError):
        B.mds_flags(profile(G), 12, [1, 2])


def test_parameter_errors():
    with pytest.raises(B.BoundsError):
        B.heller(5, 2, 6, 2, 2)  # km < delta
    with pytest.raises(B.BoundsError):
        B.griesmer_conv(5, 2, 3, 2, 6)
    with pytest.raises(B.BoundsError):
        B.griesmer_conv(3, 3, 0, 0, 2)
    with pytest.raises(B.BoundsError):
        B.singleton_generalized(3, 4, 0)


def test_large_powers_exact():
    # q^(k(m+i)-delta) far beyond 64 bits
    r = B.bounds_report(16, 15, 12, 1, 16)
    assert r.griesmer <= r.heller and r.griesmer <= r.singleton_gen


@settings(max_examples=600, deadline=None, derandomize=True)
@given(params())
def test_bound_ordering(p):
    n, k, delta, m, q = p
    g = B.griesmer_conv(n, k, delta, m, q)
    h = B.heller(n, k, delta, m, q)
    s = B.singleton_generalized(n, k, delta)
    first = min(heller_terms(n, k, delta, m, q, i_max=1).values())
    assert g <= h <= first
    assert g <= s


@settings(max_examples=150, deadline=None, derandomize=True)
@given(params())
def test_griesmer_matches_definition(p):
    assert B.griesmer_conv(*p) == griesmer_by_definition(*p)


@settings(max_examples=200, deadline=None, derandomize=True)
@given(params())
def test_heller_matches_terms(p):
    terms = heller_terms(*p, i_max=60)
    assert B.heller(*p) == min(terms.values())


def test_block_consistency_grid():
    count = 0
    for q in [q for q in range(2, 17) if B.prime_power(q)]:
        for n in range(2, 21):
            for k in range(1, n):
                bb = B.block_bounds(n, k, q)
                assert B.griesmer_conv(n, k, 0, 0, q) == bb.griesmer
                assert bb.griesmer <= bb.plotkin and bb.griesmer <= bb.singleton
                count += 1
    assert count == 10 * 190


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.id)
def test_column_distance_cap(e):
    G = e.G
    rep = distance_report(G)
    p = profile(G)
    for j, d in enumerate(rep.coldist):
        assert d <= B.column_distance_cap(p.n, p.k, j)
