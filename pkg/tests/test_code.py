import pytest

from convcodes import catalog
from convcodes.code import parse_columns, profile, puncture
from convcodes.gf import field_of_order
from convcodes.polymat import PolyMatrix, parse_matrix

G1 = catalog.get("(7,3,3;1)_2").G
HG1 = catalog.get("(15,4,4;1)_2").G


def test_profile_g1():
    p = profile(G1)
    assert p.label == "(7,3,3;1)_2"
    assert p.forney == (1, 1, 1)
    assert p.minimal and p.basic


def test_profile_9_3_1():
    p = profile(catalog.get("(9,3,1;1)_8").G)
    assert p.forney == (1, 0, 0)
    assert (p.n, p.k, p.delta, p.m, p.q) == (9, 3, 1, 1, 8)


def test_profile_block_code():
    p = profile(PolyMatrix.identity(field_of_order(2), 3))
    assert p.label == "(3,3,0;0)_2"


def test_profile_reports_rather_than_rejects():
    p = profile(parse_matrix("field GF(2)\n1, z\nz, z^2+1\n"))
    assert p.basic and not p.minimal
    assert p.delta == 0 and p.forney == (2, 1)
    q = profile(parse_matrix("field GF(2)\nz, z^2\n"))
    assert not q.basic and q.minimal and q.delta == 2
    r = profile(parse_matrix("field GF(2)\n1, z\n1, z\n"))
    assert r.delta == -1 and not r.basic


def test_profile_errors():
    with pytest.raises(ValueError):
        profile(parse_matrix("field GF(2)\n1\nz\n"))
    with pytest.raises(ValueError):
        profile(parse_matrix("field GF(2)\n1, 0\n0, 0\n"))


def test_parse_columns():
    assert parse_columns("1,2,4-6, 9") == [1, 2, 4, 5, 6, 9]
    assert parse_columns("1 - 3") == [1, 2, 3]


def test_puncture_examples():
    P = puncture(G1, [1, 2, 3, 5, 6, 7])
    assert profile(P).label == "(6,3,3;1)_2"
    Q = puncture(HG1, [1, 2, 4, 5, 8, 11, 13, 14])
    assert profile(Q).label == "(8,4,4;1)_2"
    assert puncture(G1, range(1, 8)) == G1
    assert profile(puncture(G1, range(1, 8))) == profile(G1)


def test_puncture_errors():
    with pytest.raises(ValueError):
        puncture(G1, [1, 1, 2])
    with pytest.raises(ValueError):
        puncture(G1, [0, 1, 2])
    with pytest.raises(ValueError):
        puncture(G1, [1, 8, 2])
    with pytest.raises(ValueError):
        puncture(G1, [1, 2])


@pytest.mark.parametrize("e", catalog.entries("III"), ids=lambda e: e.id)
def test_table_iii_recipes_are_basic_and_minimal(e):
    p = profile(e.G)
    assert p.basic and p.minimal
    assert p.label == e.id
    assert p.k * p.m >= p.delta


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.id)
def test_km_at_least_delta(e):
    p = profile(e.G)
    assert p.minimal and p.k * p.m >= p.delta and p.delta == sum(p.forney)
