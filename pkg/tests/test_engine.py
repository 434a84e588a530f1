import json
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from mncascade.engine import (
    CharacterTable,
    ResourceLimitError,
    character_table,
    character_value,
    degree,
    orthogonality_holds,
    table_from_dict,
)
from mncascade.partitions import Partition, centralizer_order, partitions_of
from oracles import frobenius_character

P = Partition


def test_examples():
    assert character_value(P((2, 2)), (2, 2)) == 2
    assert character_value(P((1, 1, 1)), (3,)) == 1
    assert character_value(P((2, 1)), (3,)) == -1
    assert character_value(P(), ()) == 1
    for n in range(1, 9):
        for mu in partitions_of(n):
            assert character_value(P((n,)), mu) == 1
    with pytest.raises(ValueError, match="size mismatch"):
        character_value(P((2, 1)), (2,))


@pytest.mark.parametrize("n", range(1, 8))
def test_against_frobenius_formula(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert character_value(lam, mu) == frobenius_character(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_memo_on_off_agree(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert character_value(lam, mu, memo=True) == character_value(lam, mu, memo=False)


@pytest.mark.parametrize("n", range(1, 7))
def test_rearrangement_invariance(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            values = {character_value(lam, alpha) for alpha in set(permutations(mu))}
            assert len(values) == 1


def test_degree():
    assert degree(P((5,))) == 1
    assert degree(P((2, 1))) == 2
    assert degree(P((2, 2))) == 2
    for n in range(1, 13):
        for lam in partitions_of(n):
            assert character_value(lam, (1,) * n) == degree(lam)


def test_sign_character():
    for n in range(1, 8):
        for mu in partitions_of(n):
            expected = (-1) ** (n - len(mu))
            assert character_value(P((1,) * n), mu) == expected


def test_table_small():
    t1 = character_table(1)
    assert t1.values == ((1,),)
    t3 = character_table(3)
    assert t3.rows == ((3,), (2, 1), (1, 1, 1))
    # columns (1^3), (2,1), (3)
    cols = [P((1, 1, 1)), P((2, 1)), P((3,))]
    assert [t3[P((3,)), mu] for mu in cols] == [1, 1, 1]
    assert [t3[P((2, 1)), mu] for mu in cols] == [2, 0, -1]
    assert [t3[P((1, 1, 1)), mu] for mu in cols] == [1, -1, 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality(n):
    table = character_table(n)
    assert orthogonality_holds(table)
    nf = factorial(n)
    for i, lam in enumerate(table.rows):
        for j, other in enumerate(table.rows):
            total = sum(nf // centralizer_order(mu) * table.values[i][k] * table.values[j][k]
                        for k, mu in enumerate(table.cols))
            assert total == (nf if i == j else 0)


def test_orthogonality_detects_corruption():
    table = character_table(4)
    values = [list(r) for r in table.values]
    values[1][2] += 1
    assert not orthogonality_holds(CharacterTable(4, table.rows, table.cols, tuple(map(tuple, values))))


def test_table_bound():
    with pytest.raises(ResourceLimitError):
        character_table(5, max_n=4)
    with pytest.raises(ValueError):
        character_table(0)


def test_table_formats():
    t = character_table(3)
    data = json.loads(t.to_json())
    assert data == {
        "n": 3,
        "rows": ["3", "2,1", "1,1,1"],
        "cols": ["3", "2,1", "1,1,1"],
        "values": [["1", "1", "1"], ["-1", "0", "2"], ["1", "-1", "1"]],
    }
    assert table_from_dict(data) == t
    assert t.to_csv().splitlines() == [
        "lambda\\mu,3,\"2,1\",\"1,1,1\"",
        "3,1,1,1",
        "\"2,1\",-1,0,2",
        "\"1,1,1\",1,-1,1",
    ]
    assert character_table(1).to_csv().splitlines()[1] == "1,1"


def test_table_workers_identical():
    assert character_table(6, workers=2) == character_table(6, workers=1)


def test_big_values_exact():
    lam = P((8, 7, 6, 5, 4, 3, 2, 1))
    assert degree(lam) == character_value(lam, (1,) * 36)
    assert degree(lam) > 2**53


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_conjugate_twist(pair):
    lam, mu = pair
    conj = P(sum(1 for p in lam if p > j) for j in range(lam.first()))
    sgn = (-1) ** (mu.size() - len(mu))
    assert character_value(conj, mu) == sgn * character_value(lam, mu)
