from fractions import Fraction

import pytest

from qforms.cartan import (
    SUPPORTED,
    enumerate_drops,
    enumerate_words,
    format_drop,
    get_datum,
    height,
    multinomial,
    parse_drop,
    parse_weight,
)


def test_inner_examples():
    A1, A2, B2 = get_datum("A1"), get_datum("A2"), get_datum("B2")
    assert A1.inner((3,), 0) == 3
    # alpha_1 as a weight has pairings given by a row of the symmetrized matrix
    assert A2.inner(A2.simple_root(0), 1) == -1
    assert B2.inner(B2.simple_root(0), 1) == -2


@pytest.mark.parametrize("label", SUPPORTED)
def test_symmetrizable_and_normalized(label):
    X = get_datum(label)
    for i in range(X.rank):
        assert X.cartan[i][i] == 2
        for j in range(X.rank):
            assert X.sym[i] * X.cartan[i][j] == X.sym[j] * X.cartan[j][i]
            assert X.form(i, j) == X.form(j, i)
    assert min(X.root_norm(i) for i in range(X.rank)) == 2


def test_height_examples():
    assert height((0, 0)) == 0
    assert height((1, 2)) == 3
    assert height((4,)) == 4
    with pytest.raises(ValueError):
        height((1, -1))


def test_enumerate_drops_examples():
    A1, A2 = get_datum("A1"), get_datum("A2")
    assert enumerate_drops(A1, 2) == [(0,), (1,), (2,)]
    assert enumerate_drops(A2, 1) == [(0, 0), (1, 0), (0, 1)]
    assert enumerate_drops(A2, 2)[3:] == [(2, 0), (1, 1), (0, 2)]
    with pytest.raises(ValueError):
        enumerate_drops(A1, -1)


@pytest.mark.parametrize("label", SUPPORTED)
def test_enumerate_drops_counts(label):
    from math import comb

    X = get_datum(label)
    H = 4
    drops = enumerate_drops(X, H)
    assert len(drops) == len(set(drops)) == comb(H + X.rank, X.rank)
    assert [height(d) for d in drops] == sorted(height(d) for d in drops)


def test_enumerate_words_examples():
    A1, A2 = get_datum("A1"), get_datum("A2")
    assert enumerate_words(A1, (3,)) == [(0, 0, 0)]
    assert enumerate_words(A2, (1, 1)) == [(0, 1), (1, 0)]
    assert len(enumerate_words(A2, (2, 1))) == 3


@pytest.mark.parametrize("drop", [(2, 1), (1, 1, 2), (0, 3), (2, 2, 1)])
def test_word_count_is_multinomial(drop):
    X = get_datum({2: "A2", 3: "A3"}[len(drop)])
    words = enumerate_words(X, drop)
    assert len(words) == multinomial(drop)
    assert words == sorted(words)


def test_lower_and_root_weight():
    G2 = get_datum("G2")
    lam = (Fraction(1), Fraction(0))
    mu = G2.lower(lam, (1, 1))
    # (alpha_1 + alpha_2, alpha_1) = 2 - 3, (alpha_1 + alpha_2, alpha_2) = -3 + 6
    assert mu == (Fraction(2), Fraction(-3))


def test_parse_and_format():
    assert parse_weight("1,-1/2") == (Fraction(1), Fraction(-1, 2))
    with pytest.raises(ValueError):
        parse_weight("1,,2")
    with pytest.raises(ValueError):
        parse_weight("x")
    assert format_drop((1, 2)) == "a1+2a2"
    assert format_drop((0, 0)) == "0"
    for d in [(0, 0), (3, 0), (1, 2), (0, 1)]:
        assert parse_drop(format_drop(d), 2) == d
    assert parse_drop("1,2", 2) == (1, 2)
    with pytest.raises(ValueError):
        get_datum("E8")
