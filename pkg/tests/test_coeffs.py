from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qforms.coeffs import (
    LaurentPoly,
    PoleError,
    RatFunc,
    arith,
    eval_at,
    eval_q,
    q_pow,
    qbinom,
    qfact,
    qint,
    qnum,
    session_degree,
)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.dictionaries(st.integers(-6, 6), fracs, max_size=4).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RatFunc, polys, nonzero_polys)
points = st.sampled_from([Fraction(2), Fraction(3, 2), Fraction(-5, 3), Fraction(7)])


def q(k):
    return q_pow(k)


def val(x, v0):
    """Oracle: evaluate at a point, or None at a pole."""
    try:
        return eval_at(x, v0)
    except PoleError:
        return None


# -- examples -------------------------------------------------------------

def test_qint_examples():
    assert qint(0) == 0
    assert qint(1) == 1
    assert qint(2) == q(1) + q(-1)
    assert qint(-3) == -(q(2) + 1 + q(-2))


def test_qfact_examples():
    assert qfact(0) == 1
    assert qfact(2) == q(1) + q(-1)
    assert qfact(3) == (q(1) + q(-1)) * (q(2) + 1 + q(-2))
    with pytest.raises(ValueError):
        qfact(-1)


def test_arith_examples():
    num = q(2) - 1
    assert arith(num, q(1) - 1, "div") == q(1) + 1
    assert arith(arith(qint(2), qint(2), "mul"), qint(3), "sub") == 1
    a = RatFunc(LaurentPoly({3: 2, -1: Fraction(1, 3)}), LaurentPoly({0: 1, 2: 5}))
    assert arith(a, 0, "add") == a
    with pytest.raises(ZeroDivisionError):
        arith(a, 0, "div")


def test_eval_examples():
    assert eval_q(qint(2), 2) == Fraction(5, 2)
    assert eval_q(qint(3), 1) == 3
    with pytest.raises(PoleError):
        eval_q(1 / (q(1) - 1), 1)
    with pytest.raises(ValueError):
        eval_at(qint(2), 0)


def test_serialization_format():
    assert qint(2).to_string() == "(1*v^2+1*v^-2)/(1*v^0)"
    assert RatFunc.parse(qint(2).to_string()) == qint(2)
    assert (1 / (q(1) - 1)).den.coeff(0) == 1


def test_session_degree():
    assert session_degree([1, -2]) == 2
    assert session_degree([Fraction(1, 2), Fraction(2, 3)]) == 12
    # half-integral pairings still give exact q-numbers
    assert qnum(Fraction(1, 2), 4) * (q_pow(1, 4) - q_pow(-1, 4)) == q_pow(Fraction(1, 2), 4) - q_pow(Fraction(-1, 2), 4)


# -- invariants ----------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a - a).is_zero()


@settings(max_examples=60, deadline=None)
@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@settings(max_examples=60, deadline=None)
@given(ratfuncs, ratfuncs, points)
def test_arith_agrees_with_evaluation(a, b, v0):
    # oracle: plain Fraction arithmetic on values
    va, vb = val(a, v0), val(b, v0)
    if va is None or vb is None:
        return
    s, p = val(a + b, v0), val(a * b, v0)
    if s is not None:
        assert s == va + vb
    if p is not None:
        assert p == va * vb


@settings(max_examples=60, deadline=None)
@given(ratfuncs)
def test_canonical_form(a):
    again = RatFunc(a.num, a.den)
    assert again.num == a.num and again.den == a.den
    assert a.den.min_exp() == 0 and a.den.coeff(0) == 1
    assert hash(again) == hash(a)
    assert RatFunc.parse(a.to_string()) == a


@settings(max_examples=40, deadline=None)
@given(ratfuncs, st.integers(-4, 4))
def test_scaling_numerator_and_denominator(a, k):
    # equal values must have equal representations
    m = LaurentPoly({k: 3, k + 1: -2})
    assert RatFunc(a.num * m, a.den * m) == a


def test_qint_antisymmetry_and_identity():
    for n in range(-50, 51):
        assert qint(-n) == -qint(n)
    for n in range(1, 31):
        assert qint(2) * qint(n) == qint(n + 1) + qint(n - 1)


def test_qint_definition_as_quotient():
    for n in range(-6, 7):
        assert qint(n) == (q(n) - q(-n)) / (q(1) - q(-1))


def test_qbinom_pascal():
    for d in (1, 2, 3):
        for n in range(1, 6):
            for k in range(1, n):
                lhs = qbinom(n, k, d)
                rhs = qbinom(n - 1, k, d) * q_pow(d * k) + qbinom(n - 1, k - 1, d) * q_pow(-d * (n - k))
                assert lhs == rhs


def test_qint_classical_limit():
    for n in range(0, 8):
        assert eval_q(qint(n), 1) == n


def _euclid_gcd(a, b):
    # oracle: textbook Euclid over Q, monic result
    a, b = list(a), list(b)
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        r = list(a)
        while len(r) >= len(b) and any(r):
            c = r[-1] / b[-1]
            shift = len(r) - len(b)
            for j, y in enumerate(b):
                r[shift + j] -= c * y
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    return [x / a[-1] for x in a]


dense = st.lists(st.integers(-4, 4), min_size=1, max_size=6).filter(lambda p: p[-1] != 0)


@settings(max_examples=80, deadline=None)
@given(dense, dense, dense)
def test_polynomial_gcd_matches_euclid(a, b, c):
    from qforms.coeffs import _pgcd, _pmul

    fa = _pmul([Fraction(x) for x in a], [Fraction(x) for x in c])
    fb = _pmul([Fraction(x) for x in b], [Fraction(x) for x in c])
    assert _pgcd(fa, fb) == _euclid_gcd(fa, fb)
