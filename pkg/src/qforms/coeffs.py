"""Exact coefficients: Laurent polynomials and rational functions in ``v``.

The deformation parameter is ``q = v**D`` for a session-wide positive
integer ``D``; rational exponents of ``q`` coming from rational weights are
absorbed by choosing ``D`` large enough (see :func:`session_degree`).
Coefficients are :class:`fractions.Fraction`; nothing here touches floats.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "PoleError",
    "ZERO",
    "ONE",
    "session_degree",
    "q_pow",
    "qint",
    "qnum",
    "qfact",
    "qbinom",
    "arith",
    "eval_at",
    "eval_q",
]


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a root of its denominator."""


# ---------------------------------------------------------------------------
# dense polynomial helpers (lists low -> high, no trailing zeros)

def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], a
    nz = [(j, y) for j, y in enumerate(b) if y]
    quo = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lead
        quo[k] = c
        if c:
            for j, y in nz:
                a[k + j] -= c * y
    return _ptrim(quo), _ptrim(a[:db])


def _primitive_int(p):
    """Integer polynomial with content 1 proportional to ``p`` (positive leading coefficient)."""
    den = reduce(math.lcm, (x.denominator for x in p if x), 1)
    ints = [int(x * den) for x in p]
    g = reduce(math.gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return [x // g for x in ints]


def _int_divides(a, b):
    """True when the integer polynomial ``b`` divides ``a`` over the integers."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    nz = [(j, y) for j, y in enumerate(b) if y]
    for k in range(len(a) - 1 - db, -1, -1):
        c, r = divmod(a[k + db], lead)
        if r:
            return False
        if c:
            for j, y in nz:
                a[k + j] -= c * y
    return not any(a[:db])


def _heuristic_gcd(A, B):
    """Gcd of primitive integer polynomials by evaluation at a large integer.

    Returns ``None`` when a few evaluation points do not certify a result.
    """
    norm = min(max(abs(x) for x in A), max(abs(x) for x in B))
    xi = 2 * norm + 29
    for _ in range(6):
        a = 0
        for x in reversed(A):
            a = a * xi + x
        b = 0
        for x in reversed(B):
            b = b * xi + x
        h = math.gcd(a, b)
        G = []
        while h:
            c = h % xi
            if c > xi // 2:
                c -= xi
            G.append(c)
            h = (h - c) // xi
        if G:
            g = reduce(math.gcd, G, 0)
            if G[-1] < 0:
                g = -g
            G = [x // g for x in G]
            if _int_divides(A, G) and _int_divides(B, G):
                return G
        xi = xi * 73794 // 27011
    return None


def _pgcd(a, b):
    """Monic gcd of two nonzero dense polynomials over Q."""
    G = _heuristic_gcd(_primitive_int(a), _primitive_int(b))
    if G is not None:
        lead = G[-1]
        return [Fraction(x, lead) for x in G]
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [x / lead for x in a]


# ---------------------------------------------------------------------------

class LaurentPoly:
    """Finite sum ``sum c_k v**k`` with rational ``c_k`` and integer ``k``.

    The coefficient map never stores zeros, so the zero polynomial is the
    empty map. Instances are immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, x in coeffs.items():
                if x != 0:
                    c[int(k)] = Fraction(x)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @property
    def coeffs(self):
        return dict(self._c)

    def items(self):
        """Terms in decreasing exponent order."""
        return sorted(self._c.items(), reverse=True)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self):
        return min(self._c)

    def max_exp(self):
        return max(self._c)

    def coeff(self, k):
        return self._c.get(k, Fraction(0))

    def shift(self, k):
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: x for e, x in self._c.items()})

    def scale(self, s):
        s = Fraction(s)
        if s == 0:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({e: x * s for e, x in self._c.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        c = dict(self._c)
        for k, x in other._c.items():
            y = c.get(k, 0) + x
            if y:
                c[k] = y
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -x for k, x in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        c = {}
        for i, x in self._c.items():
            for j, y in other._c.items():
                c[i + j] = c.get(i + j, 0) + x * y
        return LaurentPoly._raw({k: x for k, x in c.items() if x})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def evaluate(self, x):
        x = Fraction(x)
        return sum((c * x ** k for k, c in self._c.items()), Fraction(0))

    def dense(self):
        """Dense list (low -> high) of a polynomial with ``min_exp() >= 0``."""
        if not self._c:
            return []
        out = [Fraction(0)] * (self.max_exp() + 1)
        for k, x in self._c.items():
            out[k] = x
        return out

    @classmethod
    def from_dense(cls, p, shift=0):
        return cls._raw({k + shift: x for k, x in enumerate(p) if x})

    def to_string(self):
        if not self._c:
            return "0"
        return "+".join(f"{x}*v^{k}" for k, x in self.items())

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"


_TERM = re.compile(r"([+-]?\d+(?:/\d+)?)\*v\^(-?\d+)")


def _parse_poly(s):
    s = s.strip()
    if s == "0":
        return LaurentPoly()
    c = {}
    pos = 0
    for m in _TERM.finditer(s):
        gap = s[pos:m.start()]
        if gap not in ("", "+"):
            raise ValueError(f"malformed polynomial: {s!r}")
        c[int(m.group(2))] = c.get(int(m.group(2)), 0) + Fraction(m.group(1))
        pos = m.end()
    if pos != len(s):
        raise ValueError(f"malformed polynomial: {s!r}")
    return LaurentPoly(c)


class RatFunc:
    """Element of Q(v) kept in canonical form.

    ``den`` is a polynomial with constant term 1, ``num`` a Laurent
    polynomial carrying all the ``v``-power content, and the two share no
    nonconstant factor. Equal values therefore have equal representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x, _ONE_POLY)
        return cls._raw(LaurentPoly.constant(x), _ONE_POLY)

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw(LaurentPoly.monomial(k, c), _ONE_POLY)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self):
        return self.den == _ONE_POLY

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den == _ONE_POLY:
                return RatFunc._raw(self.num + other.num, _ONE_POLY)
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return RatFunc._raw(self.num * other.num, _ONE_POLY)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return _make(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if other.den == _ONE_POLY and len(other.num._c) == 1:
            (k, c), = other.num._c.items()
            return RatFunc._raw(self.num.shift(-k).scale(1 / c), self.den)
        return _make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def to_string(self):
        """Canonical ``"(num)/(den)"`` string, terms ``c*v^k`` by decreasing ``k``."""
        return f"({self.num.to_string()})/({self.den.to_string()})"

    @classmethod
    def parse(cls, s):
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", s.strip())
        if not m:
            raise ValueError(f"malformed rational function: {s!r}")
        return cls(_parse_poly(m.group(1)), _parse_poly(m.group(2)))

    def __repr__(self):
        if self.den == _ONE_POLY:
            return f"RatFunc({self.num.to_string()})"
        return f"RatFunc({self.to_string()})"

    def __str__(self):
        return self.to_string()


_ONE_POLY = LaurentPoly.constant(1)


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return RatFunc.coerce(x)
    return NotImplemented


def _canonical(num, den):
    s = den.min_exp()
    d0 = den.shift(-s).dense()
    if num.is_zero():
        return LaurentPoly(), _ONE_POLY
    num = num.shift(-s)
    t = num.min_exp()
    n0 = num.shift(-t).dense()
    if len(d0) > 1 and len(n0) > 1:
        g = _pgcd(n0, d0)
        if len(g) > 1:
            n0, _ = _pdivmod(n0, g)
            d0, _ = _pdivmod(d0, g)
    c = d0[0]
    if c != 1:
        n0 = [x / c for x in n0]
        d0 = [x / c for x in d0]
    return LaurentPoly.from_dense(n0, t), LaurentPoly.from_dense(d0)


def _make(num, den):
    obj = RatFunc.__new__(RatFunc)
    obj.num, obj.den = _canonical(num, den)
    obj._hash = None
    return obj


ZERO = RatFunc._raw(LaurentPoly(), _ONE_POLY)
ONE = RatFunc._raw(_ONE_POLY, _ONE_POLY)


# ---------------------------------------------------------------------------
# q-numbers

def session_degree(values: Iterable) -> int:
    """``D = 2 * lcm`` of the denominators of the given rational pairings."""
    dens = [Fraction(x).denominator for x in values]
    return 2 * reduce(math.lcm, dens, 1)


def q_pow(e, D=2):
    """``q**e`` as a monomial in ``v``; ``e * D`` must be an integer."""
    k = Fraction(e) * D
    if k.denominator != 1:
        raise ValueError(f"q^{e} is not expressible with D={D}")
    return RatFunc.monomial(int(k))


def qint(n: int, D=2) -> RatFunc:
    """``[n]_q = (q**n - q**-n) / (q - q**-1)`` for an integer ``n``."""
    n = int(n)
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    n = abs(n)
    return RatFunc._raw(
        LaurentPoly._raw({D * (n - 1 - 2 * j): Fraction(sign) for j in range(n)}), _ONE_POLY
    )


def qnum(x, D=2) -> RatFunc:
    """``[x]_q`` for a rational ``x`` (a Laurent polynomial when ``x`` is integral)."""
    x = Fraction(x)
    if x.denominator == 1:
        return qint(int(x), D)
    return (q_pow(x, D) - q_pow(-x, D)) / (q_pow(1, D) - q_pow(-1, D))


def qfact(n: int, D=2) -> RatFunc:
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k, D)
    return out


def qbinom(n: int, k: int, d: int = 1, D=2) -> RatFunc:
    """Gaussian binomial ``[n choose k]`` at ``q**d``."""
    if k < 0 or k > n:
        return ZERO
    num = ONE
    den = ONE
    for j in range(k):
        num = num * qint(n - j, D * d)
        den = den * qint(j + 1, D * d)
    return num / den


def arith(a, b, op: str) -> RatFunc:
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def eval_at(a, v0) -> Fraction:
    """Exact value of ``a`` at ``v = v0``."""
    a = RatFunc.coerce(a)
    v0 = Fraction(v0)
    if v0 == 0:
        raise ValueError("cannot evaluate at v = 0")
    den = a.den.evaluate(v0)
    if den == 0:
        raise PoleError(f"pole at v = {v0}")
    return a.num.evaluate(v0) / den


def _rational_root(x: Fraction, n: int):
    if x < 0 and n % 2 == 0:
        return None
    sign = -1 if x < 0 else 1
    p, r = abs(x.numerator), x.denominator
    a = round(p ** (1.0 / n))
    b = round(r ** (1.0 / n))
    for aa in (a - 1, a, a + 1):
        for bb in (b - 1, b, b + 1):
            if aa >= 0 and bb > 0 and aa ** n == p and bb ** n == r:
                return sign * Fraction(aa, bb)
    return None


def eval_q(a, q0, D=2) -> Fraction:
    """Exact value of ``a`` at ``q = q0``.

    Works whenever every exponent of ``v`` in ``a`` is a multiple of ``D``
    (so ``a`` is really a function of ``q``) or ``q0`` has a rational
    ``D``-th root.
    """
    a = RatFunc.coerce(a)
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("cannot evaluate at q = 0")
    exps = list(a.num._c) + list(a.den._c)
    g = reduce(math.gcd, exps, 0) if exps else 0
    step = math.gcd(g, D) if g else D
    # v**step is a rational power of q0 iff q0 has a rational (D/step)-th root
    root = _rational_root(q0, D // step)
    if root is None:
        raise ValueError(f"q0={q0} has no rational {D // step}-th root")
    w = root
    den = sum((c * w ** (k // step) for k, c in a.den._c.items()), Fraction(0))
    if den == 0:
        raise PoleError(f"pole at q = {q0}")
    num = sum((c * w ** (k // step) for k, c in a.num._c.items()), Fraction(0))
    return num / den
