"""Compact real form, Hermitian contravariant forms and positivity at real ``q``.

Conjugation sends ``f`` to ``-f`` and ``e`` to ``-e``, so on a word class of
height ``k`` it acts by ``(-1)**k``. The Hermitian form is the Shapovalov
form with its first argument conjugated; at a rational ``q0 > 0`` it is an
exact rational matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .cartan import drop_add, drop_sub, height, unit
from .coeffs import ONE, eval_q, q_pow, qfact, qint
from .hwmodule import HWModule
from .tensor import lowest_height
from .words import Element, apply_map, involution_table

__all__ = [
    "StarData",
    "hermitian_gram",
    "positivity_check",
    "PositivityReport",
    "unitarity_defects",
    "sl2_norm",
    "sl2_norm_printed",
]

SAMPLE_Q = (Fraction(11, 10), Fraction(2), Fraction(5))


@dataclass
class StarData:
    """Generator tables of the conjugation ``bar`` and the compact star."""

    datum: object
    D: int = 2

    def star(self, x: Element) -> Element:
        return apply_map(x, "star")

    def bar(self, x: Element) -> Element:
        return apply_map(x, "bar")

    def generators(self):
        r = self.datum.rank
        out = []
        for i in range(r):
            out.append(Element.e(self.datum, i, self.D))
            out.append(Element.f(self.datum, i, self.D))
            out.append(Element.K(self.datum, unit(r, i), self.D))
        return out

    def star_involutive(self, x: Element) -> bool:
        return self.star(self.star(x)) == x

    def omega_star_is_bar(self) -> bool:
        """``omega(star(g)) == bar(g)`` on every generator."""
        return all(apply_map(self.star(g), "omega") == self.bar(g) for g in self.generators())

    def bar_involutive(self) -> bool:
        return all(self.bar(self.bar(g)) == g for g in self.generators())

    def star_anti(self, x: Element, y: Element) -> bool:
        return self.star(x * y) == self.star(y) * self.star(x)


def _check_q0(q0):
    q0 = Fraction(q0)
    if q0 <= 0:
        raise ValueError("q0 must be a positive rational")
    return q0


def hermitian_gram(M: HWModule, drop, q0) -> list:
    """Exact rational Gram matrix of the Hermitian form on ``M[drop]`` at ``q = q0``."""
    q0 = _check_q0(q0)
    sign = -1 if height(drop) % 2 else 1
    g = M.gram(drop)
    return [[sign * eval_q(x, q0, M.D) for x in row] for row in g]


def _minors(mat):
    n = len(mat)
    out = []
    for k in range(1, n + 1):
        out.append(_fdet([row[:k] for row in mat[:k]]))
    return out


def _fdet(m):
    m = [list(r) for r in m]
    n = len(m)
    acc = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            acc = -acc
        acc *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return acc


@dataclass
class PositivityReport:
    q0: Fraction
    passed: bool
    minors: dict = field(default_factory=dict)
    witness: Optional[tuple] = None

    def to_json(self):
        from .cartan import format_drop

        return {
            "q0": str(self.q0),
            "passed": self.passed,
            "minors": {format_drop(d): [str(x) for x in ms] for d, ms in self.minors.items()},
            "witness": None if self.witness is None else {
                "drop": format_drop(self.witness[0]),
                "k": self.witness[1],
                "minor": str(self.witness[2]),
            },
        }


def positivity_check(M: HWModule, q0) -> PositivityReport:
    """Leading principal minors of every Hermitian Gram of a finite-dimensional module.

    Fails with the first drop and minor index whose minor is not positive.
    """
    q0 = _check_q0(q0)
    if M.kind != "irreducible":
        raise ValueError("positivity is only defined here for irreducible modules")
    depth = lowest_height(M.datum, M.hw)
    if depth is None:
        raise ValueError("module is infinite-dimensional (highest weight is not dominant integral)")
    if M.H < depth:
        raise ValueError(f"module must be materialized up to height {depth}, got H={M.H}")
    rep = PositivityReport(q0, True)
    for d in M.drops():
        if not M.dim(d):
            continue
        ms = _minors(hermitian_gram(M, d, q0))
        rep.minors[d] = ms
        if rep.passed:
            for k, x in enumerate(ms, 1):
                if x <= 0:
                    rep.passed = False
                    rep.witness = (d, k, x)
                    break
    return rep


def unitarity_defects(M: HWModule, q0) -> list:
    """Violations of ``(x v, w) = (v, x^* w)`` for ``x`` in ``{e_a, f_a}``.

    Compares exact rational matrices on every pair of adjacent weight
    spaces; returns a list of ``(generator, drop)`` where they differ.
    """
    q0 = _check_q0(q0)
    bad = []
    r = M.datum.rank
    for d in M.drops():
        for a in range(r):
            nd = drop_add(d, unit(r, a))
            if height(nd) > M.H:
                continue
            if not M.dim(d) or not M.dim(nd):
                continue
            F = [[eval_q(x, q0, M.D) for x in row] for row in M.f_matrix(a, d)]
            E = [[eval_q(x, q0, M.D) for x in row] for row in M.e_matrix(a, nd)]
            Hd = hermitian_gram(M, d, q0)
            Hn = hermitian_gram(M, nd, q0)
            # (f v, w) = (v, q^{-h} e w) with v in M[d], w in M[nd]
            s = eval_q(q_pow(-M.weight(d)[a], M.D), q0, M.D)
            lhs = _fmul(_ft(F), Hn)
            rhs = [[s * x for x in row] for row in _fmul(Hd, E)]
            if lhs != rhs:
                bad.append((("f", a), d))
            # (e w, v) = (w, f q^{h} v) with w in M[nd], v in M[d]
            t = eval_q(q_pow(M.weight(d)[a], M.D), q0, M.D)
            lhs = _fmul(_ft(E), Hd)
            rhs = [[t * x for x in row] for row in _fmul(Hn, F)]
            if lhs != rhs:
                bad.append((("e", a), nd))
    return bad


def _ft(m):
    return [list(c) for c in zip(*m)]


def _fmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in zip(*b)] for row in a]


# ---------------------------------------------------------------------------
# sl2 closed forms

def sl2_norm(m: int, n: int, D=2):
    """Hermitian norm of ``f^m 1`` in the sl2 module of highest weight ``n``.

    ``[m]! [n][n-1]...[n-m+1] q^{-mn+m(m-1)}``, as the recursion
    ``(f^m, f^m) = q^{-(n-2m+2)} [m][n-m+1] (f^{m-1}, f^{m-1})`` gives.
    """
    out = qfact(m, D)
    for k in range(m):
        out = out * qint(n - k, D)
    return out * q_pow(-m * n + m * (m - 1), D)


def sl2_norm_printed(m: int, n: int, D=2):
    """The same product with the exponent ``-mn+m(m+1)`` found in the literature."""
    out = qfact(m, D)
    for k in range(m):
        out = out * qint(n - k, D)
    return out * q_pow(-m * n + m * (m + 1), D)
