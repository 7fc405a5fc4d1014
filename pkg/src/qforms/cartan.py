"""Finite-type Cartan data, weights, heights and enumeration of drops and words.

A weight is a tuple of rationals ``(lam, alpha_i)``, its pairings with the
simple roots. A *drop* is a tuple of non-negative integers: the simple-root
multiplicities of ``highest weight - weight``. Simple roots are indexed from
0 internally and printed from 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "RootDatum",
    "get_datum",
    "SUPPORTED",
    "parse_weight",
    "height",
    "enumerate_drops",
    "enumerate_words",
    "multinomial",
    "drop_add",
    "drop_sub",
    "drop_leq",
    "unit",
    "format_drop",
]


@dataclass(frozen=True)
class RootDatum:
    label: str
    cartan: tuple
    sym: tuple

    @property
    def rank(self) -> int:
        return len(self.sym)

    def form(self, i: int, j: int) -> int:
        """``(alpha_i, alpha_j) = d_i a_ij``."""
        return self.sym[i] * self.cartan[i][j]

    def root_norm(self, i: int) -> int:
        return self.form(i, i)

    def inner(self, lam, i: int) -> Fraction:
        """``(lam, alpha_i)``; this is just the stored coordinate."""
        return Fraction(lam[i])

    def drop_pairing(self, lam, drop) -> Fraction:
        """``(lam, sum_i n_i alpha_i)``."""
        return sum((n * Fraction(lam[i]) for i, n in enumerate(drop)), Fraction(0))

    def drop_form(self, d1, d2) -> int:
        return sum(
            a * b * self.form(i, j)
            for i, a in enumerate(d1) if a
            for j, b in enumerate(d2) if b
        )

    def root_weight(self, drop) -> tuple:
        """Pairing vector of the root-lattice element ``sum_j n_j alpha_j``."""
        return tuple(
            Fraction(sum(n * self.form(j, i) for j, n in enumerate(drop)))
            for i in range(self.rank)
        )

    def simple_root(self, i: int) -> tuple:
        return self.root_weight(unit(self.rank, i))

    def lower(self, lam, drop) -> tuple:
        """The weight ``lam - sum_j n_j alpha_j``."""
        r = self.root_weight(drop)
        return tuple(Fraction(x) - y for x, y in zip(lam, r))

    def check_weight(self, lam) -> tuple:
        if len(lam) != self.rank:
            raise ValueError(f"{self.label} weights need {self.rank} pairings, got {len(lam)}")
        return tuple(Fraction(x) for x in lam)


def _datum(label, cartan, sym):
    d = RootDatum(label, tuple(tuple(r) for r in cartan), tuple(sym))
    n = d.rank
    for i in range(n):
        for j in range(n):
            assert d.form(i, j) == d.form(j, i), (label, i, j)
    return d


_DATA = {
    "A1": _datum("A1", [[2]], [1]),
    "A2": _datum("A2", [[2, -1], [-1, 2]], [1, 1]),
    "A3": _datum("A3", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1]),
    # short root first, normalized to (alpha, alpha) = 2
    "B2": _datum("B2", [[2, -2], [-1, 2]], [1, 2]),
    "G2": _datum("G2", [[2, -3], [-1, 2]], [1, 3]),
}

SUPPORTED = tuple(_DATA)


def get_datum(label: str) -> RootDatum:
    try:
        return _DATA[label.upper()]
    except KeyError:
        raise ValueError(f"unsupported root datum {label!r}; choose from {', '.join(SUPPORTED)}") from None


def parse_weight(text: str) -> tuple:
    """Parse ``"1,-1/2"`` into a tuple of Fractions."""
    parts = [p.strip() for p in str(text).split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed weight {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed weight {text!r}") from None


def unit(rank: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(rank))


def height(drop) -> int:
    if any(n < 0 for n in drop):
        raise ValueError(f"drop {drop} has negative multiplicities")
    return sum(drop)


def drop_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def drop_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def drop_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def enumerate_drops(datum: RootDatum, H: int) -> list:
    """All drops of height <= H, by height, then lexicographically by letters."""
    if H < 0:
        raise ValueError("height cutoff must be non-negative")
    r = datum.rank
    out = []
    for h in range(H + 1):
        level = [c for c in _compositions(h, r)]
        level.sort(reverse=True)
        out.extend(level)
    return out


def _compositions(h, r):
    if r == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in _compositions(h - first, r - 1):
            yield (first,) + rest


def enumerate_words(datum: RootDatum, drop) -> list:
    """All letter sequences with multiset ``drop``, in lexicographic order."""
    letters = []
    for i, n in enumerate(drop):
        letters.extend([i] * n)
    return sorted(set(itertools.permutations(letters)))


def multinomial(drop) -> int:
    out = math.factorial(sum(drop))
    for n in drop:
        out //= math.factorial(n)
    return out


def format_drop(drop) -> str:
    """``(1, 2)`` -> ``"a1+2a2"``; the zero drop prints as ``"0"``."""
    terms = []
    for i, n in enumerate(drop):
        if n == 1:
            terms.append(f"a{i + 1}")
        elif n:
            terms.append(f"{n}a{i + 1}")
    return "+".join(terms) if terms else "0"


def parse_drop(text: str, rank: int) -> tuple:
    """Inverse of :func:`format_drop`; also accepts comma-separated multiplicities."""
    text = text.strip()
    if text == "0":
        return (0,) * rank
    if "a" not in text:
        parts = tuple(int(p) for p in text.split(","))
        if len(parts) != rank or any(p < 0 for p in parts):
            raise ValueError(f"malformed drop {text!r}")
        return parts
    out = [0] * rank
    for term in text.split("+"):
        coef, _, idx = term.partition("a")
        i = int(idx) - 1
        if not 0 <= i < rank:
            raise ValueError(f"malformed drop {text!r}")
        out[i] += int(coef) if coef else 1
    return tuple(out)
