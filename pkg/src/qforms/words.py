"""Words in the negative Chevalley generators and the algebra around them.

A word is a tuple of simple-root indices ``(a1, ..., am)`` standing for
``f_a1 f_a2 ... f_am``; acting on a vector, the *last* letter acts first.

This module provides

* the action of ``e_a`` on ``w 1_lam`` obtained by commuting ``e_a`` to the
  right (:func:`act_e`),
* the word-level contravariant (Shapovalov) pairing, normalized by
  ``<1_lam, 1_lam> = 1`` (:class:`WordForm`, :func:`shapovalov_pair`),
* the antipode and its inverse on words acting on weight vectors,
* quantized Serre elements and ideal components, and
* a small symbolic algebra :class:`Element` for checking the generator
  tables of the involutions ``sigma``, ``omega~``, ``omega``, the antipode,
  the compact star and the conjugation.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cartan import RootDatum, drop_add, drop_leq, drop_sub, enumerate_drops, enumerate_words, unit
from .coeffs import ONE, ZERO, RatFunc, q_pow, qbinom, qnum

__all__ = [
    "word_drop",
    "word_str",
    "WordExpr",
    "act_e",
    "WordForm",
    "shapovalov_pair",
    "gamma_inv_word",
    "gamma_word",
    "serre_element",
    "serre_elements",
    "ideal_component",
    "Element",
]


def word_drop(word, rank):
    d = [0] * rank
    for a in word:
        d[a] += 1
    return tuple(d)


def word_str(word, letter="f"):
    if not word:
        return "1"
    return ".".join(f"{letter}{a + 1}" for a in word)


class WordExpr:
    """Weight-homogeneous linear combination of words."""

    __slots__ = ("terms", "drop")

    def __init__(self, terms, drop):
        self.terms = {w: RatFunc.coerce(c) for w, c in terms.items() if c}
        self.drop = tuple(drop)
        for w in self.terms:
            if word_drop(w, len(self.drop)) != self.drop:
                raise ValueError(f"word {word_str(w)} does not have drop {self.drop}")

    @classmethod
    def word(cls, word, rank):
        return cls({tuple(word): ONE}, word_drop(word, rank))

    @classmethod
    def from_vector(cls, words, vec, drop):
        return cls({w: c for w, c in zip(words, vec) if c}, drop)

    def to_vector(self, words):
        return [self.terms.get(w, ZERO) for w in words]

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if other.drop != self.drop:
            raise ValueError("adding word expressions of different drops")
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, ZERO) + c
        return WordExpr(t, self.drop)

    def scale(self, s):
        return WordExpr({w: c * s for w, c in self.terms.items()}, self.drop)

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        return self + (-other)

    def concat(self, left=(), right=()):
        """``left * self * right`` for words ``left`` and ``right``."""
        rank = len(self.drop)
        d = drop_add(drop_add(word_drop(left, rank), self.drop), word_drop(right, rank))
        return WordExpr({tuple(left) + w + tuple(right): c for w, c in self.terms.items()}, d)

    def __eq__(self, other):
        return isinstance(other, WordExpr) and self.drop == other.drop and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "WordExpr(0)"
        parts = [f"({c!r})*{word_str(w)}" for w, c in sorted(self.terms.items())]
        return "WordExpr(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# e-action and the word-level form

def act_e(datum: RootDatum, a: int, word, hw, D=2) -> WordExpr:
    """Expansion of ``e_a (w 1_hw)`` as a combination of words of drop ``drop(w) - alpha_a``.

    Each occurrence of ``f_a`` in ``w`` is crossed with the commutator
    ``[e_a, f_a] = [h_a]_q``, evaluated on the weight of the tail to its right.
    """
    word = tuple(word)
    rank = datum.rank
    d = word_drop(word, rank)
    if d[a] == 0:
        target = d
        return WordExpr({}, target)
    target = drop_sub(d, unit(rank, a))
    terms = {}
    tail_pair = Fraction(hw[a])
    # walk from the right: tail_pair = (hw - drop(tail), alpha_a)
    for k in range(len(word) - 1, -1, -1):
        b = word[k]
        if b == a:
            w = word[:k] + word[k + 1:]
            terms[w] = terms.get(w, ZERO) + qnum(tail_pair, D)
        tail_pair -= datum.form(b, a)
    return WordExpr(terms, target)


class WordForm:
    """Cached word spaces, free e-action matrices and word Gram matrices at a fixed highest weight."""

    def __init__(self, datum: RootDatum, hw, D=2):
        self.datum = datum
        self.hw = datum.check_weight(hw)
        self.D = D
        self._words = {}
        self._index = {}
        self._emat = {}
        self._gram = {}

    def words(self, drop):
        drop = tuple(drop)
        if drop not in self._words:
            ws = enumerate_words(self.datum, drop)
            self._words[drop] = ws
            self._index[drop] = {w: i for i, w in enumerate(ws)}
        return self._words[drop]

    def index(self, drop):
        self.words(drop)
        return self._index[tuple(drop)]

    def e_matrix(self, a, drop):
        """Matrix of ``e_a`` from words at ``drop`` to words at ``drop - alpha_a``."""
        key = (a, tuple(drop))
        if key not in self._emat:
            src = self.words(drop)
            if drop[a] == 0:
                self._emat[key] = []
            else:
                tgt_drop = drop_sub(drop, unit(self.datum.rank, a))
                idx = self.index(tgt_drop)
                mat = linalg.zeros(len(self.words(tgt_drop)), len(src))
                for j, w in enumerate(src):
                    for w2, c in act_e(self.datum, a, w, self.hw, self.D).terms.items():
                        mat[idx[w2]][j] = c
                self._emat[key] = mat
        return self._emat[key]

    def omega_f_scalar(self, a, drop):
        """Scalar of ``omega(f_a) = -q^{-h_a} e_a`` after ``e_a`` lands at ``drop - alpha_a``."""
        target = drop_sub(drop, unit(self.datum.rank, a))
        mu = self.datum.lower(self.hw, target)
        return -q_pow(-mu[a], self.D)

    def gram(self, drop):
        """Gram matrix ``<u 1, w 1>`` over all words of ``drop``."""
        drop = tuple(drop)
        if drop in self._gram:
            return self._gram[drop]
        words = self.words(drop)
        n = len(words)
        if sum(drop) == 0:
            g = [[ONE]]
        else:
            g = linalg.zeros(n, n)
            rank = self.datum.rank
            for i, u in enumerate(words):
                a = u[0]
                rest = u[1:]
                sub = drop_sub(drop, unit(rank, a))
                gsub = self.gram(sub)
                row = gsub[self.index(sub)[rest]]
                emat = self.e_matrix(a, drop)
                scal = self.omega_f_scalar(a, drop)
                for j in range(n):
                    acc = ZERO
                    for k, x in enumerate(row):
                        if x and emat[k][j]:
                            acc = acc + x * emat[k][j]
                    g[i][j] = scal * acc if acc else ZERO
        self._gram[drop] = g
        return g

    def pair(self, w1, w2):
        w1, w2 = tuple(w1), tuple(w2)
        rank = self.datum.rank
        d1, d2 = word_drop(w1, rank), word_drop(w2, rank)
        if d1 != d2:
            return ZERO
        idx = self.index(d1)
        return self.gram(d1)[idx[w1]][idx[w2]]

    def pair_expr(self, x: WordExpr, y: WordExpr):
        if x.drop != y.drop:
            return ZERO
        g = self.gram(x.drop)
        words = self.words(x.drop)
        return linalg.bilinear(x.to_vector(words), g, y.to_vector(words))


def shapovalov_pair(datum: RootDatum, w1, w2, hw, D=2) -> RatFunc:
    """``<w1 1_hw, w2 1_hw>`` for the contravariant form with ``<1, 1> = 1``."""
    return WordForm(datum, hw, D).pair(w1, w2)


# ---------------------------------------------------------------------------
# antipode on words

def gamma_inv_word(datum: RootDatum, word, weight, D=2):
    """``gamma^{-1}(f_w)`` on a vector of weight ``weight``.

    Returns ``(scalar, reversed_word)`` with
    ``gamma^{-1}(f_w) v = scalar * f_{reversed_word} v``. Uses
    ``gamma^{-1}(f_a) = -f_a q^{h_a}``; the first letter of ``w`` acts first.
    """
    mu = list(Fraction(x) for x in weight)
    scal = ONE
    for a in word:
        scal = scal * -q_pow(mu[a], D)
        for i in range(datum.rank):
            mu[i] -= datum.form(a, i)
    return scal, tuple(reversed(tuple(word)))


def gamma_word(datum: RootDatum, word, weight, D=2):
    """``gamma(f_w)`` on a vector of weight ``weight``; ``gamma(f_a) = -q^{h_a} f_a``."""
    mu = list(Fraction(x) for x in weight)
    scal = ONE
    for a in word:
        for i in range(datum.rank):
            mu[i] -= datum.form(a, i)
        scal = scal * -q_pow(mu[a], D)
    return scal, tuple(reversed(tuple(word)))


# ---------------------------------------------------------------------------
# Serre elements and ideals

def serre_element(datum: RootDatum, i: int, j: int, D=2) -> WordExpr:
    """``sum_k (-1)^k [n choose k]_{q_i} f_i^{n-k} f_j f_i^k`` with ``n = 1 - a_ij``."""
    if i == j:
        raise ValueError("Serre elements need distinct indices")
    n = 1 - datum.cartan[i][j]
    terms = {}
    for k in range(n + 1):
        c = qbinom(n, k, datum.sym[i], D)
        w = (i,) * (n - k) + (j,) + (i,) * k
        terms[w] = c if k % 2 == 0 else -c
    d = [0] * datum.rank
    d[i] += n
    d[j] += 1
    return WordExpr(terms, tuple(d))


def serre_elements(datum: RootDatum, D=2) -> list:
    r = datum.rank
    return [serre_element(datum, i, j, D) for i in range(r) for j in range(r) if i != j]


def _ideal_vectors(datum, generators, drop, side):
    drop = tuple(drop)
    words = enumerate_words(datum, drop)
    idx = {w: k for k, w in enumerate(words)}
    rank = datum.rank
    vecs = []
    for g in generators:
        if not drop_leq(g.drop, drop):
            continue
        rest = drop_sub(drop, g.drop)
        if side == "left":
            splits = [(rest, (0,) * rank)]
        elif side == "two-sided":
            splits = [(du, drop_sub(rest, du)) for du in enumerate_drops(datum, sum(rest)) if drop_leq(du, rest)]
        else:
            raise ValueError(f"unknown ideal side {side!r}")
        for du, dv in splits:
            for u in enumerate_words(datum, du):
                for v in enumerate_words(datum, dv):
                    x = g.concat(u, v)
                    vec = [ZERO] * len(words)
                    for w, c in x.terms.items():
                        vec[idx[w]] = c
                    vecs.append(vec)
    if not vecs:
        return words, []
    return words, linalg.span_basis(vecs, len(words))


def ideal_component(datum: RootDatum, generators, drop, side="two-sided") -> list:
    """Spanning set (echelon basis) of the ideal component at ``drop``.

    ``side="two-sided"`` spans ``{u g v}``; ``side="left"`` spans ``{u g}``,
    the left ideal generated by ``generators``.
    """
    words, rows = _ideal_vectors(datum, generators, drop, side)
    return [WordExpr.from_vector(words, r, drop) for r in rows]


# ---------------------------------------------------------------------------
# symbolic algebra for generator tables

class Element:
    """Combination of monomials ``x_1 ... x_k q^{h_beta}`` in ``U_q(g)``.

    Letters are ``+(i+1)`` for ``e_i`` and ``-(i+1)`` for ``f_i``; torus
    parts are kept to the right using ``q^{h_beta} x = q^{(beta, wt x)} x q^{h_beta}``.
    No relation between ``e`` and ``f`` letters is imposed, which is enough
    to compare images of generators under (anti)automorphisms.
    """

    __slots__ = ("datum", "D", "terms")

    def __init__(self, datum, terms=None, D=2):
        self.datum = datum
        self.D = D
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # constructors
    @classmethod
    def scalar(cls, datum, c, D=2):
        return cls(datum, {((), (0,) * datum.rank): RatFunc.coerce(c)}, D)

    @classmethod
    def e(cls, datum, i, D=2):
        return cls(datum, {((i + 1,), (0,) * datum.rank): ONE}, D)

    @classmethod
    def f(cls, datum, i, D=2):
        return cls(datum, {((-(i + 1),), (0,) * datum.rank): ONE}, D)

    @classmethod
    def K(cls, datum, beta, D=2):
        """``q^{h_beta}`` for a root-lattice vector ``beta``."""
        return cls(datum, {((), tuple(beta)): ONE}, D)

    @classmethod
    def fword(cls, datum, word, D=2):
        return cls(datum, {(tuple(-(a + 1) for a in word), (0,) * datum.rank): ONE}, D)

    def _letter_weight(self, letters):
        d = [0] * self.datum.rank
        for x in letters:
            if x > 0:
                d[x - 1] += 1
            else:
                d[-x - 1] -= 1
        return tuple(d)

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + v
        return Element(self.datum, t, self.D)

    def __neg__(self):
        return Element(self.datum, {k: -v for k, v in self.terms.items()}, self.D)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RatFunc.coerce(c)
        return Element(self.datum, {k: v * c for k, v in self.terms.items()}, self.D)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        out = {}
        for (w1, b1), c1 in self.terms.items():
            for (w2, b2), c2 in other.terms.items():
                exp = self.datum.drop_form(b1, self._letter_weight(w2))
                key = (w1 + w2, drop_add(b1, b2))
                val = c1 * c2 * q_pow(exp, self.D)
                out[key] = out.get(key, ZERO) + val
        return Element(self.datum, out, self.D)

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __repr__(self):
        return f"Element({self.terms!r})"

    def apply(self, table, anti=False):
        """Extend a generator table multiplicatively (``anti=True``: reversing order).

        ``table`` maps ``("e", i)``, ``("f", i)``, ``("K", beta)`` to Elements.
        """
        total = Element(self.datum, {}, self.D)
        for (letters, beta), c in self.terms.items():
            factors = []
            for x in letters:
                factors.append(table(("e", x - 1)) if x > 0 else table(("f", -x - 1)))
            if any(beta):
                factors.append(table(("K", beta)))
            if anti:
                factors.reverse()
            prod = Element.scalar(self.datum, c, self.D)
            for fac in factors:
                prod = prod * fac
            total = total + prod
        return total


def involution_table(datum, name, D=2):
    """Generator images for the maps used throughout.

    ``name`` is one of ``sigma``, ``omega_tilde``, ``omega``, ``gamma``,
    ``gamma_inv``, ``star``, ``bar``. Returns ``(table, anti)``.
    """
    E = lambda i: Element.e(datum, i, D)
    F = lambda i: Element.f(datum, i, D)
    K = lambda beta: Element.K(datum, beta, D)
    neg = lambda beta: tuple(-x for x in beta)
    r = datum.rank

    def al(i):
        return unit(r, i)

    tables = {
        "sigma": (lambda g: F(g[1]) if g[0] == "e" else E(g[1]) if g[0] == "f" else K(neg(g[1])), False),
        "omega_tilde": (lambda g: F(g[1]) if g[0] == "e" else E(g[1]) if g[0] == "f" else K(g[1]), True),
        "omega": (
            lambda g: -(F(g[1]) * K(al(g[1]))) if g[0] == "e"
            else -(K(neg(al(g[1]))) * E(g[1])) if g[0] == "f" else K(g[1]),
            True,
        ),
        "gamma": (
            lambda g: -(E(g[1]) * K(neg(al(g[1])))) if g[0] == "e"
            else -(K(al(g[1])) * F(g[1])) if g[0] == "f" else K(neg(g[1])),
            True,
        ),
        "gamma_inv": (
            lambda g: -(K(neg(al(g[1]))) * E(g[1])) if g[0] == "e"
            else -(F(g[1]) * K(al(g[1]))) if g[0] == "f" else K(neg(g[1])),
            True,
        ),
        "star": (
            lambda g: F(g[1]) * K(al(g[1])) if g[0] == "e"
            else K(neg(al(g[1]))) * E(g[1]) if g[0] == "f" else K(g[1]),
            True,
        ),
        "bar": (lambda g: -E(g[1]) if g[0] == "e" else -F(g[1]) if g[0] == "f" else K(g[1]), False),
    }
    try:
        return tables[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}") from None


def apply_map(x: Element, name: str) -> Element:
    table, anti = involution_table(x.datum, name, x.D)
    return x.apply(table, anti)


def borel_rescaling(datum, c, sign, D=2):
    """Generator table of ``f_a -> c f_a q^{sign h_a}`` on the negative Borel part."""
    def table(g):
        if g[0] == "f":
            return Element.f(datum, g[1], D) * Element.K(datum, tuple(sign * x for x in unit(datum.rank, g[1])), D) * c
        if g[0] == "K":
            return Element.K(datum, g[1], D)
        raise ValueError("rescaling is defined on the negative Borel part only")
    return table
