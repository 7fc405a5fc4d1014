"""Highest-weight modules materialized weight space by weight space.

Every weight space of drop ``d`` is the span of all words of drop ``d``
modulo a subspace of relations:

* ``verma``: the two-sided Serre ideal component,
* ``parabolic``: additionally the left ideal generated by ``f_s`` for ``s``
  in the Levi subset (requires ``(hw, alpha_s) = 0``),
* ``irreducible``: the radical of the word Gram matrix at the highest weight.

The basis of a space is the lexicographically first set of words that stay
independent modulo the relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cartan import RootDatum, drop_add, drop_sub, enumerate_drops, format_drop, height, unit
from .coeffs import ONE, ZERO, q_pow, session_degree
from .words import WordExpr, WordForm, _ideal_vectors, gamma_inv_word, gamma_word, serre_elements, word_drop

__all__ = ["HWModule", "WeightSpace", "OutOfRange", "build", "act", "singular_in", "annihilator_ideal"]

KINDS = ("verma", "irreducible", "parabolic")


class OutOfRange(IndexError):
    """An action left the materialized range of heights."""


@dataclass
class WeightSpace:
    drop: tuple
    words: list
    basis_words: list
    relations: list
    word_to_class: list
    gram: list

    @property
    def dim(self):
        return len(self.basis_words)

    @property
    def basis(self):
        rank = len(self.drop)
        return [WordExpr.word(w, rank) for w in self.basis_words]

    def classify(self, vec):
        """Class coordinates of a vector given over ``self.words``."""
        return linalg.matvec(self.word_to_class, vec)


@dataclass
class HWModule:
    datum: RootDatum
    hw: tuple
    kind: str
    H: int
    levi: tuple = ()
    D: int = 2
    form: WordForm = None
    spaces: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    # -- bookkeeping -----------------------------------------------------
    def drops(self):
        return list(self.spaces)

    def dim(self, drop):
        sp = self.spaces.get(tuple(drop))
        return 0 if sp is None else sp.dim

    def dims_by_height(self):
        out = [0] * (self.H + 1)
        for d, sp in self.spaces.items():
            out[sum(d)] += sp.dim
        return out

    def weight(self, drop):
        return self.datum.lower(self.hw, drop)

    def describe(self):
        if self.kind == "parabolic":
            return f"par:{'|'.join(str(i + 1) for i in self.levi)}:{_fmt_weight(self.hw)}"
        tag = "irr" if self.kind == "irreducible" else "verma"
        return f"{tag}:{_fmt_weight(self.hw)}"

    def space(self, drop):
        drop = tuple(drop)
        if any(x < 0 for x in drop):
            return None
        if sum(drop) > self.H:
            raise OutOfRange(f"drop {format_drop(drop)} is beyond the cutoff H={self.H}")
        return self.spaces[drop]

    # -- action matrices -------------------------------------------------
    def e_matrix(self, a, drop):
        """Matrix of ``e_a``: ``M[drop] -> M[drop - alpha_a]`` (empty list when the target is absent)."""
        key = ("e", a, tuple(drop))
        if key not in self._cache:
            sp = self.space(drop)
            if drop[a] == 0:
                self._cache[key] = []
            else:
                tgt = self.space(drop_sub(drop, unit(self.datum.rank, a)))
                free = self.form.e_matrix(a, drop)
                cols = [sp.words.index(b) for b in sp.basis_words]
                restricted = [[row[c] for c in cols] for row in free]
                self._cache[key] = linalg.matmul(tgt.word_to_class, restricted) if tgt.dim else []
        return self._cache[key]

    def word_matrix(self, word, drop):
        """Matrix of ``f_word``: ``M[drop] -> M[drop + drop(word)]``."""
        word = tuple(word)
        key = ("w", word, tuple(drop))
        if key not in self._cache:
            sp = self.space(drop)
            tdrop = drop_add(drop, word_drop(word, self.datum.rank))
            tgt = self.space(tdrop)
            idx = {w: k for k, w in enumerate(tgt.words)}
            mat = linalg.zeros(tgt.dim, sp.dim)
            for j, b in enumerate(sp.basis_words):
                col = idx[word + b]
                for i in range(tgt.dim):
                    mat[i][j] = tgt.word_to_class[i][col]
            self._cache[key] = mat
        return self._cache[key]

    def f_matrix(self, a, drop):
        return self.word_matrix((a,), drop)

    def e_word_matrix(self, word, drop):
        """Matrix of ``e_{w1} ... e_{wm}`` on ``M[drop]`` (the last letter acts first)."""
        word = tuple(word)
        key = ("ew", word, tuple(drop))
        if key not in self._cache:
            cur = tuple(drop)
            mat = linalg.identity(self.dim(cur))
            for a in reversed(word):
                if cur[a] == 0:
                    mat = None
                    break
                e = self.e_matrix(a, cur)
                cur = drop_sub(cur, unit(self.datum.rank, a))
                if e and mat and mat[0]:
                    mat = linalg.matmul(e, mat)
                else:
                    # the inner dimension vanished somewhere along the word
                    mat = linalg.zeros(self.dim(cur), self.dim(drop))
            self._cache[key] = mat
        return self._cache[key]

    def gamma_inv_matrix(self, word, drop):
        """Matrix of ``gamma^{-1}(f_word)``: ``M[drop] -> M[drop + drop(word)]``."""
        scal, rev = gamma_inv_word(self.datum, word, self.weight(drop), self.D)
        return [[x * scal if x else ZERO for x in row] for row in self.word_matrix(rev, drop)]

    def gamma_matrix(self, word, drop):
        scal, rev = gamma_word(self.datum, word, self.weight(drop), self.D)
        return [[x * scal if x else ZERO for x in row] for row in self.word_matrix(rev, drop)]

    def torus_scalar(self, a, drop, sign=1):
        return q_pow(sign * self.weight(drop)[a], self.D)

    def gram(self, drop):
        return self.space(drop).gram


def _fmt_weight(hw):
    return ",".join(str(Fraction(x)) for x in hw)


def _quotient(words, relations):
    """Basis words (lexicographically first, independent modulo relations) and class map."""
    n = len(words)
    if relations:
        red, pivots = linalg.rref(relations, n, col_order=range(n - 1, -1, -1))
    else:
        red, pivots = [], []
    piv = set(pivots)
    basis_idx = [j for j in range(n) if j not in piv]
    pos = {j: p for p, j in enumerate(basis_idx)}
    c = linalg.zeros(len(basis_idx), n)
    for j in basis_idx:
        c[pos[j]][j] = ONE
    for row, p in zip(red, pivots):
        for j in basis_idx:
            if row[j]:
                c[pos[j]][p] = -row[j]
    return basis_idx, red, c


def build(datum: RootDatum, hw, kind: str, H: int, levi=(), D=None) -> HWModule:
    """Materialize all weight spaces of height ``<= H``."""
    hw = datum.check_weight(hw)
    if kind not in KINDS:
        raise ValueError(f"unknown module kind {kind!r}")
    if H < 0:
        raise ValueError("height cutoff must be non-negative")
    levi = tuple(sorted(set(levi)))
    if kind == "parabolic":
        for s in levi:
            if not 0 <= s < datum.rank:
                raise ValueError(f"Levi index {s + 1} out of range for {datum.label}")
            if hw[s] != 0:
                raise ValueError(
                    f"scalar parabolic module needs (hw, alpha_{s + 1}) = 0, got {hw[s]}"
                )
    elif levi:
        raise ValueError("a Levi subset only makes sense for parabolic modules")
    if D is None:
        D = session_degree(hw)
    elif any((Fraction(x) * D).denominator != 1 for x in hw):
        raise ValueError(f"D={D} does not absorb the pairings {hw}")
    form = WordForm(datum, hw, D)
    M = HWModule(datum, hw, kind, H, levi, D, form)
    serre = serre_elements(datum, D)
    gens_left = [WordExpr.word((s,), datum.rank) for s in levi]
    for drop in enumerate_drops(datum, H):
        words = form.words(drop)
        n = len(words)
        gram = form.gram(drop)
        if kind == "irreducible":
            relations = linalg.nullspace(gram, n) if height(drop) else []
        else:
            _, relations = _ideal_vectors(datum, serre, drop, "two-sided")
            if kind == "parabolic" and gens_left:
                _, extra = _ideal_vectors(datum, gens_left, drop, "left")
                relations = list(relations) + list(extra)
        basis_idx, red, c = _quotient(words, relations)
        basis_words = [words[j] for j in basis_idx]
        g = [[gram[i][j] for j in basis_idx] for i in basis_idx]
        M.spaces[drop] = WeightSpace(drop, words, basis_words, red, c, g)
    return M


def act(M: HWModule, gen, drop, x):
    """Apply a generator to the class vector ``x`` of ``M[drop]``.

    ``gen`` is ``("e", a)``, ``("f", a)``, ``("K", a)`` or ``("Kinv", a)``.
    Returns ``(new_drop, vector)``; ``None`` stands for the zero vector when
    the target weight does not occur.
    """
    kind, a = gen
    drop = tuple(drop)
    if kind == "e":
        if drop[a] == 0:
            return None, []
        tgt = drop_sub(drop, unit(M.datum.rank, a))
        mat = M.e_matrix(a, drop)
        return tgt, (linalg.matvec(mat, x) if mat else [ZERO] * M.dim(tgt))
    if kind == "f":
        tgt = drop_add(drop, unit(M.datum.rank, a))
        if sum(tgt) > M.H:
            raise OutOfRange(f"f_{a + 1} leaves the cutoff H={M.H}")
        return tgt, linalg.matvec(M.f_matrix(a, drop), x)
    if kind in ("K", "Kinv"):
        s = M.torus_scalar(a, drop, 1 if kind == "K" else -1)
        return drop, [s * y for y in x]
    raise ValueError(f"unknown generator {gen!r}")


def singular_in(M: HWModule, drop) -> list:
    """Basis of the vectors of ``M[drop]`` killed by every ``e_a``."""
    drop = tuple(drop)
    n = M.dim(drop)
    rows = []
    for a in range(M.datum.rank):
        if drop[a]:
            rows.extend(M.e_matrix(a, drop))
    return linalg.nullspace(rows, n) if rows else linalg.identity(n)


def annihilator_ideal(M: HWModule, drop) -> list:
    """Component at ``drop`` of the annihilator of the highest vector, as word expressions.

    The same data read letterwise as ``e``-words is the positive ideal
    (``sigma`` maps ``f_a`` to ``e_a`` preserving order).
    """
    sp = M.space(drop)
    return [WordExpr.from_vector(sp.words, r, sp.drop) for r in sp.relations]
