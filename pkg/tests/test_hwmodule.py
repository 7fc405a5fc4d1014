from fractions import Fraction
from functools import lru_cache

import pytest

from qforms import linalg
from qforms.cartan import SUPPORTED, drop_add, drop_sub, enumerate_drops, get_datum, unit
from qforms.coeffs import ONE, ZERO, eval_q, q_pow, qnum
from qforms.hwmodule import OutOfRange, act, annihilator_ideal, build, singular_in
from qforms.tensor import lowest_height

A1, A2 = get_datum("A1"), get_datum("A2")


# -- independent oracles -------------------------------------------------

def positive_roots(X):
    """Close the simple roots under simple reflections (root coordinates)."""
    r = X.rank
    roots = {unit(r, i) for i in range(r)}
    frontier = list(roots)
    while frontier:
        beta = frontier.pop()
        for i in range(r):
            pair = sum(n * X.form(j, i) for j, n in enumerate(beta))
            k = Fraction(2 * pair, X.form(i, i))
            img = tuple(n - (k if j == i else 0) for j, n in enumerate(beta))
            img = tuple(int(x) for x in img)
            if all(x >= 0 for x in img) and any(img) and img not in roots:
                roots.add(img)
                frontier.append(img)
    return sorted(roots)


def kostant(X, drop):
    roots = positive_roots(X)

    @lru_cache(None)
    def count(d, k):
        if not any(d):
            return 1
        if k == len(roots):
            return 0
        total = count(d, k + 1)
        rest = drop_sub(d, roots[k])
        if all(x >= 0 for x in rest):
            total += count(rest, k)
        return total

    return count(tuple(drop), 0)


def weyl_dimension(X, hw):
    num = den = Fraction(1)
    for beta in positive_roots(X):
        rho = sum(n * X.sym[i] for i, n in enumerate(beta))
        lam = sum(n * Fraction(hw[i]) for i, n in enumerate(beta))
        num *= lam + rho
        den *= rho
    return num / den


def test_root_counts():
    counts = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "G2": 6}
    for label, n in counts.items():
        assert len(positive_roots(get_datum(label))) == n


# -- examples -------------------------------------------------------------

def test_build_examples():
    assert build(A1, (Fraction(3, 7),), "verma", 5).dims_by_height() == [1] * 6
    assert build(A1, (2,), "irreducible", 5).dims_by_height() == [1, 1, 1, 0, 0, 0]
    M = build(A2, (Fraction(1, 3), Fraction(-5, 2)), "verma", 3)
    assert M.dim((1, 1)) == 2 and M.dim((2, 1)) == 2


def test_build_errors():
    with pytest.raises(ValueError):
        build(A1, (1,), "verma", -1)
    with pytest.raises(ValueError):
        build(A2, (1, 0), "parabolic", 2, levi=(0,))
    with pytest.raises(ValueError):
        build(A2, (1, 0), "nonsense", 2)
    with pytest.raises(ValueError):
        build(A2, (1,), "verma", 2)


def test_act_examples():
    M = build(A1, (1,), "irreducible", 2)
    top = [ONE]
    assert act(M, ("K", 0), (0,), top) == ((0,), [q_pow(1)])
    assert act(M, ("e", 0), (0,), top) == (None, [])
    d, x = act(M, ("f", 0), (0,), top)
    assert act(M, ("f", 0), d, x) == ((2,), [])
    with pytest.raises(OutOfRange):
        act(M, ("f", 0), (2,), [])


def test_singular_in_examples():
    for n in range(0, 4):
        M = build(A1, (n,), "verma", n + 2)
        assert singular_in(M, (0,)) == [[ONE]]
        for k in range(1, n + 3):
            assert len(singular_in(M, (k,))) == (1 if k == n + 1 else 0)
    M = build(A1, (Fraction(2, 5),), "verma", 4)
    assert all(not singular_in(M, (k,)) for k in range(1, 5))


def test_annihilator_examples():
    M = build(A2, (1, 2), "verma", 3)
    for d in enumerate_drops(A2, 3):
        ann = annihilator_ideal(M, d)
        assert len(ann) == (1 if d in ((2, 1), (1, 2)) else 0)
    for n in range(0, 3):
        L = build(A1, (n,), "irreducible", n + 1)
        ann = annihilator_ideal(L, (n + 1,))
        assert len(ann) == 1 and list(ann[0].terms) == [(0,) * (n + 1)]
    P = build(A2, (0, 3), "parabolic", 2, levi=(0,))
    assert any(list(x.terms) == [(0,)] for x in annihilator_ideal(P, (1, 0)))
    assert P.dim((1, 0)) == 0 and P.dim((0, 1)) == 1 and P.dim((1, 1)) == 1


# -- invariants ----------------------------------------------------------

@pytest.mark.parametrize("label", SUPPORTED)
def test_verma_dims_are_partition_counts(label):
    X = get_datum(label)
    hw = tuple([1] + [0] * (X.rank - 1))
    M = build(X, hw, "verma", 4)
    N = build(X, tuple(Fraction(k + 1, 3) for k in range(X.rank)), "verma", 3)
    for d in enumerate_drops(X, 4):
        assert M.dim(d) == kostant(X, d)
        if sum(d) <= 3:
            assert N.dim(d) == M.dim(d)


WEYL_CASES = [
    ("A1", (0,)), ("A1", (1,)), ("A1", (4,)),
    ("A2", (1, 0)), ("A2", (1, 1)), ("A2", (2, 0)),
    ("A3", (1, 0, 0)), ("A3", (0, 1, 0)),
    ("B2", (1, 0)), ("B2", (0, 2)),
    ("G2", (1, 0)),
]


@pytest.mark.parametrize("label,hw", WEYL_CASES)
def test_irreducible_total_dimension(label, hw):
    X = get_datum(label)
    depth = lowest_height(X, hw)
    M = build(X, hw, "irreducible", depth + 1)
    dims = M.dims_by_height()
    assert sum(dims) == weyl_dimension(X, hw)
    assert dims[depth] == 1 and dims[depth + 1] == 0


def test_classical_limit_of_forms():
    # Grams of L(n) stay invertible at q = 1 (classical module of the same dimension)
    for n in range(5):
        M = build(A1, (n,), "irreducible", n)
        for d in M.drops():
            assert all(eval_q(x, 1) != 0 for row in M.gram(d) for x in row)


RELATION_CASES = [
    ("A1", (3,), "verma"), ("A1", (2,), "irreducible"),
    ("A2", (1, 0), "verma"), ("A2", (1, 1), "irreducible"), ("A2", (Fraction(1, 2), -1), "verma"),
    ("A3", (1, 0, 1), "irreducible"), ("B2", (1, 2), "verma"), ("B2", (1, 0), "irreducible"),
    ("G2", (1, 0), "irreducible"), ("G2", (0, 1), "verma"),
]


@pytest.mark.parametrize("label,hw,kind", RELATION_CASES)
def test_commutation_relations(label, hw, kind):
    """``[e_a, f_b] = delta_ab [h_a]_q`` and ``q^h e q^-h = q^(.,.) e`` as matrices."""
    X = get_datum(label)
    H = 4 if label != "G2" else 3
    M = build(X, hw, kind, H)
    r = X.rank
    for d in enumerate_drops(X, H - 1):
        n = M.dim(d)
        if not n:
            continue
        for a in range(r):
            for b in range(r):
                tgt = drop_sub(drop_add(d, unit(r, b)), unit(r, a))
                for i in range(n):
                    v = [ONE if k == i else ZERO for k in range(n)]
                    d1, x = act(M, ("f", b), d, v)
                    _, ef = act(M, ("e", a), d1, x)
                    d2, y = act(M, ("e", a), d, v)
                    fe = act(M, ("f", b), d2, y)[1] if d2 is not None else []
                    m = M.dim(tgt)
                    ef = ef or [ZERO] * m
                    fe = fe or [ZERO] * m
                    comm = [p - q for p, q in zip(ef, fe)]
                    if a == b:
                        c = qnum(M.weight(d)[a], M.D)
                        assert comm == [c * t for t in v], (d, a, b)
                    else:
                        assert not any(comm), (d, a, b)
            # torus conjugation
            if d[a]:
                for g in range(r):
                    v = [ONE] + [ZERO] * (n - 1)
                    # q^{h_g} e_a q^{-h_g}: the rightmost factor acts first
                    _, w = act(M, ("Kinv", g), d, v)
                    tgt, w = act(M, ("e", a), d, w)
                    _, w = act(M, ("K", g), tgt, w)
                    _, plain = act(M, ("e", a), d, v)
                    s = q_pow(X.form(g, a), M.D)
                    assert w == [s * x for x in plain]


@pytest.mark.parametrize("label,hw", [("A1", (3,)), ("A2", (1, 1)), ("B2", (0, 2)), ("A2", (2, 0))])
def test_radical_is_a_submodule(label, hw):
    X = get_datum(label)
    M = build(X, hw, "irreducible", 4)
    for d in enumerate_drops(X, 3):
        sp = M.space(d)
        for rel in sp.relations:
            for a in range(X.rank):
                up = M.space(drop_add(d, unit(X.rank, a)))
                pushed = [ZERO] * len(up.words)
                idx = {w: k for k, w in enumerate(up.words)}
                for w, c in zip(sp.words, rel):
                    if c:
                        pushed[idx[(a,) + w]] += c
                assert not any(up.classify(pushed))
                if d[a]:
                    down = M.space(drop_sub(d, unit(X.rank, a)))
                    img = linalg.matvec(M.form.e_matrix(a, d), rel)
                    assert not any(down.classify(img))


@pytest.mark.parametrize("label,hw,kind", RELATION_CASES[:6])
def test_spaces_are_consistent(label, hw, kind):
    X = get_datum(label)
    M = build(X, hw, kind, 3)
    assert M.dim((0,) * X.rank) == 1
    for d in M.drops():
        sp = M.space(d)
        assert linalg.is_symmetric(sp.gram)
        for j, b in enumerate(sp.basis_words):
            e = [ONE if w == b else ZERO for w in sp.words]
            assert sp.classify(e) == [ONE if k == j else ZERO for k in range(sp.dim)]
        if kind == "irreducible" and sp.dim:
            assert linalg.rank(sp.gram) == sp.dim
        # relations really vanish in the quotient
        for rel in sp.relations:
            assert not any(sp.classify(rel))


def test_basis_words_are_lexicographically_first():
    M = build(A2, (1, 1), "verma", 3)
    sp = M.space((2, 1))
    assert sp.basis_words == [(0, 0, 1), (0, 1, 0)]


def test_parabolic_levi_singular_vectors():
    # for a scalar parabolic module the positive ideal of the Levi acts through e_1,
    # so the kernel on V is the space of e_1-singular vectors
    from qforms.tensor import TensorProduct, extremal_subspaces

    V = build(A2, (1, 1), "irreducible", 3)
    Z = build(A2, (0, 2), "parabolic", 3, levi=(0,))
    T = TensorProduct(V, Z)
    for d in T.drops():
        ext = extremal_subspaces(T, d, "V")
        n = V.dim(d)
        rows = V.e_matrix(0, d) if d[0] else []
        expect = linalg.nullspace(rows, n) if rows else linalg.identity(n)
        assert linalg.rank(ext.plus, n) == len(expect) if n else True
        assert linalg.subspace_contains(ext.plus, expect, n)
