import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_monomial_product, random_element, random_supermatrix, super_monomials
from supergeom import (
    EVEN,
    ODD,
    BiDegree,
    Parity,
    SuperMatrix,
    SuperPoly,
    SuperRing,
    berezinian,
    polys,
    standard_smooth_check,
)
from supergeom.errors import (
    ParityError,
    PreconditionError,
    RingMismatchError,
    SingularBlockError,
    UnknownVariableError,
)

B12 = SuperRing.B(1, 2)
B23 = SuperRing.B(2, 3)


def test_parity_addition():
    assert EVEN + EVEN == EVEN
    assert EVEN + ODD == ODD
    assert ODD + ODD == EVEN
    assert BiDegree(2, ODD) + BiDegree(1, ODD) == BiDegree(3, EVEN)


def test_odd_anticommute_and_square():
    x0, x1, t1, t2 = polys(B12, "x0 x1 th1 th2")
    assert t2 * t1 == -(t1 * t2)
    assert t1 * t1 == 0
    assert (x0 + t1 * t2) * (x0 - t1 * t2) == x0 ** 2


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        SuperPoly.x(B12, 0) * SuperPoly.x(B23, 0)


def test_equality_ignores_zero_terms():
    t1 = SuperPoly.theta(B12, 1)
    assert t1 - t1 == SuperPoly.zero(B12)
    assert not (t1 - t1)
    assert SuperPoly(B12, {((0, 0), (1,)): 0}) == 0


def _mono_poly(ring, mono):
    return SuperPoly(ring, {mono: 1})


def _all_monomials(m, n, top):
    return [mono for d in range(top + 1) for mono in super_monomials(m, n, d)]


def test_product_matches_naive_sign_count():
    monos = _all_monomials(2, 3, 2)
    for u in monos:
        for v in monos:
            got = _mono_poly(B23, u) * _mono_poly(B23, v)
            ref = naive_monomial_product(u, v)
            if ref is None:
                assert not got
            else:
                sign, w = ref
                assert got == SuperPoly(B23, {w: sign})


def test_supercommutativity_exhaustive():
    # all monomial pairs of total degree <= 4 in B(2,3)
    monos = _all_monomials(2, 3, 4)
    polys_ = [(_mono_poly(B23, m), len(m[1]) % 2) for m in monos]
    for f, pf in polys_:
        for g, pg in polys_:
            if sum(f.degrees()) + sum(g.degrees()) > 4:
                continue
            assert f * g == (g * f).scale((-1) ** (pf * pg))


def test_associativity_random():
    rng = random.Random(3)
    G = SuperRing.grassmann(4)
    for _ in range(30):
        a, b, c = (random_element(rng, G, rng.randint(0, 1)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_partial_examples():
    x0, x1, t1, t2 = polys(B12, "x0 x1 th1 th2")
    assert (t1 * t2).partial("th1") == t2
    assert (t1 * t2).partial("th2") == -t1
    assert (x0 ** 2 * t1).partial("x0") == 2 * x0 * t1
    assert (t1 * t2).partial(("odd", 2)) == -t1


def test_partial_unknown_variable():
    with pytest.raises(UnknownVariableError):
        SuperPoly.x(B12, 0).partial("th7")
    with pytest.raises(UnknownVariableError):
        SuperPoly.x(B12, 0).partial(("odd", 3))


def test_odd_partials_anticommute():
    for mono in _all_monomials(2, 3, 4):
        f = _mono_poly(B23, mono)
        for i in range(1, 4):
            assert f.partial(("odd", i)).partial(("odd", i)) == 0
            for j in range(1, 4):
                lhs = f.partial(("odd", j)).partial(("odd", i))
                rhs = f.partial(("odd", i)).partial(("odd", j))
                assert lhs == -rhs


def _homogeneous_strategy(ring):
    n = ring.n_odd
    term = st.tuples(
        st.tuples(*[st.integers(0, 2)] * ring.n_even),
        st.sets(st.integers(1, n), max_size=n).map(lambda s: tuple(sorted(s))),
        st.integers(-3, 3),
    )
    return st.lists(term, min_size=1, max_size=4)


@settings(max_examples=60, deadline=None)
@given(_homogeneous_strategy(B23), _homogeneous_strategy(B23), st.integers(0, 2), st.integers(1, 3))
def test_leibniz(fterms, gterms, even_var, odd_var):
    def parity_part(terms):
        par = len(terms[0][1]) % 2
        return SuperPoly(B23, {(e, o): c for e, o, c in terms if len(o) % 2 == par}), par

    f, pf = parity_part(fterms)
    g, _ = parity_part(gterms)
    for var, pv in ((("even", even_var), 0), (("odd", odd_var), 1)):
        lhs = (f * g).partial(var)
        rhs = f.partial(var) * g + (f * g.partial(var)).scale((-1) ** (pv * pf))
        assert lhs == rhs


def test_inverse_of_unit():
    rng = random.Random(5)
    G = SuperRing.grassmann(4)
    for _ in range(20):
        u = random_element(rng, G, 0, body=Fraction(rng.choice([1, 2, -3]), 2))
        assert u * u.inverse() == 1


def test_berezinian_examples():
    G = SuperRing.grassmann(2, ("b", "g"))
    b, g = polys(G, "b g")
    one = SuperPoly.one(G)
    M = SuperMatrix.from_blocks([[2 * one]], [[0 * one]], [[0 * one]], [[3 * one]], G)
    assert berezinian(M) == Fraction(2, 3)
    M = SuperMatrix.from_blocks([[one]], [[b]], [[g]], [[one]], G)
    assert berezinian(M) == 1 - b * g
    Minv = SuperMatrix.from_blocks([[1 + b * g]], [[-b]], [[-g]], [[1 - b * g]], G)
    assert (M @ Minv) == SuperMatrix.identity(1, 1, G)
    assert berezinian(M) * berezinian(Minv) == 1
    for p, q in ((0, 0), (1, 0), (0, 2), (2, 2)):
        assert berezinian(SuperMatrix.identity(p, q, G)) == 1


def test_berezinian_singular_block():
    G = SuperRing.grassmann(2)
    t1, t2 = polys(G, "th1 th2")
    one = SuperPoly.one(G)
    M = SuperMatrix.from_blocks([[one]], [[t1]], [[t2]], [[t1 * t2]], G)
    with pytest.raises(SingularBlockError):
        berezinian(M)


def test_supermatrix_block_parity():
    G = SuperRing.grassmann(2)
    t1, _ = polys(G, "th1 th2")
    one = SuperPoly.one(G)
    with pytest.raises(ParityError):
        SuperMatrix.from_blocks([[t1]], [[t1]], [[t1]], [[one]], G)


def test_berezinian_multiplicative_small():
    rng = random.Random(11)
    G = SuperRing.grassmann(3)
    for _ in range(15):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        M, N = random_supermatrix(rng, G, p, q), random_supermatrix(rng, G, p, q)
        assert berezinian(M @ N) == berezinian(M) * berezinian(N)


def test_standard_smooth_examples():
    R = SuperRing.B(1, 1)
    x0, x1, t1 = polys(R, "x0 x1 th1")
    assert standard_smooth_check([x0], [], [0, 1]) is True
    assert standard_smooth_check([], [t1], [1, 1]) is True
    assert standard_smooth_check([], [x0 * t1], [0, 1]) is False


def test_standard_smooth_off_locus():
    R = SuperRing.B(1, 1)
    x0, _, _ = polys(R, "x0 x1 th1")
    with pytest.raises(PreconditionError):
        standard_smooth_check([x0], [], [1, 1])


def test_homogeneity_predicates():
    x0, x1, t1, t2 = polys(B12, "x0 x1 th1 th2")
    f = x0 * t1 + x1 * t2
    assert f.is_homogeneous() and f.is_parity_homogeneous()
    assert f.bidegree() == BiDegree(2, ODD)
    g = x0 + t1
    assert g.is_homogeneous() and not g.is_parity_homogeneous()
    assert not (x0 + x0 * x1).is_homogeneous()
    assert Parity.of(3) == ODD
