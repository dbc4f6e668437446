from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import h_closed, module_corpus, series_mul, series_pow_one_minus_t, super_monomials
from supergeom import (
    EVEN,
    ODD,
    BModulePresentation,
    DimPair,
    GradedSModule,
    PolyPair,
    QPoly,
    SuperRing,
    euler_characteristic,
    expand_module,
    flag_fibre_dim,
    h_mn,
    hilbert_function,
    hilbert_polynomial_pair,
    polys,
    saturate,
    super_hilbert_polynomial,
    supergrass_dim,
    total_filtration,
)

ORDER = 12


def test_h_mn_examples():
    for m, n in product(range(4), range(4)):
        assert h_mn(m, n, 0) == DimPair(1, 0)
        assert h_mn(m, n, -1) == DimPair(0, 0)
    assert h_mn(1, 2, 2) == DimPair(4, 4)
    for r in range(10):
        assert h_mn(1, 1, r) == DimPair(r + 1, r)


@pytest.mark.parametrize("m,n", list(product(range(4), range(5))))
def test_h_mn_counts_monomials(m, n):
    for r in range(9):
        monos = super_monomials(m, n, r)
        ev = sum(1 for _, odd in monos if len(odd) % 2 == 0)
        assert h_mn(m, n, r) == DimPair(ev, len(monos) - ev)
        assert tuple(h_mn(m, n, r)) == h_closed(m, n, r)


@pytest.mark.parametrize("m,n", list(product(range(5), range(5))))
def test_generating_functions(m, n):
    total = [h_mn(m, n, r).total for r in range(ORDER + 1)]
    signed = [h_mn(m, n, r).even - h_mn(m, n, r).odd for r in range(ORDER + 1)]
    one_plus_t = [1, 1] + [0] * (ORDER - 1)
    num = [1] + [0] * ORDER
    for _ in range(n):
        num = series_mul(num, one_plus_t, ORDER)
    assert total == series_mul(num, series_pow_one_minus_t(-(m + 1), ORDER), ORDER)
    assert signed == series_pow_one_minus_t(n - m - 1, ORDER)


@pytest.mark.parametrize("m,n", list(product(range(4), range(4))))
def test_h_mn_matches_expansion(m, n):
    M = expand_module(BModulePresentation.structure_sheaf(m, n))
    for r in range(9):
        assert hilbert_function(M, r) == h_mn(m, n, r)


def _poly(*cs):
    return QPoly(cs)


def test_hilbert_polynomial_examples():
    pair, _ = hilbert_polynomial_pair(expand_module(BModulePresentation.structure_sheaf(1, 2)))
    assert pair == PolyPair(_poly(0, 2), _poly(0, 2))
    pair, _ = hilbert_polynomial_pair(expand_module(BModulePresentation.structure_sheaf(1, 1)))
    assert pair == PolyPair(_poly(1, 1), _poly(0, 1))
    pair, r0 = hilbert_polynomial_pair(GradedSModule.create(1, [(0, EVEN)], [
        {(0, (2, 0)): 1}, {(0, (1, 1)): 1}, {(0, (0, 2)): 1}]))
    assert pair == PolyPair.zero()
    assert r0 >= 2


@pytest.mark.parametrize("label,P", module_corpus())
def test_stabilization_bound(label, P):
    M = expand_module(P)
    pair, r0 = hilbert_polynomial_pair(M)
    Ms = saturate(M)
    for r in range(r0, r0 + 5):
        assert hilbert_function(Ms, r) == pair(r)
        assert hilbert_function(M, r) == pair(r)


def test_super_hilbert_examples():
    assert super_hilbert_polynomial(BModulePresentation.structure_sheaf(1, 2)) == PolyPair(_poly(0, 2), _poly(0, 2))
    (t1,) = polys(SuperRing.B(1, 1), "th1")
    assert super_hilbert_polynomial(BModulePresentation.quotient(1, 1, [t1])) == PolyPair(_poly(1, 1), _poly())
    zero = BModulePresentation(1, 1, ())
    assert super_hilbert_polynomial(zero) == PolyPair.zero()


def test_total_filtration_of_free_algebra():
    from math import comb

    for m, n in ((1, 2), (2, 3), (0, 2)):
        F = total_filtration(BModulePresentation.structure_sheaf(m, n))
        assert len(F) == n + 1
        for p in range(n + 1):
            Q = F[p]
            assert Q.relations == ()
            assert Q.generators == ((p, ODD if p % 2 else EVEN),) * comb(n, p)
            assert F.parity_shift(p) == (ODD if p % 2 else EVEN)


def test_total_filtration_examples():
    (t1,) = polys(SuperRing.B(1, 1), "th1")
    F = total_filtration(BModulePresentation.quotient(1, 1, [t1]))
    assert all(hilbert_function(F[0], r) == DimPair(r + 1, 0) for r in range(5))
    assert all(hilbert_function(F[1], r) == DimPair(0, 0) for r in range(5))
    F = total_filtration(BModulePresentation.structure_sheaf(2, 0))
    assert len(F) == 1
    assert F[0].generators == ((0, EVEN),)


@pytest.mark.parametrize("label,P", module_corpus())
def test_filtration_additivity(label, P):
    M = expand_module(P)
    F = total_filtration(P)
    for r in range(0, 6):
        total = DimPair(0, 0)
        for Q in F.quotients:
            total = total + hilbert_function(Q, r)
        assert total == hilbert_function(M, r)


@pytest.mark.parametrize("label,P", module_corpus())
def test_two_routes_agree(label, P):
    assert super_hilbert_polynomial(P) == hilbert_polynomial_pair(expand_module(P))[0]


@pytest.mark.parametrize("label,P", module_corpus())
def test_euler_characteristic_is_polynomial(label, P):
    M = expand_module(P)
    pair, _ = hilbert_polynomial_pair(M)
    for r in range(-6, 7):
        assert euler_characteristic(M, r) == pair(r)


def test_euler_examples():
    O12 = expand_module(BModulePresentation.structure_sheaf(1, 2))
    O11 = expand_module(BModulePresentation.structure_sheaf(1, 1))
    assert euler_characteristic(O12, 0) == DimPair(0, 0)
    assert euler_characteristic(O11, -1) == DimPair(0, -1)
    for m, n in ((1, 2), (2, 1), (2, 3)):
        M = expand_module(BModulePresentation.structure_sheaf(m, n))
        for r in range(n - 1, n + 3):
            assert euler_characteristic(M, r) == h_mn(m, n, r)


def test_grassmann_and_flag_dims():
    assert supergrass_dim(1, 0, 1, 0) == DimPair(1, 0)
    assert supergrass_dim(1, 1, 1, 1) == DimPair(2, 2)
    assert supergrass_dim(3, 2, 0, 0) == DimPair(0, 0)
    assert flag_fibre_dim(1, 1) == DimPair(0, 1)
    assert flag_fibre_dim(4, 0) == DimPair(0, 0)
    assert flag_fibre_dim(2, 3) == DimPair(0, 6)
    with pytest.raises(ValueError):
        supergrass_dim(-1, 0, 0, 0)


pairs = st.builds(DimPair, st.integers(0, 4), st.integers(0, 4))


def test_dimpair_order_examples():
    assert not DimPair(1, 0) < DimPair(1, 0)
    assert not DimPair(1, 0).comparable(DimPair(0, 1))
    assert DimPair(1, 1) > DimPair(1, 0)
    assert DimPair(0, 0) < DimPair(0, 1)


@given(pairs, pairs, pairs)
def test_dimpair_order_axioms(a, b, c):
    assert not a < a
    if a < b and b < c:
        assert a < c
    if a < b:
        assert not b < a
    assert (a < b) == (a != b and a.even <= b.even and a.odd <= b.odd)
