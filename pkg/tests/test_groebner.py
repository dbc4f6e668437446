import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from supergeom import (
    EVEN,
    ODD,
    BModulePresentation,
    GradedSModule,
    SuperRing,
    betti_table,
    expand_module,
    free_resolution,
    groebner_basis,
    hilbert_function,
    polys,
    saturate,
)
from supergeom.errors import PreconditionError
from supergeom.groebner import (
    LEX,
    Resolution,
    compose_is_zero,
    exactness_defects,
    normal_form,
    s_vectors_reduce_to_zero,
)

X = sympy.symbols("x0 x1 x2")


def vec(poly_terms):
    """{mono: c} -> submodule vector at position 0."""
    return {(0, tuple(m)): Fraction(c) for m, c in poly_terms.items()}


def to_sympy(v, nvars):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([X[i] ** e for i, e in enumerate(mono)])
               for (_, mono), c in v.items())


def monic_set(polys_, nvars):
    return {sympy.Poly(p, *X[:nvars]).monic().as_expr() for p in polys_}


def ideal(*gens):
    return [vec(g) for g in gens]


def test_linear_generators_are_a_basis():
    G = groebner_basis(ideal({(1, 0): 1}, {(0, 1): 1}), 2)
    assert sorted(G.lead_monomials(0)) == [(0, 1), (1, 0)]
    assert len(G) == 2


def test_example_contains_x1_cubed():
    gens = ideal({(2, 0): 1}, {(1, 1): 1, (0, 2): 1})
    G = groebner_basis(gens, 2)
    assert (0, 3) in G.lead_monomials(0)
    assert not normal_form(vec({(0, 3): 1}), G)
    ref = sympy.groebner([to_sympy(g, 2) for g in gens], *X[:2], order="grevlex")
    assert monic_set([to_sympy(g, 2) for g in G], 2) == monic_set(ref.exprs, 2)


def test_zero_ideal():
    assert len(groebner_basis([], 2)) == 0
    assert len(groebner_basis([{}], 2)) == 0


def test_normal_form_examples():
    G = groebner_basis(ideal({(1, 0): 1}), 2)
    assert normal_form(vec({(2, 0): 1}), G) == {}
    assert normal_form(vec({(1, 1): 1, (0, 2): 1}), G) == vec({(0, 2): 1})


def _random_ideal(rng, nvars, k, deg):
    gens = []
    for _ in range(k):
        d = rng.randint(1, deg)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exps = [0] * nvars
            for _ in range(d):
                exps[rng.randrange(nvars)] += 1
            terms[tuple(exps)] = rng.randint(-3, 3) or 1
        gens.append(vec(terms))
    return gens


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 100_000))
def test_groebner_against_sympy(seed):
    rng = random.Random(seed)
    nvars = rng.choice([2, 3])
    gens = _random_ideal(rng, nvars, rng.randint(1, 3), 3)
    G = groebner_basis(gens, nvars)
    assert s_vectors_reduce_to_zero(G)
    exprs = [to_sympy(g, nvars) for g in gens if g]
    ref = sympy.groebner(exprs, *X[:nvars], order="grevlex")
    assert monic_set([to_sympy(g, nvars) for g in G], nvars) == monic_set(ref.exprs, nvars)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 100_000))
def test_normal_form_idempotent_and_in_coset(seed):
    rng = random.Random(seed)
    gens = _random_ideal(rng, 3, 2, 3)
    G = groebner_basis(gens, 3)
    f = _random_ideal(rng, 3, 1, 4)[0]
    r = normal_form(f, G)
    assert normal_form(r, G) == r
    diff = {k: f.get(k, 0) - r.get(k, 0) for k in set(f) | set(r)}
    assert G.contains({k: v for k, v in diff.items() if v})
    for term in r:
        assert G.is_standard(term)


def test_lex_order_groebner():
    # x0 - x1^2, x1 - x2^3 under lex eliminates down to x1 - x2^3 and x0 - x2^6
    gens = ideal({(1, 0, 0): 1, (0, 2, 0): -1}, {(0, 1, 0): 1, (0, 0, 3): -1})
    G = groebner_basis(gens, 3, LEX)
    assert G.contains(vec({(1, 0, 0): 1, (0, 0, 6): -1}))
    ref = sympy.groebner([to_sympy(g, 3) for g in gens], *X, order="lex")
    assert monic_set([to_sympy(g, 3) for g in G], 3) == monic_set(ref.exprs, 3)


def quotient(m, *gens):
    return GradedSModule.create(m, [(0, EVEN)], [vec(g) for g in gens])


def hf(M, r):
    return hilbert_function(M, r).total


def test_saturation_of_finite_length_is_zero():
    M = quotient(1, {(2, 0): 1}, {(1, 1): 1}, {(0, 2): 1})
    assert all(hf(saturate(M), r) == 0 for r in range(-2, 6))


def test_saturation_keeps_saturated_modules():
    F = GradedSModule.free(1, [(0, EVEN), (1, ODD)])
    Fs = saturate(F)
    for r in range(-1, 6):
        assert hilbert_function(Fs, r) == hilbert_function(F, r)
    M = quotient(1, {(1, 0): 1})
    Ms = saturate(M)
    assert all(hf(Ms, r) == 1 for r in range(0, 6))


def test_saturation_removes_embedded_point():
    # (x0^2, x0 x1) = (x0) cap (x0^2, x1): saturation is (x0)
    M = quotient(1, {(2, 0): 1}, {(1, 1): 1})
    Ms = saturate(M)
    assert [hf(Ms, r) for r in range(5)] == [1, 1, 1, 1, 1]
    assert [hf(M, r) for r in range(3)] == [1, 2, 1]


def test_koszul_resolution():
    M = quotient(1, {(1, 0): 1}, {(0, 1): 1})
    R = free_resolution(M)
    assert [len(t) for t in R.terms] == [1, 2, 1]
    assert [sorted(d for d, _ in t) for t in R.terms] == [[0], [1, 1], [2]]
    assert compose_is_zero(R)
    bt = betti_table(R)
    assert bt[0, 0, EVEN] == 1 and bt[1, 1, EVEN] == 2 and bt[2, 2, EVEN] == 1
    assert sum(bt.entries.values()) == 4


def test_free_module_resolution():
    R = free_resolution(GradedSModule.free(2, [(0, EVEN), (3, ODD)]))
    assert R.length == 0
    R = free_resolution(quotient(1, {(2, 0): 1}))
    assert [[d for d, _ in t] for t in R.terms] == [[0], [2]]


def test_betti_of_expanded_free_module():
    bt = betti_table(free_resolution(expand_module(BModulePresentation.structure_sheaf(1, 2))))
    assert bt.entries == {(0, 0, EVEN): 1, (0, 1, ODD): 2, (0, 2, EVEN): 1}


def test_betti_of_zero_module():
    assert betti_table(free_resolution(GradedSModule.zero(1))).entries == {}


def test_non_minimal_rejected():
    R = Resolution(1, (((0, EVEN),),), ((),), minimal=False)
    with pytest.raises(PreconditionError):
        betti_table(R)


def _corpus():
    yield quotient(2, {(1, 0, 0): 1}, {(0, 1, 0): 1}, {(0, 0, 1): 1})
    yield quotient(2, {(2, 0, 0): 1, (0, 1, 1): -1}, {(0, 3, 0): 1})
    yield quotient(1, {(3, 0): 1}, {(1, 2): 1})
    yield GradedSModule.create(
        2, [(0, EVEN), (1, ODD), (1, ODD)],
        [{(1, (1, 0, 0)): 1, (2, (0, 1, 0)): 1}, {(0, (2, 0, 0)): 1}],
    )
    x0, x1, t1, t2 = polys(SuperRing.B(1, 2), "x0 x1 th1 th2")
    yield expand_module(BModulePresentation.quotient(1, 2, [x0 * t1 - x1 * t2, x1 ** 2]))


@pytest.mark.parametrize("M", list(_corpus()))
def test_resolution_exact_and_minimal(M):
    R = free_resolution(M)
    assert R.length <= M.m + 1
    assert compose_is_zero(R)
    top = max((d for t in R.terms for d, _ in t), default=0)
    assert exactness_defects(R, range(0, top + 4)) == []
    for i in range(1, len(R.terms)):
        for col in R.maps[i]:
            # minimality: no unit entries
            assert all(sum(mono) > 0 for (_, mono), _ in col)


@pytest.mark.parametrize("M", list(_corpus()))
def test_hilbert_series_consistency(M):
    R = free_resolution(M)
    for d in range(0, 9):
        for par in (EVEN, ODD):
            alt = sum((-1) ** i * comb(M.m + d - a, M.m)
                      for i, t in enumerate(R.terms) for a, p in t if p == par and d - a >= 0)
            assert alt == hilbert_function(M, d).component(par)
