"""Parity-refined Hilbert functions and polynomials, Euler characteristics,
and dimension formulas for supergrassmannians and flags."""

from __future__ import annotations

from dataclasses import dataclass

from .dims import DimPair, PolyPair, QPoly, binom
from .expansion import BModulePresentation, GradedSModule, expand_module, generator_theta_layers
from .groebner import (
    DEGREVLEX,
    betti_table,
    free_resolution,
    groebner_basis,
    standard_monomial_count,
)
from .superalgebra import EVEN, ODD, Parity


def h_mn(m: int, n: int, r: int) -> DimPair:
    """Parity-split count of monomials of degree r in B(m, n)."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    even = odd = 0
    for p in range(0, n + 1):
        s = r - p
        if s < 0:
            continue
        term = binom(m + s, m) * binom(n, p)
        if p % 2:
            odd += term
        else:
            even += term
    return DimPair(even, odd)


def hilbert_function(M: GradedSModule, r: int) -> DimPair:
    """Dimensions of the degree-r even and odd pieces of M (standard monomials)."""
    if M.rank == 0:
        return DimPair(0, 0)
    return DimPair(standard_monomial_count(M, r, EVEN), standard_monomial_count(M, r, ODD))


def _alternating_binomial_sum(M: GradedSModule) -> tuple[PolyPair, int]:
    R = free_resolution(M)
    plus, minus = QPoly(), QPoly()
    top = None
    for i, level in enumerate(R.terms):
        for a, p in level:
            term = QPoly.binomial(M.m, a) * (-1 if i % 2 else 1)
            if p == EVEN:
                plus = plus + term
            else:
                minus = minus + term
            top = a if top is None else max(top, a)
    if top is None:
        return PolyPair.zero(), 0
    reg = betti_table(R).max_shift()
    # binomials agree with dim S_{r-a} once r - a >= -m; H^0_m vanishes above reg
    r0 = max(top - M.m, reg + 1)
    return PolyPair(plus, minus), r0


def hilbert_polynomial_pair(M: GradedSModule) -> tuple[PolyPair, int]:
    """(H_+, H_-) and a bound r0 with HF(saturate(M), r) = H(r) for all r >= r0."""
    return _alternating_binomial_sum(M)


@dataclass(frozen=True)
class FiltrationQuotients:
    """Quotients M^(p) = I^p M / I^{p+1} M of the theta-adic filtration.

    ``quotients[p]`` is an S-module whose generators already carry their
    true parity (that of the B-generator shifted by p).
    """

    quotients: tuple[GradedSModule, ...]

    def parity_shift(self, p: int) -> Parity:
        return Parity.of(p)

    def __len__(self):
        return len(self.quotients)

    def __getitem__(self, p: int) -> GradedSModule:
        return self.quotients[p]


def total_filtration(P: BModulePresentation) -> FiltrationQuotients:
    """Filtration quotients by powers of the ideal generated by the odd variables.

    The expanded generators are reordered by theta-degree so that a
    position-over-term Groebner basis eliminates low layers first; the basis
    elements led in layer p, projected to layer p, present M^(p).
    """
    E = expand_module(P)
    layers = generator_theta_layers(P)
    order = sorted(range(E.rank), key=lambda j: (layers[j], j))
    new_index = {old: new for new, old in enumerate(order)}
    gens = [E.generators[j] for j in order]
    rels = [{(new_index[j], mono): c for (j, mono), c in rel} for rel in E.relations]
    shifts = [d for d, _ in gens]
    G = groebner_basis(rels, E.nvars, DEGREVLEX, shifts)
    sorted_layers = [layers[j] for j in order]
    quotients = []
    for p in range(P.n + 1):
        block = [i for i, lay in enumerate(sorted_layers) if lay == p]
        if not block:
            quotients.append(GradedSModule.zero(P.m))
            continue
        local = {i: k for k, i in enumerate(block)}
        qrels = []
        for g, (pos, _) in zip(G.elements, G.leads):
            if pos in local:
                proj = {(local[q], mono): c for (q, mono), c in g.items() if q in local}
                qrels.append(proj)
        quotients.append(GradedSModule.create(P.m, [gens[i] for i in block], qrels))
    return FiltrationQuotients(tuple(quotients))


def super_hilbert_polynomial(P: BModulePresentation) -> PolyPair:
    """Sum over the filtration quotients of the Hilbert polynomials of their parity parts."""
    total = PolyPair.zero()
    for Q in total_filtration(P).quotients:
        if Q.rank:
            total = total + hilbert_polynomial_pair(Q)[0]
    return total


def euler_characteristic(M: GradedSModule, r: int) -> DimPair:
    """sum_i (-1)^i dim H^i of the sheaf of M twisted by r, split by parity."""
    from .cohomology import sheaf_cohomology

    chi = DimPair(0, 0)
    for i in range(M.m + 1):
        h = sheaf_cohomology(M, r, i)
        chi = chi - h if i % 2 else chi + h
    return chi


def supergrass_dim(c: int, d: int, p: int, q: int) -> DimPair:
    """Relative dimension of the supergrassmannian of rank (p,q) quotients of a rank (c+p, d+q) bundle."""
    if min(c, d, p, q) < 0:
        raise ValueError("ranks must be nonnegative")
    return DimPair(c * p + d * q, c * q + d * p)


def flag_fibre_dim(a: int, b: int) -> DimPair:
    """Fibre dimension (0, ab) of SFlag((a,0),(a,b); E) -> SGrass((a,b), E)."""
    if a < 0 or b < 0:
        raise ValueError("ranks must be nonnegative")
    return DimPair(0, a * b)
