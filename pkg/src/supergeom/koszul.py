"""Super Koszul complexes of mixed even/odd sequences in B(m, n).

For even a_1..a_p and odd eta_1..eta_q the complex is B[xi_1..xi_p, t_1..t_q]
with xi_i odd (exterior directions) and t_j even (polynomial directions),
differential d = sum a_i d/dxi_i + sum eta_j d/dt_j.  Everything is
computed inside one larger SuperRing whose odd variables list the thetas
before the xis, so a monomial factors as (B-part) * (Koszul part) with no
sign.  Internal degree gives xi_i the weight deg a_i and t_j the weight
deg eta_j, which makes every graded piece finite-dimensional.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .dims import DimPair
from .errors import HomogeneityError, LimitError, ParityError, PreconditionError, RingMismatchError
from .groebner import monomials_of_degree
from .linalg import Echelon
from .superalgebra import EVEN, ODD, Parity, SuperMatrix, SuperPoly, SuperRing, berezinian

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


@lru_cache(maxsize=None)
def b_monomials(m: int, n: int, d: int) -> tuple[Monomial, ...]:
    """Monomials of degree d in B(m, n)."""
    out = []
    for k in range(0, min(n, d) + 1 if d >= 0 else 0):
        for alpha in itertools.combinations(range(1, n + 1), k):
            for e in monomials_of_degree(m + 1, d - k):
                out.append((e, alpha))
    return tuple(out)


def _weight(f: SuperPoly) -> int:
    if not f:
        raise PreconditionError("zero element in a Koszul sequence")
    if not f.is_homogeneous():
        raise HomogeneityError(f"{f} is not homogeneous")
    return f.degree()


@dataclass
class KoszulComplex:
    """Koszul complex with homological degrees materialised up to ``window``."""

    ring: SuperRing
    evens: tuple[SuperPoly, ...]
    odds: tuple[SuperPoly, ...]
    window: int
    ext: SuperRing = field(init=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        R = self.ring
        self.m, self.n = R.n_even - 1, R.n_odd
        self.p, self.q = len(self.evens), len(self.odds)
        self.xi_weights = tuple(_weight(a) for a in self.evens)
        self.t_weights = tuple(_weight(e) for e in self.odds)
        self.ext = SuperRing(
            R.n_even + self.q,
            R.n_odd + self.p,
            R.even_names + tuple(f"t{j}" for j in range(1, self.q + 1)),
            R.odd_names + tuple(f"xi{i}" for i in range(1, self.p + 1)),
        )
        emb = lambda f: f.substitute_ring(self.ext, list(range(R.n_even)), list(range(1, R.n_odd + 1)))
        self._a = [emb(a) for a in self.evens]
        self._eta = [emb(e) for e in self.odds]

    # -- gradings -------------------------------------------------------------
    @property
    def max_internal_degree(self) -> int:
        return self.window + max(self.xi_weights + self.t_weights, default=0)

    def split(self, mono: Monomial):
        """(B-monomial, xi subset, t exponents) of an extended monomial."""
        even, odd = mono
        nb = self.m + 1
        bodd = tuple(j for j in odd if j <= self.n)
        S = tuple(j - self.n for j in odd if j > self.n)
        return (even[:nb], bodd), S, even[nb:]

    def homological_degree(self, mono: Monomial) -> int:
        _, S, beta = self.split(mono)
        return len(S) + sum(beta)

    def internal_degree(self, mono: Monomial) -> int:
        b, S, beta = self.split(mono)
        return (
            sum(b[0]) + len(b[1])
            + sum(self.xi_weights[i - 1] for i in S)
            + sum(k * w for k, w in zip(beta, self.t_weights))
        )

    def generators(self, h: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Free B-basis of K_h: (xi subset, t exponents, weight)."""
        if h < 0:
            return []
        out = []
        for s in range(0, min(self.p, h) + 1):
            for S in itertools.combinations(range(1, self.p + 1), s):
                for beta in monomials_of_degree(self.q, h - s):
                    w = sum(self.xi_weights[i - 1] for i in S) + sum(k * x for k, x in zip(beta, self.t_weights))
                    out.append((S, beta, w))
        return out

    def pure(self, S, beta) -> Monomial:
        return ((0,) * (self.m + 1) + tuple(beta), tuple(self.n + i for i in S))

    def basis(self, h: int, e: int) -> list[Monomial]:
        """k-basis of the internal degree e part of K_h (extended monomials)."""
        key = ("basis", h, e)
        if key not in self._cache:
            if h > self.window + 1:
                raise LimitError(f"homological degree {h} beyond window {self.window}")
            out = []
            for S, beta, w in self.generators(h):
                for be, bo in b_monomials(self.m, self.n, e - w):
                    out.append((be + tuple(beta), bo + tuple(self.n + i for i in S)))
            self._cache[key] = out
        return self._cache[key]

    # -- differential -----------------------------------------------------------
    def d(self, f: SuperPoly) -> SuperPoly:
        out = SuperPoly.zero(self.ext)
        for i, a in enumerate(self._a):
            out = out + a * f.partial(("odd", self.n + i + 1))
        for j, eta in enumerate(self._eta):
            out = out + eta * f.partial(("even", self.m + 1 + j))
        return out

    def d_monomial(self, mono: Monomial) -> SuperPoly:
        key = ("d", mono)
        if key not in self._cache:
            self._cache[key] = self.d(SuperPoly(self.ext, {mono: 1}))
        return self._cache[key]

    def differential_rank(self, h: int, e: int, parity: Parity) -> int:
        """Rank of d: K_{h,e} -> K_{h-1,e} restricted to the given source parity."""
        if h <= 0:
            return 0
        key = ("rank", h, e, parity)
        if key not in self._cache:
            ech = Echelon()
            index: dict = {}
            for mono in self.basis(h, e):
                if Parity.of(len(mono[1])) != parity:
                    continue
                img = self.d_monomial(mono)
                ech.add({index.setdefault(t, len(index)): c for t, c in img.items()})
            self._cache[key] = ech.rank
        return self._cache[key]

    def squares_to_zero(self, h: int, e: int) -> bool:
        for mono in self.basis(h, e):
            if self.d(self.d_monomial(mono)):
                return False
        return True

    def homology(self, h: int, e: int) -> DimPair:
        vals = []
        for par in (EVEN, ODD):
            size = sum(1 for mono in self.basis(h, e) if Parity.of(len(mono[1])) == par)
            vals.append(size - self.differential_rank(h, e, par) - self.differential_rank(h + 1, e, par + 1))
        return DimPair(*vals)

    # -- dual complex -----------------------------------------------------------
    def coefficient_matrix(self, h: int) -> dict:
        """G[b][b''] for pure basis elements b of K_h, b'' of K_{h-1}: d(b) = sum G b''."""
        key = ("G", h)
        if key not in self._cache:
            R = self.ring
            G = {}
            for S, beta, _ in self.generators(h):
                b = self.pure(S, beta)
                row: dict = {}
                for mono, c in self.d_monomial(b).items():
                    bm, S2, beta2 = self.split(mono)
                    target = (S2, tuple(beta2))
                    row.setdefault(target, {})
                    row[target][bm] = row[target].get(bm, 0) + c
                G[(S, tuple(beta))] = {t: SuperPoly(R, v) for t, v in row.items()}
            self._cache[key] = G
        return self._cache[key]

    def cochain_basis(self, h: int, e: int, parity: Parity | None = None) -> list:
        """Cochains 'mu at b' of cohomological degree h and internal degree e."""
        out = []
        for S, beta, w in self.generators(h):
            for mu in b_monomials(self.m, self.n, e + w):
                par = Parity.of(len(mu[1]) + len(S))
                if parity is None or par == parity:
                    out.append(((S, tuple(beta)), mu))
        return out

    def coboundary(self, h: int, cochain: dict) -> dict:
        """delta(phi) = phi o d, for phi a dict {(b, mu): c} of degree h."""
        G = self.coefficient_matrix(h + 1)
        out: dict = {}
        for (b2, mu), c in cochain.items():
            phi_par = len(mu[1]) + len(b2[0])
            mu_poly = SuperPoly(self.ring, {mu: c})
            for b, row in G.items():
                g = row.get(b2)
                if g is None:
                    continue
                sign = -1 if (phi_par * int(g.parity)) % 2 else 1
                for mono, v in (g * mu_poly).items():
                    k = (b, mono)
                    s = out.get(k, 0) + sign * v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def coboundary_rows(self, h: int, e: int, parity: Parity) -> list[dict]:
        return [self.coboundary(h, {t: Fraction(1)}) for t in self.cochain_basis(h, e, parity)]

    def cohomology(self, h: int, e: int) -> DimPair:
        vals = []
        for par in (EVEN, ODD):
            size = len(self.cochain_basis(h, e, par))
            vals.append(size - self._cob_rank(h, e, par) - self._cob_rank(h - 1, e, par + 1))
        return DimPair(*vals)

    def _cob_rank(self, h: int, e: int, parity: Parity) -> int:
        if h < 0:
            return 0
        key = ("cob", h, e, parity)
        if key not in self._cache:
            ech = Echelon()
            index: dict = {}
            for row in self.coboundary_rows(h, e, parity):
                ech.add({index.setdefault(t, len(index)): c for t, c in row.items()})
            self._cache[key] = ech.rank
        return self._cache[key]

    def top_class(self) -> dict:
        """(eta_1 ... eta_q) at xi_1...xi_p, a cocycle of degree p."""
        prod = SuperPoly.one(self.ring)
        for eta in self.odds:
            prod = prod * eta
        b = (tuple(range(1, self.p + 1)), (0,) * self.q)
        return {(b, mu): c for mu, c in prod.items()}

    @property
    def top_class_degree(self) -> int:
        return sum(self.t_weights) - sum(self.xi_weights)

    @property
    def top_class_parity(self) -> Parity:
        return Parity.of(self.p + self.q)


def koszul_complex(evens: Sequence[SuperPoly], odds: Sequence[SuperPoly], window: int) -> KoszulComplex:
    elems = list(evens) + list(odds)
    if not elems:
        raise PreconditionError("cannot infer the ring of an empty sequence; use koszul_complex_in")
    return koszul_complex_in(elems[0].ring, evens, odds, window)


def koszul_complex_in(ring: SuperRing, evens: Sequence[SuperPoly], odds: Sequence[SuperPoly], window: int) -> KoszulComplex:
    for f in list(evens) + list(odds):
        if f.ring != ring:
            raise RingMismatchError("sequence elements must lie in one ring")
    for a in evens:
        if a.parity != EVEN or not a.is_parity_homogeneous():
            raise ParityError(f"{a} is not even")
    for eta in odds:
        if not eta or eta.parity != ODD or not eta.is_parity_homogeneous():
            raise ParityError(f"{eta} is not odd")
    if window < 0:
        raise PreconditionError("window must be nonnegative")
    return KoszulComplex(ring, tuple(evens), tuple(odds), window)


def koszul_homology(K: KoszulComplex, degrees: Sequence[int]) -> dict[int, list[DimPair]]:
    """{e: [H_0, ..., H_{window-1}] in internal degree e}."""
    out = {}
    for e in degrees:
        if e > K.max_internal_degree:
            raise LimitError(f"internal degree {e} exceeds the reliable range {K.max_internal_degree}")
        out[e] = [K.homology(h, e) for h in range(K.window)]
    return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    window: int
    failed_at: tuple[int, int] | None = None  # (homological degree, internal degree)

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"verified-to-degree-{self.window}"
        return f"failed-at{self.failed_at}"


def regular_sequence_check(evens, odds, window: int, ring: SuperRing | None = None) -> Verdict:
    """H_i = 0 for i >= 1 in every internal degree <= window."""
    if ring is None:
        ring = (list(evens) + list(odds))[0].ring
    K = koszul_complex_in(ring, evens, odds, window + len(evens) + 2)
    slack = sum(1 for w in K.xi_weights if w == 0)
    for e in range(0, window + 1):
        for h in range(1, e + slack + 1):
            if K.homology(h, e):
                return Verdict(False, window, (h, e))
    return Verdict(True, window)


@dataclass(frozen=True)
class DualReport:
    ok: bool
    p: int
    cohomology: dict  # (h, e) -> DimPair
    class_degree: int
    class_parity: Parity


def dual_concentration_check(evens, odds, window: int, ring: SuperRing | None = None, spread: int = 1) -> DualReport:
    """Cohomology of Hom(K, B) vanishes off degree p, and is B/I shifted onto the top class at p.

    Checked for cohomological degrees 0..window and internal degrees within
    ``spread`` of the degree of the top class.
    """
    if ring is None:
        ring = (list(evens) + list(odds))[0].ring
    reg = regular_sequence_check(evens, odds, max(window, len(evens) + len(odds)), ring)
    if not reg:
        raise PreconditionError(f"sequence is not regular: Koszul homology {reg}")
    K = koszul_complex_in(ring, evens, odds, window + 1)
    e0, par0 = K.top_class_degree, K.top_class_parity
    coh = {}
    ok = True
    for e in range(e0 - spread, e0 + spread + 1):
        for h in range(0, window + 1):
            H = K.cohomology(h, e)
            coh[(h, e)] = H
            if h != K.p and H:
                ok = False
            if h == K.p:
                quotient = K.homology(0, e - e0) if e - e0 >= 0 else DimPair(0, 0)
                if H != quotient.shifted(par0):
                    ok = False
    return DualReport(ok, K.p, coh, e0, par0)


def _apply_linear_change(K2: KoszulComplex, A_even, A_odd, mono_pure) -> SuperPoly:
    """psi(b') in K(f) for a pure basis element b' of K(f'), psi(xi'_i) = sum A_e[i][k] xi_k."""
    ext = K2.ext
    _, S, beta = K2.split(mono_pure)
    out = SuperPoly.one(ext)
    for i in S:
        lin = SuperPoly.zero(ext)
        for k, c in enumerate(A_even[i - 1]):
            lin = lin + SuperPoly.monomial(ext, (), (K2.n + k + 1,), c)
        out = out * lin
    for j, power in enumerate(beta):
        lin = SuperPoly.zero(ext)
        for l, c in enumerate(A_odd[j]):
            exps = [0] * ext.n_even
            exps[K2.m + 1 + l] = 1
            lin = lin + SuperPoly.monomial(ext, exps, (), c)
        out = out * (lin ** power)
    return out


def berezinian_transform_scalar(evens, odds, A_even, A_odd, ring: SuperRing | None = None) -> Fraction:
    """Scalar lambda with psi*(omega_f) = lambda * omega_{A f} in top cohomology.

    ``A_even`` (p x p) and ``A_odd`` (q x q) are constant invertible
    matrices; f' = (A_even a, A_odd eta).  Expected value: Ber(A).
    """
    if ring is None:
        ring = (list(evens) + list(odds))[0].ring
    p = len(evens)
    A_even = [[Fraction(c) for c in row] for row in A_even]
    A_odd = [[Fraction(c) for c in row] for row in A_odd]
    new_evens = [sum((a * c for a, c in zip(evens, row)), SuperPoly.zero(ring)) for row in A_even]
    new_odds = [sum((e * c for e, c in zip(odds, row)), SuperPoly.zero(ring)) for row in A_odd]
    K1 = koszul_complex_in(ring, evens, odds, p + 1)
    K2 = koszul_complex_in(ring, new_evens, new_odds, p + 1)
    omega1 = K1.top_class()
    omega2 = K2.top_class()
    # pull omega_f back along psi: (omega o psi)(b') = sum_b coeff(psi(b'), b) omega(b)
    pulled: dict = {}
    for S, beta, _ in K2.generators(p):
        b2 = K2.pure(S, beta)
        for mono, c in _apply_linear_change(K2, A_even, A_odd, b2).items():
            _, S1, beta1 = K1.split(mono)
            for ((bS, bbeta), mu), v in omega1.items():
                if bS == S1 and bbeta == tuple(beta1):
                    key = ((S, tuple(beta)), mu)
                    pulled[key] = pulled.get(key, 0) + c * v
    pulled = {k: v for k, v in pulled.items() if v}
    for cocycle in (pulled, omega2):
        if K2.coboundary(p, cocycle):
            raise ArithmeticError("top class is not a cocycle")
    e0, par = K2.top_class_degree, K2.top_class_parity
    ech = Echelon()
    index: dict = {}
    for row in K2.coboundary_rows(p - 1, e0, par + 1) if p else []:
        ech.add({index.setdefault(t, len(index)): c for t, c in row.items()})
    r1 = ech.reduce({index.setdefault(t, len(index)): c for t, c in pulled.items()})
    r2 = ech.reduce({index.setdefault(t, len(index)): c for t, c in omega2.items()})
    if not r2:
        raise ArithmeticError("top class is a coboundary")
    col = min(r2)
    lam = r1.get(col, Fraction(0)) / r2[col]
    residue = {k: r1.get(k, 0) - lam * r2.get(k, 0) for k in set(r1) | set(r2)}
    if any(residue.values()):
        raise ArithmeticError("pulled-back class is not proportional to the top class")
    return lam


def constant_berezinian(A_even, A_odd) -> Fraction:
    """Ber of the block-diagonal scalar supermatrix diag(A_even, A_odd)."""
    G = SuperRing.grassmann(0)
    p, q = len(A_even), len(A_odd)
    zero = SuperPoly.zero(G)
    M = SuperMatrix.from_blocks(
        [[SuperPoly.const(G, c) for c in row] for row in A_even],
        [[zero] * q for _ in range(p)],
        [[zero] * p for _ in range(q)],
        [[SuperPoly.const(G, c) for c in row] for row in A_odd],
        G,
    )
    return berezinian(M).constant_term()
