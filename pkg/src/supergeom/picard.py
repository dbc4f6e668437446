"""Computable pieces of the Picard theory of superschemes.

* factorisation of even units of a tagged Grassmann algebra as x0 * exp(x1);
* odd dimension of the Picard superscheme for split data on P^m;
* the two-component parity structure of Pic;
* nested 0-cycles I0 in I1 of k[u, v] and a count of monomial pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import LimitError, ParityError, PreconditionError, SingularBlockError
from .expansion import GradedSModule
from .groebner import DEGREVLEX, groebner_basis
from .superalgebra import EVEN, ODD, SuperPoly, SuperRing

GEOMETRIC = "geometric"
BASE = "base"


class GrassmannAlgebra:
    """Exterior algebra over Q whose generators are tagged geometric or base.

    An even element splits as f0 + f1 where f0 collects monomials with an
    even number of geometric generators and f1 those with an odd number.
    """

    def __init__(self, names: Sequence[str], tags: Sequence[str]):
        if len(names) != len(tags):
            raise ValueError("one tag per generator")
        for t in tags:
            if t not in (GEOMETRIC, BASE):
                raise ValueError(f"unknown tag {t!r}")
        self.names = tuple(names)
        self.tags = tuple(tags)
        self.ring = SuperRing.grassmann(len(names), names)

    @classmethod
    def split(cls, n_geometric: int, n_base: int, geo: str = "th", base: str = "eta") -> "GrassmannAlgebra":
        names = [f"{geo}{i}" for i in range(1, n_geometric + 1)] + [f"{base}{j}" for j in range(1, n_base + 1)]
        return cls(names, [GEOMETRIC] * n_geometric + [BASE] * n_base)

    def gen(self, name: str) -> SuperPoly:
        return SuperPoly.var(self.ring, name)

    def const(self, c) -> SuperPoly:
        return SuperPoly.const(self.ring, c)

    def geometric_count(self, odd_support) -> int:
        return sum(1 for j in odd_support if self.tags[j - 1] == GEOMETRIC)

    def blocks(self, f: SuperPoly) -> tuple[SuperPoly, SuperPoly]:
        """(f0, f1) for an even element f."""
        if f.ring != self.ring:
            raise PreconditionError("element does not belong to this algebra")
        if f.parity != EVEN or not f.is_parity_homogeneous():
            raise ParityError(f"{f} is not even")
        f0, f1 = {}, {}
        for mono, c in f.items():
            (f1 if self.geometric_count(mono[1]) % 2 else f0)[mono] = c
        return SuperPoly(self.ring, f0), SuperPoly(self.ring, f1)

    def __repr__(self):
        return f"GrassmannAlgebra({', '.join(f'{n}:{t[0]}' for n, t in zip(self.names, self.tags))})"


def _power_series(x: SuperPoly, coeff, start: int, step: int, limit: int) -> SuperPoly:
    """sum_{k = start, start+step, ...} coeff(k) x^k, stopping once x^k vanishes."""
    out = SuperPoly.zero(x.ring)
    power = x ** start
    k = start
    x_step = x ** step
    while power:
        if k > limit:
            raise LimitError(f"series did not terminate by order {limit}")
        out = out + power * coeff(k)
        power = power * x_step
        k += step
    return out


def _nilpotency_limit(x: SuperPoly, N: int | None) -> int:
    return N if N is not None else x.ring.n_odd + 1


def _check_nilpotent_even(x: SuperPoly):
    if x.parity != EVEN or not x.is_parity_homogeneous():
        raise ParityError(f"{x} is not even")
    if x.constant_term() or not x.is_nilpotent():
        raise PreconditionError(f"{x} is not nilpotent")


def exp_even_nilpotent(x: SuperPoly, N: int | None = None) -> SuperPoly:
    """Truncated exponential of an even nilpotent element."""
    _check_nilpotent_even(x)
    return _power_series(x, lambda k: Fraction(1, factorial(k)), 0, 1, _nilpotency_limit(x, N))


def log_unipotent(u: SuperPoly, N: int | None = None) -> SuperPoly:
    """Inverse of :func:`exp_even_nilpotent` on units with constant term 1."""
    y = u - 1
    _check_nilpotent_even(y)
    return _power_series(y, lambda k: Fraction((-1) ** (k + 1), k), 1, 1, _nilpotency_limit(y, N))


def cosh_nilpotent(x: SuperPoly, N: int | None = None) -> SuperPoly:
    return _power_series(x, lambda k: Fraction(1, factorial(k)), 0, 2, _nilpotency_limit(x, N))


def sinh_nilpotent(x: SuperPoly, N: int | None = None) -> SuperPoly:
    return _power_series(x, lambda k: Fraction(1, factorial(k)), 1, 2, _nilpotency_limit(x, N))


def atanh_nilpotent(t: SuperPoly, N: int | None = None) -> SuperPoly:
    return _power_series(t, lambda k: Fraction(1, k), 1, 2, _nilpotency_limit(t, N))


@dataclass(frozen=True)
class FactoredUnit:
    x0: SuperPoly
    x1: SuperPoly

    def combine(self) -> SuperPoly:
        return self.x0 * exp_even_nilpotent(self.x1) if self.x1 else self.x0


def even_unit_factorize(A: GrassmannAlgebra, f: SuperPoly, N: int | None = None) -> FactoredUnit:
    """Write an even unit as x0 * exp(x1), x0 in the even-geometric block and
    x1 in the odd-geometric block, via x1 = atanh(f0^{-1} f1), x0 = f0 / cosh(x1)."""
    f0, f1 = A.blocks(f)
    if not f.constant_term():
        raise SingularBlockError(f"{f} is not invertible")
    t = f0.inverse() * f1
    x1 = atanh_nilpotent(t, N) if t else SuperPoly.zero(A.ring)
    x0 = f0 * cosh_nilpotent(x1, N).inverse() if x1 else f0
    out = FactoredUnit(x0, x1)
    if out.combine() != f:
        raise ArithmeticError("factorisation does not reproduce the unit")
    return out


# ---------------------------------------------------------------------------
# Picard superscheme of split data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitSurfaceData:
    """Base P^m with odd structure sheaf the sum of O(d_j), j = 1..n."""

    m: int
    twists: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.twists)


def picard_odd_dimension(data: SplitSurfaceData) -> int:
    """sum_j h^1(P^m, O(d_j))."""
    from .cohomology import sheaf_cohomology

    if data.m < 1:
        raise PreconditionError("the base must have positive dimension")
    total = 0
    for d in data.twists:
        M = GradedSModule.free(data.m, [(-d, ODD)])
        total += sheaf_cohomology(M, 0, 1).total
    return total


@dataclass(frozen=True)
class PicStructure:
    plus: str

    @property
    def components(self) -> tuple[str, str]:
        inner = f"({self.plus})" if " " in self.plus else self.plus
        return (inner, f"Π·{inner}")

    def __str__(self):
        a, b = self.components
        return f"Pic = {a} ⊔ {b}"


def pic_parity_structure(description: str) -> PicStructure:
    """Pic = Pic_+ disjoint union its parity twist, from a description of Pic_+."""
    text = description.strip()
    if "=" in text:
        text = text.split("=", 1)[1].strip()
    if not text:
        raise PreconditionError("empty description")
    if text in ("0", "1", "trivial", "point"):
        text = "pt"
    return PicStructure(text)


# ---------------------------------------------------------------------------
# nested 0-cycles in the plane
# ---------------------------------------------------------------------------

UV = SuperRing(2, 0, ("u", "v"), ())


def _as_vectors(gens: Sequence[SuperPoly]) -> list[dict]:
    out = []
    for g in gens:
        if g.ring.n_odd or g.ring.n_even != 2:
            raise PreconditionError("ideals of 0-cycles live in k[u, v]")
        vec = {(0, mono[0]): c for mono, c in g.items()}
        if vec:
            out.append(vec)
    return out


def colength(gens: Sequence[SuperPoly]) -> int:
    """dim k[u,v]/I, raising when infinite."""
    vecs = _as_vectors(gens)
    if not vecs:
        raise PreconditionError("the zero ideal has infinite colength")
    G = groebner_basis(vecs, 2, DEGREVLEX)
    leads = G.lead_monomials(0)
    bu = min((a for a, b in leads if b == 0), default=None)
    bv = min((b for a, b in leads if a == 0), default=None)
    if bu is None or bv is None:
        raise PreconditionError("ideal has infinite colength")
    return sum(
        1
        for a in range(bu)
        for b in range(bv)
        if not any(la <= a and lb <= b for la, lb in leads)
    )


def ideal_contains(gens: Sequence[SuperPoly], f: SuperPoly) -> bool:
    G = groebner_basis(_as_vectors(gens), 2, DEGREVLEX)
    vec = _as_vectors([f])
    return not vec or G.contains(vec[0])


@dataclass(frozen=True)
class NestedResult:
    nested: bool
    lengths: tuple[int, int] | None = None
    witness: SuperPoly | None = None


def nested_zero_cycle_check(I0: Sequence[SuperPoly], I1: Sequence[SuperPoly]) -> NestedResult:
    """Lengths (p, q) when I0 is contained in I1, else a generator of I0 outside I1."""
    p, q = colength(I0), colength(I1)
    for g in I0:
        if not ideal_contains(I1, g):
            return NestedResult(False, None, g)
    assert p >= q
    return NestedResult(True, (p, q))


def partitions(k: int, largest: int | None = None):
    """Partitions of k as non-increasing tuples."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def monomial_ideal(shape: tuple[int, ...]) -> list[tuple[int, int]]:
    """Minimal generators (a, b) ~ u^a v^b of the ideal whose standard monomials
    are u^j v^i with j < shape[i]."""
    rows = list(shape) + [0]
    gens = []
    for i, length in enumerate(rows):
        if i == 0 or length < rows[i - 1]:
            gens.append((length, i))
    return gens


def _monomial_contains(big: list[tuple[int, int]], g: tuple[int, int]) -> bool:
    return any(a <= g[0] and b <= g[1] for a, b in big)


def nested_pair_count(p: int, q: int, monomial_only: bool = True) -> int:
    """Number of monomial ideals I0 in I1 of k[u, v] with colengths (p, q)."""
    if not monomial_only:
        raise PreconditionError("only the monomial stratum is enumerated")
    if p < 0 or q < 0:
        raise PreconditionError("colengths must be nonnegative")
    if max(p, q) > 12:
        raise LimitError("enumeration is capped at colength 12")
    count = 0
    smaller = [monomial_ideal(s) for s in partitions(q)]
    for lam in partitions(p):
        gens0 = monomial_ideal(lam)
        for gens1 in smaller:
            if all(_monomial_contains(gens1, g) for g in gens0):
                count += 1
    return count
