"""Reduction of B(m,n)-module presentations to parity-tagged S-modules.

B(m, n) is a free module over its even subring S = k[x0..xm] with basis the
square-free theta monomials, so every bigraded B-module is, after forgetting
the odd variables, a graded S-module whose generators remember a parity.
That representation (:class:`GradedSModule`) is what the Groebner, Hilbert
and cohomology layers work with.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import HomogeneityError, ParityError, PreconditionError
from .superalgebra import EVEN, BiDegree, Parity, SuperPoly, SuperRing, monomial_mul

Mono = tuple[int, ...]
Term = tuple[int, Mono]
Vector = dict[Term, Fraction]
FrozenVector = tuple[tuple[Term, Fraction], ...]


def freeze(vec: Mapping[Term, Fraction]) -> FrozenVector:
    return tuple(sorted((k, v) for k, v in vec.items() if v))


@dataclass(frozen=True)
class GradedSModule:
    """Graded module over S = k[x0..xm] given by generators and relations.

    ``generators[j] = (degree, parity)``; each relation is a sparse vector
    ``{(j, exponent_tuple): coefficient}`` homogeneous of a single degree
    and supported on generators of one parity.
    """

    m: int
    generators: tuple[tuple[int, Parity], ...]
    relations: tuple[FrozenVector, ...] = ()

    @classmethod
    def create(cls, m: int, generators: Iterable[tuple[int, Parity]], relations: Iterable[Mapping[Term, Fraction]] = ()):
        gens = tuple((int(d), Parity(p)) for d, p in generators)
        rels = []
        for rel in relations:
            frozen = freeze({k: Fraction(v) for k, v in rel.items()})
            if not frozen:
                continue
            degs = {sum(mono) + gens[j][0] for (j, mono), _ in frozen}
            pars = {gens[j][1] for (j, _), _ in frozen}
            if len(degs) != 1:
                raise HomogeneityError(f"relation {frozen} is not homogeneous")
            if len(pars) != 1:
                raise ParityError(f"relation {frozen} mixes parities")
            if any(len(mono) != m + 1 for (_, mono), _ in frozen):
                raise ValueError("relation monomials must have m+1 exponents")
            rels.append(frozen)
        return cls(m, gens, tuple(rels))

    @classmethod
    def free(cls, m: int, generators: Iterable[tuple[int, Parity]]) -> "GradedSModule":
        return cls.create(m, generators)

    @classmethod
    def zero(cls, m: int) -> "GradedSModule":
        return cls(m, (), ())

    @property
    def nvars(self) -> int:
        return self.m + 1

    @property
    def rank(self) -> int:
        return len(self.generators)

    def relation_dicts(self) -> list[Vector]:
        return [dict(r) for r in self.relations]

    def relation_degree(self, rel: FrozenVector) -> int:
        (j, mono), _ = rel[0]
        return sum(mono) + self.generators[j][0]

    def twist(self, d: int) -> "GradedSModule":
        """M(d): the degree-r piece of M(d) is the degree-(r+d) piece of M."""
        return GradedSModule(self.m, tuple((deg - d, p) for deg, p in self.generators), self.relations)

    def parity_shift(self) -> "GradedSModule":
        return GradedSModule(self.m, tuple((deg, p + 1) for deg, p in self.generators), self.relations)

    def restrict(self, keep: Sequence[int]) -> "GradedSModule":
        """Submodule presentation on the generators ``keep`` (relations must not leave them)."""
        index = {j: i for i, j in enumerate(keep)}
        rels = []
        for rel in self.relations:
            if all(j in index for (j, _), _ in rel):
                rels.append({(index[j], mono): c for (j, mono), c in rel})
            elif any(j in index for (j, _), _ in rel):
                raise PreconditionError("relation straddles the requested generator subset")
        return GradedSModule.create(self.m, [self.generators[j] for j in keep], rels)

    def direct_sum(self, other: "GradedSModule") -> "GradedSModule":
        if other.m != self.m:
            raise PreconditionError("direct sum of modules over different rings")
        off = self.rank
        rels = self.relation_dicts() + [{(j + off, mono): c for (j, mono), c in r} for r in other.relations]
        return GradedSModule.create(self.m, self.generators + other.generators, rels)


def parity_components(M: GradedSModule) -> tuple[GradedSModule, GradedSModule]:
    """Split M = M_+ (+) M_- by generator parity."""
    even = [j for j, (_, p) in enumerate(M.generators) if p == EVEN]
    odd = [j for j, (_, p) in enumerate(M.generators) if p != EVEN]
    return M.restrict(even), M.restrict(odd)


# ---------------------------------------------------------------------------
# B-module presentations
# ---------------------------------------------------------------------------


def theta_basis(m: int, n: int) -> list[tuple[tuple[int, ...], int, Parity]]:
    """Square-free theta monomials ordered by size, then lexicographically."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    out = []
    for p in range(n + 1):
        for subset in itertools.combinations(range(1, n + 1), p):
            out.append((subset, p, Parity.of(p)))
    return out


@dataclass(frozen=True)
class BModulePresentation:
    """Cokernel of a map of free bigraded B(m,n)-modules.

    ``generators`` carry bidegrees; each relation is a tuple of SuperPolys,
    one per generator, so the relation is sum_g r[g] * e_g.
    """

    m: int
    n: int
    generators: tuple[BiDegree, ...]
    relations: tuple[tuple[SuperPoly, ...], ...] = ()

    def __post_init__(self):
        ring = self.ring
        for rel in self.relations:
            if len(rel) != len(self.generators):
                raise PreconditionError("relation length differs from the number of generators")
            bidegs = set()
            for g, f in zip(self.generators, rel):
                if f.ring != ring:
                    raise PreconditionError(f"relation entry {f} is not in B({self.m},{self.n})")
                if not f:
                    continue
                if not f.is_homogeneous():
                    raise HomogeneityError(f"relation entry {f} is not homogeneous")
                if not f.is_parity_homogeneous():
                    raise ParityError(f"relation entry {f} is not parity homogeneous")
                bidegs.add(f.bidegree() + g)
            if len(bidegs) > 1:
                raise HomogeneityError("relation is not bihomogeneous")

    @property
    def ring(self) -> SuperRing:
        return SuperRing.B(self.m, self.n)

    @classmethod
    def structure_sheaf(cls, m: int, n: int) -> "BModulePresentation":
        return cls(m, n, (BiDegree(0, EVEN),))

    @classmethod
    def quotient(cls, m: int, n: int, ideal: Sequence[SuperPoly]) -> "BModulePresentation":
        """B / (ideal) as a cyclic module generated in bidegree (0, even)."""
        rels = tuple((f,) for f in ideal if f)
        return cls(m, n, (BiDegree(0, EVEN),), rels)


def _theta_index(n: int) -> dict[tuple[int, ...], int]:
    return {subset: i for i, (subset, _, _) in enumerate(theta_basis(0, n))}


def expand_module(P: BModulePresentation) -> GradedSModule:
    """Rewrite a B-presentation as a graded S-module on the theta basis.

    Generator ``g * theta^a`` sits at index ``g * 2^n + index(a)``; relations
    are all products ``theta^b * r`` written in that basis.
    """
    n = P.n
    basis = theta_basis(P.m, n)
    idx = _theta_index(n)
    size = len(basis)
    gens = []
    for g in P.generators:
        for subset, p, par in basis:
            gens.append((g.z + p, g.parity + par))
    rels = []
    for rel in P.relations:
        for beta, _, _ in basis:
            theta_beta = ((0,) * (P.m + 1), beta)
            vec: Vector = {}
            for g, f in enumerate(rel):
                for mono, c in f.items():
                    prod = monomial_mul(theta_beta, mono)
                    if prod is None:
                        continue
                    sign, (even, odd) = prod
                    key = (g * size + idx[odd], even)
                    s = vec.get(key, 0) + (c if sign > 0 else -c)
                    if s:
                        vec[key] = s
                    else:
                        vec.pop(key, None)
            if vec:
                rels.append(vec)
    return GradedSModule.create(P.m, gens, rels)


def generator_theta_layers(P: BModulePresentation) -> list[int]:
    """Theta-degree |a| of each expanded generator g * theta^a."""
    basis = theta_basis(P.m, P.n)
    return [p for _ in P.generators for _, p, _ in basis]
