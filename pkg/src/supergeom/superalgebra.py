"""Exact arithmetic in free polynomial superalgebras over the rationals.

A ring ``SuperRing(n_even, n_odd)`` is k[x0..x_{n_even-1}, th1..th_{n_odd}]
with commuting even generators and anticommuting odd generators.  The
projective superspace coordinate ring B(m, n) is ``SuperRing.B(m, n)``;
finite Grassmann algebras are rings with ``n_even == 0``.

Monomials are stored as ``(even_exponents, odd_support)`` where the odd
support is a strictly increasing tuple of 1-based indices; the sign coming
from reordering odd factors is absorbed into the coefficient.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    HomogeneityError,
    ParityError,
    PreconditionError,
    RingMismatchError,
    SingularBlockError,
    UnknownVariableError,
)

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    @property
    def label(self) -> str:
        return "even" if self is Parity.EVEN else "odd"

    @classmethod
    def of(cls, k: int) -> "Parity":
        return cls(k % 2)


EVEN = Parity.EVEN
ODD = Parity.ODD


@dataclass(frozen=True)
class BiDegree:
    z: int
    parity: Parity

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.z + other.z, self.parity + other.parity)


@dataclass(frozen=True)
class SuperRing:
    n_even: int
    n_odd: int
    even_names: tuple[str, ...] = ()
    odd_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n_even < 0 or self.n_odd < 0:
            raise ValueError("variable counts must be nonnegative")
        if not self.even_names:
            object.__setattr__(self, "even_names", tuple(f"x{i}" for i in range(self.n_even)))
        if not self.odd_names:
            object.__setattr__(self, "odd_names", tuple(f"th{j}" for j in range(1, self.n_odd + 1)))
        if len(self.even_names) != self.n_even or len(self.odd_names) != self.n_odd:
            raise ValueError("name lists do not match variable counts")

    @classmethod
    def B(cls, m: int, n: int) -> "SuperRing":
        """Coordinate ring of P^{m,n}: even x0..xm, odd th1..thn."""
        if m < 0 or n < 0:
            raise ValueError("m and n must be nonnegative")
        return cls(m + 1, n)

    @classmethod
    def grassmann(cls, n_odd: int, names: Sequence[str] = ()) -> "SuperRing":
        return cls(0, n_odd, (), tuple(names))

    def variable(self, name: str) -> tuple[str, int]:
        """Resolve a variable name to ``('even', i)`` (0-based) or ``('odd', j)`` (1-based)."""
        if name in self.even_names:
            return ("even", self.even_names.index(name))
        if name in self.odd_names:
            return ("odd", self.odd_names.index(name) + 1)
        raise UnknownVariableError(f"unknown variable {name!r}")

    def unit_monomial(self) -> Monomial:
        return ((0,) * self.n_even, ())

    def __repr__(self):
        return f"SuperRing({self.n_even}|{self.n_odd})"


def odd_merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sign of sorting the concatenation a+b of two increasing index tuples."""
    inv = 0
    for i in a:
        for j in b:
            if i > j:
                inv += 1
    return -1 if inv & 1 else 1


def monomial_mul(u: Monomial, v: Monomial) -> tuple[int, Monomial] | None:
    ea, oa = u
    eb, ob = v
    if oa and ob and not set(oa).isdisjoint(ob):
        return None
    sign = odd_merge_sign(oa, ob) if (oa and ob) else 1
    even = tuple(p + q for p, q in zip(ea, eb))
    odd = tuple(sorted(oa + ob)) if ob else oa
    return sign, (even, odd)


def normalize_odd(indices: Iterable[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sort a product of odd generators, returning (sign, support) or None if it vanishes."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None
    inv = sum(1 for i, j in itertools.combinations(range(len(idx)), 2) if idx[i] > idx[j])
    return (-1 if inv & 1 else 1), tuple(sorted(idx))


def monomial_degree(mono: Monomial) -> int:
    return sum(mono[0]) + len(mono[1])


def monomial_parity(mono: Monomial) -> Parity:
    return Parity.of(len(mono[1]))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class SuperPoly:
    """Sparse element of a free polynomial superalgebra with rational coefficients.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: SuperRing, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: SuperRing, terms: dict[Monomial, Fraction]) -> "SuperPoly":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, ring: SuperRing) -> "SuperPoly":
        return cls._raw(ring, {})

    @classmethod
    def const(cls, ring: SuperRing, c=1) -> "SuperPoly":
        return cls(ring, {ring.unit_monomial(): c})

    @classmethod
    def one(cls, ring: SuperRing) -> "SuperPoly":
        return cls.const(ring, 1)

    @classmethod
    def monomial(cls, ring: SuperRing, even: Sequence[int] = (), odd: Sequence[int] = (), coeff=1):
        even = tuple(even) if even else (0,) * ring.n_even
        if len(even) != ring.n_even:
            raise ValueError("even exponent vector has the wrong length")
        if any(j < 1 or j > ring.n_odd for j in odd):
            raise UnknownVariableError(f"odd index out of range in {tuple(odd)}")
        norm = normalize_odd(odd)
        if norm is None:
            return cls.zero(ring)
        sign, support = norm
        return cls(ring, {(even, support): sign * _as_fraction(coeff)})

    @classmethod
    def x(cls, ring: SuperRing, i: int) -> "SuperPoly":
        if not 0 <= i < ring.n_even:
            raise UnknownVariableError(f"x{i} is not a variable of {ring!r}")
        exps = [0] * ring.n_even
        exps[i] = 1
        return cls.monomial(ring, exps)

    @classmethod
    def theta(cls, ring: SuperRing, j: int) -> "SuperPoly":
        if not 1 <= j <= ring.n_odd:
            raise UnknownVariableError(f"th{j} is not a variable of {ring!r}")
        return cls.monomial(ring, (), (j,))

    @classmethod
    def var(cls, ring: SuperRing, name: str) -> "SuperPoly":
        kind, idx = ring.variable(name)
        return cls.x(ring, idx) if kind == "even" else cls.theta(ring, idx)

    # -- basic protocol -------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, SuperPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SuperPoly.const(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "SuperPoly":
        if isinstance(other, SuperPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return SuperPoly.const(self.ring, other)
        raise TypeError(f"cannot combine SuperPoly with {type(other).__name__}")

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return SuperPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly._raw(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SuperPoly":
        c = _as_fraction(c)
        if not c:
            return SuperPoly.zero(self.ring)
        return SuperPoly._raw(self.ring, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                prod = monomial_mul(u, v)
                if prod is None:
                    continue
                sign, w = prod
                s = out.get(w, 0) + (a * b if sign > 0 else -a * b)
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return SuperPoly._raw(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = SuperPoly.one(self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- gradings -------------------------------------------------------------
    def degrees(self) -> set[int]:
        return {monomial_degree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Z-degree of a homogeneous element; None for zero."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise HomogeneityError(f"{self} is not homogeneous")
        return ds.pop()

    def parities(self) -> set[Parity]:
        return {monomial_parity(m) for m in self._terms}

    def is_parity_homogeneous(self) -> bool:
        return len(self.parities()) <= 1

    @property
    def parity(self) -> Parity | None:
        """Parity of a parity-homogeneous element; zero counts as even."""
        ps = self.parities()
        if not ps:
            return EVEN
        if len(ps) > 1:
            raise ParityError(f"{self} is not parity homogeneous")
        return ps.pop()

    def bidegree(self) -> BiDegree:
        return BiDegree(self.degree() or 0, self.parity)

    # -- structure ------------------------------------------------------------
    def body(self) -> "SuperPoly":
        """Reduction modulo the ideal generated by the odd variables."""
        return SuperPoly._raw(self.ring, {k: c for k, c in self._terms.items() if not k[1]})

    def constant_term(self) -> Fraction:
        return self._terms.get(self.ring.unit_monomial(), Fraction(0))

    def is_constant(self) -> bool:
        unit = self.ring.unit_monomial()
        return all(k == unit for k in self._terms)

    def evaluate_body(self, point: Sequence) -> Fraction:
        """Value of the body at a rational point of the even variables."""
        if len(point) != self.ring.n_even:
            raise ValueError(f"point needs {self.ring.n_even} coordinates")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for (even, odd), c in self._terms.items():
            if odd:
                continue
            term = c
            for v, e in zip(pt, even):
                if e:
                    term *= v**e
            total += term
        return total

    def is_nilpotent(self) -> bool:
        """Nilpotent iff every term involves an odd variable."""
        return all(k[1] for k in self._terms)

    def inverse(self) -> "SuperPoly":
        """Inverse of an element whose body is a nonzero constant."""
        c = self.constant_term()
        rest = self - c
        if not c or not rest.is_nilpotent():
            raise SingularBlockError(f"{self} is not invertible")
        u = rest.scale(-1 / c)
        result = SuperPoly.one(self.ring)
        power = SuperPoly.one(self.ring)
        while True:
            power = power * u
            if not power:
                break
            result = result + power
        return result.scale(1 / c)

    def partial(self, var) -> "SuperPoly":
        """Partial derivative; odd variables act as left derivations.

        ``var`` is a variable name or ``('even', i)`` / ``('odd', j)``.
        """
        kind, idx = self.ring.variable(var) if isinstance(var, str) else var
        out: dict[Monomial, Fraction] = {}
        if kind == "even":
            if not 0 <= idx < self.ring.n_even:
                raise UnknownVariableError(f"no even variable {idx}")
            for (even, odd), c in self._terms.items():
                e = even[idx]
                if e:
                    ne = even[:idx] + (e - 1,) + even[idx + 1:]
                    out[(ne, odd)] = out.get((ne, odd), 0) + c * e
        elif kind == "odd":
            if not 1 <= idx <= self.ring.n_odd:
                raise UnknownVariableError(f"no odd variable {idx}")
            for (even, odd), c in self._terms.items():
                if idx in odd:
                    pos = odd.index(idx)
                    no = odd[:pos] + odd[pos + 1:]
                    out[(even, no)] = out.get((even, no), 0) + (-c if pos & 1 else c)
        else:
            raise UnknownVariableError(f"bad variable spec {var!r}")
        return SuperPoly(self.ring, out)

    def substitute_ring(self, ring: SuperRing, even_map: Sequence[int], odd_map: Sequence[int]) -> "SuperPoly":
        """Embed into ``ring`` sending even var i to even_map[i] and odd var j to odd_map[j-1].

        Odd images must preserve the relative order of indices.
        """
        if any(b <= a for a, b in zip(odd_map, odd_map[1:])):
            raise ValueError("odd_map must be increasing")
        out = {}
        for (even, odd), c in self._terms.items():
            ne = [0] * ring.n_even
            for i, e in enumerate(even):
                if e:
                    ne[even_map[i]] += e
            no = tuple(odd_map[j - 1] for j in odd)
            out[(tuple(ne), no)] = c
        return SuperPoly(ring, out)

    # -- display --------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        def key(item):
            (even, odd), _ = item
            return (-monomial_degree((even, odd)), tuple(-e for e in even), odd)

        return sorted(self._terms.items(), key=key)

    def monomial_str(self, mono: Monomial) -> str:
        even, odd = mono
        parts = []
        for name, e in zip(self.ring.even_names, even):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        parts.extend(self.ring.odd_names[j - 1] for j in odd)
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            m = self.monomial_str(mono)
            mag = abs(c)
            if not m:
                body = str(mag)
            elif mag == 1:
                body = m
            else:
                body = f"{mag}*{m}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"SuperPoly({self})"


def polys(ring: SuperRing, names: str) -> tuple[SuperPoly, ...]:
    """Convenience: ``x0, th1 = polys(R, 'x0 th1')``."""
    return tuple(SuperPoly.var(ring, n) for n in names.split())


# ---------------------------------------------------------------------------
# super linear algebra
# ---------------------------------------------------------------------------

Block = tuple[tuple[SuperPoly, ...], ...]


def _block(rows, ring) -> Block:
    return tuple(tuple(e if isinstance(e, SuperPoly) else SuperPoly.const(ring, e) for e in row) for row in rows)


def mat_mul(X: Block, Y: Block, ring: SuperRing, cols: int | None = None) -> Block:
    """X * Y; ``cols`` fixes the width when Y has no rows."""
    if cols is None:
        cols = len(Y[0]) if Y else 0
    n = len(Y)
    return tuple(
        tuple(sum((X[i][k] * Y[k][j] for k in range(n)), SuperPoly.zero(ring)) for j in range(cols))
        for i in range(len(X))
    )


def mat_add(X: Block, Y: Block) -> Block:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(X, Y))


def mat_sub(X: Block, Y: Block) -> Block:
    return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(X, Y))


def _zero_block(rows: int, cols: int, ring: SuperRing) -> Block:
    return tuple(tuple(SuperPoly.zero(ring) for _ in range(cols)) for _ in range(rows))


def _identity(n: int, ring: SuperRing) -> Block:
    return tuple(
        tuple(SuperPoly.one(ring) if i == j else SuperPoly.zero(ring) for j in range(n)) for i in range(n)
    )


def even_determinant(M: Block, ring: SuperRing) -> SuperPoly:
    """Determinant of a square matrix of even elements (which commute)."""
    n = len(M)
    if n == 0:
        return SuperPoly.one(ring)
    if n == 1:
        return M[0][0]
    total = SuperPoly.zero(ring)
    for j in range(n):
        if not M[0][j]:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in M[1:])
        term = M[0][j] * even_determinant(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def _scalar_inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularBlockError("odd-odd block is singular over the base field")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def invert_even_block(D: Block, ring: SuperRing) -> Block:
    """Inverse of a square even block whose body is an invertible scalar matrix.

    Writes D = D0 (1 + D0^{-1} N) with N nilpotent and sums the terminating
    geometric series.
    """
    n = len(D)
    if n == 0:
        return ()
    D0 = []
    for row in D:
        r = []
        for e in row:
            body = e.body()
            if not body.is_constant():
                raise SingularBlockError("block body must be a scalar matrix")
            r.append(body.constant_term())
        D0.append(r)
    D0inv = _scalar_inverse(D0)
    D0inv_b = _block(D0inv, ring)
    N = mat_sub(D, _block(D0, ring))
    U = mat_mul(D0inv_b, N, ring)
    U = tuple(tuple(-e for e in row) for row in U)
    result = _identity(n, ring)
    power = _identity(n, ring)
    for _ in range(ring.n_odd + 1):
        power = mat_mul(power, U, ring)
        if all(not e for row in power for e in row):
            break
        result = mat_add(result, power)
    else:
        raise SingularBlockError("odd part of the block is not nilpotent")
    return mat_mul(result, D0inv_b, ring)


@dataclass(frozen=True)
class SuperMatrix:
    """Even supermatrix in standard block format [[A, B], [C, D]].

    A is p x r and D is q x s with even entries; B and C have odd entries.
    """

    A: Block
    B: Block
    C: Block
    D: Block
    ring: SuperRing

    @classmethod
    def from_blocks(cls, A, B, C, D, ring: SuperRing) -> "SuperMatrix":
        A, B, C, D = (_block(X, ring) for X in (A, B, C, D))
        p, q = len(A), len(D)
        r = len(A[0]) if A else (len(C[0]) if C else 0)
        s = len(D[0]) if D else (len(B[0]) if B else 0)
        shapes = {
            "A": (A, p, r, EVEN),
            "B": (B, p, s, ODD),
            "C": (C, q, r, ODD),
            "D": (D, q, s, EVEN),
        }
        for name, (X, rows, cols, par) in shapes.items():
            if len(X) != rows and not (rows == 0 or cols == 0):
                raise ValueError(f"block {name} has {len(X)} rows, expected {rows}")
            for row in X:
                if len(row) != cols:
                    raise ValueError(f"block {name} rows must have {cols} entries")
                for e in row:
                    if e.ring != ring:
                        raise RingMismatchError("supermatrix entries must share a ring")
                    if e and e.parity != par:
                        raise ParityError(f"block {name} entries must be {par.label}: {e}")
        if not B and p:
            B = _zero_block(p, s, ring)
        if not C and q:
            C = _zero_block(q, r, ring)
        return cls(A, B, C, D, ring)

    @classmethod
    def from_full(cls, rows, p: int, q: int, ring: SuperRing) -> "SuperMatrix":
        """Split a square (p+q) x (p+q) matrix into blocks."""
        rows = _block(rows, ring)
        if len(rows) != p + q or any(len(r) != p + q for r in rows):
            raise ValueError(f"expected a {(p + q)}x{(p + q)} matrix")
        A = tuple(r[:p] for r in rows[:p])
        B = tuple(r[p:] for r in rows[:p])
        C = tuple(r[:p] for r in rows[p:])
        D = tuple(r[p:] for r in rows[p:])
        return cls.from_blocks(A, B, C, D, ring)

    @classmethod
    def identity(cls, p: int, q: int, ring: SuperRing) -> "SuperMatrix":
        return cls.from_blocks(_identity(p, ring), _zero_block(p, q, ring), _zero_block(q, p, ring), _identity(q, ring), ring)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.A), len(self.D)

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        R = self.ring
        p, q = other.shape
        A = mat_add(mat_mul(self.A, other.A, R, p), mat_mul(self.B, other.C, R, p))
        B = mat_add(mat_mul(self.A, other.B, R, q), mat_mul(self.B, other.D, R, q))
        C = mat_add(mat_mul(self.C, other.A, R, p), mat_mul(self.D, other.C, R, p))
        D = mat_add(mat_mul(self.C, other.B, R, q), mat_mul(self.D, other.D, R, q))
        return SuperMatrix(A, B, C, D, R)


def berezinian(M: SuperMatrix) -> SuperPoly:
    """Ber(M) = det(A - B D^{-1} C) / det(D) for a square even supermatrix."""
    p, q = M.shape
    R = M.ring
    if len(M.A) and len(M.A[0]) != p or len(M.D) and len(M.D[0]) != q:
        raise PreconditionError("Berezinian needs a square supermatrix")
    Dinv = invert_even_block(M.D, R)
    if p:
        S = mat_sub(M.A, mat_mul(mat_mul(M.B, Dinv, R), M.C, R)) if q else M.A
    else:
        S = ()
    return even_determinant(S, R) * even_determinant(M.D, R).inverse()


def standard_smooth_check(
    even_eqs: Sequence[SuperPoly],
    odd_eqs: Sequence[SuperPoly],
    point: Sequence,
    even_vars: Sequence[int] | None = None,
    odd_vars: Sequence[int] | None = None,
) -> bool:
    """Jacobian criterion for a standard smooth presentation at a point.

    The c x c matrix of even partials (w.r.t. ``even_vars``, default the first
    c even variables) and the d x d matrix of odd partials (w.r.t.
    ``odd_vars``, default th1..thd) are evaluated at ``point`` with all odd
    variables set to zero; both must be invertible.
    """
    eqs = list(even_eqs) + list(odd_eqs)
    if not eqs:
        return True
    ring = eqs[0].ring
    for f in eqs:
        if f.ring != ring:
            raise RingMismatchError("equations must share a ring")
    for f in even_eqs:
        if f.parity != EVEN:
            raise ParityError(f"even equation {f} is not even")
    for f in odd_eqs:
        if f.parity != ODD:
            raise ParityError(f"odd equation {f} is not odd")
    c, d = len(even_eqs), len(odd_eqs)
    even_vars = list(range(c)) if even_vars is None else list(even_vars)
    odd_vars = list(range(1, d + 1)) if odd_vars is None else list(odd_vars)
    if len(even_vars) != c or len(odd_vars) != d:
        raise PreconditionError("need as many chosen variables as equations of each parity")
    for f in even_eqs:
        if f.evaluate_body(point) != 0:
            raise PreconditionError(f"point {tuple(point)} is not on the zero locus of {f}")

    def rank(mat):
        from .linalg import rank as _rank

        return _rank([{j: v for j, v in enumerate(row) if v} for row in mat])

    J_even = [[f.partial(("even", v)).evaluate_body(point) for v in even_vars] for f in even_eqs]
    J_odd = [[f.partial(("odd", v)).evaluate_body(point) for v in odd_vars] for f in odd_eqs]
    return rank(J_even) == c and rank(J_odd) == d
