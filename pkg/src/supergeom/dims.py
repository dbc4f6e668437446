"""Small value types: super dimensions and univariate rational polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .superalgebra import EVEN, Parity


@dataclass(frozen=True)
class DimPair:
    """(even, odd) dimension of a Z/2-graded space.

    Euler characteristics reuse this type, so entries may be negative there.
    Comparison follows the partial order on Z x Z used for ranks:
    (a, b) < (c, d) iff (a < c and b <= d) or (a <= c and b < d).
    """

    even: int = 0
    odd: int = 0

    def __add__(self, other: "DimPair") -> "DimPair":
        return DimPair(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "DimPair") -> "DimPair":
        return DimPair(self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> "DimPair":
        return DimPair(-self.even, -self.odd)

    def __mul__(self, k: int) -> "DimPair":
        return DimPair(self.even * k, self.odd * k)

    __rmul__ = __mul__

    def __lt__(self, other: "DimPair") -> bool:
        return (self.even < other.even and self.odd <= other.odd) or (
            self.even <= other.even and self.odd < other.odd
        )

    def __le__(self, other: "DimPair") -> bool:
        return self == other or self < other

    def __gt__(self, other: "DimPair") -> bool:
        return other < self

    def __ge__(self, other: "DimPair") -> bool:
        return other <= self

    def __bool__(self):
        return bool(self.even or self.odd)

    def __iter__(self):
        yield self.even
        yield self.odd

    def comparable(self, other: "DimPair") -> bool:
        return self <= other or other <= self

    def flip(self) -> "DimPair":
        """Parity reversal."""
        return DimPair(self.odd, self.even)

    def shifted(self, parity: Parity) -> "DimPair":
        return self.flip() if parity != EVEN else self

    def component(self, parity: Parity) -> int:
        return self.even if parity == EVEN else self.odd

    @classmethod
    def concentrated(cls, k: int, parity: Parity) -> "DimPair":
        return cls(k, 0) if parity == EVEN else cls(0, k)

    @property
    def total(self) -> int:
        return self.even + self.odd

    def to_json(self) -> dict:
        return {"even": self.even, "odd": self.odd}

    def __str__(self):
        return f"({self.even},{self.odd})"


class QPoly:
    """Univariate polynomial with Fraction coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def binomial(cls, m: int, shift: int) -> "QPoly":
        """The polynomial r -> C(m + r - shift, m)."""
        p = cls([1])
        for k in range(1, m + 1):
            p = p * cls([Fraction(k - shift, k), Fraction(1, k)])
        return p

    def __call__(self, r) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            return QPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
            mag = abs(c)
            body = str(mag) if (not mono or mag != 1) else ""
            if body and mono:
                body += "*"
            body += mono
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and sign == "+" else (f"-{body}" if not parts else f" {sign} {body}"))
        return "".join(parts)

    def __repr__(self):
        return f"QPoly({self})"


@dataclass(frozen=True)
class PolyPair:
    plus: QPoly
    minus: QPoly

    def __call__(self, r: int) -> DimPair:
        a, b = self.plus(r), self.minus(r)
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"polynomial pair is not integral at {r}")
        return DimPair(int(a), int(b))

    def __add__(self, other: "PolyPair") -> "PolyPair":
        return PolyPair(self.plus + other.plus, self.minus + other.minus)

    @classmethod
    def zero(cls) -> "PolyPair":
        return cls(QPoly(), QPoly())

    def to_json(self) -> dict:
        return {"plus": self.plus.to_json(), "minus": self.minus.to_json()}

    def __str__(self):
        return f"({self.plus}, {self.minus})"


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
