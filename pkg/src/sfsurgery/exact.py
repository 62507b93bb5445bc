"""Exact arithmetic substrate.

Reduced rationals with a point at infinity, continued fractions, integral
Moebius transformations and Smith normal form of integer matrices.

Continued fractions use the floor convention: ``[a0, a1, ..., ak]`` with
``a0 = floor(r)`` and every later partial quotient strictly positive.  The
last quotient of a non-integer is at least 2, which makes the expansion of a
rational unique.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NotationError, TopologyError

SlopeLike = Union["ExtendedSlope", Fraction, int, str]

_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


@dataclass(frozen=True, order=False)
class ExtendedSlope:
    """An element of Q u {inf} stored as a reduced pair.

    Infinity is ``1/0`` (slopes are unoriented, so ``-1/0`` collapses onto it).
    Finite values carry their sign on the numerator.  Use :meth:`of` or
    :func:`slope` to build one from unreduced data.
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        p, q = self.numerator, self.denominator
        if q < 0:
            raise TopologyError(f"denominator must be nonnegative, got {q}")
        if q == 0 and p != 1:
            raise TopologyError("infinity must be stored as 1/0")
        if math.gcd(p, q) != 1:
            raise TopologyError(f"{p}/{q} is not reduced")

    @classmethod
    def from_pair(cls, p: int, q: int) -> "ExtendedSlope":
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise TopologyError("0/0 is not a slope")
        if q == 0:
            return cls(1, 0)
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def of(cls, value: SlopeLike) -> "ExtendedSlope":
        if isinstance(value, ExtendedSlope):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, int):
            return cls(int(value), 1)
        raise TypeError(f"cannot interpret {value!r} as a slope")

    @classmethod
    def parse(cls, text: str) -> "ExtendedSlope":
        t = text.strip().lower()
        if t in ("inf", "infinity", "oo", "∞"):
            return INF
        m = _SLOPE_RE.match(t)
        if m is None:
            raise NotationError(f"not a slope: {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return cls.from_pair(p, q)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def fraction(self) -> Fraction:
        if self.is_infinite:
            raise TopologyError("infinity has no finite value")
        return Fraction(self.numerator, self.denominator)

    def __neg__(self) -> "ExtendedSlope":
        if self.is_infinite:
            return self
        return ExtendedSlope(-self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"ExtendedSlope({self.numerator}/{self.denominator})"


INF = ExtendedSlope(1, 0)


def slope(p: int | Fraction | str | ExtendedSlope, q: int | None = None) -> ExtendedSlope:
    """Shorthand constructor: ``slope(3, 4)``, ``slope("-3/4")``, ``slope(Fraction(1, 2))``."""
    if q is None:
        return ExtendedSlope.of(p)
    return ExtendedSlope.from_pair(int(p), q)


def cf_fold(seq: Sequence[int]) -> ExtendedSlope:
    """Evaluate ``a0 + 1/(a1 + 1/(... + 1/ak))`` projectively.

    Division by zero midway produces infinity and folding carries on
    (``a + 1/inf = a``).
    """
    if not seq:
        raise ValueError("continued fraction needs at least one term")
    # (p, q) is the projective value of the tail folded so far
    p, q = int(seq[-1]), 1
    for a in reversed(seq[:-1]):
        p, q = int(a) * p + q, p
    return ExtendedSlope.from_pair(p, q)


def cf_expand(r: SlopeLike) -> list[int]:
    """Floor-convention continued fraction of a finite slope."""
    r = ExtendedSlope.of(r)
    if r.is_infinite:
        raise TopologyError("infinity has no continued fraction expansion")
    p, q = r.numerator, r.denominator
    terms = []
    while q:
        a, rem = divmod(p, q)
        terms.append(a)
        p, q = q, rem
    return terms


@dataclass(frozen=True)
class MobiusMap:
    """Integral Moebius map ``s -> (a s + b) / (c s + d)`` with ``|ad - bc| = 1``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise TopologyError(f"Moebius map {self.entries} has determinant {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        """Composition ``self o other`` (apply ``other`` first)."""
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "MobiusMap":
        s = self.det
        return MobiusMap(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def projectively_equal(self, other: "MobiusMap") -> bool:
        return self.entries == other.entries or self.entries == tuple(-x for x in other.entries)

    def __call__(self, s: SlopeLike) -> ExtendedSlope:
        return mobius_apply(self, s)


IDENTITY = MobiusMap(1, 0, 0, 1)


def mobius_apply(m: MobiusMap, s: SlopeLike) -> ExtendedSlope:
    s = ExtendedSlope.of(s)
    p, q = s.numerator, s.denominator
    # projective action on the column vector (p, q); s = inf is (1, 0)
    return ExtendedSlope.from_pair(m.a * p + m.b * q, m.c * p + m.d * q)


IntMatrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/f1 + ... + Z/fk`` with ``f1 | f2 | ...``."""

    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if any(f < 2 for f in self.factors):
            raise TopologyError(f"invariant factors must be >= 2: {self.factors}")
        if any(b % a for a, b in zip(self.factors, self.factors[1:])):
            raise TopologyError(f"invariant factors must form a divisibility chain: {self.factors}")
        if self.free_rank < 0:
            raise TopologyError("free rank must be nonnegative")

    @property
    def order(self) -> int:
        """Group order, or 0 when the group is infinite."""
        if self.free_rank:
            return 0
        return math.prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors and not self.free_rank

    def __str__(self) -> str:
        parts = [f"Z/{f}" for f in self.factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def _as_int_rows(matrix: IntMatrix) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        raise TopologyError("matrix must have at least one row and one column")
    if any(len(r) != len(rows[0]) for r in rows):
        raise TopologyError("matrix is not rectangular")
    return rows


def smith_normal_form(matrix: IntMatrix) -> tuple[AbelianGroup, list[int]]:
    """Smith normal form by Euclidean row/column reduction.

    Rows of ``matrix`` are relations, columns are generators, so the returned
    group is ``Z^cols / rowspace``.  The diagonal has ``min(rows, cols)``
    nonnegative entries forming a divisibility chain.

    Pivot choice is deterministic: the nonzero entry of least absolute value
    in the remaining block, first in row-major order.
    """
    A = _as_int_rows(matrix)
    m, n = len(A), len(A[0])
    t = 0
    while t < min(m, n):
        pivot = _smallest_entry(A, t)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            # a nonzero remainder in the pivot row/column is smaller than the pivot
            pivot = _smallest_in_cross(A, t)
            if pivot is not None:
                i, j = pivot
                if i != t:
                    A[t], A[i] = A[i], A[t]
                else:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is not None:
                A[t] = [x + y for x, y in zip(A[t], A[bad])]
                done = False
            if done:
                break
        t += 1
    diagonal = [abs(A[k][k]) for k in range(min(m, n))]
    rank = sum(1 for d in diagonal if d)
    group = AbelianGroup(tuple(d for d in diagonal if d > 1), n - rank)
    return group, diagonal


def _smallest_entry(A: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[0])):
            x = abs(A[i][j])
            if x and (best is None or x < best[0]):
                best = (x, i, j)
    return None if best is None else best[1:]


def _smallest_in_cross(A: list[list[int]], t: int) -> tuple[int, int] | None:
    cells = [(i, t) for i in range(t + 1, len(A))] + [(t, j) for j in range(t + 1, len(A[0]))]
    best = None
    for i, j in cells:
        x = abs(A[i][j])
        if x and (best is None or x < best[0]):
            best = (x, i, j)
    return None if best is None else best[1:]


def cokernel(matrix: IntMatrix) -> AbelianGroup:
    return smith_normal_form(matrix)[0]
