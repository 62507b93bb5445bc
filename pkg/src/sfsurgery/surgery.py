"""Dehn surgery bookkeeping.

First homology of surgery on a framed link, the slope changes under twisting
and under passing to the quotient of a period-2 symmetry, and Moser's
classification of surgeries on torus knots.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from . import seifert
from .errors import NotationError, TopologyError
from .exact import INF, AbelianGroup, ExtendedSlope, SlopeLike, smith_normal_form, slope
from .seifert import SeifertInvariants, SFSType


@dataclass(frozen=True)
class SurgeryLink:
    """Framed link: one slope per component and the pairwise linking numbers.

    The diagonal of ``linking`` is ignored; framings live in the slopes.
    """

    slopes: tuple[ExtendedSlope, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        slopes = tuple(ExtendedSlope.of(s) for s in self.slopes)
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        k = len(slopes)
        if len(lk) != k or any(len(row) != k for row in lk):
            raise TopologyError(f"linking matrix must be {k}x{k}")
        for i in range(k):
            for j in range(i):
                if lk[i][j] != lk[j][i]:
                    raise TopologyError("linking matrix must be symmetric")
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(self, "linking", lk)

    @classmethod
    def knot(cls, r: SlopeLike) -> "SurgeryLink":
        return cls((ExtendedSlope.of(r),), ((0,),))

    @property
    def components(self) -> int:
        return len(self.slopes)

    def matrix(self) -> list[list[int]]:
        rows = []
        for i, s in enumerate(self.slopes):
            p, q = s.numerator, s.denominator
            rows.append([p if j == i else q * self.linking[i][j] for j in range(self.components)])
        return rows

    def __str__(self) -> str:
        lk = "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.linking) + "]"
        sl = ", ".join(f"{s.numerator}/{s.denominator}" for s in self.slopes)
        return f"L{{ lk={lk}, slopes=[{sl}] }}"


def h1_of_surgery(link: SurgeryLink) -> AbelianGroup:
    return smith_normal_form(link.matrix())[0]


def rolfsen_twist_slope(r: SlopeLike, n: int, l: int) -> ExtendedSlope:
    """Slope of a knot after n-twisting along a circle it links ``l`` times."""
    r = ExtendedSlope.of(r)
    if r.is_infinite:
        return r
    return slope(r.numerator + n * l * l * r.denominator, r.denominator)


def quotient_slope(r: SlopeLike) -> ExtendedSlope:
    """Slope on the factor knot of a period-2 knot disjoint from the axis: ``p/q -> p/(2q)``."""
    r = ExtendedSlope.of(r)
    if r.is_infinite:
        raise TopologyError("the meridian slope has no factor-knot surgery description")
    return slope(r.numerator, 2 * r.denominator)


@dataclass(frozen=True)
class TorusSurgeryResult:
    """Outcome of Moser's classification.

    ``payload`` is an :class:`SFSType` for ``"seifert-3-fiber"``, the pair
    ``(p, q)`` of ``L(p, q)`` for ``"lens"`` and the two summand orders for
    ``"reducible"``.
    """

    kind: str
    payload: object
    invariants: SeifertInvariants | None = field(default=None, compare=False)


def _bezout(p: int, q: int) -> tuple[int, int]:
    """``(u, v)`` with ``u*q + v*p = 1`` for coprime positive ``p, q``."""
    u = pow(q, -1, p)
    v = (1 - u * q) // p
    return u, v


def moser_invariants(p: int, q: int, r: SlopeLike) -> SeifertInvariants:
    """Seifert invariants of m/k surgery on the (p, q) torus knot.

    For ``p, q > 0`` the space is ``(0; (p, u), (q, v), (s, k))`` with
    ``u q + v p = 1`` and ``s = m - pqk``; its homology has order ``|m|``.
    Negative ``pq`` is handled by mirroring.
    """
    r = ExtendedSlope.of(r)
    m, k = r.numerator, r.denominator
    mirrored = p * q < 0
    p, q = abs(p), abs(q)
    if mirrored:
        m = -m
    u, v = _bezout(p, q)
    s = m - p * q * k
    if s == 0:
        raise TopologyError("the cabling slope gives a reducible manifold, not a Seifert space")
    third = (abs(s), k if s > 0 else -k)
    inv = SeifertInvariants(0, ((p, u), (q, v), third))
    return seifert.orientation_flip(inv) if mirrored else seifert.normalize(inv)


def torus_knot_surgery(p: int, q: int, r: SlopeLike) -> TorusSurgeryResult:
    r = ExtendedSlope.of(r)
    if abs(p) < 2 or abs(q) < 2:
        raise TopologyError(f"T({p},{q}) is a trivial torus knot")
    if math.gcd(p, q) != 1:
        raise TopologyError(f"T({p},{q}) is a link, not a knot")
    if r.is_infinite:
        raise TopologyError("meridional surgery returns S^3")
    m, k = r.numerator, r.denominator
    third = abs(m - p * q * k)
    if third == 0:
        return TorusSurgeryResult("reducible", (min(abs(p), abs(q)), max(abs(p), abs(q))))
    inv = moser_invariants(p, q, r)
    if third == 1:
        return TorusSurgeryResult("lens", (abs(m), (k * q * q) % abs(m) if abs(m) > 1 else 0), inv)
    return TorusSurgeryResult("seifert-3-fiber", SFSType.of(abs(p), abs(q), third), inv)


_SURGERY_RE = re.compile(r"^L\{lk=(?P<lk>\[.*\]),slopes=\[(?P<slopes>[^\]]*)\]\}$")


def parse_surgery_link(text: str) -> SurgeryLink:
    """Parse ``L{ lk=[[0,1],[1,0]], slopes=[p1/q1, p2/q2] }``."""
    compact = "".join(text.split())
    m = _SURGERY_RE.match(compact)
    if m is None:
        raise NotationError(f"expected L{{ lk=[[...]], slopes=[...] }}, got {text!r}")
    rows = re.findall(r"\[([^\[\]]*)\]", m.group("lk"))
    try:
        lk = tuple(tuple(int(x) for x in row.split(",")) if row else () for row in rows)
    except ValueError:
        raise NotationError(f"bad linking matrix in {text!r}") from None
    slopes = tuple(ExtendedSlope.parse(s) for s in m.group("slopes").split(",")) if m.group("slopes") else ()
    return SurgeryLink(slopes, lk)


def two_component_twist_link(r: SlopeLike, n: int, lk: int = 0) -> SurgeryLink:
    """``K u t``: slope ``r`` on the knot, ``-1/n`` on the unknotted twisting circle."""
    circle = slope(-1, n) if n else INF
    return SurgeryLink((ExtendedSlope.of(r), circle), ((0, lk), (lk, 0)))
