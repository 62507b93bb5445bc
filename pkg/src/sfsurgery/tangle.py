"""Rational tangles as fractions, the two twist generators, and untangle surgery.

A tangle is represented purely by its fraction in Q u {inf}.  A framed site
records where an untangle sits inside an ambient diagram: replacing the
``1/0``-untangle there by a ``p/q``-untangle turns the ambient tangle
coordinate into ``gluing(p/q)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact import INF, ExtendedSlope, MobiusMap, SlopeLike, mobius_apply, slope

# n -> -1/n, the surgery coefficient of n-twisting
NEG_RECIPROCAL = MobiusMap(0, -1, 1, 0)


@dataclass(frozen=True)
class RationalTangle:
    fraction: ExtendedSlope

    @classmethod
    def of(cls, value: SlopeLike) -> "RationalTangle":
        return cls(ExtendedSlope.of(value))

    def __str__(self) -> str:
        return str(self.fraction)


@dataclass(frozen=True)
class FramedSite:
    gluing: MobiusMap

    @classmethod
    def from_family_map(cls, family: MobiusMap) -> "FramedSite":
        """Recover the site whose integer family ``n -> untangle_surgery(site, n)`` is ``family``."""
        return cls(family @ NEG_RECIPROCAL.inverse())


def horizontal_map(k: int) -> MobiusMap:
    return MobiusMap(1, k, 0, 1)


def vertical_map(k: int) -> MobiusMap:
    return MobiusMap(1, 0, k, 1)


def twist_horizontal(t: RationalTangle, k: int) -> RationalTangle:
    return RationalTangle(mobius_apply(horizontal_map(k), t.fraction))


def twist_vertical(t: RationalTangle, k: int) -> RationalTangle:
    """``t -> 1/(k + 1/t)``; 0 is fixed and inf goes to ``1/k``."""
    return RationalTangle(mobius_apply(vertical_map(k), t.fraction))


def surgery_coefficient(n: int) -> ExtendedSlope:
    """The ``-1/n`` coefficient of n-twisting; ``n = 0`` gives inf (no surgery)."""
    return slope(-1, n) if n else INF


def untangle_surgery(site: FramedSite, n: int) -> RationalTangle:
    """Replace the 1/0-untangle at ``site`` by the ``-1/n``-untangle."""
    return RationalTangle(mobius_apply(site.gluing, surgery_coefficient(n)))


def family_map(site: FramedSite) -> MobiusMap:
    return site.gluing @ NEG_RECIPROCAL


# Ambient site of t1 in Example-1's quotient: inf -> -3/4, -1/n -> (11n+3)/(-15n-4).
SITE_T1 = FramedSite.from_family_map(MobiusMap(11, 3, -15, -4))
# Site of t2, recovered by verify.derive_site_t2: -1/n -> (7n+3)/(-12n-5).
SITE_T2 = FramedSite.from_family_map(MobiusMap(7, 3, -12, -5))
