"""Classical invariants of odd pretzel knots.

An odd pretzel ``P(p, q, r)`` bounds a genus-one Seifert surface built from
two bands.  With the bands oriented consistently its Seifert matrix is

    V = 1/2 * [[p + q, q + 1],
               [q - 1, q + r]]

so ``V - V^T`` is the standard symplectic form and ``V + V^T`` has
determinant ``pq + qr + rp``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import TopologyError
from .montesinos import MontesinosLink


@dataclass(frozen=True)
class PretzelKnot:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if any(x % 2 == 0 for x in (self.p, self.q, self.r)):
            raise TopologyError(f"P({self.p},{self.q},{self.r}) needs three odd parameters")

    def __str__(self) -> str:
        return f"P({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class SeifertMatrixG1:
    entries: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        (a, b), (c, d) = self.entries
        # V - V^T = [[0, b - c], [c - b, 0]]
        if (b - c) ** 2 != 1:
            raise TopologyError(f"{self.entries} is not a genus-one Seifert matrix")

    def symmetrized_det(self) -> int:
        """``det(V + V^T)``."""
        (a, b), (c, d) = self.entries
        return 4 * a * d - (b + c) ** 2


@dataclass(frozen=True)
class SymmetricLaurent:
    """Laurent polynomial ``sum coeffs[i] * t**(low + i)`` with nonzero end coefficients."""

    coeffs: tuple[int, ...]
    low: int

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        low = self.low
        while coeffs and coeffs[0] == 0:
            coeffs, low = coeffs[1:], low + 1
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "low", low if coeffs else 0)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __call__(self, t: int | Fraction) -> Fraction:
        t = Fraction(t)
        return sum((c * t ** (self.low + i) for i, c in enumerate(self.coeffs)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.coeffs == self.coeffs[::-1] and self.low == -self.high

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            e = self.low + i
            if c:
                mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
                coef = str(c) if (not mono or abs(c) != 1) else ("-" if c < 0 else "")
                terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def seifert_matrix(k: PretzelKnot) -> SeifertMatrixG1:
    p, q, r = k.p, k.q, k.r
    return SeifertMatrixG1((((p + q) // 2, (q + 1) // 2), ((q - 1) // 2, (q + r) // 2)))


def alexander(v: SeifertMatrixG1) -> SymmetricLaurent:
    """``det(V^T - tV)`` shifted to be symmetric and signed so that ``Delta(1) = 1``."""
    (a, b), (c, d) = v.entries
    # det(V^T - tV) = det(V) t^2 + (b^2 + c^2 - 2ad) t + det(V)
    dv = a * d - b * c
    poly = SymmetricLaurent((dv, b * b + c * c - 2 * a * d, dv), -1)
    if poly(1) < 0:
        poly = SymmetricLaurent(tuple(-x for x in poly.coeffs), poly.low)
    return poly


def determinant(delta: SymmetricLaurent) -> int:
    return abs(int(delta(-1)))


class GenusCertificate(NamedTuple):
    """``genus`` is 1 when certified; 0 with ``resolved=False`` means Delta = 1 decides nothing."""

    genus: int
    resolved: bool


def genus_certificate(k: PretzelKnot) -> GenusCertificate:
    delta = alexander(seifert_matrix(k))
    # half the Alexander span bounds the genus from below; the surface gives <= 1
    if delta.span == 2:
        return GenusCertificate(1, True)
    return GenusCertificate(0, False)


def satellite_genus_bound(w: int, g_comp: int) -> int:
    """Schubert's lower bound ``w * g(companion)`` for the genus of a satellite."""
    if w < 0 or g_comp < 0:
        raise ValueError("winding number and companion genus must be nonnegative")
    return w * g_comp


def pretzel_to_montesinos(k: PretzelKnot) -> MontesinosLink:
    """``P(p, q, r) = M(0; -1/p, -1/q, -1/r)``, e.g. ``P(-3, 3, 5) = M(0; 1/3, -1/3, -1/5)``."""
    return MontesinosLink.of(0, *(Fraction(-1, x) for x in (k.p, k.q, k.r)))


def pretzel_determinant(k: PretzelKnot) -> int:
    return abs(k.p * k.q + k.q * k.r + k.r * k.p)
