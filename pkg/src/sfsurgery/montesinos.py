"""Montesinos links ``M(e0; b1/a1, ..., bk/ak)`` and their double branched covers."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateError, NotationError
from .exact import ExtendedSlope, SlopeLike
from .seifert import SeifertInvariants


@dataclass(frozen=True)
class MontesinosLink:
    integer_part: int
    tangles: tuple[ExtendedSlope, ...]

    def __post_init__(self):
        object.__setattr__(self, "tangles", tuple(ExtendedSlope.of(t) for t in self.tangles))

    @classmethod
    def of(cls, integer_part: int, *tangles: SlopeLike) -> "MontesinosLink":
        return cls(integer_part, tuple(ExtendedSlope.of(t) for t in tangles))

    @property
    def total(self) -> Fraction:
        """``e0 + sum(b_i / a_i)``; integral tangles are allowed here, infinite ones are not."""
        if any(t.is_infinite for t in self.tangles):
            raise DegenerateError(f"{self} contains an infinite tangle")
        return self.integer_part + sum((t.fraction for t in self.tangles), Fraction(0))

    def __str__(self) -> str:
        return f"M({self.integer_part}; " + ", ".join(f"{t.numerator}/{t.denominator}" for t in self.tangles) + ")"


def _check_tangles(m: MontesinosLink) -> None:
    for t in m.tangles:
        if t.denominator < 2:
            raise DegenerateError(f"tangle {t} in {m} is integral or infinite")


def _require_three(m: MontesinosLink) -> None:
    if len(m.tangles) < 3:
        raise DegenerateError(
            f"{m} has {len(m.tangles)} tangles; its double branched cover is a lens space"
        )


def _reduced_fractions(m: MontesinosLink) -> tuple[int, list[ExtendedSlope]]:
    """Move integer parts into e0, keeping the tangle order."""
    _check_tangles(m)
    e0 = m.integer_part
    out = []
    for t in m.tangles:
        q, r = divmod(t.numerator, t.denominator)
        e0 += q
        out.append(ExtendedSlope(r, t.denominator))
    return e0, out


def normalize(m: MontesinosLink) -> MontesinosLink:
    """Canonical form with every ``0 < b_i < a_i``, tangles sorted by value."""
    e0, fracs = _reduced_fractions(m)
    fracs.sort(key=lambda t: t.fraction)
    return MontesinosLink(e0, tuple(fracs))


def determinant(m: MontesinosLink) -> int:
    value = math.prod(t.denominator for t in m.tangles) * m.total
    # the product of the a_i clears every denominator
    return abs(value.numerator)


def double_branched_cover(m: MontesinosLink) -> SeifertInvariants:
    _require_three(m)
    _check_tangles(m)
    return SeifertInvariants(m.integer_part, tuple((t.denominator, t.numerator) for t in m.tangles))


def mirror(m: MontesinosLink) -> MontesinosLink:
    return MontesinosLink(-m.integer_part, tuple(-t for t in m.tangles))


def _dihedral_key(e0: int, fracs: list[ExtendedSlope]) -> tuple:
    pairs = [(t.denominator, t.numerator) for t in fracs]
    k = len(pairs)
    rotations = []
    for seq in (pairs, pairs[::-1]):
        for i in range(k):
            rotations.append(tuple(seq[i:] + seq[:i]))
    return (e0, min(rotations))


def equivalent(m1: MontesinosLink, m2: MontesinosLink, *, oriented: bool = False) -> bool:
    """Classification of links with at least three non-integral tangles.

    Normalized tangle sequences are compared up to rotation and reversal; unless
    ``oriented`` is set, the mirror image of ``m2`` is accepted too.
    """
    for m in (m1, m2):
        _require_three(m)
    # cheap invariants first
    if len(m1.tangles) != len(m2.tangles) or determinant(m1) != determinant(m2):
        return False
    key1 = _dihedral_key(*_reduced_fractions(m1))
    if key1 == _dihedral_key(*_reduced_fractions(m2)):
        return True
    return not oriented and key1 == _dihedral_key(*_reduced_fractions(mirror(m2)))


_LINK_RE = re.compile(r"^M\((?P<e0>[^;]*);(?P<body>.*)\)$")


def parse_link(text: str) -> MontesinosLink:
    """Parse ``M(e0; b1/a1, b2/a2, ...)``, ignoring whitespace."""
    compact = "".join(text.split())
    m = _LINK_RE.match(compact)
    if m is None:
        raise NotationError(f"expected M(e0; b1/a1, ...), got {text!r}")
    try:
        e0 = int(m.group("e0"))
    except ValueError:
        raise NotationError(f"bad integer part in {text!r}") from None
    body = m.group("body")
    tangles = tuple(ExtendedSlope.parse(item) for item in body.split(",")) if body else ()
    return MontesinosLink(e0, tangles)
