"""Seifert fibered spaces over S^2.

Invariants ``(b; (a1, b1), ..., (ak, bk))`` describe the space with Euler
number ``e = -(b + sum bi/ai)``.  First homology is the cokernel of

    ai * xi + bi * h = 0        (one row per fiber)
    x1 + ... + xk - b * h = 0

whose order is ``|a1 ... ak * e|`` when ``e != 0``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateError, NotATypeError, NotationError, TopologyError
from .exact import AbelianGroup, ExtendedSlope, smith_normal_form


@dataclass(frozen=True)
class SeifertInvariants:
    b: int
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fibers = tuple((int(a), int(bb)) for a, bb in self.fibers)
        for a, bb in fibers:
            if a < 1:
                raise TopologyError(f"fiber index must be >= 1, got ({a}, {bb})")
            if math.gcd(a, bb) != 1:
                raise TopologyError(f"fiber ({a}, {bb}) is not coprime")
        object.__setattr__(self, "fibers", fibers)

    @classmethod
    def of(cls, b: int, *fibers: tuple[int, int]) -> "SeifertInvariants":
        return cls(b, tuple(fibers))

    @property
    def total(self) -> Fraction:
        """``b + sum(beta/alpha)``; the Euler number is its negative."""
        return self.b + sum((Fraction(bb, a) for a, bb in self.fibers), Fraction(0))

    def __str__(self) -> str:
        return f"SFS({self.b}; " + ", ".join(f"{a}/{bb}" for a, bb in self.fibers) + ")"


@dataclass(frozen=True)
class SFSType:
    """Multiset of exceptional fiber indices, stored sorted."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.indices))
        if any(i < 2 for i in idx):
            raise TopologyError(f"exceptional indices must be >= 2: {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, *indices: int) -> "SFSType":
        return cls(tuple(indices))

    def __str__(self) -> str:
        return "S2(" + ", ".join(map(str, self.indices)) + ")"


def normalize(s: SeifertInvariants) -> SeifertInvariants:
    b = s.b
    fibers = []
    for a, bb in s.fibers:
        q, r = divmod(bb, a)
        b += q
        if a >= 2:
            fibers.append((a, r))
    return SeifertInvariants(b, tuple(sorted(fibers)))


def euler_number(s: SeifertInvariants) -> ExtendedSlope:
    return ExtendedSlope.of(-s.total)


def presentation_matrix(s: SeifertInvariants) -> list[list[int]]:
    k = len(s.fibers)
    rows = []
    for i, (a, bb) in enumerate(s.fibers):
        row = [0] * (k + 1)
        row[i] = a
        row[k] = bb
        rows.append(row)
    rows.append([1] * k + [-s.b])
    return rows


def h1(s: SeifertInvariants) -> AbelianGroup:
    return smith_normal_form(presentation_matrix(s))[0]


def orientation_flip(s: SeifertInvariants) -> SeifertInvariants:
    """The same space with reversed orientation, in normalized form."""
    n = normalize(s)
    k = len(n.fibers)
    return normalize(SeifertInvariants(-n.b - k, tuple((a, a - bb) for a, bb in n.fibers)))


def _require_classifiable(s: SeifertInvariants) -> SeifertInvariants:
    n = normalize(s)
    if len(n.fibers) < 3:
        raise DegenerateError(
            f"{s} has {len(n.fibers)} exceptional fibers; lens spaces are outside classification scope"
        )
    return n


def same_sfs(s1: SeifertInvariants, s2: SeifertInvariants, *, oriented: bool = False) -> bool:
    """Homeomorphism test by normalized invariants (optionally up to orientation)."""
    n1, n2 = _require_classifiable(s1), _require_classifiable(s2)
    if n1 == n2:
        return True
    return not oriented and orientation_flip(n1) == n2


def type_of(s: SeifertInvariants) -> SFSType:
    n = normalize(s)
    if len(n.fibers) != 3:
        raise NotATypeError(f"{s} has {len(n.fibers)} exceptional fibers, not 3")
    return SFSType(tuple(a for a, _ in n.fibers))


_SFS_RE = re.compile(r"^SFS\((?P<b>[^;]*);(?P<body>.*)\)$")
_PAIR_RE = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)|([+-]?\d+)\s*/\s*([+-]?\d+)")


def parse_sfs(text: str) -> SeifertInvariants:
    """Parse ``SFS(b; a1/b1, a2/b2, ...)``; pairs may also be written ``(a1, b1)``.

    In both forms the first number is the fiber index alpha and the second is beta.
    """
    compact = "".join(text.split())
    m = _SFS_RE.match(compact)
    if m is None:
        raise NotationError(f"expected SFS(b; a1/b1, ...), got {text!r}")
    try:
        b = int(m.group("b"))
    except ValueError:
        raise NotationError(f"bad base term in {text!r}") from None
    body = m.group("body")
    fibers = []
    pos = 0
    for pm in _PAIR_RE.finditer(body):
        if body[pos:pm.start()].strip(",") != "":
            raise NotationError(f"unexpected text in {text!r}")
        pos = pm.end()
        a, bb = (pm.group(1), pm.group(2)) if pm.group(1) is not None else (pm.group(3), pm.group(4))
        fibers.append((int(a), int(bb)))
    if body[pos:].strip(",") != "":
        raise NotationError(f"unexpected text in {text!r}")
    return SeifertInvariants(b, tuple(fibers))
