"""Words in the free group F(x, y) and Whitehead's primitivity test.

A knot on the boundary of a genus-two handlebody H turns H into a solid torus
after 2-handle addition exactly when its word in pi_1(H) = F(x, y) is
primitive, i.e. belongs to some free basis.

The word kernels come from the compiled ``_words`` extension when it is
importable, otherwise from ``_words_py``.  Set ``SFSURGERY_PURE_PYTHON=1`` to
force the fallback.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import NotationError, TopologyError

if os.environ.get("SFSURGERY_PURE_PYTHON"):
    from . import _words_py as _kernel
else:
    try:
        from . import _words as _kernel
    except ImportError:
        from . import _words_py as _kernel

BACKEND = "compiled" if _kernel.__name__.endswith("._words") else "python"

_CODES = {"x": 1, "X": -1, "y": 2, "Y": -2}
_LETTERS = {v: k for k, v in _CODES.items()}


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        try:
            return cls(tuple(_CODES[c] for c in text if not c.isspace()))
        except KeyError as exc:
            raise NotationError(f"letters must be x, y, X, Y; got {exc.args[0]!r}") from None

    @classmethod
    def of(cls, w: "FreeWord | str") -> "FreeWord":
        return w if isinstance(w, FreeWord) else cls.parse(w)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(_LETTERS[c] for c in self.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-c for c in reversed(self.letters)))


def cyclically_reduce(w: FreeWord | str) -> FreeWord:
    return FreeWord(_kernel.cyclic_reduce(FreeWord.of(w).letters))


def exponent_sums(w: FreeWord | str) -> tuple[int, int]:
    letters = FreeWord.of(w).letters
    sx = sum(1 if c == 1 else -1 for c in letters if abs(c) == 1)
    sy = sum(1 if c == 2 else -1 for c in letters if abs(c) == 2)
    return sx, sy


def abelianization_test(w: FreeWord | str) -> int:
    """gcd of the exponent sums; 1 is necessary for primitivity."""
    return math.gcd(*exponent_sums(w))


def minimal_representative(w: FreeWord | str) -> FreeWord:
    """Shortest cyclic word in the Aut(F2)-orbit reached by Whitehead reduction."""
    return FreeWord(_kernel.whitehead_minimize(FreeWord.of(w).letters))


def is_primitive(w: FreeWord | str) -> bool:
    w = cyclically_reduce(w)
    if not len(w):
        raise TopologyError("the empty word is never primitive")
    if abelianization_test(w) != 1:
        return False
    # the orbit of a basis element has minimal length 1
    return len(minimal_representative(w)) == 1
