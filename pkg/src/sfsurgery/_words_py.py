"""Pure-Python word kernels for the rank-2 free group.

Letters are encoded as ints: x = 1, X = -1, y = 2, Y = -2.  This module and
the compiled ``_words`` extension expose the same functions and must agree on
every input.
"""
from __future__ import annotations

Word = tuple[int, ...]


def _inv(w: Word) -> Word:
    return tuple(-c for c in reversed(w))


def _whitehead_images() -> list[tuple[Word, Word]]:
    """Images ``(phi(x), phi(y))`` of the non-trivial, non-inner rank-2 Whitehead automorphisms."""
    auts = []
    for a in (1, -1):
        auts += [((1,), (2, a)), ((1,), (-a, 2)), ((1,), (-a, 2, a))]
    for a in (2, -2):
        auts += [((1, a), (2,)), ((-a, 1), (2,)), ((-a, 1, a), (2,))]
    return auts


WHITEHEAD = _whitehead_images()


def free_reduce(w) -> Word:
    out: list[int] = []
    for c in w:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def cyclic_reduce(w) -> Word:
    w = free_reduce(w)
    s, e = 0, len(w)
    while e - s >= 2 and w[s] == -w[e - 1]:
        s += 1
        e -= 1
    return w[s:e]


def substitute(w, img_x, img_y) -> Word:
    table = {1: tuple(img_x), -1: _inv(tuple(img_x)), 2: tuple(img_y), -2: _inv(tuple(img_y))}
    out: list[int] = []
    for c in w:
        for d in table[c]:
            if out and out[-1] == -d:
                out.pop()
            else:
                out.append(d)
    return tuple(out)


def whitehead_minimize(w) -> Word:
    """Apply strictly length-reducing Whitehead automorphisms until none applies.

    Among the reducing moves the shortest image wins, ties broken by the
    smaller letter tuple.  The result is a cyclic word of minimal length in the
    automorphic orbit of ``w``.
    """
    cur = cyclic_reduce(w)
    while True:
        best = None
        for img_x, img_y in WHITEHEAD:
            cand = cyclic_reduce(substitute(cur, img_x, img_y))
            if len(cand) < len(cur) and (best is None or (len(cand), cand) < (len(best), best)):
                best = cand
        if best is None:
            return cur
        cur = best
