"""Independent reference computations used as test oracles.

Nothing here imports the package's own algorithms: these are brute-force or
textbook routes to the same answers.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction


# --- free group F(x, y), letters x=1, X=-1, y=2, Y=-2 ---------------------------

def reduce_word(w):
    out = []
    for c in w:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def inverse(w):
    return tuple(-c for c in reversed(w))


def cyclic_core(w):
    w = reduce_word(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def rotations(w):
    return {w[i:] + w[:i] for i in range(len(w))} if w else {w}


def nielsen_primitive_words(max_len: int, basis_bound: int) -> set[tuple[int, ...]]:
    """Cyclically reduced primitive words of length <= max_len.

    Breadth-first search over free bases (u, v) of F2 reachable from (x, y)
    by elementary Nielsen moves, keeping both entries of length <= basis_bound.
    Every cyclic core of a basis entry, together with all its rotations, is
    primitive.
    """
    start = ((1,), (2,))
    seen = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        for nu, nv in (
            (v, u),
            (inverse(u), v),
            (u, inverse(v)),
            (reduce_word(u + v), v),
            (reduce_word(v + u), v),
            (u, reduce_word(v + u)),
            (u, reduce_word(u + v)),
        ):
            if len(nu) <= basis_bound and len(nv) <= basis_bound and (nu, nv) not in seen:
                seen.add((nu, nv))
                queue.append((nu, nv))
    found = set()
    for u, v in seen:
        for w in (u, v):
            core = cyclic_core(w)
            if len(core) <= max_len:
                found |= rotations(core)
    return found


def cyclically_reduced_words(max_len: int):
    letters = (1, -1, 2, -2)
    for n in range(1, max_len + 1):
        for w in itertools.product(letters, repeat=n):
            if reduce_word(w) == w and (n == 1 or w[0] != -w[-1]):
                yield w


# --- integer matrices ---------------------------------------------------------

def det_fraction(rows) -> int:
    """Determinant by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def determinantal_divisors(rows) -> list[int]:
    """d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}."""
    m, n = len(rows), len(rows[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                g = math.gcd(g, det_fraction([[rows[i][j] for j in ci] for i in ri]))
        out.append(g)
    return out


def snf_by_minors(rows) -> list[int]:
    divs = determinantal_divisors(rows)
    diag, prev = [], 1
    for d in divs:
        if d == 0:
            diag.append(0)
        else:
            diag.append(d // prev)
            prev = d
    return diag
