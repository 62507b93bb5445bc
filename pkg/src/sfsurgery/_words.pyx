# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled word kernels for the rank-2 free group.

Same interface and results as ``_words_py``; letters are ints
x = 1, X = -1, y = 2, Y = -2.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memmove

from ._words_py import WHITEHEAD

cdef enum:
    NAUT = 12
    MAXIMG = 3

# per automorphism: images of x, X, y, Y
cdef int _img[NAUT][4][MAXIMG]
cdef int _imglen[NAUT][4]


cdef void _load_table():
    cdef int k, j, slot
    for k, (ix, iy) in enumerate(WHITEHEAD):
        for slot, img in enumerate((ix, tuple(-c for c in reversed(ix)), iy, tuple(-c for c in reversed(iy)))):
            _imglen[k][slot] = len(img)
            for j in range(len(img)):
                _img[k][slot][j] = img[j]


_load_table()


cdef inline int _slot(int c) nogil:
    # x -> 0, X -> 1, y -> 2, Y -> 3
    if c == 1:
        return 0
    if c == -1:
        return 1
    if c == 2:
        return 2
    return 3


cdef int _push(int* out, int k, int c) nogil:
    if k > 0 and out[k - 1] == -c:
        return k - 1
    out[k] = c
    return k + 1


cdef void _cyclic_bounds(int* w, int n, int* start, int* length) nogil:
    cdef int s = 0, e = n
    while e - s >= 2 and w[s] == -w[e - 1]:
        s += 1
        e -= 1
    start[0] = s
    length[0] = e - s


cdef int _less(int* a, int na, int* b, int nb) nogil:
    cdef int i
    if na != nb:
        return na < nb
    for i in range(na):
        if a[i] != b[i]:
            return a[i] < b[i]
    return 0


cdef int* _from_tuple(w, int* n):
    cdef int size = len(w)
    cdef int* buf = <int*> malloc((size + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int k = 0
    for c in w:
        k = _push(buf, k, c)
    n[0] = k
    return buf


cdef tuple _to_tuple(int* w, int n):
    return tuple([w[i] for i in range(n)])


def free_reduce(w):
    cdef int n
    cdef int* buf = _from_tuple(w, &n)
    try:
        return _to_tuple(buf, n)
    finally:
        free(buf)


def cyclic_reduce(w):
    cdef int n, s, length
    cdef int* buf = _from_tuple(w, &n)
    try:
        _cyclic_bounds(buf, n, &s, &length)
        return _to_tuple(buf + s, length)
    finally:
        free(buf)


def substitute(w, img_x, img_y):
    table = {1: tuple(img_x), -1: tuple(-c for c in reversed(img_x)),
             2: tuple(img_y), -2: tuple(-c for c in reversed(img_y))}
    cdef list out = []
    for c in w:
        for d in table[c]:
            # wraparound is off: no negative indexing
            if out and out[len(out) - 1] == -d:
                out.pop()
            else:
                out.append(d)
    return tuple(out)


def whitehead_minimize(w):
    cdef int n, s, length, k, i, j, m, cs, cl, bl, slot
    cdef int* cur = _from_tuple(w, &n)
    _cyclic_bounds(cur, n, &s, &length)
    if s:
        memmove(cur, cur + s, length * sizeof(int))
    n = length
    cdef int cap = MAXIMG * n + 1
    cdef int* cand = <int*> malloc(cap * sizeof(int))
    cdef int* best = <int*> malloc(cap * sizeof(int))
    cdef int* tmp
    if cand == NULL or best == NULL:
        free(cur); free(cand); free(best)
        raise MemoryError()
    try:
        with nogil:
            while True:
                bl = -1
                for k in range(NAUT):
                    m = 0
                    for i in range(n):
                        slot = _slot(cur[i])
                        for j in range(_imglen[k][slot]):
                            m = _push(cand, m, _img[k][slot][j])
                    _cyclic_bounds(cand, m, &cs, &cl)
                    if cl < n and (bl < 0 or _less(cand + cs, cl, best, bl)):
                        memcpy(best, cand + cs, cl * sizeof(int))
                        bl = cl
                if bl < 0:
                    break
                tmp = cur
                cur = best
                best = tmp
                n = bl
        return _to_tuple(cur, n)
    finally:
        free(cur)
        free(cand)
        free(best)
