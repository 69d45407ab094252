# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: cdivision=True, language_level=3
"""Compiled counting kernel.

Identical contract to ``threecolor._purecount.count_colorings``; see the
docstring there.  The search loop runs without the GIL so independent
counting tasks can proceed in parallel threads.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


def count_colorings(const int[::1] prior_indptr, const int[::1] prior_flat,
                    const signed char[::1] fixed, const signed char[::1] preset,
                    int start, long long budget, long long limit):
    cdef int n = fixed.shape[0]
    if start >= n:
        return 1, 0

    cdef signed char *colors = <signed char *> malloc(n)
    cdef signed char *nxt = <signed char *> malloc(n)
    if colors == NULL or nxt == NULL:
        if colors != NULL:
            free(colors)
        if nxt != NULL:
            free(nxt)
        raise MemoryError()
    memcpy(colors, &preset[0], n)

    cdef long long nodes = 0, count = 0
    cdef int last = n - 1
    cdef int pos = start
    cdef int c, f, lo, hi
    cdef bint ok, exceeded = False

    with nogil:
        nxt[pos] = 1
        while pos >= start:
            c = nxt[pos]
            f = fixed[pos]
            while c <= 3:
                if f != 0 and c != f:
                    c += 1
                    continue
                ok = True
                lo = prior_indptr[pos]
                hi = prior_indptr[pos + 1]
                while lo < hi:
                    if colors[prior_flat[lo]] == c:
                        ok = False
                        break
                    lo += 1
                if ok:
                    break
                c += 1
            if c <= 3:
                if nodes >= budget:
                    exceeded = True
                    break
                nodes += 1
                colors[pos] = c
                nxt[pos] = c + 1
                if pos == last:
                    count += 1
                    if limit and count >= limit:
                        break
                else:
                    pos += 1
                    nxt[pos] = 1
            else:
                nxt[pos] = 1
                pos -= 1

    free(colors)
    free(nxt)
    if exceeded:
        return -1, nodes
    return count, nodes
