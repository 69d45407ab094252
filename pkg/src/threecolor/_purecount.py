"""Pure-Python counting kernel.

Shares its contract with the compiled twin ``_fastcount``; selected at
import time by :mod:`threecolor.coloring` when the extension is missing
or ``THREECOLOR_PURE`` is set.

``count_colorings(prior_indptr, prior_flat, fixed, preset, start, budget,
limit)`` walks positions ``start..n-1`` in order, assigning colors 1..3
and pruning on conflicts with already-colored neighbours:

* ``prior_indptr`` / ``prior_flat`` - CSR arrays; the neighbours of
  position ``p`` that come earlier in the order are
  ``prior_flat[prior_indptr[p]:prior_indptr[p+1]]``.
* ``fixed[p]`` - 0 for a free vertex, else the forced color.
* ``preset`` - colors of positions below ``start`` (the search prefix).
* ``budget`` - maximum number of color placements; on exhaustion the
  count comes back as -1.
* ``limit`` - stop after this many complete colorings (0 = no limit).

Returns ``(count, nodes)`` where ``nodes`` is the number of placements
performed.  For identical inputs both kernels return identical tuples.
"""

from __future__ import annotations


def count_colorings(prior_indptr, prior_flat, fixed, preset, start, budget, limit):
    n = len(fixed)
    if start >= n:
        return 1, 0
    indptr = list(prior_indptr)
    flat = list(prior_flat)
    prior = [tuple(flat[indptr[p]:indptr[p + 1]]) for p in range(n)]
    fixedl = list(fixed)
    colors = list(preset)
    nxt = [1] * n
    nodes = 0
    count = 0
    last = n - 1
    pos = start
    while pos >= start:
        c = nxt[pos]
        f = fixedl[pos]
        placed = 0
        while c <= 3:
            if f and c != f:
                c += 1
                continue
            ok = True
            for q in prior[pos]:
                if colors[q] == c:
                    ok = False
                    break
            if ok:
                placed = c
                break
            c += 1
        if placed:
            if nodes >= budget:
                return -1, nodes
            nodes += 1
            colors[pos] = placed
            nxt[pos] = placed + 1
            if pos == last:
                count += 1
                if limit and count >= limit:
                    return count, nodes
            else:
                pos += 1
                nxt[pos] = 1
        else:
            nxt[pos] = 1
            pos -= 1
    return count, nodes
