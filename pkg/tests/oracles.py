"""Independent brute-force oracles.

These reimplement the checked quantities from their definitions, without
touching the library's search machinery, so that frozen expected values
are backed by a second computation path.
"""

from __future__ import annotations

from itertools import combinations, product


def scan_count_colorings(g) -> int:
    """Count proper 3-colorings by scanning all 3**n assignments."""
    verts = list(g.vertices)
    n = len(verts)
    assert n <= 16, "scan oracle is for tiny graphs"
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[v], pos[w]) for v in verts for w in g.neighbors(v) if v < w]
    total = 0
    for assign in product((1, 2, 3), repeat=n):
        if all(assign[a] != assign[b] for a, b in edges):
            total += 1
    return total


def scan_triangle(g) -> bool:
    """Triangle detection by scanning all vertex triples."""
    verts = list(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in verts}
    for a, b, c in combinations(verts, 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            return True
    return False


def scan_cycles(g, length: int) -> set:
    """All cycles of a given length as frozensets of their edges."""
    verts = list(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in verts}
    found = set()
    for combo in combinations(verts, length):
        for perm in _cyclic_orders(combo):
            if all(perm[i + 1] in adj[perm[i]] for i in range(length - 1)) \
                    and perm[0] in adj[perm[-1]]:
                found.add(frozenset(
                    frozenset((perm[i], perm[(i + 1) % length]))
                    for i in range(length)))
    return found


def _cyclic_orders(combo):
    first = combo[0]
    rest = combo[1:]
    from itertools import permutations
    for perm in permutations(rest):
        yield (first,) + perm


def special_vertex_by_definition(cycle, coloring):
    """The unique vertex whose color appears exactly once on the cycle."""
    cols = [coloring[v] for v in cycle]
    singles = [v for v, c in zip(cycle, cols) if cols.count(c) == 1]
    assert len(singles) == 1
    return singles[0]
