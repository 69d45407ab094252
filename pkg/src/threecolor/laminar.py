"""Laminar families of 5-cycles: extraction and chain/antichain splitting.

``extract`` implements the reduction dichotomy for a triangle-free plane
graph: either some low-degree vertex v is reducible (identifying its
neighbourhood keeps the graph triangle-free), or there is a laminar
family of 5-cycles covering every low-degree vertex.  The family is
found recursively: with no separating 5-cycle the set of *all* 5-cycles
is laminar; otherwise the graph is split along a separating 5-cycle
(kept on both sides) and the two families are merged.

A laminar family orders into a forest under interior containment;
``dilworth_decompose`` reads off a maximum chain (deepest root-to-leaf
path) and a maximum antichain (independent-set DP on the forest), whose
size product is at least the family size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import FalsificationError
from .plane_graph import (
    Cycle,
    PlaneGraph,
    canonical_cycle,
    enumerate_cycles,
    exterior_subgraph,
    identify_neighbors,
    interior_faces,
    interior_subgraph,
    is_laminar,
    is_triangle_free,
    low_degree_set,
    map_vertices,
    region_partition,
    triangle_free,
    validate_cycle,
)


@dataclass(frozen=True)
class CycleFamily:
    """A family of cycles in a common host graph."""

    cycles: tuple
    kind: str = "general"   # general | laminar | chain | antichain

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


@dataclass(frozen=True)
class LaminarOutcome:
    """Result of the reduction dichotomy: a reducible vertex or a
    covering laminar family of 5-cycles."""

    kind: str                     # "reducible" | "family"
    covered: frozenset            # the low-degree set the family must cover
    vertex: int | None = None
    family: CycleFamily | None = None


def extract(g: PlaneGraph, k: int) -> LaminarOutcome:
    """Run the dichotomy on a triangle-free plane graph.

    Scans vertices of degree at most k in id order; the first v whose
    identified graph stays triangle-free is returned as reducible.
    Otherwise returns a laminar family of 5-cycles covering every vertex
    of degree at most k (re-verified on every call).
    """
    if not triangle_free(g):
        raise ValueError("extraction requires a triangle-free graph")
    if k < 0:
        raise ValueError("k must be non-negative")
    dk = low_degree_set(g, k)
    v = _reducible_vertex(g, dk)
    if v is not None:
        return LaminarOutcome(kind="reducible", vertex=v, covered=frozenset(dk))
    family = _covering_family(g, k)
    if not is_laminar(g, family):
        raise FalsificationError("extracted family of 5-cycles is not laminar")
    on_family = set()
    for c in family:
        on_family.update(c)
    missing = dk - on_family
    if missing:
        raise FalsificationError(
            f"low-degree vertices not covered by any 5-cycle: "
            f"{sorted(g.label(v) for v in missing)}")
    return LaminarOutcome(kind="family", covered=frozenset(dk),
                          family=CycleFamily(cycles=tuple(family), kind="laminar"))


def _reducible_vertex(g: PlaneGraph, candidates) -> int | None:
    """First vertex (in id order) whose identified graph is triangle-free."""
    for v in sorted(candidates):
        if is_triangle_free(identify_neighbors(g, v)):
            return v
    return None


def _covering_family(g: PlaneGraph, k: int) -> list[Cycle]:
    """Recursive family construction by splitting on separating 5-cycles.

    Only reached once the reducibility scan failed on the whole graph; it
    is then a theorem that the scan also fails on every split side, so a
    success below the top level is reported as a falsification.
    """
    fives = enumerate_cycles(g, 5)
    separating = []
    for c in fives:
        parts = region_partition(g, c)
        if parts.interior and parts.exterior:
            separating.append((len(parts.interior), c))
    if not separating:
        return fives
    _, cut = min(separating)
    merged = set()
    for side in (interior_subgraph(g, cut), exterior_subgraph(g, cut)):
        if side.n >= g.n:
            raise FalsificationError("separating cycle failed to shrink the graph")
        if not triangle_free(side):
            raise FalsificationError("split along a 5-cycle produced a triangle")
        v = _reducible_vertex(side, low_degree_set(side, k))
        if v is not None:
            raise FalsificationError(
                f"vertex {side.label(v)} became reducible inside a split, "
                "which contradicts the reduction dichotomy")
        for c in _covering_family(side, k):
            merged.add(canonical_cycle(map_vertices(side, g, c)))
    return sorted(merged)


# ---------------------------------------------------------------------------
# containment forest and Dilworth decomposition
# ---------------------------------------------------------------------------

@dataclass
class ContainmentForest:
    """The interior-containment order of a laminar family, as a forest.

    ``parent[c]`` is the minimal member strictly containing c (None for
    roots).  Supplies the two extremal structures: the deepest
    root-to-leaf path and a maximum antichain via independent-set DP.
    """

    parent: dict = field(default_factory=dict)
    children: dict = field(default_factory=dict)
    depth: dict = field(default_factory=dict)
    roots: tuple = ()

    def deepest_chain(self) -> tuple:
        if not self.depth:
            return ()
        deepest = max(self.depth.values())
        leaf = min(c for c, d in self.depth.items() if d == deepest)
        path = [leaf]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return tuple(reversed(path))

    def max_antichain(self) -> tuple:
        best: dict = {}

        def rec(c) -> tuple:
            got = best.get(c)
            if got is None:
                kids = self.children[c]
                if kids:
                    got = tuple(x for kid in kids for x in rec(kid))
                else:
                    got = (c,)
                best[c] = got
            return got

        return tuple(sorted(x for r in self.roots for x in rec(r)))


def containment_forest(g: PlaneGraph, family: Sequence) -> ContainmentForest:
    """Order a laminar family by interior containment."""
    cycles = sorted({validate_cycle(g, c) for c in family})
    if not is_laminar(g, cycles):
        raise ValueError("family is not laminar")
    regions = {c: interior_faces(g, c) for c in cycles}
    by_size = sorted(cycles, key=lambda c: (len(regions[c]), c))
    forest = ContainmentForest()
    for c in cycles:
        forest.children[c] = []
    for c in cycles:
        parent = None
        for d in by_size:
            if d != c and regions[c] < regions[d]:
                parent = d
                break
        forest.parent[c] = parent
        if parent is not None:
            forest.children[parent].append(c)
    for kids in forest.children.values():
        kids.sort()
    forest.roots = tuple(sorted(c for c in cycles if forest.parent[c] is None))

    def set_depth(c, d):
        forest.depth[c] = d
        for kid in forest.children[c]:
            set_depth(kid, d + 1)

    for r in forest.roots:
        set_depth(r, 1)
    return forest


def dilworth_decompose(g: PlaneGraph, family) -> tuple[CycleFamily, CycleFamily]:
    """Maximum chain and maximum antichain of the containment order.

    Their size product is at least the family size, so one of the two is
    at least the square root of it; the caller picks whichever side its
    bound needs.
    """
    if isinstance(family, CycleFamily):
        cycles = list(family.cycles)
    else:
        cycles = list(family)
    forest = containment_forest(g, cycles)
    chain = forest.deepest_chain()
    antichain = forest.max_antichain()
    m = len(forest.parent)
    if m and len(chain) * len(antichain) < m:
        raise FalsificationError(
            f"chain x antichain = {len(chain)} x {len(antichain)} < "
            f"family size {m}")
    for i, c in enumerate(antichain):
        for d in antichain[i + 1:]:
            if interior_faces(g, c) & interior_faces(g, d):
                raise FalsificationError("antichain members share interior")
    return (CycleFamily(cycles=chain, kind="chain"),
            CycleFamily(cycles=antichain, kind="antichain"))
