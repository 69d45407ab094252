"""Exact 3-coloring counting and the coloring-side operations.

Counting is an exact depth-first search over a BFS vertex order with
forward pruning; the inner loop lives in a compiled kernel
(``_fastcount``) with a pure-Python twin (``_purecount``) selected at
import time.  Colors are the literals 1, 2, 3 and colorings are counted
as labeled objects (color permutations give distinct colorings).

A coloring is represented as a tuple indexed by vertex id.

The search tree is always split at a fixed shallow depth and the
subtrees counted independently; results and node usage are summed, so
the reported numbers are identical for any thread count.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import BudgetExceededError, GraphFormatError
from .plane_graph import PlaneGraph, canonical_cycle

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 9
_SPLIT_DEPTH = 8   # fixed, so node accounting is independent of threading

if os.environ.get("THREECOLOR_PURE"):
    from . import _purecount as _kernel
    KERNEL = "python"
else:
    try:
        from . import _fastcount as _kernel  # type: ignore[no-redef]
        KERNEL = "compiled"
    except ImportError:
        from . import _purecount as _kernel  # type: ignore[no-redef]
        KERNEL = "python"


def kernel_backend() -> str:
    """Which counting kernel is active: "compiled" or "python"."""
    return KERNEL


# ---------------------------------------------------------------------------
# counting plans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Plan:
    order: tuple            # position -> vertex
    pos_of: dict            # vertex -> position
    indptr: np.ndarray      # CSR of earlier-ordered neighbours
    flat: np.ndarray


def _make_plan(g) -> _Plan:
    verts = sorted(g.vertices)
    nbrs = {v: sorted(g.neighbors(v)) for v in verts}
    seen = set()
    order = []
    for root in verts:          # restart for non-plane graphs that split
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    pos_of = {v: p for p, v in enumerate(order)}
    indptr = [0]
    flat = []
    for p, v in enumerate(order):
        for w in nbrs[v]:
            if pos_of[w] < p:
                flat.append(pos_of[w])
        indptr.append(len(flat))
    return _Plan(order=tuple(order), pos_of=pos_of,
                 indptr=np.asarray(indptr, dtype=np.int32),
                 flat=np.asarray(flat, dtype=np.int32))


def _plan_for(g) -> _Plan:
    if isinstance(g, PlaneGraph):
        plan = g.__dict__.get("_counting_plan")
        if plan is None:
            plan = _make_plan(g)
            g.__dict__["_counting_plan"] = plan
        return plan
    return _make_plan(g)


def _prefix_assignments(plan: _Plan, fixed, depth: int):
    """All proper partial colorings of the first ``depth`` positions,
    in lexicographic color order, plus the node count spent finding them."""
    indptr, flat = plan.indptr, plan.flat
    prior = [tuple(int(q) for q in flat[indptr[p]:indptr[p + 1]])
             for p in range(depth)]
    out: list[tuple] = []
    colors = [0] * depth
    nodes = 0

    def rec(p):
        nonlocal nodes
        if p == depth:
            out.append(tuple(colors))
            return
        f = fixed[p]
        for c in (1, 2, 3):
            if f and c != f:
                continue
            if any(colors[q] == c for q in prior[p]):
                continue
            colors[p] = c
            nodes += 1
            rec(p + 1)
        colors[p] = 0

    rec(0)
    return out, nodes


@dataclass(frozen=True)
class CountResult:
    count: int
    nodes: int


def _count_core(g, fixed_map: Mapping[int, int] | None,
                budget: int, limit: int, threads: int) -> CountResult:
    plan = _plan_for(g)
    n = len(plan.order)
    if n == 0:
        return CountResult(count=1, nodes=0)
    fixed = np.zeros(n, dtype=np.int8)
    if fixed_map:
        for v, c in fixed_map.items():
            if c not in (1, 2, 3):
                raise ValueError(f"color must be 1, 2 or 3, got {c}")
            fixed[plan.pos_of[v]] = c
    depth = min(n, _SPLIT_DEPTH)
    prefixes, prefix_nodes = _prefix_assignments(plan, fixed, depth)
    if prefix_nodes > budget:
        raise BudgetExceededError(budget)
    if depth == n:
        count = len(prefixes) if not limit else min(len(prefixes), limit)
        return CountResult(count=count, nodes=prefix_nodes)

    subtree_cap = budget - prefix_nodes

    def run(prefix):
        preset = np.zeros(n, dtype=np.int8)
        preset[:depth] = prefix
        return _kernel.count_colorings(plan.indptr, plan.flat, fixed,
                                       preset, depth, subtree_cap, limit)

    if limit or threads <= 1 or len(prefixes) <= 1:
        results = []
        found = 0
        for prefix in prefixes:
            res = run(prefix)
            results.append(res)
            if res[0] > 0:
                found += res[0]
            if limit and found >= limit:
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, prefixes))

    total_nodes = prefix_nodes
    count = 0
    for c, nodes in results:
        total_nodes += nodes
        if c < 0:
            raise BudgetExceededError(budget)
        count += c
    if total_nodes > budget:
        raise BudgetExceededError(budget)
    if limit:
        count = min(count, limit)
    return CountResult(count=count, nodes=total_nodes)


def count_3_colorings(g, budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Exact number of proper 3-colorings, as a labeled count."""
    return count_3_colorings_detailed(g, budget=budget, threads=threads).count


def count_3_colorings_detailed(g, budget: int = DEFAULT_BUDGET,
                               threads: int = 1) -> CountResult:
    """Exact count plus the number of search nodes spent."""
    return _count_core(g, None, budget, 0, max(1, threads))


def count_with_boundary(g, fixed: Mapping[int, int],
                        budget: int = DEFAULT_BUDGET, limit: int = 0) -> CountResult:
    """Exact count of colorings extending a partial assignment."""
    return _count_core(g, fixed, budget, limit, 1)


def enumerate_3_colorings(g) -> Iterator[tuple]:
    """Yield every proper 3-coloring exactly once, as vertex-indexed tuples."""
    plan = _plan_for(g)
    n = len(plan.order)
    if n == 0:
        yield ()
        return
    indptr, flat = plan.indptr, plan.flat
    prior = [tuple(int(q) for q in flat[indptr[p]:indptr[p + 1]])
             for p in range(n)]
    colors = [0] * n
    dense = all(v == p for p, v in enumerate(plan.order))

    def rec(p):
        if p == n:
            if dense:
                yield tuple(colors)
            else:
                out = [0] * (max(plan.order) + 1)
                for q, v in enumerate(plan.order):
                    out[v] = colors[q]
                yield tuple(out)
            return
        for c in (1, 2, 3):
            if any(colors[q] == c for q in prior[p]):
                continue
            colors[p] = c
            yield from rec(p + 1)
        colors[p] = 0

    yield from rec(0)


def is_proper(g, coloring) -> bool:
    """No edge is monochromatic and every vertex has a color in 1..3."""
    for v in g.vertices:
        if coloring[v] not in (1, 2, 3):
            return False
        for w in g.neighbors(v):
            if coloring[v] == coloring[w]:
                return False
    return True


# ---------------------------------------------------------------------------
# special vertex / edge of a colored 5-cycle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialData:
    """The unique singleton-colored vertex of a 5-cycle plus the cycle
    edge disjoint from its two incident edges."""

    vertex: int
    edge: tuple


def special_data(cycle: Sequence[int], coloring) -> SpecialData:
    """Locate the special vertex and edge of a properly colored 5-cycle."""
    if len(cycle) != 5:
        raise ValueError(f"special vertex is defined for 5-cycles, got "
                         f"length {len(cycle)}")
    cols = [coloring[v] for v in cycle]
    for i in range(5):
        if cols[i] == cols[(i + 1) % 5]:
            raise ValueError("coloring is not proper on the cycle")
    singles = [i for i in range(5) if cols.count(cols[i]) == 1]
    if len(singles) != 1:
        raise ValueError("coloring has no unique singleton color on the cycle")
    s = singles[0]
    a, b = cycle[(s + 2) % 5], cycle[(s + 3) % 5]
    return SpecialData(vertex=cycle[s], edge=(min(a, b), max(a, b)))


# ---------------------------------------------------------------------------
# boundary extension
# ---------------------------------------------------------------------------

def extends(g: PlaneGraph, cycle: Sequence[int], boundary: Mapping[int, int],
            budget: int = DEFAULT_BUDGET) -> bool:
    """Whether a proper coloring of a facial cycle (length at most 5)
    extends to a proper 3-coloring of the whole graph."""
    c = canonical_cycle(cycle)
    if len(c) > 5:
        raise ValueError("extension test requires a cycle of length at most 5")
    if c not in g.facial_cycles:
        raise ValueError("cycle does not bound a face")
    m = len(c)
    for i in range(m):
        u, v = c[i], c[(i + 1) % m]
        if boundary[u] == boundary[v]:
            raise ValueError("boundary coloring is not proper on the cycle")
    fixed = {v: boundary[v] for v in c}
    return count_with_boundary(g, fixed, budget=budget, limit=1).count > 0


# ---------------------------------------------------------------------------
# bichromatic components and switching
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BichromaticComponent:
    """A connected component of the subgraph induced by two color classes."""

    vertices: frozenset
    colors: tuple

    def __len__(self):
        return len(self.vertices)


def bichromatic_components(g, coloring, i: int, j: int) -> list[BichromaticComponent]:
    """Components of the subgraph induced by the vertices colored i or j."""
    if i == j:
        raise ValueError("need two distinct colors")
    pair = (min(i, j), max(i, j))
    keep = {v for v in g.vertices if coloring[v] in pair}
    seen: set = set()
    comps = []
    for v in sorted(keep):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in keep and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(BichromaticComponent(vertices=frozenset(comp), colors=pair))
    return comps


def switch_component(coloring, component: BichromaticComponent) -> tuple:
    """Swap the component's two colors on its vertices.

    Properness is preserved: neighbours outside a maximal component
    carry the third color.
    """
    i, j = component.colors
    swap = {i: j, j: i}
    return tuple(swap.get(c, c) if v in component.vertices else c
                 for v, c in enumerate(coloring))


def colorings_from_switching(g, coloring, family_size: int | None = None) -> set:
    """All colorings reachable by switching subsets of the components of
    the best bichromatic pair.

    Picks the color pair with the most components (ties: lexicographically
    least pair) and returns the full switch lattice, ``2**t`` distinct
    proper colorings.  When ``family_size`` is given, a best pair with
    fewer than ``family_size / 6`` components is reported as a
    falsification of the expected component bound.
    """
    best_pair = None
    best_comps: list[BichromaticComponent] = []
    for i, j in ((1, 2), (1, 3), (2, 3)):
        comps = bichromatic_components(g, coloring, i, j)
        if best_pair is None or len(comps) > len(best_comps):
            best_pair, best_comps = (i, j), comps
    t = len(best_comps)
    if family_size is not None and 6 * t < family_size:
        log.error("switching pair %s has %d components, below the expected "
                  "family_size/6 = %s", best_pair, t, family_size / 6)
    if t > 20:
        raise ValueError(f"refusing to materialize 2**{t} colorings")
    out = set()
    for mask in range(1 << t):
        cur = coloring if isinstance(coloring, tuple) else tuple(coloring)
        for b in range(t):
            if mask >> b & 1:
                cur = switch_component(cur, best_comps[b])
        out.add(cur)
    return out


# ---------------------------------------------------------------------------
# coloring file format
# ---------------------------------------------------------------------------

def load_coloring(source, g: PlaneGraph) -> tuple:
    """Read ``{"colors": {"a": 1, ...}}`` and validate it against ``g``."""
    if isinstance(source, (str, Path)) and not (
            isinstance(source, str) and source.lstrip().startswith("{")):
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    elif isinstance(source, str):
        data = json.loads(source)
    else:
        data = source
    if not isinstance(data, dict) or "colors" not in data:
        raise GraphFormatError({"error": "bad_schema", "detail": "missing 'colors'"})
    colors = data["colors"]
    out = [0] * g.n
    for lab in g.labels:
        if lab not in colors:
            raise GraphFormatError({"error": "uncolored_vertex", "vertex": lab})
        c = colors[lab]
        if c not in (1, 2, 3):
            raise GraphFormatError({"error": "bad_color", "vertex": lab,
                                    "color": c})
        out[g.index(lab)] = c
    extra = set(colors) - set(g.labels)
    if extra:
        raise GraphFormatError({"error": "unknown_vertex", "vertex": sorted(extra)[0]})
    coloring = tuple(out)
    for v in g.vertices:
        for w in g.neighbors(v):
            if v < w and coloring[v] == coloring[w]:
                raise GraphFormatError(
                    {"error": "monochromatic_edge",
                     "edge": [g.label(v), g.label(w)]})
    return coloring


def coloring_to_json(g: PlaneGraph, coloring) -> dict:
    return {"colors": {g.label(v): coloring[v] for v in g.vertices}}


def brute_force_count(g) -> int:
    """Exhaustive 3**n scan; exponential, for cross-checks on tiny graphs."""
    verts = list(g.vertices)
    n = len(verts)
    if n > 20:
        raise ValueError("brute force scan limited to 20 vertices")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[v], pos[w]) for v in verts for w in g.neighbors(v) if v < w]
    total = 0
    for assign in product((1, 2, 3), repeat=n):
        if all(assign[a] != assign[b] for a, b in edges):
            total += 1
    return total
