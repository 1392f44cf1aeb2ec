"""Commuting graphs of element families, and exact algorithms on them.

Vertices are elements (stable element IDs, ascending), edges join distinct
commuting elements, and declared central elements are excluded up front.
Adjacency lives in a bit-packed uint64 matrix; breadth-first searches run
over Python-int rows (word-parallel OR), and the clique solver is a
branch-and-bound with greedy coloring bounds over the same bitsets, with
k-core peeling in numpy to shrink hard instances first.

Everything here is deterministic: vertex order is ID order, path
reconstruction always picks the lowest-index predecessor, and clique
results come out sorted, independent of thread count.
"""

from __future__ import annotations

import hashlib
import math
import multiprocessing
import os
import time
from dataclasses import dataclass, field

import numpy as np

from ._bulk import adjacency_packed, elements_matrix, pack_bool_rows
from .commute import commutes_naive
from .pinj import PInj, UNDEF, element_from_id, element_id, format_element

__all__ = [
    "INFINITY",
    "BudgetExceeded",
    "CliqueCheckpoint",
    "PathWitness",
    "DistanceResult",
    "CommutingGraph",
    "graph_from_matrix",
    "build_graph",
    "induced_subgraph",
    "distance",
    "eccentricities",
    "diameter",
    "components",
    "clique_number",
    "maximum_cliques",
    "export_dot",
    "export_edge_csv",
    "save_packed",
    "load_packed",
]

INFINITY = math.inf

# Hard ceiling on materialized vertex sets; big enough for every supported
# family (full monoid through n = 6, nilpotents through n = 7).
VERTEX_CAP = 50_000

_FORMAT_MAGIC = b"ICGR"
_FORMAT_VERSION = 2


class BudgetExceeded(RuntimeError):
    """A time budget ran out; ``checkpoint`` resumes where work stopped."""

    def __init__(self, checkpoint):
        super().__init__("time budget exceeded")
        self.checkpoint = checkpoint


@dataclass(frozen=True)
class CliqueCheckpoint:
    """Resumable state of a clique run, at root-branch granularity.

    ``order`` is the vertex relabeling in effect (original indices in
    search order); ``roots_remaining`` are positions in that order whose
    branches still need work.  ``best``/``found`` hold original indices.
    """

    phase: str
    order: tuple
    roots_remaining: tuple
    best: tuple
    target: int | None
    found: tuple


@dataclass(frozen=True)
class PathWitness:
    """A concrete path: consecutive elements commute and all are distinct."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def validate(self, excluded=()) -> None:
        vs = self.vertices
        if not vs:
            raise AssertionError("empty path")
        if len(set(vs)) != len(vs):
            raise AssertionError("path repeats a vertex")
        for e in vs:
            if e.n != vs[0].n:
                raise AssertionError("mixed ground sizes in path")
        for banned in excluded:
            if banned in vs:
                raise AssertionError(
                    f"excluded element {format_element(banned)} on path")
        for a, b in zip(vs, vs[1:]):
            if not commutes_naive(a, b):
                raise AssertionError(
                    f"consecutive elements {format_element(a)} and "
                    f"{format_element(b)} do not commute")

    def __repr__(self):
        return " - ".join(format_element(e) for e in self.vertices)


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance or diameter query.

    ``value`` is a hop count, or ``INFINITY`` when no path exists, in which
    case ``components`` carries the vertex-index components.  ``pair``
    holds the element IDs of the endpoints that attain the value.
    """

    value: float
    pair: tuple | None = None
    path: PathWitness | None = None
    components: tuple | None = field(default=None, compare=False)


class CommutingGraph:
    """Bit-packed commuting graph over a fixed element family."""

    __slots__ = ("n", "ids", "imgs", "packed", "center_ids", "label",
                 "_rows", "_idmap")

    def __init__(self, n, ids, imgs, packed, center_ids=(), label=""):
        self.n = int(n)
        self.ids = np.asarray(ids, dtype=np.int64)
        self.imgs = np.asarray(imgs, dtype=np.int8)
        self.packed = np.asarray(packed, dtype=np.uint64)
        self.center_ids = tuple(sorted(int(c) for c in center_ids))
        self.label = label
        self._rows = None
        self._idmap = None

    @property
    def num_vertices(self) -> int:
        return len(self.ids)

    @property
    def words(self) -> int:
        return self.packed.shape[1] if self.packed.size else (self.num_vertices + 63) // 64

    def degrees(self) -> np.ndarray:
        return np.bitwise_count(self.packed).sum(axis=1, dtype=np.int64)

    def num_edges(self) -> int:
        return int(self.degrees().sum()) // 2

    def vertex_element(self, i: int) -> PInj:
        row = self.imgs[i]
        return PInj(self.n, tuple(UNDEF if v == self.n else int(v) for v in row))

    def index_of(self, x) -> int:
        """Vertex index of an element or element ID."""
        if self._idmap is None:
            self._idmap = {int(e): i for i, e in enumerate(self.ids)}
        eid = element_id(x) if isinstance(x, PInj) else int(x)
        try:
            return self._idmap[eid]
        except KeyError:
            raise KeyError(f"element ID {eid} is not a vertex") from None

    def adjacent(self, i: int, j: int) -> bool:
        return bool((int(self.packed[i, j >> 6]) >> (j & 63)) & 1)

    def rows(self) -> list:
        """Adjacency rows as Python ints (bit j set = adjacent to vertex j)."""
        if self._rows is None:
            self._rows = [int.from_bytes(r.tobytes(), "little")
                          for r in self.packed]
        return self._rows

    def __repr__(self):
        return (f"CommutingGraph({self.label or 'unlabeled'}: n={self.n}, "
                f"{self.num_vertices} vertices, {self.num_edges()} edges)")


# -- construction --------------------------------------------------------------


def graph_from_matrix(n, ids, mat, center_ids=(), label="",
                      vertex_cap=VERTEX_CAP) -> CommutingGraph:
    """Build the graph for the rows of ``mat`` (sentinel-n image tables),
    dropping any row whose ID is declared central."""
    ids = np.asarray(ids, dtype=np.int64)
    mat = np.asarray(mat, dtype=np.int8)
    order = np.argsort(ids, kind="stable")
    ids, mat = ids[order], mat[order]
    if center_ids:
        keep = ~np.isin(ids, np.asarray(sorted(center_ids), dtype=np.int64))
        ids, mat = ids[keep], mat[keep]
    if len(ids) > vertex_cap:
        raise ValueError(f"{len(ids)} vertices exceeds cap {vertex_cap}")
    packed = adjacency_packed(mat)
    return CommutingGraph(n, ids, mat, packed, center_ids, label)


def build_graph(n: int, filt: str = "all", max_rank=None, center="monoid",
                label=None, vertex_cap=VERTEX_CAP) -> CommutingGraph:
    """Materialize a commuting graph over a standard element family.

    ``center`` names what to exclude: "monoid" drops the zero map and the
    identity, "ideal" drops only zero (right for proper ideals, whose
    center is trivial), "group" drops only the identity, "none" keeps
    everything; or pass explicit element IDs / elements.
    """
    ids, mat = elements_matrix(n, filt, max_rank)
    identity_id = element_id(PInj.identity(n))
    if center == "monoid":
        center_ids = (0, identity_id)
    elif center == "ideal":
        center_ids = (0,)
    elif center == "group":
        center_ids = (identity_id,)
    elif center == "none":
        center_ids = ()
    else:
        center_ids = tuple(element_id(c) if isinstance(c, PInj) else int(c)
                           for c in center)
    if label is None:
        scope = filt if max_rank is None else f"{filt}-rank{max_rank}"
        label = f"{scope}-n{n}"
    return graph_from_matrix(n, ids, mat, center_ids, label, vertex_cap)


def _extract_packed(packed: np.ndarray, row_idx: np.ndarray,
                    col_idx: np.ndarray) -> np.ndarray:
    """Sub-adjacency for selected rows and (reordered) columns."""
    out_words = (len(col_idx) + 63) // 64
    out = np.empty((len(row_idx), out_words), dtype=np.uint64)
    step = max(1, (1 << 24) // max(1, packed.shape[1] * 64))
    for s in range(0, len(row_idx), step):
        chunk = row_idx[s:s + step]
        bits = np.unpackbits(packed[chunk].view(np.uint8), axis=1,
                             bitorder="little")[:, col_idx]
        out[s:s + len(chunk)] = pack_bool_rows(bits.astype(bool), len(col_idx))
    return out


def induced_subgraph(g: CommutingGraph, keep, label=None) -> CommutingGraph:
    """Subgraph on a subset of vertices (indices or a boolean mask)."""
    keep = np.asarray(keep)
    if keep.dtype == bool:
        keep = np.flatnonzero(keep)
    else:
        keep = np.unique(keep)
    packed = _extract_packed(g.packed, keep, keep)
    return CommutingGraph(g.n, g.ids[keep], g.imgs[keep], packed,
                          g.center_ids, label or f"{g.label}-induced")


# -- breadth-first machinery ----------------------------------------------------


def _bit_indices(mask: int, nbits: int) -> np.ndarray:
    buf = mask.to_bytes((nbits + 7) // 8, "little")
    return np.flatnonzero(np.unpackbits(np.frombuffer(buf, np.uint8),
                                        bitorder="little"))


def _bfs(rows, nverts, src, until_bit=None):
    """Level masks from ``src``; optionally stop once a bit is reached."""
    seen = cur = 1 << src
    levels = [cur]
    while True:
        nxt = 0
        for v in _bit_indices(cur, nverts):
            nxt |= rows[v]
        nxt &= ~seen
        if not nxt:
            return levels, seen
        levels.append(nxt)
        seen |= nxt
        if until_bit is not None and (nxt >> until_bit) & 1:
            return levels, seen
        cur = nxt


def _backtrack(rows, levels, dst):
    path = [dst]
    cur = dst
    for k in range(len(levels) - 2, -1, -1):
        m = rows[cur] & levels[k]
        cur = (m & -m).bit_length() - 1
        path.append(cur)
    return path[::-1]


def distance(g: CommutingGraph, a, b) -> DistanceResult:
    """Shortest commuting path between two vertices, with a witness path.

    ``a`` and ``b`` are elements or element IDs.  A result of INFINITY
    carries the graph's components instead of a path.
    """
    ia, ib = g.index_of(a), g.index_of(b)
    pair = (int(g.ids[ia]), int(g.ids[ib]))
    if ia == ib:
        return DistanceResult(0, pair, PathWitness((g.vertex_element(ia),)))
    rows = g.rows()
    levels, seen = _bfs(rows, g.num_vertices, ia, until_bit=ib)
    if not (seen >> ib) & 1:
        return DistanceResult(INFINITY, pair, None, tuple(components(g)))
    verts = _backtrack(rows, levels, ib)
    path = PathWitness(tuple(g.vertex_element(v) for v in verts))
    return DistanceResult(len(verts) - 1, pair, path)


_PAR_STATE = {}


def _ecc_block(args):
    lo, hi = args
    rows, nverts = _PAR_STATE["rows"], _PAR_STATE["nverts"]
    out = []
    for s in range(lo, hi):
        levels, seen = _bfs(rows, nverts, s)
        far = int(_bit_indices(levels[-1], nverts)[0])
        out.append((len(levels) - 1, seen.bit_count(), far))
    return out


def _fork_pool(threads):
    try:
        return multiprocessing.get_context("fork").Pool(threads)
    except (ValueError, OSError):
        return None


def eccentricities(g: CommutingGraph, threads: int = 1):
    """Per-vertex (eccentricity over reached set, reached count, farthest
    lowest-index vertex), as three arrays."""
    nverts = g.num_vertices
    rows = g.rows()
    _PAR_STATE["rows"], _PAR_STATE["nverts"] = rows, nverts
    chunk = max(32, nverts // (max(1, threads) * 8) + 1)
    blocks = [(s, min(nverts, s + chunk)) for s in range(0, nverts, chunk)]
    if threads > 1 and nverts > 256:
        pool = _fork_pool(threads)
        if pool is not None:
            with pool:
                results = pool.map(_ecc_block, blocks)
        else:
            results = [_ecc_block(b) for b in blocks]
    else:
        results = [_ecc_block(b) for b in blocks]
    flat = [t for block in results for t in block]
    ecc = np.array([t[0] for t in flat], dtype=np.int64)
    reached = np.array([t[1] for t in flat], dtype=np.int64)
    far = np.array([t[2] for t in flat], dtype=np.int64)
    return ecc, reached, far


def components(g: CommutingGraph):
    """Vertex-index components, largest first (ties by smallest index)."""
    nverts = g.num_vertices
    rows = g.rows()
    left = (1 << nverts) - 1
    comps = []
    while left:
        src = (left & -left).bit_length() - 1
        _, seen = _bfs(rows, nverts, src)
        comps.append(_bit_indices(seen, nverts))
        left &= ~seen
    comps.sort(key=lambda c: (-len(c), int(c[0])))
    return comps


def diameter(g: CommutingGraph, threads: int = 1) -> DistanceResult:
    """Exact diameter with an attaining geodesic.

    Disconnected graphs report INFINITY and the component list, never the
    largest component's diameter.
    """
    nverts = g.num_vertices
    if nverts == 0:
        raise ValueError("empty graph has no diameter")
    rows = g.rows()
    _, seen0 = _bfs(rows, nverts, 0)
    if seen0.bit_count() < nverts:
        return DistanceResult(INFINITY, None, None, tuple(components(g)))
    ecc, reached, far = eccentricities(g, threads=threads)
    if int(reached.min()) < nverts:
        return DistanceResult(INFINITY, None, None, tuple(components(g)))
    src = int(np.argmax(ecc))
    value = int(ecc[src])
    dst = int(far[src])
    levels, _ = _bfs(rows, nverts, src, until_bit=dst)
    verts = _backtrack(rows, levels, dst)
    path = PathWitness(tuple(g.vertex_element(v) for v in verts))
    return DistanceResult(value, (int(g.ids[src]), int(g.ids[dst])), path)


# -- exact maximum clique -------------------------------------------------------


def _alive_words(alive: np.ndarray) -> np.ndarray:
    return pack_bool_rows(alive[None, :], len(alive))[0]


def _core_mask(packed: np.ndarray, min_deg: int, start=None) -> np.ndarray:
    """Iterated peel: keep vertices with at least ``min_deg`` surviving
    neighbors.  Contains every clique on more than ``min_deg`` vertices."""
    nverts = packed.shape[0]
    alive = np.ones(nverts, dtype=bool) if start is None else start.copy()
    while True:
        aw = _alive_words(alive)
        idx = np.flatnonzero(alive)
        if not len(idx):
            return alive
        degs = np.bitwise_count(packed[idx] & aw[None, :]).sum(axis=1)
        drop = degs < min_deg
        if not drop.any():
            return alive
        alive[idx[drop]] = False


def _greedy_from(rows, start, by_degree):
    clique = [start]
    cand = rows[start]
    for v in by_degree:
        if (cand >> int(v)) & 1:
            clique.append(int(v))
            cand &= rows[int(v)]
    return clique


def _greedy_best(rows, degs, starts=48, within=None):
    by_degree = np.argsort(-degs, kind="stable")
    if within is not None:
        by_degree = by_degree[within[by_degree]]
    best = []
    for s in by_degree[:starts]:
        c = _greedy_from(rows, int(s), by_degree)
        if len(c) > len(best):
            best = c
    return best


def _color_sort(p_mask: int, rows, nverts: int):
    """Greedy coloring of candidates; returns vertices and color numbers in
    ascending color order (the color is an upper bound for the clique
    inside that prefix)."""
    order = []
    colors = []
    uncolored = p_mask
    c = 0
    while uncolored:
        c += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~(rows[v] | low)
            uncolored ^= low
            order.append(v)
            colors.append(c)
    return order, colors


class _CliqueRun:
    """Shared state of one branch-and-bound pass over a relabeled graph.

    ``best_size`` is the incumbent bound; ``best`` holds a witness only
    when this pass itself improved on the initial bound (the caller's seed
    clique may live outside the peeled subgraph).
    """

    def __init__(self, rows, nverts, deadline=None, target=None,
                 best_size=0):
        self.rows = rows
        self.nverts = nverts
        self.deadline = deadline
        self.target = target
        self.best_size = best_size
        self.best = []
        self.found = []
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.perf_counter() > self.deadline:
                raise _OutOfTime()

    def expand_max(self, cur, p_mask):
        self._tick()
        if not p_mask:
            if len(cur) > self.best_size:
                self.best_size = len(cur)
                self.best = list(cur)
            return
        order, colors = _color_sort(p_mask, self.rows, self.nverts)
        for j in range(len(order) - 1, -1, -1):
            if len(cur) + colors[j] <= self.best_size:
                return
            v = order[j]
            cur.append(v)
            self.expand_max(cur, p_mask & self.rows[v])
            cur.pop()
            p_mask &= ~(1 << v)

    def expand_enum(self, cur, p_mask):
        self._tick()
        if len(cur) > self.target:
            raise AssertionError("target below true clique number")
        if not p_mask:
            if len(cur) == self.target:
                self.found.append(tuple(cur))
            return
        order, colors = _color_sort(p_mask, self.rows, self.nverts)
        for j in range(len(order) - 1, -1, -1):
            if len(cur) + colors[j] < self.target:
                return
            v = order[j]
            cur.append(v)
            self.expand_enum(cur, p_mask & self.rows[v])
            cur.pop()
            p_mask &= ~(1 << v)


class _OutOfTime(Exception):
    pass


def _relabeled_rows(g, alive: np.ndarray):
    """Restrict to alive vertices, reordered by descending degree."""
    idx = np.flatnonzero(alive)
    if not len(idx):
        return [], np.empty(0, np.int64)
    aw = _alive_words(alive)
    sub_degs = np.bitwise_count(g.packed[idx] & aw[None, :]).sum(axis=1)
    order = idx[np.lexsort((idx, -sub_degs))]
    packed = _extract_packed(g.packed, order, order)
    rows = [int.from_bytes(r.tobytes(), "little") for r in packed]
    return rows, order


def _run_roots(rows, nverts, roots, mode, target, bound, deadline):
    """Process root branches in order; returns (best, found, unfinished).

    ``best`` comes back empty unless this run beat the initial ``bound``.
    """
    run = _CliqueRun(rows, nverts, deadline, target, best_size=bound)
    for pos, i in enumerate(roots):
        tail_mask = (((1 << nverts) - 1) >> (i + 1)) << (i + 1)
        cand = rows[i] & tail_mask
        try:
            if mode == "max":
                if 1 + cand.bit_count() > run.best_size:
                    run.expand_max([i], cand)
            else:
                if 1 + cand.bit_count() >= target:
                    run.expand_enum([i], cand)
        except _OutOfTime:
            return run.best, run.found, tuple(roots[pos:])
    return run.best, run.found, ()


_CLIQUE_PAR = {}


def _clique_worker(roots):
    st = _CLIQUE_PAR
    return _run_roots(st["rows"], st["nverts"], roots, st["mode"],
                      st["target"], st["bound"], st["deadline"])


def _dispatch_roots(rows, nverts, roots, mode, target, bound, deadline,
                    threads):
    if threads <= 1 or len(roots) < 4:
        return [_run_roots(rows, nverts, roots, mode, target, bound,
                           deadline)]
    _CLIQUE_PAR.update(rows=rows, nverts=nverts, mode=mode, target=target,
                       bound=bound, deadline=deadline)
    pool = _fork_pool(threads)
    if pool is None:
        return [_run_roots(rows, nverts, roots, mode, target, bound,
                           deadline)]
    shards = [list(roots[w::threads]) for w in range(threads)]
    with pool:
        return pool.map(_clique_worker, [s for s in shards if s])


def clique_number(g: CommutingGraph, budget_seconds=None, threads: int = 1,
                  resume: CliqueCheckpoint | None = None):
    """Exact clique number and one maximum clique (vertex indices).

    Runs greedy seeding, peels to the seed-size core, then proves
    optimality by branch and bound.  A budget overrun raises
    BudgetExceeded carrying a checkpoint; pass it back as ``resume``.
    """
    nverts = g.num_vertices
    if nverts == 0:
        return 0, ()
    deadline = (time.perf_counter() + budget_seconds
                if budget_seconds is not None else None)
    if resume is not None:
        if resume.phase != "max":
            raise ValueError("checkpoint is not from a clique_number run")
        alive = np.zeros(nverts, dtype=bool)
        alive[np.asarray(resume.order, dtype=np.int64)] = True
        rows, order = _relabeled_rows(g, alive)
        if tuple(int(v) for v in order) != resume.order:
            raise ValueError("checkpoint does not match this graph")
        base_best = sorted(resume.best)
        roots = list(resume.roots_remaining)
    else:
        full_rows = g.rows()
        degs = g.degrees()
        seed = _greedy_best(full_rows, degs)
        while True:
            alive = _core_mask(g.packed, min_deg=len(seed))
            if not alive.any():
                break
            improved = _greedy_best(full_rows, degs, starts=16, within=alive)
            if len(improved) > len(seed):
                seed = improved
            else:
                break
        rows, order = _relabeled_rows(g, alive)
        base_best = sorted(int(v) for v in seed)
        roots = list(range(len(rows)))
    results = _dispatch_roots(rows, len(rows), roots, "max", None,
                              len(base_best), deadline, threads)
    unfinished = [u for *_, u in results for u in u]
    improvements = [sorted(int(order[i]) for i in r[0])
                    for r in results if r[0]]
    if improvements:
        best_global = min(improvements, key=lambda c: (-len(c), c))
    else:
        best_global = base_best
    if unfinished:
        raise BudgetExceeded(CliqueCheckpoint(
            "max", tuple(int(v) for v in order), tuple(sorted(unfinished)),
            tuple(best_global), None, ()))
    return len(best_global), tuple(best_global)


def maximum_cliques(g: CommutingGraph, target: int, vertex_cap: int = 2500,
                    budget_seconds=None, threads: int = 1,
                    resume: CliqueCheckpoint | None = None):
    """All cliques of size ``target`` (which must be the clique number),
    as sorted tuples of vertex indices, sorted lexicographically.

    ``vertex_cap`` guards against accidental huge inputs; raise it
    deliberately for larger graphs.
    """
    nverts = g.num_vertices
    if nverts > vertex_cap:
        raise ValueError(f"{nverts} vertices exceeds vertex_cap={vertex_cap}")
    if target < 1:
        raise ValueError("target must be at least 1")
    deadline = (time.perf_counter() + budget_seconds
                if budget_seconds is not None else None)
    prior = []
    if resume is not None:
        if resume.phase != "enum" or resume.target != target:
            raise ValueError("checkpoint does not match this enumeration")
        alive = np.zeros(nverts, dtype=bool)
        alive[np.asarray(resume.order, dtype=np.int64)] = True
        rows, order = _relabeled_rows(g, alive)
        if tuple(int(v) for v in order) != resume.order:
            raise ValueError("checkpoint does not match this graph")
        roots = list(resume.roots_remaining)
        prior = [tuple(c) for c in resume.found]
    else:
        alive = _core_mask(g.packed, min_deg=target - 1)
        rows, order = _relabeled_rows(g, alive)
        roots = list(range(len(rows)))
    results = _dispatch_roots(rows, len(rows), roots, "enum", target, 0,
                              deadline, threads)
    found = prior + [tuple(sorted(int(order[i]) for i in clique))
                     for r in results for clique in r[1]]
    unfinished = [u for *_, u in results for u in u]
    if unfinished:
        raise BudgetExceeded(CliqueCheckpoint(
            "enum", tuple(int(v) for v in order), tuple(sorted(unfinished)),
            (), target, tuple(sorted(found))))
    found.sort()
    for clique in found:
        for x in range(len(clique)):
            for y in range(x + 1, len(clique)):
                if not g.adjacent(clique[x], clique[y]):
                    raise AssertionError("enumerated set is not a clique")
    return found


# -- export and binary cache ----------------------------------------------------


def export_dot(g: CommutingGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f'graph "{g.label}" {{\n')
        for i in range(g.num_vertices):
            name = format_element(g.vertex_element(i))
            fh.write(f'  e{int(g.ids[i])} [label="{name}"];\n')
        for i in range(g.num_vertices):
            row = g.rows()[i]
            for j in _bit_indices(row, g.num_vertices):
                if j > i:
                    fh.write(f"  e{int(g.ids[i])} -- e{int(g.ids[j])};\n")
        fh.write("}\n")


def export_edge_csv(g: CommutingGraph, path) -> None:
    """One ``u,v`` element-ID pair per line, u < v, ascending; no header,
    so the line count equals the edge count."""
    with open(path, "w") as fh:
        for i in range(g.num_vertices):
            row = g.rows()[i]
            for j in _bit_indices(row, g.num_vertices):
                if j > i:
                    fh.write(f"{int(g.ids[i])},{int(g.ids[j])}\n")


def save_packed(g: CommutingGraph, path) -> None:
    """Binary cache: magic, version byte, n (2B LE), vertex count (8B LE),
    center count (2B LE), label length (2B LE), center IDs (8B LE each),
    label (utf-8), vertex IDs (8B LE each), packed adjacency rows (64-bit
    padded, row-major, little-endian words), then the sha256 digest of
    everything before it.  A .sha256 sidecar repeats the digest so the
    bytes can also be audited externally.
    """
    label = g.label.encode("utf-8")
    payload = bytearray()
    payload += _FORMAT_MAGIC
    payload += bytes([_FORMAT_VERSION])
    payload += int(g.n).to_bytes(2, "little")
    payload += int(g.num_vertices).to_bytes(8, "little")
    payload += len(g.center_ids).to_bytes(2, "little")
    payload += len(label).to_bytes(2, "little")
    for cid in g.center_ids:
        payload += int(cid).to_bytes(8, "little")
    payload += label
    payload += g.ids.astype("<u8").tobytes()
    payload += g.packed.astype("<u8").tobytes()
    digest = hashlib.sha256(payload).digest()
    with open(path, "wb") as fh:
        fh.write(payload)
        fh.write(digest)
    with open(f"{path}.sha256", "w") as fh:
        fh.write(f"{digest.hex()}  {os.path.basename(str(path))}\n")


def load_packed(path, verify_checksum: bool = True) -> CommutingGraph:
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != _FORMAT_MAGIC:
        raise ValueError("not a packed commuting-graph file")
    if blob[4] != _FORMAT_VERSION:
        raise ValueError(f"unsupported format version {blob[4]}")
    if len(blob) < 32 + 19:
        raise ValueError(f"truncated packed graph file {path}")
    payload, digest = blob[:-32], blob[-32:]
    if verify_checksum:
        if hashlib.sha256(payload).digest() != digest:
            raise ValueError(f"checksum mismatch for {path}")
        side = f"{path}.sha256"
        if os.path.exists(side):
            with open(side) as fh:
                recorded = fh.read().split()[0]
            if digest.hex() != recorded:
                raise ValueError(f"sidecar checksum mismatch for {path}")
    n = int.from_bytes(payload[5:7], "little")
    nverts = int.from_bytes(payload[7:15], "little")
    ncenter = int.from_bytes(payload[15:17], "little")
    nlabel = int.from_bytes(payload[17:19], "little")
    off = 19
    center_ids = tuple(int.from_bytes(payload[off + 8 * i:off + 8 * i + 8],
                                      "little") for i in range(ncenter))
    off += 8 * ncenter
    label = payload[off:off + nlabel].decode("utf-8")
    off += nlabel
    ids = np.frombuffer(payload, dtype="<u8", count=nverts, offset=off)
    ids = ids.astype(np.int64)
    off += nverts * 8
    words = (nverts + 63) // 64
    expect = off + nverts * words * 8
    if len(payload) != expect:
        raise ValueError(f"truncated packed graph file {path}")
    packed = np.frombuffer(payload, dtype="<u8", count=nverts * words,
                           offset=off).reshape(nverts, words)
    packed = packed.astype(np.uint64)
    imgs = np.full((nverts, n), n, dtype=np.int8)
    for i, eid in enumerate(ids):
        e = element_from_id(n, int(eid))
        imgs[i] = [n if v == UNDEF else v for v in e.img]
    return CommutingGraph(n, ids, imgs, packed, center_ids, label)
