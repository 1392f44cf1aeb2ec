"""Constructions, enumeration, and counting in the symmetric inverse monoid.

The enumeration is rank-stratified: rank 0 upward, domain subsets in
lexicographic order, then image subsets, then bijections.  That order is
exactly ascending element ID, so every generator here is restartable from
an ID offset and filters such as ``max_rank`` skip whole strata.

Counting is exact integer arithmetic throughout: the monoid order is
``sum C(n,r)^2 r!``; idempotents number ``2^n``; nilpotents are counted by
Lah numbers (partitions of the ground set into ordered lists); the null
semigroups built from single-step chains K -> L have order
``sum C(|K|,r) C(|L|,r) r!``, maximized over splits at ``|K| = n // 2``.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

from .pinj import (
    PInj,
    UNDEF,
    compose,
    classify,
    element_id,
    element_from_id,
    format_element,
    monoid_order,
    parse,
    stratum_sizes,
)
from .commute import commutes_naive

__all__ = [
    "SemigroupSet",
    "SemigroupFlags",
    "NilpotentAnalysis",
    "ExtremalReport",
    "enumerate_elements",
    "count_elements",
    "balanced_null_order",
    "null_semigroup",
    "balanced_partitions",
    "balanced_null_semigroups",
    "idempotent_semilattice",
    "closure",
    "classify_semigroup",
    "nilpotent_analysis",
    "max_commutative_nilpotent",
]


# -- element sets -------------------------------------------------------------


class SemigroupSet:
    """An ID-sorted set of elements of I(n), with lazily computed flags."""

    __slots__ = ("n", "elements", "ids", "_cache")

    def __init__(self, n: int, elements, ids):
        self.n = n
        self.elements = tuple(elements)
        self.ids = tuple(ids)
        self._cache = {}

    @classmethod
    def from_elements(cls, n: int, elements) -> "SemigroupSet":
        ranked = sorted({element_id(e): e for e in elements}.items())
        return cls(n, (e for _, e in ranked), (i for i, _ in ranked))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self._element_set()

    def __eq__(self, other):
        return (isinstance(other, SemigroupSet)
                and self.n == other.n and self.ids == other.ids)

    def __hash__(self):
        return hash((self.n, self.ids))

    def _element_set(self):
        if "set" not in self._cache:
            self._cache["set"] = frozenset(self.elements)
        return self._cache["set"]

    def is_closed(self) -> bool:
        if "closed" not in self._cache:
            es = self._element_set()
            self._cache["closed"] = all(compose(a, b) in es
                                        for a in self.elements
                                        for b in self.elements)
        return self._cache["closed"]

    def is_commutative(self) -> bool:
        if "comm" not in self._cache:
            els = self.elements
            self._cache["comm"] = all(commutes_naive(els[i], els[j])
                                      for i in range(len(els))
                                      for j in range(i + 1, len(els)))
        return self._cache["comm"]

    def is_null(self) -> bool:
        if "null" not in self._cache:
            zero = PInj.zero(self.n)
            self._cache["null"] = all(compose(a, b) == zero
                                      for a in self.elements
                                      for b in self.elements)
        return self._cache["null"]

    def serialize(self) -> str:
        lines = [f"n={self.n} order={len(self.elements)}"]
        lines += [format_element(e) for e in self.elements]
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str) -> "SemigroupSet":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = dict(kv.split("=") for kv in lines[0].split())
        n = int(head["n"])
        elems = [parse(ln, n) for ln in lines[1:]]
        if len(elems) != int(head["order"]):
            raise ValueError("element count disagrees with header")
        return cls.from_elements(n, elems)

    def __repr__(self):
        return f"SemigroupSet(n={self.n}, order={len(self.elements)})"


@dataclass(frozen=True)
class SemigroupFlags:
    order: int
    closed: bool
    commutative: bool
    null: bool
    nilpotent: bool
    inverse: bool
    semilattice: bool


def classify_semigroup(s: SemigroupSet) -> SemigroupFlags:
    """Algebraic flags of a finite element set, decided by definition.

    ``nilpotent`` means closed with every member nilpotent (or zero);
    ``inverse`` means closed and regular -- idempotents of the ambient
    monoid always commute, so regularity is the whole content here, but
    the idempotent check is run anyway because it is free.
    """
    closed = s.is_closed()
    commutative = s.is_commutative()
    null = s.is_null()
    nilp = closed and all(classify(e).kind in ("zero", "nilpotent") for e in s)
    els = list(s)
    regular = closed and all(
        any(compose(compose(a, x), a) == a for x in els) for a in els)
    idems = [e for e in els if e.is_idempotent()]
    idem_comm = all(commutes_naive(u, v) for u in idems for v in idems)
    inverse = regular and idem_comm
    semilattice = closed and commutative and len(idems) == len(els)
    return SemigroupFlags(len(els), closed, commutative, null,
                          nilp, inverse, semilattice)


# -- enumeration --------------------------------------------------------------


def _img_is_nilpotent(img) -> bool:
    in_ima = set(y for y in img if y != UNDEF)
    cnt = 0
    for x in range(len(img)):
        if img[x] != UNDEF and x not in in_ima:
            y = x
            while img[y] != UNDEF:
                y = img[y]
                cnt += 1
    return cnt == len(in_ima)


def enumerate_elements(n: int, filt: str = "all", max_rank=None, start_id: int = 0):
    """Yield elements of I(n) ascending by ID.

    ``filt`` is one of all | idempotent | permutation | nilpotent;
    ``max_rank`` cuts the enumeration to an ideal.  ``start_id`` resumes
    mid-stream without re-emitting earlier elements.
    """
    if filt not in ("all", "idempotent", "permutation", "nilpotent"):
        raise ValueError(f"unknown filter {filt!r}")
    sizes = stratum_sizes(n)
    eid = 0
    top = n if max_rank is None else min(max_rank, n)
    for r in range(top + 1):
        if eid + sizes[r] <= start_id or (filt == "permutation" and r < n):
            eid += sizes[r]
            continue
        fact = math.factorial(r)
        cnr = math.comb(n, r)
        dom_block = cnr * fact
        if filt == "idempotent":
            for drank, dom in enumerate(itertools.combinations(range(n), r)):
                cur = eid + (drank * cnr + drank) * fact
                if cur < start_id:
                    continue
                img = [UNDEF] * n
                for x in dom:
                    img[x] = x
                yield PInj(n, img)
            eid += sizes[r]
            continue
        for dom in itertools.combinations(range(n), r):
            if eid + dom_block <= start_id:
                eid += dom_block
                continue
            for ima in itertools.combinations(range(n), r):
                if eid + fact <= start_id:
                    eid += fact
                    continue
                for word in itertools.permutations(ima):
                    if eid >= start_id:
                        img = [UNDEF] * n
                        for x, y in zip(dom, word):
                            img[x] = y
                        if filt != "nilpotent" or _img_is_nilpotent(img):
                            yield PInj(n, img)
                    eid += 1


def count_elements(n: int, filt: str = "all", max_rank=None) -> int:
    """Exact count matching ``enumerate_elements`` with the same arguments."""
    top = n if max_rank is None else min(max_rank, n)
    if filt == "all":
        return sum(stratum_sizes(n)[: top + 1])
    if filt == "idempotent":
        return sum(math.comb(n, r) for r in range(top + 1))
    if filt == "permutation":
        return math.factorial(n) if top == n else 0
    if filt == "nilpotent":
        # k lists cover the ground set, Lah count, rank n - k
        return sum(math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)
                   for k in range(max(1, n - top), n + 1)) if n else 1
    raise ValueError(f"unknown filter {filt!r}")


# -- null semigroups from single-step chains ----------------------------------


def balanced_null_order(n: int) -> int:
    """Largest order of a null semigroup of single-step chains on n points;
    attained by splits of sizes floor(n/2) and ceil(n/2)."""
    if n < 1:
        raise ValueError("need n >= 1")
    m = n // 2
    return sum(math.comb(m, r) * math.comb(n - m, r) * math.factorial(r)
               for r in range(m + 1))


def null_semigroup(K, L) -> SemigroupSet:
    """All joins of disjoint one-step chains from K into L, zero included.

    K and L must partition the ground set.  Every product of two members
    lands on zero, so the set is a commutative null subsemigroup of order
    ``sum C(|K|,r) C(|L|,r) r!``.
    """
    K = tuple(sorted(K))
    L = tuple(sorted(L))
    n = len(K) + len(L)
    if set(K) & set(L) or set(K) | set(L) != set(range(n)) or not K or not L:
        raise ValueError("K and L must be disjoint nonempty blocks covering 0..n-1")
    out = []
    for r in range(min(len(K), len(L)) + 1):
        for xs in itertools.combinations(K, r):
            for ys in itertools.permutations(L, r):
                img = [UNDEF] * n
                for x, y in zip(xs, ys):
                    img[x] = y
                out.append(PInj(n, img))
    return SemigroupSet.from_elements(n, out)


def balanced_partitions(n: int):
    """Ordered splits (K, L) with |K| = n//2 or |K| = n - n//2."""
    m = n // 2
    full = set(range(n))
    sizes = [m] if n % 2 == 0 else [m, n - m]
    for size in sizes:
        for K in itertools.combinations(range(n), size):
            yield K, tuple(sorted(full - set(K)))


def balanced_null_semigroups(n: int):
    for K, L in balanced_partitions(n):
        yield null_semigroup(K, L)


def idempotent_semilattice(n: int) -> SemigroupSet:
    """The 2^n idempotents; products are intersections of domains."""
    out = []
    for r in range(n + 1):
        for dom in itertools.combinations(range(n), r):
            img = [UNDEF] * n
            for x in dom:
                img[x] = x
            out.append(PInj(n, img))
    return SemigroupSet.from_elements(n, out)


def closure(seed, n=None, max_size: int = 1_000_000) -> SemigroupSet:
    """Multiplicative closure of ``seed`` under left-to-right composition."""
    seed = list(seed)
    if not seed and n is None:
        raise ValueError("empty seed needs an explicit n")
    n = seed[0].n if n is None else n
    have = set(seed)
    frontier = list(have)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(have):
                for c in (compose(a, b), compose(b, a)):
                    if c not in have:
                        have.add(c)
                        fresh.append(c)
                        if len(have) > max_size:
                            raise RuntimeError("closure exceeded max_size")
        frontier = fresh
    return SemigroupSet.from_elements(n, have)


# -- structure of commutative nilpotent sets ----------------------------------


@dataclass(frozen=True)
class NilpotentAnalysis:
    """Interaction sets of a nilpotent family: C collects points that are
    simultaneously in some domain and some image; per c, A_c holds the
    preimages of c and B_c its images across the family.  A_c and B_c are
    disjoint for commuting nilpotent families, which is asserted."""

    c_points: frozenset
    a_sets: dict
    b_sets: dict


def nilpotent_analysis(s: SemigroupSet) -> NilpotentAnalysis:
    doms = set()
    imas = set()
    for e in s:
        doms.update(e.dom())
        imas.update(e.ima())
    cpts = doms & imas
    a_sets = {}
    b_sets = {}
    for c in sorted(cpts):
        a_sets[c] = frozenset(x for e in s for x in e.dom() if e(x) == c)
        b_sets[c] = frozenset(e(c) for e in s if e(c) != UNDEF)
        if a_sets[c] & b_sets[c]:
            raise AssertionError(f"preimage and image sets of {c} intersect")
    return NilpotentAnalysis(frozenset(cpts), a_sets, b_sets)


# -- extremal commutative nilpotent subsemigroups ------------------------------


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    max_order: int
    count: int
    witnesses: tuple
    elapsed_s: float = field(compare=False, default=0.0)


def max_commutative_nilpotent(n: int, budget_seconds=None, threads: int = 1,
                              force: bool = False) -> ExtremalReport:
    """Search the commuting graph on nonzero nilpotents for all maximum
    cliques, then close each under product (the closure must not grow).

    Exhaustive and exact; guarded to 3 <= n <= 7 where the graph sizes are
    72 to 37632 vertices (``force`` lifts the guard: still exact, but the
    search may not finish in reasonable time).
    """
    from . import graph as _graph
    from ._bulk import elements_matrix

    if not 3 <= n <= 7 and not force:
        raise ValueError("supported for 3 <= n <= 7; pass force=True to try anyway")
    t0 = time.perf_counter()
    ids, mat = elements_matrix(n, "nilpotent")
    keep = ids != 0  # drop the zero map; it is central everywhere here
    g = _graph.graph_from_matrix(n, ids[keep], mat[keep], center_ids=(0,),
                                 label=f"nilpotent-n{n}")
    size, _ = _graph.clique_number(g, budget_seconds=budget_seconds,
                                   threads=threads)
    cliques = _graph.maximum_cliques(g, target=size, vertex_cap=50_000,
                                     budget_seconds=budget_seconds)
    zero = PInj.zero(n)
    witnesses = []
    for idx in cliques:
        elems = [g.vertex_element(i) for i in idx] + [zero]
        sg = SemigroupSet.from_elements(n, elems)
        cl = closure(list(sg), n)
        if not (len(cl) == len(sg) and cl == sg):
            raise AssertionError("maximum clique is not product-closed")
        witnesses.append(sg)
    witnesses.sort(key=lambda s: s.ids)
    return ExtremalReport(n, size + 1, len(witnesses), tuple(witnesses),
                          time.perf_counter() - t0)
