"""Commutation tests and centralizers for partial injective transformations.

Two routes decide whether a pair commutes.  The naive route composes both
ways and compares; it is the oracle.  The structural route checks the
normal form of one factor against the other: cycles must map onto
equal-length cycles with a consistent rotation, chain prefixes must map
onto chain suffixes ending at the final point (a lone head image merely
stays outside the domain), and points off the span may only land off the
span or on a chain's final point.  The structural route
is the production predicate; both are kept on purpose and are cross-checked
in the test suite.

Centralizers of permutations admit direct enumeration without touching the
ambient monoid: an element commuting with a permutation is determined by a
length-preserving partial injection on its cycle set plus one rotation
offset per mapped cycle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .pinj import PInj, UNDEF, compose, decompose

__all__ = [
    "commutes_naive",
    "commutes_structural",
    "CommuteChecker",
    "SplitPartition",
    "split_partition",
    "centralizer",
    "centralizer_of_permutation",
    "iter_permutation_centralizer",
    "permutation_centralizer_order",
    "overlap_classes",
    "permutation_joint_centralizer",
]


def commutes_naive(a: PInj, b: PInj) -> bool:
    """Oracle test: ``a * b == b * a`` by two explicit compositions."""
    ai, bi = a.img, b.img
    for x in range(a.n):
        y = ai[x]
        ab = bi[y] if y != UNDEF else UNDEF
        y = bi[x]
        ba = ai[y] if y != UNDEF else UNDEF
        if ab != ba:
            return False
    return True


class CommuteChecker:
    """Precomputed normal form of one element, reusable against many others.

    Build once per left factor when filtering a stream; ``commutes`` runs in
    O(n) per candidate.
    """

    __slots__ = ("a", "n", "cycles", "chains", "loc", "chain_last")

    def __init__(self, a: PInj):
        self.a = a
        self.n = a.n
        d = decompose(a)
        self.cycles = d.cycles
        self.chains = d.chains
        loc = [None] * a.n  # point -> (kind, part index, position)
        for ci, part in enumerate(d.cycles):
            for i, x in enumerate(part):
                loc[x] = ("c", ci, i)
        for ci, part in enumerate(d.chains):
            for i, x in enumerate(part):
                loc[x] = ("h", ci, i)
        self.loc = loc
        self.chain_last = frozenset(part[-1] for part in d.chains)

    def commutes(self, b: PInj) -> bool:
        img = b.img
        loc = self.loc
        for part in self.cycles:
            k = len(part)
            y0 = img[part[0]]
            if y0 == UNDEF:
                # a touched cycle must be wholly inside dom(b)
                if any(img[x] != UNDEF for x in part):
                    return False
                continue
            t = loc[y0]
            if t is None or t[0] != "c":
                return False
            target = self.cycles[t[1]]
            if len(target) != k:
                return False
            j = t[2]
            ok = True
            for i in range(1, k):
                if img[part[i]] != target[(j + i) % k]:
                    ok = False
                    break
            if not ok:
                return False
        for part in self.chains:
            # dom(b) may only meet the chain in a prefix {x0..xp}, carried
            # onto the suffix of some chain so that xp lands on its last point
            p = -1
            broken = False
            for i, x in enumerate(part):
                if img[x] != UNDEF:
                    if i != p + 1:
                        broken = True
                        break
                    p = i
            if broken:
                return False
            if p == -1:
                continue
            t = loc[img[part[0]]]
            if p == 0:
                # A lone head image only needs to sit outside dom(a): off
                # the span, or on the final point of any chain.
                if t is None or (t[0] == "h"
                                 and t[2] == len(self.chains[t[1]]) - 1):
                    continue
                return False
            if t is None or t[0] != "h":
                return False
            target = self.chains[t[1]]
            mt = len(target) - 1
            if t[2] != mt - p:
                return False
            for i in range(1, p + 1):
                if img[part[i]] != target[mt - p + i]:
                    return False
        for x in range(self.n):
            if loc[x] is None:
                y = img[x]
                if y != UNDEF and loc[y] is not None and y not in self.chain_last:
                    return False
        return True


def commutes_structural(a: PInj, b: PInj) -> bool:
    """Production commutation test via the normal form of ``a``."""
    if a.n != b.n:
        raise ValueError("ground sizes differ")
    return CommuteChecker(a).commutes(b)


# -- split partitions ---------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    """A two-block partition {A, B} of the ground set attached to an element
    whose centralizer acts blockwise: restriction to A (and to B) is
    multiplicative on commuting pairs."""

    A: frozenset
    B: frozenset


def split_partition(g: PInj) -> SplitPartition:
    """Blocks for a non-extreme idempotent, or for a permutation with at
    least two distinct cycle lengths (block A holds the cycles whose length
    matches the cycle through point 0).
    """
    if g.is_zero() or g.is_identity():
        raise ValueError("zero and identity have no split partition")
    full = set(range(g.n))
    if g.is_idempotent():
        a = frozenset(g.dom())
        return SplitPartition(a, frozenset(full - a))
    if g.is_permutation():
        d = decompose(g)
        lengths = {len(c) for c in d.cycles}
        if len(lengths) < 2:
            raise ValueError("uniform cycle lengths admit no canonical split")
        k = next(len(c) for c in d.cycles if 0 in c)
        a = frozenset(x for c in d.cycles if len(c) == k for x in c)
        return SplitPartition(a, frozenset(full - a))
    raise ValueError("split partition needs an idempotent or a permutation")


# -- centralizers -------------------------------------------------------------


def centralizer(a: PInj, universe=None, max_rank=None):
    """All elements of ``universe`` commuting with ``a``, as a SemigroupSet.

    ``universe`` may be an iterable of elements, or None for the whole
    monoid on a.n points (optionally cut to rank <= max_rank, i.e. an
    ideal).  The universe is streamed, never materialized.
    """
    from .construct import SemigroupSet, enumerate_elements

    if universe is None:
        universe = enumerate_elements(a.n, max_rank=max_rank)
    chk = CommuteChecker(a)
    return SemigroupSet.from_elements(a.n, (u for u in universe if chk.commutes(u)))


def _cycle_classes(a: PInj) -> dict:
    d = decompose(a)
    if d.chains or len(d.span()) != a.n:
        raise ValueError("not a permutation of the full ground set")
    classes: dict = {}
    for c in d.cycles:
        classes.setdefault(len(c), []).append(c)
    return classes


def iter_permutation_centralizer(a: PInj):
    """Yield every element commuting with the permutation ``a``.

    Choices factor over cycle-length classes: inside a class with t cycles
    of length L, pick an injective partial map between cycles (domain
    subset, ordered targets) and a rotation offset in range(L) per mapped
    cycle.  The empty choice everywhere yields the zero map.
    """
    classes = _cycle_classes(a)
    per_class = []
    for length in sorted(classes):
        cyc = classes[length]
        t = len(cyc)
        options = []
        for r in range(t + 1):
            for dom_idx in itertools.combinations(range(t), r):
                for tgt_idx in itertools.permutations(range(t), r):
                    for offs in itertools.product(range(length), repeat=r):
                        options.append((dom_idx, tgt_idx, offs))
        per_class.append((cyc, options))
    for combo in itertools.product(*(opts for _, opts in per_class)):
        img = [UNDEF] * a.n
        for (cyc, _), (dom_idx, tgt_idx, offs) in zip(per_class, combo):
            for di, ti, off in zip(dom_idx, tgt_idx, offs):
                src, tgt = cyc[di], cyc[ti]
                k = len(src)
                for i, x in enumerate(src):
                    img[x] = tgt[(i + off) % k]
        yield PInj(a.n, img)


def permutation_centralizer_order(a: PInj) -> int:
    """Exact size of the centralizer of a permutation in the full monoid."""
    total = 1
    for length, cyc in _cycle_classes(a).items():
        t = len(cyc)
        total *= sum(math.comb(t, r) ** 2 * math.factorial(r) * length ** r
                     for r in range(t + 1))
    return total


def centralizer_of_permutation(a: PInj):
    """Materialized centralizer of a permutation, ID-sorted, with the
    structural count asserted against the stream."""
    from .construct import SemigroupSet

    elems = list(iter_permutation_centralizer(a))
    expect = permutation_centralizer_order(a)
    if len(elems) != expect or len(set(elems)) != expect:
        raise AssertionError("centralizer stream disagrees with its count")
    return SemigroupSet.from_elements(a.n, elems)


# -- joint centralizers of two permutations ----------------------------------


def overlap_classes(d: PInj, e: PInj) -> list:
    """Classes of the transitive closure of 'same cycle of d or of e'."""
    n = d.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for perm in (d, e):
        for c in decompose(perm).cycles:
            for x in c[1:]:
                union(c[0], x)
    groups: dict = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return [frozenset(g) for g in groups.values()]


def permutation_joint_centralizer(d: PInj, e: PInj) -> list:
    """All elements commuting with both permutations ``d`` and ``e``,
    by constraint propagation.

    Requires the cycle-overlap closure to be a single class covering the
    ground set; then any nonzero commuting element is total and determined
    by the image of point 0, so at most n+1 elements survive.
    """
    n = d.n
    classes = overlap_classes(d, e)
    if len(classes) != 1:
        raise ValueError("overlap closure is not a single class")
    cycles = {}
    for perm in (d, e):
        dec = decompose(perm)
        loc = [None] * n
        for ci, c in enumerate(dec.cycles):
            for i, x in enumerate(c):
                loc[x] = (ci, i)
        cycles[id(perm)] = (dec.cycles, loc)

    chk_d, chk_e = CommuteChecker(d), CommuteChecker(e)
    out = [PInj.zero(n)]
    for v0 in range(n):
        img = [UNDEF] * n
        img[0] = v0
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for perm in (d, e):
                parts, loc = cycles[id(perm)]
                ci, i = loc[x]
                cj, j = loc[img[x]]
                src, tgt = parts[ci], parts[cj]
                if len(src) != len(tgt):
                    ok = False
                    break
                k = len(src)
                for s in range(1, k):
                    xx = src[(i + s) % k]
                    yy = tgt[(j + s) % k]
                    if img[xx] == UNDEF:
                        img[xx] = yy
                        stack.append(xx)
                    elif img[xx] != yy:
                        ok = False
                        break
                if not ok:
                    break
        if not ok or UNDEF in img:
            continue
        if len(set(img)) != n:
            continue
        cand = PInj(n, img)
        if chk_d.commutes(cand) and chk_e.commutes(cand):
            out.append(cand)
    return out
