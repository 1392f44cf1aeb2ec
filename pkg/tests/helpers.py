"""Independent brute-force oracles used to cross-check the package.

Everything here is deliberately naive: dict-based composition, dict-of-sets
BFS, Bron-Kerbosch cliques.  Slow but obviously correct on small ground
sets, which is the point.
"""

from collections import deque

from invsemi.pinj import PInj, UNDEF


def oracle_compose(a: PInj, b: PInj) -> PInj:
    out = {}
    for x in range(a.n):
        y = a(x)
        if y == UNDEF:
            continue
        z = b(y)
        if z != UNDEF:
            out[x] = z
    return PInj.from_dict(a.n, out)


def oracle_commutes(a: PInj, b: PInj) -> bool:
    return oracle_compose(a, b) == oracle_compose(b, a)


def brute_adjacency(elements):
    """Commuting-graph adjacency as a dict index -> set(indices)."""
    adj = {i: set() for i in range(len(elements))}
    for i, a in enumerate(elements):
        for j in range(i + 1, len(elements)):
            if oracle_commutes(a, elements[j]):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def brute_distance(adj, s, t):
    if s == t:
        return 0
    seen = {s}
    frontier = deque([(s, 0)])
    while frontier:
        v, d = frontier.popleft()
        for w in adj[v]:
            if w == t:
                return d + 1
            if w not in seen:
                seen.add(w)
                frontier.append((w, d + 1))
    return float("inf")


def brute_eccentricity(adj, s):
    """(max distance over reached set, number reached)."""
    seen = {s: 0}
    frontier = deque([s])
    while frontier:
        v = frontier.popleft()
        for w in adj[v]:
            if w not in seen:
                seen[w] = seen[v] + 1
                frontier.append(w)
    return max(seen.values()), len(seen)


def brute_components(adj):
    left = set(adj)
    comps = []
    while left:
        s = min(left)
        seen = {s}
        frontier = deque([s])
        while frontier:
            v = frontier.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        comps.append(frozenset(seen))
        left -= seen
    return comps


def brute_max_cliques(adj):
    """(clique number, frozenset of all maximum cliques) by Bron-Kerbosch."""
    best = [0, set()]

    def expand(r, p, x):
        if not p and not x:
            if len(r) > best[0]:
                best[0], best[1] = len(r), {frozenset(r)}
            elif len(r) == best[0]:
                best[1].add(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(adj), set())
    return best[0], best[1]


def perfect_matchings(points):
    pts = list(points)
    if not pts:
        yield ()
        return
    head, rest = pts[0], pts[1:]
    for i, partner in enumerate(rest):
        for sub in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield ((head, partner),) + sub
