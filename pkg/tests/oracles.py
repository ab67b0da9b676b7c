"""Slow, obviously-correct reference implementations. Nothing here imports the
bitset machinery it is used to check; graphs come in as (n, edge list)."""

from itertools import combinations


def nbr_sets(n, edges):
    nb = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def naive_closure(n, edges, S):
    nb = nbr_sets(n, edges)
    colored = set(S)
    while True:
        new = set()
        for v in colored:
            white = nb[v] - colored
            if len(white) == 1:
                new |= white
        if not new:
            return colored
        colored |= new


def brute_force_z(n, edges):
    for k in range(n + 1):
        for S in combinations(range(n), k):
            if len(naive_closure(n, edges, S)) == n:
                return k, set(S)


def dfs_girth(n, edges):
    """Minimum length over all simple cycles found by DFS from each start
    vertex, only visiting larger labels than the start."""
    nb = nbr_sets(n, edges)
    best = None

    def walk(start, v, visited, length):
        nonlocal best
        for w in nb[v]:
            if w == start and length >= 3:
                best = length if best is None else min(best, length)
            elif w > start and w not in visited:
                visited.add(w)
                walk(start, w, visited, length + 1)
                visited.remove(w)

    for s in range(n):
        walk(s, s, {s}, 1)
    return best  # None for acyclic


def count_components(n, edges, removed=()):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        if u in removed or v in removed:
            continue
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n) if v not in removed})


def recount_cut_vertices(n, edges):
    base = count_components(n, edges)
    # removing v drops one vertex; it is a cut vertex if the rest splits further
    return {v for v in range(n) if count_components(n, edges, removed={v}) > base - (1 if _isolated(n, edges, v) else 0)}


def _isolated(n, edges, v):
    return all(v not in e for e in edges)


def recount_cut_edges(n, edges):
    base = count_components(n, edges)
    return {tuple(sorted(e)) for e in edges if count_components(n, [f for f in edges if f != e]) > base}
