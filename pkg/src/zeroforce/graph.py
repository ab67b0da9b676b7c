"""Immutable simple graphs with bitset adjacency and the structural invariants
needed by the bound guards (degrees, girth, components, cut vertices/edges)."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

# Acyclic graphs have infinite girth; math.inf compares correctly against ints.
INFINITE = math.inf
Girth = Union[int, float]

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def bits(mask: int) -> list[int]:
    """Vertices present in a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a loop")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        for v, row in enumerate(rows):
            if row >> n or row >> v & 1:
                raise GraphError(f"row {v} has a loop or out-of-range neighbor")
            for w in bits(row):
                if not rows[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")
        return cls(n, tuple(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return all(row | (1 << v) == self.full for v, row in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    average_degree: Fraction


def degree_profile(G: Graph) -> DegreeProfile:
    if G.n == 0:
        raise GraphError("degree profile undefined for the null graph")
    degs = G.degrees()
    return DegreeProfile(min(degs), max(degs), Fraction(sum(degs), G.n))


def min_degree(G: Graph) -> int:
    return min(G.degrees()) if G.n else 0


def girth(G: Graph) -> Girth:
    """Shortest cycle length by BFS from every root; INFINITE when acyclic."""
    best = INFINITE
    for root in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # nothing shorter can close once 2*dist[u]+1 >= best
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(G.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_triangle_free(G: Graph) -> bool:
    for u in range(G.n):
        for v in bits(G.adj[u] >> (u + 1) << (u + 1)):
            if G.adj[u] & G.adj[v]:
                return False
    return True


def components(G: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits(comp))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def _lowlink(G: Graph) -> tuple[set[int], set[Edge]]:
    """Tarjan articulation points and bridges, iterative DFS."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cut_v: set[int] = set()
    bridges: set[Edge] = set()
    clock = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(bits(G.adj[root])))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, u, iter(bits(G.adj[w]))))
                    advanced = True
                    break
                if w != par:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if par >= 0:
                low[par] = min(low[par], low[u])
                if low[u] > disc[par]:
                    bridges.add((min(par, u), max(par, u)))
                if par == root:
                    root_children += 1
                elif low[u] >= disc[par]:
                    cut_v.add(par)
        if root_children >= 2:
            cut_v.add(root)
    return cut_v, bridges


def cut_vertices(G: Graph) -> list[int]:
    return sorted(_lowlink(G)[0])


def cut_edges(G: Graph) -> list[Edge]:
    return sorted(_lowlink(G)[1])


def delete(
    G: Graph, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()
) -> tuple[Graph, dict[int, int]]:
    """Remove edges then vertices. Survivors are relabeled 0..n'-1 in ascending
    order of their old labels; the returned map sends old label -> new label."""
    gone = set()
    for v in vertices:
        if not 0 <= v < G.n:
            raise GraphError(f"cannot delete vertex {v}: not in graph")
        gone.add(v)
    rows = list(G.adj)
    for e in edges:
        u, v = e
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise GraphError(f"cannot delete edge ({u}, {v}): not in graph")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    keep = [v for v in range(G.n) if v not in gone]
    label = {old: new for new, old in enumerate(keep)}
    new_rows = []
    for old in keep:
        row = 0
        for w in bits(rows[old]):
            if w in label:
                row |= 1 << label[w]
        new_rows.append(row)
    return Graph(len(keep), tuple(new_rows)), label


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = set(vertices)
    return delete(G, [v for v in range(G.n) if v not in keep])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shifted = tuple(row << G.n for row in H.adj)
    return Graph(G.n + H.n, G.adj + shifted)
