"""Exact zero forcing number by colex subset search, seeded with the best
proven lower bound, plus enumeration of all minimum zero forcing sets."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from . import bounds
from .forcing import ColorSet, active_vertices, span
from .graph import Graph, bits, components, induced_subgraph, is_triangle_free, min_degree

DEFAULT_CAP = 14


class ZfTimeout(Exception):
    def __init__(self, lower: int, upper: int, subsets_tested: int):
        super().__init__(f"time budget exceeded; Z in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.subsets_tested = subsets_tested


class EnumerationRefused(Exception):
    pass


@dataclass
class ZfResult:
    z: int
    witness: ColorSet
    subsets_tested: int
    elapsed: float

    @property
    def witness_list(self) -> list[int]:
        return bits(self.witness)


def colex_subsets(n: int, k: int) -> Iterator[int]:
    """All k-subsets of range(n) as bitmasks in colex order (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


class _Clock:
    def __init__(self, budget: Optional[float]):
        self.deadline = None if budget is None else time.monotonic() + budget
        self.tested = 0


def _search(adj: tuple[int, ...], n: int, lower: int, clock: _Clock) -> tuple[int, int]:
    full = (1 << n) - 1
    for k in range(lower, n + 1):
        for S in colex_subsets(n, k):
            clock.tested += 1
            if clock.deadline is not None and not clock.tested & 0x3FF and time.monotonic() > clock.deadline:
                raise _Expired(k)
            if span(adj, S) == full:
                return k, S
    raise AssertionError("the full vertex set always forces")


class _Expired(Exception):
    def __init__(self, k: int):
        self.k = k


def _lower(G: Graph, seed: str, k_max: int) -> int:
    if seed == "bounds":
        return bounds.search_lower_bound(G, k_max)
    if seed == "min_degree":
        return max(1, min_degree(G)) if G.n else 0
    if seed == "none":
        return 0
    raise ValueError(f"unknown seed mode {seed!r}")


def zero_forcing_number(
    G: Graph,
    budget: Optional[float] = None,
    *,
    decompose: bool = True,
    seed: str = "bounds",
    k_max: int = 2,
) -> ZfResult:
    """Z(G) with the colex-least witness.

    The search for size k starts at the largest proven lower bound
    (``seed="bounds"``). With ``decompose`` the components are solved
    separately and the witness is the union of their witnesses. ``budget`` is
    wall-clock seconds; exceeding it raises :class:`ZfTimeout` with the
    interval known so far.
    """
    if G.n == 0:
        raise ValueError("zero forcing number needs at least one vertex")
    start = time.monotonic()
    clock = _Clock(budget)
    parts = components(G) if decompose else [list(range(G.n))]
    z = 0
    witness = 0
    for i, comp in enumerate(parts):
        if len(comp) == 1:
            z += 1
            witness |= 1 << comp[0]
            continue
        H, label = induced_subgraph(G, comp) if decompose else (G, {v: v for v in range(G.n)})
        lower = _lower(H, seed, k_max)
        try:
            k, S = _search(H.adj, H.n, lower, clock)
        except _Expired as exc:
            rest = parts[i + 1:]
            lo = z + exc.k + sum(_lower(induced_subgraph(G, c)[0], "min_degree", 0) for c in rest)
            hi = z + H.n - 1 + sum(len(c) for c in rest)
            raise ZfTimeout(lo, max(lo, hi), clock.tested) from None
        back = {new: old for old, new in label.items()}
        z += k
        for v in bits(S):
            witness |= 1 << back[v]
    return ZfResult(z, witness, clock.tested, time.monotonic() - start)


def all_minimum_zfs(G: Graph, cap: int = DEFAULT_CAP) -> list[ColorSet]:
    if G.n > cap:
        raise EnumerationRefused(f"n={G.n} exceeds enumeration cap {cap}")
    z = zero_forcing_number(G).z
    return [S for S in colex_subsets(G.n, z) if span(G.adj, S) == G.full]


def lemma1_holds(G: Graph, strict: bool = True, cap: int = DEFAULT_CAP) -> Optional[bool]:
    """Whether every round-1 force v -> w of every minimum zero forcing set S
    leaves w with a neighbor outside S.

    Returns None (inapplicable) unless G is triangle-free with minimum degree
    at least 3. ``strict=False`` drops the degree requirement so behavior below
    it can be inspected.
    """
    if not is_triangle_free(G) or (strict and min_degree(G) < 3):
        return None
    for S in all_minimum_zfs(G, cap):
        for v in bits(active_vertices(G, S)):
            w = (G.adj[v] & ~S).bit_length() - 1
            if not G.adj[w] & ~S:
                return False
    return True


def requires_two_neighbor_start(G: Graph, cap: int = DEFAULT_CAP) -> bool:
    """True when every minimum zero forcing set contains two adjacent vertices
    that can both force in the first round."""
    for S in all_minimum_zfs(G, cap):
        act = active_vertices(G, S)
        if not any(G.adj[v] & act for v in bits(act)):
            return False
    return True
