"""The zero forcing process.

Colored sets are plain int bitmasks over the vertex labels of the graph they
belong to. A colored vertex ``v`` forces its neighbor ``w`` when ``w`` is the
only uncolored neighbor of ``v``. ``closure`` applies every available force
simultaneously each round; ``closure_sequential`` applies them one at a time
and exists to check that both reach the same fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits

ColorSet = int
Force = tuple[int, int]


@dataclass
class ForcingTrace:
    layers: list[ColorSet]
    forces: list[tuple[int, int, int]] = field(default_factory=list)
    # active[t]: colored vertices of layers[t] with exactly one uncolored neighbor
    active: list[ColorSet] = field(default_factory=list)

    @property
    def initial(self) -> ColorSet:
        return self.layers[0]

    @property
    def final(self) -> ColorSet:
        return self.layers[-1]

    @property
    def rounds(self) -> int:
        return len(self.layers) - 1


def _check_subset(G: Graph, colored: ColorSet) -> None:
    if colored < 0 or colored >> G.n:
        raise ValueError(f"colored set {bits(colored) if colored >= 0 else colored} not within 0..{G.n - 1}")


def active_vertices(G: Graph, colored: ColorSet) -> ColorSet:
    act = 0
    for v in bits(colored):
        white = G.adj[v] & ~colored
        if white and not white & (white - 1):
            act |= 1 << v
    return act


def force_step(G: Graph, colored: ColorSet) -> tuple[ColorSet, list[Force]]:
    """One simultaneous round. Returns the newly colored vertices and the
    recorded forces; when several vertices could force the same ``w`` the
    least-index one is recorded."""
    _check_subset(G, colored)
    newly = 0
    forcer: dict[int, int] = {}
    for v in bits(colored):
        white = G.adj[v] & ~colored
        if white and not white & (white - 1):
            w = white.bit_length() - 1
            if w not in forcer:
                forcer[w] = v
                newly |= white
    return newly, sorted(((v, w) for w, v in forcer.items()), key=lambda f: f[1])


def closure(G: Graph, S: ColorSet) -> ForcingTrace:
    _check_subset(G, S)
    trace = ForcingTrace(layers=[S])
    colored = S
    t = 0
    while True:
        trace.active.append(active_vertices(G, colored))
        newly, forces = force_step(G, colored)
        if not newly:
            return trace
        t += 1
        trace.forces.extend((v, w, t) for v, w in forces)
        colored |= newly
        trace.layers.append(colored)


def closure_sequential(G: Graph, S: ColorSet) -> ColorSet:
    """Apply the least (forcer, forced) pair available, one force at a time."""
    _check_subset(G, S)
    colored = S
    while True:
        for v in bits(colored):
            white = G.adj[v] & ~colored
            if white and not white & (white - 1):
                colored |= white
                break
        else:
            return colored


def span(adj: tuple[int, ...], colored: int) -> int:
    """Final colored set, without bookkeeping. Hot loop of the solver."""
    frontier = colored
    while frontier:
        # only vertices adjacent to something newly colored can become active
        cand = 0
        for u in bits(frontier):
            cand |= adj[u]
        cand = (cand | frontier) & colored
        frontier = 0
        while cand:
            low = cand & -cand
            cand ^= low
            white = adj[low.bit_length() - 1] & ~colored
            if white and not white & (white - 1):
                colored |= white
                frontier |= white
    return colored


def is_zero_forcing_set(G: Graph, S: ColorSet) -> bool:
    _check_subset(G, S)
    return span(G.adj, S) == G.full
