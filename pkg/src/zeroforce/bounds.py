"""Closed-form lower and upper bounds on the zero forcing number, each with the
hypotheses under which it holds.

Every function returns a :class:`BoundReport`. Reports with ``proven=False``
are conjectures: they are evaluated and checked but never used to seed the
exact search.

Prop. ``Z >= n - mr(G)`` (minimum rank) is known but not computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Optional

from .graph import (
    INFINITE,
    Girth,
    Graph,
    components,
    cut_edges,
    cut_vertices,
    degree_profile,
    delete,
    girth,
    induced_subgraph,
    is_connected,
    is_triangle_free,
    min_degree,
)

LOWER = "lower"
UPPER = "upper"

BOUND_KEYS = (
    "lb_min_degree",
    "ub_max_degree",
    "ub_not_complete",
    "ub_girth",
    "lb_triangle_free",
    "lb_girth5",
    "lb_cut_vertex",
    "lb_cut_edge",
    "lb_vertex_deletion",
    "lb_tw_girth",
    "conj_girth",
    "conj_triangle_free",
)

CONJECTURE_KEYS = ("conj_girth", "conj_triangle_free")

CITATIONS = {
    "lb_min_degree": "Z >= delta (Barioli et al., 2010)",
    "ub_max_degree": "Z <= n*Delta/(Delta+1) when delta >= 1 (Amos-Caro-Davila-Pepper, 2015)",
    "ub_not_complete": "Z <= n-2 for connected non-complete G",
    "ub_girth": "Z <= n-g+2",
    "lb_triangle_free": "triangle-free, delta >= 3: Z >= delta+1",
    "lb_girth5": "girth >= 5, delta >= 2: Z >= 2*delta-2",
    "lb_cut_vertex": "delta >= 3, cut vertex with a girth >= 5 side: Z >= 3*delta-6",
    "lb_cut_edge": "delta >= 3, girth >= 5, cut edge: Z >= 4*delta-9",
    "lb_vertex_deletion": "G-K has delta >= 2, girth >= 5: Z >= 2*delta-3|K|-2",
    "lb_tw_girth": "tw >= (d-1)^(floor((g-1)/2)-1)/(12(g+1)) (Chandran-Subramanian) and tw <= Z",
    "conj_girth": "conjecture: girth g, delta >= 2: Z >= (g-3)(delta-2)+delta",
    "conj_triangle_free": "conjecture: triangle-free, delta >= 2: Z >= 2*delta-2",
}


@dataclass
class BoundReport:
    key: str
    kind: str
    applicable: bool
    reason: str
    value: Optional[int] = None
    raw_value: Optional[int] = None
    proven: bool = True
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def citation(self) -> str:
        return CITATIONS[self.key]

    def satisfied_by(self, z: int) -> Optional[bool]:
        if not self.applicable:
            return None
        return self.value <= z if self.kind == LOWER else z <= self.value


@dataclass(frozen=True)
class DeletionCertificate:
    K: tuple[int, ...]
    k: int
    residual_girth: Girth
    residual_min_degree: int


def _yes(key: str, kind: str, raw: int, reason: str, **detail: Any) -> BoundReport:
    # lower bounds that come out negative carry no information; keep the raw value
    value = max(raw, 0)
    return BoundReport(key, kind, True, reason, value, raw, key not in CONJECTURE_KEYS, dict(detail))


def _no(key: str, kind: str, reason: str) -> BoundReport:
    return BoundReport(key, kind, False, reason, proven=key not in CONJECTURE_KEYS)


def _fmt_girth(g: Girth) -> str:
    return "inf" if g == INFINITE else str(g)


def lb_min_degree(G: Graph) -> BoundReport:
    if G.n == 0:
        return _no("lb_min_degree", LOWER, "null graph")
    d = min_degree(G)
    return _yes("lb_min_degree", LOWER, d, f"delta={d}")


def ub_max_degree(G: Graph) -> BoundReport:
    if G.n == 0:
        return _no("ub_max_degree", UPPER, "null graph")
    prof = degree_profile(G)
    if prof.min_degree < 1:
        return _no("ub_max_degree", UPPER, "isolated vertex (delta=0)")
    D = prof.max_degree
    return _yes("ub_max_degree", UPPER, G.n * D // (D + 1), f"n={G.n}, Delta={D}")


def ub_not_complete(G: Graph) -> BoundReport:
    if G.m == 0:
        return _no("ub_not_complete", UPPER, "edgeless")
    if G.is_complete():
        return _no("ub_not_complete", UPPER, "complete graph")
    # K_2 + K_1 has Z=2 > n-2, so the bound needs connectivity
    if not is_connected(G):
        return _no("ub_not_complete", UPPER, "disconnected")
    return _yes("ub_not_complete", UPPER, G.n - 2, f"n={G.n}, not complete")


def ub_girth(G: Graph, g: Optional[Girth] = None) -> BoundReport:
    g = girth(G) if g is None else g
    if g == INFINITE:
        return _no("ub_girth", UPPER, "acyclic (girth inf)")
    return _yes("ub_girth", UPPER, G.n - g + 2, f"n={G.n}, g={g}")


def lb_triangle_free(G: Graph) -> BoundReport:
    d = min_degree(G)
    if not is_triangle_free(G):
        return _no("lb_triangle_free", LOWER, "has a triangle")
    if d < 3:
        return _no("lb_triangle_free", LOWER, f"delta={d} < 3")
    return _yes("lb_triangle_free", LOWER, d + 1, f"triangle-free, delta={d}")


def _girth5_guard(g: Girth, d: int) -> Optional[str]:
    # infinite girth passes "girth >= 5"
    if g < 5:
        return f"girth {g} < 5"
    if d < 2:
        return f"delta={d} < 2"
    return None


def lb_girth5(G: Graph, g: Optional[Girth] = None) -> BoundReport:
    g = girth(G) if g is None else g
    d = min_degree(G)
    why = _girth5_guard(g, d)
    if why:
        return _no("lb_girth5", LOWER, why)
    return _yes("lb_girth5", LOWER, 2 * d - 2, f"g={_fmt_girth(g)}, delta={d}")


def lb_cut_vertex(G: Graph) -> BoundReport:
    d = min_degree(G)
    if d < 3:
        return _no("lb_cut_vertex", LOWER, f"delta={d} < 3")
    cuts = cut_vertices(G)
    if not cuts:
        return _no("lb_cut_vertex", LOWER, "no cut vertex")
    for v in cuts:
        H, label = delete(G, [v])
        for comp in components(H):
            sub, _ = induced_subgraph(H, comp)
            gc = girth(sub)
            if gc >= 5:
                back = {new: old for old, new in label.items()}
                return _yes(
                    "lb_cut_vertex",
                    LOWER,
                    3 * d - 6,
                    f"delta={d}, cut vertex {v} leaves a component of girth {_fmt_girth(gc)}",
                    cut_vertex=v,
                    component=[back[u] for u in comp],
                )
    return _no("lb_cut_vertex", LOWER, "no cut vertex leaves a component of girth >= 5")


def lb_cut_edge(G: Graph, g: Optional[Girth] = None) -> BoundReport:
    d = min_degree(G)
    if d < 3:
        return _no("lb_cut_edge", LOWER, f"delta={d} < 3")
    g = girth(G) if g is None else g
    if g < 5:
        return _no("lb_cut_edge", LOWER, f"girth {g} < 5")
    bridges = cut_edges(G)
    if not bridges:
        return _no("lb_cut_edge", LOWER, "no cut edge")
    return _yes(
        "lb_cut_edge", LOWER, 4 * d - 9, f"delta={d}, g={_fmt_girth(g)}, cut edge {bridges[0]}",
        cut_edge=bridges[0],
    )


def deletion_certificate(G: Graph, K: Iterable[int]) -> tuple[Optional[DeletionCertificate], str]:
    K = tuple(sorted(set(K)))
    for v in K:
        if not 0 <= v < G.n:
            raise ValueError(f"deletion set contains {v}, not a vertex of the graph")
    H, _ = delete(G, K)
    if H.n == 0:
        return None, "nothing left after deletion"
    dH = min_degree(H)
    gH = girth(H)
    cert = DeletionCertificate(K, len(K), gH, dH)
    if dH < 2:
        return cert, f"residual delta={dH} < 2"
    if gH < 5:
        return cert, f"residual girth {gH} < 5"
    return cert, ""


def lb_vertex_deletion(G: Graph, K: Iterable[int] = ()) -> BoundReport:
    cert, why = deletion_certificate(G, K)
    if cert is None or why:
        return _no("lb_vertex_deletion", LOWER, why)
    d = min_degree(G)
    return _yes(
        "lb_vertex_deletion",
        LOWER,
        2 * d - 3 * cert.k - 2,
        f"delta={d}, K={list(cert.K)}, residual g={_fmt_girth(cert.residual_girth)}, "
        f"residual delta={cert.residual_min_degree}",
        certificate=cert,
    )


def best_vertex_deletion(G: Graph, k_max: int, floor: Optional[int] = None) -> BoundReport:
    """Best deletion bound over all K with |K| <= k_max; ties go to the smallest
    k, then the colex-least K. Sizes whose formula value cannot beat ``floor``
    are skipped."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    d = min_degree(G)
    for k in range(0, min(k_max, G.n) + 1):
        # the formula only shrinks with k, so the first qualifying size wins
        if floor is not None and 2 * d - 3 * k - 2 <= floor:
            break
        for K in _colex_subsets(G.n, k):
            cert, why = deletion_certificate(G, K)
            if cert is not None and not why:
                return lb_vertex_deletion(G, K)
    return _no("lb_vertex_deletion", LOWER, f"no deletion set of size <= {k_max} qualifies")


def _colex_subsets(n: int, k: int):
    # combinations() is lexicographic; sorting on reversed tuples gives colex
    return sorted(combinations(range(n), k), key=lambda c: c[::-1])


def lb_treewidth_girth(G: Graph, g: Optional[Girth] = None) -> BoundReport:
    g = girth(G) if g is None else g
    if g == INFINITE:
        return _no("lb_tw_girth", LOWER, "acyclic (girth inf)")
    dbar = degree_profile(G).average_degree
    if dbar <= 1:
        return _no("lb_tw_girth", LOWER, f"average degree {dbar} <= 1")
    exponent = (g - 1) // 2 - 1
    bound = (dbar - 1) ** exponent / Fraction(12 * (g + 1))
    return _yes(
        "lb_tw_girth", LOWER, math.ceil(bound), f"dbar={dbar}, g={g}, tw >= {bound}", treewidth_bound=bound
    )


def conjecture1(G: Graph, g: Optional[Girth] = None) -> BoundReport:
    g = girth(G) if g is None else g
    d = min_degree(G)
    if g == INFINITE:
        return _no("conj_girth", LOWER, "acyclic (girth inf)")
    if d < 2:
        return _no("conj_girth", LOWER, f"delta={d} < 2")
    return _yes("conj_girth", LOWER, (g - 3) * (d - 2) + d, f"g={g}, delta={d}")


def conjecture2(G: Graph) -> BoundReport:
    d = min_degree(G)
    if not is_triangle_free(G):
        return _no("conj_triangle_free", LOWER, "has a triangle")
    if d < 2:
        return _no("conj_triangle_free", LOWER, f"delta={d} < 2")
    return _yes("conj_triangle_free", LOWER, 2 * d - 2, f"triangle-free, delta={d}")


def evaluate_all(G: Graph, k_max: int = 2) -> list[BoundReport]:
    if G.n == 0:
        raise ValueError("bounds undefined for the null graph")
    g = girth(G)
    return [
        lb_min_degree(G),
        ub_max_degree(G),
        ub_not_complete(G),
        ub_girth(G, g),
        lb_triangle_free(G),
        lb_girth5(G, g),
        lb_cut_vertex(G),
        lb_cut_edge(G, g),
        best_vertex_deletion(G, k_max),
        lb_treewidth_girth(G, g),
        conjecture1(G, g),
        conjecture2(G),
    ]


def search_lower_bound(G: Graph, k_max: int = 2) -> int:
    """Largest applicable proven lower bound; at least 1 for a non-empty graph."""
    if G.n == 0:
        return 0
    g = girth(G)
    d = min_degree(G)
    reports = [
        lb_triangle_free(G),
        lb_girth5(G, g),
        lb_cut_vertex(G),
        lb_cut_edge(G, g),
        best_vertex_deletion(G, k_max, floor=d),
        lb_treewidth_girth(G, g),
    ]
    return max([1, d] + [r.value for r in reports if r.applicable])
