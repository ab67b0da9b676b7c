from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import recount_cut_edges, recount_cut_vertices
from test_graph import two_petersens_at_a_vertex
from zeroforce import bounds as B
from zeroforce.corpus import complete, complete_bipartite, cycle, empty, grid222k, heawood, path, petersen
from zeroforce.graph import Graph, disjoint_union, girth, min_degree
from zeroforce.solver import zero_forcing_number


def apexed_petersen():
    P = petersen()
    return Graph.from_edge_list(11, P.edges() + [(v, 10) for v in range(10)])


def petersens_joined_by_edge():
    P = petersen()
    return Graph.from_edge_list(20, P.edges() + [(u + 10, v + 10) for u, v in P.edges()] + [(0, 10)])


def val(report):
    return report.value if report.applicable else None


@pytest.mark.parametrize(
    "fn, G, expected",
    [
        (B.lb_min_degree, petersen(), 3),
        (B.lb_min_degree, complete(6), 5),
        (B.lb_min_degree, path(4), 1),
        (B.ub_max_degree, complete(4), 3),
        (B.ub_max_degree, cycle(5), 3),
        (B.ub_max_degree, empty(3), None),
        (B.ub_not_complete, cycle(5), 3),
        (B.ub_not_complete, complete(5), None),
        (B.ub_not_complete, path(2), None),
        (B.ub_girth, cycle(9), 2),
        (B.ub_girth, petersen(), 7),
        (B.ub_girth, path(6), None),
        (B.lb_triangle_free, petersen(), 4),
        (B.lb_triangle_free, heawood(), 4),
        (B.lb_triangle_free, complete(4), None),
        (B.lb_girth5, petersen(), 4),
        (B.lb_girth5, cycle(7), 2),
        (B.lb_girth5, cycle(4), None),
        (B.lb_cut_vertex, two_petersens_at_a_vertex(), 3),
        (B.lb_cut_vertex, petersen(), None),
        (B.lb_cut_vertex, complete(4), None),
        (B.lb_cut_edge, petersens_joined_by_edge(), 3),
        (B.lb_cut_edge, petersen(), None),
        (B.lb_cut_edge, cycle(5), None),
        (B.lb_treewidth_girth, petersen(), 1),
        (B.lb_treewidth_girth, cycle(6), 1),
        (B.lb_treewidth_girth, path(5), None),
        (B.conjecture1, petersen(), 5),
        (B.conjecture1, heawood(), 6),
        (B.conjecture1, grid222k(2), 4),
        (B.conjecture2, complete_bipartite(3, 3), 4),
        (B.conjecture2, cycle(5), 2),
        (B.conjecture2, complete(3), None),
    ],
)
def test_single_bounds(fn, G, expected):
    assert val(fn(G)) == expected


def test_cut_examples_confirmed_by_oracles():
    G = two_petersens_at_a_vertex()
    assert recount_cut_vertices(G.n, G.edges()) == {9}
    assert B.lb_cut_vertex(G).detail["cut_vertex"] == 9
    H = petersens_joined_by_edge()
    assert recount_cut_edges(H.n, H.edges()) == {(0, 10)}
    assert min_degree(H) == 3 and girth(H) == 5


def test_inapplicable_reasons():
    assert "acyclic" in B.ub_girth(path(3)).reason
    assert "complete" in B.ub_not_complete(complete(5)).reason
    r = B.ub_not_complete(disjoint_union(complete(2), empty(1)))
    assert not r.applicable and "disconnected" in r.reason


def test_vertex_deletion():
    r = B.lb_vertex_deletion(petersen(), [])
    assert r.value == 4 and r.detail["certificate"].K == ()
    r = B.lb_vertex_deletion(apexed_petersen(), [10])
    assert r.value == 3
    cert = r.detail["certificate"]
    assert (cert.k, cert.residual_girth, cert.residual_min_degree) == (1, 5, 3)
    assert not B.lb_vertex_deletion(cycle(4), []).applicable
    with pytest.raises(ValueError):
        B.lb_vertex_deletion(cycle(4), [4])


def test_best_vertex_deletion():
    r = B.best_vertex_deletion(petersen(), 2)
    assert r.value == 4 and r.detail["certificate"].K == ()
    r = B.best_vertex_deletion(apexed_petersen(), 1)
    assert r.value == 3 and r.detail["certificate"].K == (10,)
    assert not B.best_vertex_deletion(complete(4), 1).applicable
    # with a floor at delta the apex bound (3 < 4) is not worth searching for
    assert not B.best_vertex_deletion(apexed_petersen(), 1, floor=4).applicable


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_best_deletion_kmax0_is_empty_deletion(G):
    a, b = B.best_vertex_deletion(G, 0), B.lb_vertex_deletion(G, [])
    assert (a.applicable, a.value) == (b.applicable, b.value)


def test_treewidth_formula_exact():
    r = B.lb_treewidth_girth(petersen())
    assert r.detail["treewidth_bound"] == Fraction(2, 72)
    assert B.lb_treewidth_girth(cycle(6)).detail["treewidth_bound"] == Fraction(1, 84)
    # C13: exponent floor(12/2)-1 = 5, base dbar-1 = 1
    assert B.lb_treewidth_girth(cycle(13)).detail["treewidth_bound"] == Fraction(1, 12 * 14)


def test_evaluate_all_petersen():
    reports = {r.key: r for r in B.evaluate_all(petersen())}
    assert list(reports) == list(B.BOUND_KEYS)
    lowers = {k: r.value for k, r in reports.items() if r.kind == B.LOWER and r.applicable}
    uppers = {k: r.value for k, r in reports.items() if r.kind == B.UPPER and r.applicable}
    assert lowers == {
        "lb_min_degree": 3, "lb_triangle_free": 4, "lb_girth5": 4, "lb_vertex_deletion": 4,
        "lb_tw_girth": 1, "conj_girth": 5, "conj_triangle_free": 4,
    }
    assert uppers == {"ub_max_degree": 7, "ub_not_complete": 8, "ub_girth": 7}
    assert not reports["conj_girth"].proven and not reports["conj_triangle_free"].proven
    assert all(r.proven for k, r in reports.items() if k not in B.CONJECTURE_KEYS)


def test_evaluate_all_guards():
    k5 = {r.key: r for r in B.evaluate_all(complete(5))}
    assert k5["lb_min_degree"].value == 4 and k5["ub_max_degree"].value == 4
    assert not k5["ub_not_complete"].applicable
    assert not any(k5[k].applicable for k in ("lb_triangle_free", "lb_girth5", "lb_cut_vertex", "lb_cut_edge"))
    p4 = {r.key: r for r in B.evaluate_all(path(4))}
    assert p4["lb_min_degree"].value == 1 and not p4["ub_girth"].applicable
    assert [k for k, r in p4.items() if r.applicable and r.kind == B.LOWER] == ["lb_min_degree"]


def test_report_invariants_and_clamp():
    r = B.lb_cut_edge(petersens_joined_by_edge())
    assert r.raw_value == r.value == 3
    # negative raw values are clamped to 0 but kept
    rep = B._yes("lb_cut_edge", B.LOWER, -1, "synthetic")
    assert rep.value == 0 and rep.raw_value == -1


@settings(max_examples=300)
@given(graphs(max_n=8))
def test_bounds_sandwich_z(G):
    z = zero_forcing_number(G, seed="none").z
    for r in B.evaluate_all(G):
        assert (r.value is not None) == r.applicable
        if r.applicable and r.proven:
            assert r.satisfied_by(z), (r.key, r.value, z)
        if r.applicable and r.kind == B.LOWER:
            assert r.value <= G.n


@given(graphs(max_n=9))
def test_dominance_and_conjecture_consistency(G):
    reps = {r.key: r for r in B.evaluate_all(G)}
    d = min_degree(G)
    if reps["lb_girth5"].applicable and d >= 3:
        assert reps["lb_girth5"].value >= d + 1 >= d
    if girth(G) == 4 and reps["conj_girth"].applicable and reps["conj_triangle_free"].applicable:
        assert reps["conj_girth"].value == reps["conj_triangle_free"].value
