"""Regenerate the exhaustive graph6 fixtures under tests/fixtures/.

Graphs are built one vertex at a time (every neighborhood of the new vertex,
or every independent neighborhood for triangle-free graphs) and deduplicated
by nauty certificate. Needs pynauty, which the package itself does not use.

    python scripts/make_fixtures.py
"""

import argparse
from pathlib import Path

import pynauty

from zeroforce.corpus import write_graph6
from zeroforce.graph import Graph, bits, is_connected, min_degree

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def _pn(rows, n):
    return pynauty.Graph(n, adjacency_dict={v: bits(rows[v]) for v in range(n)})


def canonical(rows, n):
    g = _pn(rows, n)
    order = pynauty.canon_label(g)
    pos = {old: new for new, old in enumerate(order)}
    new = [0] * n
    for v in range(n):
        for w in bits(rows[v]):
            new[pos[v]] |= 1 << pos[w]
    return pynauty.certificate(g), tuple(new)


def independent(rows, mask):
    return all(not rows[v] & mask for v in bits(mask))


def extend(level, n, triangle_free):
    """All graphs on n+1 vertices from the graphs on n vertices."""
    seen = {}
    for rows in level:
        for nbrs in range(1 << n):
            if triangle_free and not independent(rows, nbrs):
                continue
            new = list(rows) + [nbrs]
            for v in bits(nbrs):
                new[v] |= 1 << n
            cert, canon = canonical(new, n + 1)
            seen.setdefault(cert, canon)
    return sorted(seen.values())


def build(max_n, triangle_free):
    level = [(0,)]
    out = {1: level}
    for n in range(1, max_n):
        level = extend(level, n, triangle_free)
        out[n + 1] = level
        print(f"{'triangle-free' if triangle_free else 'all'} n={n + 1}: {len(level)} graphs")
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n-all", type=int, default=8)
    ap.add_argument("--max-n-tf", type=int, default=10)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)

    allg = build(args.max_n_all, triangle_free=False)
    with open(OUT / f"connected_n1-{args.max_n_all}.g6", "w") as fh:
        for n in sorted(allg):
            for rows in allg[n]:
                G = Graph(n, rows)
                if is_connected(G):
                    fh.write(write_graph6(G) + "\n")

    tf = build(args.max_n_tf, triangle_free=True)
    with open(OUT / f"trianglefree_mindeg2_n4-{args.max_n_tf}.g6", "w") as fh:
        for n in sorted(tf):
            for rows in tf[n]:
                G = Graph(n, rows)
                if n >= 4 and is_connected(G) and min_degree(G) >= 2:
                    fh.write(write_graph6(G) + "\n")


if __name__ == "__main__":
    main()
