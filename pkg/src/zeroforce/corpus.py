"""graph6 encoding, named graph families, and corpus streaming."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator, Union

from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 68719476735


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _decode_n(data: bytes) -> tuple[int, int]:
    """Returns (n, number of bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6Error("truncated vertex count", len(data))
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def parse_graph6(line: Union[str, bytes]) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    data = line.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {chr(b)!r} outside 63..126", i)
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(data) - pos != need:
        raise Graph6Error(f"expected {need} edge bytes for n={n}, found {len(data) - pos}", pos)
    rows = [0] * n
    k = 0
    # upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for offset in range(need):
        byte = data[pos + offset] - 63
        for shift in range(5, -1, -1):
            bit = byte >> shift & 1
            if k < nbits:
                if bit:
                    i, j = next(pairs)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                else:
                    next(pairs)
            elif bit:
                raise Graph6Error("nonzero padding bit", pos + offset)
            k += 1
    return Graph(n, tuple(rows))


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    if n <= MAX_N:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"n={n} exceeds the graph6 limit {MAX_N}")


def write_graph6(G: Graph) -> str:
    out = bytearray(_encode_n(G.n))
    acc = 0
    count = 0
    for j in range(1, G.n):
        col = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            count += 1
            if count == 6:
                out.append(63 + acc)
                acc = count = 0
    if count:
        out.append(63 + (acc << (6 - count)))
    return out.decode("ascii")


# -- named families -------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph.from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty needs n >= 1")
    return Graph.from_edge_list(n, [])


def grid222k(k: int) -> Graph:
    """P_2 x P_2 x P_k; vertex (x, y, z) gets label 4*z + 2*y + x."""
    if k < 1:
        raise ValueError("grid222k needs k >= 1")
    edges = []
    for z in range(k):
        for y in range(2):
            for x in range(2):
                v = 4 * z + 2 * y + x
                if x == 0:
                    edges.append((v, v + 1))
                if y == 0:
                    edges.append((v, v + 2))
                if z + 1 < k:
                    edges.append((v, v + 4))
    return Graph.from_edge_list(4 * k, edges)


def petersen() -> Graph:
    """Kneser graph K(5,2); vertices are the 2-subsets of {0..4} in lexicographic order."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edge_list(10, edges)


def heawood() -> Graph:
    """Incidence graph of the Fano plane: points 0..6, lines 7..13,
    point i on line j iff j - i is 0, 1 or 3 mod 7."""
    edges = [(i, 7 + (i + s) % 7) for i in range(7) for s in (0, 1, 3)]
    return Graph.from_edge_list(14, edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "grid222k": (grid222k, 1),
    "petersen": (petersen, 0),
    "heawood": (heawood, 0),
    "empty": (empty, 1),
}


def generate(name: str, *params: int) -> Graph:
    if name not in FAMILIES:
        raise ValueError(f"unknown graph family {name!r}; known: {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """'cycle:6' -> ('cycle', (6,)); 'complete_bipartite:3,3' -> (..., (3, 3))."""
    name, _, rest = spec.partition(":")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
    except ValueError:
        raise ValueError(f"bad parameters in {spec!r}") from None
    return name, params


# -- corpora --------------------------------------------------------------

@dataclass
class CorpusEntry:
    index: int
    line: str
    graph: Graph


@dataclass
class CorpusError:
    index: int
    line: str
    error: str


def stream_corpus(path: Union[str, Path]) -> Iterator[Union[CorpusEntry, CorpusError]]:
    """One entry per non-blank line, in file order. Bad lines become
    CorpusError records; an unreadable file raises OSError immediately."""
    fh = open(path, "rb")

    def entries():
        with fh:
            yield from stream_lines(fh)

    return entries()


def stream_lines(lines) -> Iterator[Union[CorpusEntry, CorpusError]]:
    index = 0
    for raw in lines:
        text = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        text = text.strip()
        if index == 0 and text.startswith(HEADER):
            text = text[len(HEADER):]
        if not text:
            continue
        try:
            yield CorpusEntry(index, text, parse_graph6(text))
        except Graph6Error as exc:
            yield CorpusError(index, text, str(exc))
        index += 1
