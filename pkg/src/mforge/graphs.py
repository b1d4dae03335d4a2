"""Multigraphs, signed graphs, and grafts.

These supply the combinatorial certificates behind the recognition
algorithms: a signed graph witnesses even-cycle membership, a graft
witnesses even-cut membership, and the exhaustive constructions here
double as independent test oracles for the linear-algebraic deciders.

Edge order is load-bearing: the matroid built from a graph labels its
elements by edge index, so checked-in edge lists are data, not style.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .gf2 import Basis, BitMatrix, in_row_space
from .matroid import BinaryMatroid, MatroidError, TooLargeError

GRAFT_VERTEX_CAP = 16


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{self.n_vertices - 1}")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edges_at(self, v: int) -> list[int]:
        """Indices of non-loop edges incident with v."""
        return [i for i, (a, b) in enumerate(self.edges) if (a == v) != (b == v)]

    def delete_vertices(self, drop: set[int]) -> tuple["MultiGraph", list[int]]:
        """Remove vertices and incident edges; returns (graph, kept edge indices)."""
        keep_v = [v for v in range(self.n_vertices) if v not in drop]
        remap = {v: i for i, v in enumerate(keep_v)}
        kept = []
        new_edges = []
        for i, (u, v) in enumerate(self.edges):
            if u in drop or v in drop:
                continue
            kept.append(i)
            new_edges.append((remap[u], remap[v]))
        return MultiGraph(len(keep_v), tuple(new_edges)), kept


@dataclass(frozen=True)
class SignedGraph:
    graph: MultiGraph
    odd_edges: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for i in self.odd_edges:
            if not 0 <= i < self.graph.n_edges:
                raise GraphError(f"odd edge index {i} out of range")


@dataclass(frozen=True)
class Graft:
    graph: MultiGraph
    terminals: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for v in self.terminals:
            if not 0 <= v < self.graph.n_vertices:
                raise GraphError(f"terminal {v} out of range")
        if len(self.terminals) % 2 != 0:
            raise GraphError("terminal set must have even size")


# ---------------------------------------------------------------------------
# Constructions.
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> MultiGraph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    return MultiGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def graph_from_edges(n: int, edges) -> MultiGraph:
    return MultiGraph(n, tuple((int(u), int(v)) for u, v in edges))


def incidence_matrix(g: MultiGraph) -> BitMatrix:
    """|V| x |E| over GF(2); loop columns are zero."""
    rows = [0] * g.n_vertices
    for j, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        rows[u] |= 1 << j
        rows[v] |= 1 << j
    return BitMatrix(g.n_vertices, g.n_edges, tuple(rows))


def cycle_matroid(g: MultiGraph) -> BinaryMatroid:
    return BinaryMatroid(incidence_matrix(g))


def even_cycle_matroid(sg: SignedGraph) -> BinaryMatroid:
    """M([w; D]): incidence matrix with the odd-edge indicator row on top."""
    inc = incidence_matrix(sg.graph)
    w = 0
    for i in sg.odd_edges:
        w |= 1 << i
    stacked = BitMatrix(inc.n_rows + 1, inc.n_cols, (w,) + inc.rows)
    return BinaryMatroid(stacked)


def resign(sg: SignedGraph, vertex: int) -> SignedGraph:
    if not 0 <= vertex < sg.graph.n_vertices:
        raise GraphError("resign vertex out of range")
    star = set(sg.graph.edges_at(vertex))
    return SignedGraph(sg.graph, frozenset(sg.odd_edges ^ star))


def find_blocking_pair(sg: SignedGraph) -> tuple[int, int] | None:
    """Lexicographically first pair {u, v} such that some resigning puts
    every odd edge at u or v.

    Resignings add cuts to the odd-edge indicator, so {u, v} works iff
    the indicator restricted to G - u - v lies in the cut space (row
    space of the incidence matrix) of G - u - v.
    """
    g = sg.graph
    for u in range(g.n_vertices):
        for v in range(u + 1, g.n_vertices):
            sub, kept = g.delete_vertices({u, v})
            w = 0
            for pos, orig in enumerate(kept):
                if orig in sg.odd_edges:
                    w |= 1 << pos
            if in_row_space(incidence_matrix(sub), w):
                return (u, v)
    return None


def blocking_pair_oracle(sg: SignedGraph) -> tuple[int, int] | None:
    """Exhaustive reference: try all resigning sets R (2^|V|) and all
    vertex pairs directly.  Test oracle only."""
    g = sg.graph
    for rmask in range(1 << g.n_vertices):
        odd = set(sg.odd_edges)
        for v in range(g.n_vertices):
            if (rmask >> v) & 1:
                odd ^= set(g.edges_at(v))
        for u in range(g.n_vertices):
            for v in range(u + 1, g.n_vertices):
                if all(g.edges[i][0] in (u, v) or g.edges[i][1] in (u, v) for i in odd):
                    return (u, v)
    return None


def graft_matroid(gr: Graft) -> BinaryMatroid:
    """Matroid whose circuits are the inclusion-wise minimal even cuts
    delta(U), |U ∩ T| even.

    Spans every even-cut vector and asserts the span is unchanged when
    restricted to inclusion-minimal nonzero cuts (symmetric-difference
    closure makes the two spans provably equal; the assertion guards
    transcription bugs).  The returned representation is a basis of the
    orthogonal complement of that span.
    """
    g = gr.graph
    if g.n_vertices > GRAFT_VERTEX_CAP:
        raise TooLargeError(f"graft has {g.n_vertices} > {GRAFT_VERTEX_CAP} vertices")
    n = g.n_edges
    cuts: list[int] = []
    for umask in range(1 << g.n_vertices):
        tcount = bin(umask & _terminal_mask(gr)).count("1")
        if tcount % 2 != 0:
            continue
        vec = 0
        for j, (a, b) in enumerate(g.edges):
            if a == b:
                continue
            if ((umask >> a) & 1) != ((umask >> b) & 1):
                vec |= 1 << j
        cuts.append(vec)
    full = Basis()
    for v in cuts:
        full.add(v)
    nonzero = sorted({v for v in cuts if v})
    minimal = [v for v in nonzero
               if not any(w != v and (w & ~v) == 0 for w in nonzero)]
    mini = Basis()
    for v in minimal:
        mini.add(v)
    if mini.rank != full.rank:
        raise MatroidError("minimal even cuts do not span the even-cut space")
    circuit_space = BitMatrix.from_ints([v for v in full.vecs], n)
    from .gf2 import null_space

    rep_rows = null_space(circuit_space)
    return BinaryMatroid(BitMatrix.from_ints(rep_rows, n))


def _terminal_mask(gr: Graft) -> int:
    m = 0
    for v in gr.terminals:
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# Text format: "vertices: n", one edge per line "u v [odd]", optional
# "terminals: a b c d" line for grafts.
# ---------------------------------------------------------------------------

def parse_graph_text(text: str) -> tuple[MultiGraph, frozenset[int], frozenset[int]]:
    """Returns (graph, odd edge indices, terminals)."""
    n = None
    edges: list[tuple[int, int]] = []
    odd: set[int] = set()
    terminals: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        low = s.lower()
        if low.startswith("vertices:"):
            n = int(s.split(":", 1)[1])
            continue
        if low.startswith("terminals:"):
            terminals = {int(x) for x in s.split(":", 1)[1].replace(",", " ").split()}
            continue
        parts = s.split()
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'u v [odd]'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: endpoints must be integers") from None
        if len(parts) == 3:
            if parts[2].lower() != "odd":
                raise GraphError(f"line {lineno}: trailing token must be 'odd'")
            odd.add(len(edges))
        edges.append((u, v))
    if n is None:
        raise GraphError("missing 'vertices: n' header")
    return MultiGraph(n, tuple(edges)), frozenset(odd), frozenset(terminals)


def format_graph_text(g: MultiGraph, odd: frozenset[int] = frozenset(),
                      terminals: frozenset[int] = frozenset()) -> str:
    out = [f"vertices: {g.n_vertices}"]
    for i, (u, v) in enumerate(g.edges):
        out.append(f"{u} {v} odd" if i in odd else f"{u} {v}")
    if terminals:
        out.append("terminals: " + " ".join(str(v) for v in sorted(terminals)))
    return "\n".join(out) + "\n"
