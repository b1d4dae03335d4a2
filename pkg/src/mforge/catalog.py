"""Named matroids and checked-in signed-graph data.

The matrices here are data: each one is transcribed once, bit for bit,
and the verification suite cross-validates the graph transcriptions
against the matrices (labeled-matroid equality), so a transcription slip
fails loudly rather than silently.
"""

from __future__ import annotations

import re

from .gf2 import BitMatrix
from .matroid import BinaryMatroid, MatroidError
from .graphs import (
    MultiGraph,
    SignedGraph,
    complete_graph,
    cycle_matroid,
    graph_from_edges,
)

# Rank-4 binary projective space minus a line: 4 x 12.
_PG32_MINUS_L_ROWS = [
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1],
]

# The 11-element rank-6 excluded minor for the even-cycle class: 6 x 11.
_L11_ROWS = [
    [1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1],
]

# The 12-element rank-5 matroid H12 (top row is the sign row): 5 x 12.
_H12_ROWS = [
    [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1],
]


def projective_geometry(r: int) -> BinaryMatroid:
    """PG(r-1, 2): all nonzero columns of GF(2)^r in lexicographic
    (integer) order, bit i of the column value indexing row i."""
    cols = list(range(1, 1 << r))
    return BinaryMatroid(BitMatrix.from_columns(cols, r))


def x_r_matrix(r: int) -> BitMatrix:
    """The universal host for the blocking-pair class at rank r.

    Layout: two top rows over r-2 frame rows.  Columns are the edges of
    a complete graph on r-1 vertices (reduced incidence, last vertex
    dropped), three columns carrying just the top patterns 10/01/11, and
    three unit blocks, one per top pattern.
    """
    if r < 1:
        raise MatroidError("x_r_matrix needs r >= 1")
    if r == 1:
        return BitMatrix.from_rows([[1]])
    f = r - 2  # frame row count
    cols: list[int] = []
    tops = [0b01, 0b10, 0b11]
    # frame: K_{r-1} reduced incidence, lexicographic edge order
    for i in range(r - 1):
        for j in range(i + 1, r - 1):
            v = 0
            if i < f:
                v |= 1 << (2 + i)
            if j < f:
                v |= 1 << (2 + j)
            cols.append(v)
    for t in tops:
        cols.append(t)
    for t in tops:
        for u in range(f):
            cols.append(t | (1 << (2 + u)))
    return BitMatrix.from_columns(cols, r)


# ---------------------------------------------------------------------------
# Checked-in signed graphs.
# ---------------------------------------------------------------------------

def doubled_k4_signed_graph() -> SignedGraph:
    """K4 with every edge doubled, one edge of each parallel pair odd.

    Edge order matches the column order of the PG32_minus_L matrix: the
    six even copies first, then the six odd copies, pairs ordered
    (0,3),(1,3),(2,3),(0,1),(0,2),(1,2)."""
    pairs = [(0, 3), (1, 3), (2, 3), (0, 1), (0, 2), (1, 2)]
    g = graph_from_edges(4, pairs + pairs)
    return SignedGraph(g, frozenset(range(6, 12)))


def h12_signed_graph() -> SignedGraph:
    """Five-vertex graph (4-cycle-with-chord pattern) with every edge
    doubled and one copy per pair odd; edge order matches the H12
    matrix columns."""
    pairs = [(2, 4), (3, 4), (0, 1), (0, 3), (1, 4), (2, 3)]
    edges = []
    for p in pairs:
        edges.append(p)
        edges.append(p)
    g = graph_from_edges(5, edges)
    return SignedGraph(g, frozenset(range(0, 12, 2)))


def dual_k5_signed_graph() -> SignedGraph:
    """Even-cycle certificate for the dual of M(K5): 6 vertices, 10
    edges, 4 odd edges forming a triangle-with-pendant at the center."""
    edges = [(0, 1), (1, 2), (1, 3), (0, 4), (3, 4), (4, 5),
             (0, 3), (2, 3), (3, 5), (2, 5)]
    return SignedGraph(graph_from_edges(6, edges), frozenset({6, 7, 8, 9}))


def dual_k6_minus_edge_signed_graph() -> SignedGraph:
    """Even-cycle certificate for the dual of M(K6) minus one edge:
    9 vertices, 14 edges, 4 odd.  Validated against dual(M(K6 \\ e)) by
    the figure-consistency job (edge (0,4) is the unique completion of
    the 13-edge skeleton that passes that check)."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (8, 0),
             (7, 5), (7, 1), (7, 6), (6, 2), (6, 3),
             (5, 8), (5, 8), (0, 4)]
    return SignedGraph(graph_from_edges(9, edges), frozenset({6, 8, 9, 12}))


# ---------------------------------------------------------------------------
# Catalog lookup.
# ---------------------------------------------------------------------------

def k33() -> MultiGraph:
    return graph_from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


def l19_base_graph() -> MultiGraph:
    """K7 minus two adjacent edges (both at vertex 0)."""
    k7 = complete_graph(7)
    edges = [e for e in k7.edges if e not in ((0, 1), (0, 2))]
    return graph_from_edges(7, edges)


_MK_RE = re.compile(r"^MK\(?(\d+)\)?$")
_MK_DUAL_RE = re.compile(r"^MK_dual\(?(\d+)\)?$")
_X_RE = re.compile(r"^X\(?(\d+)\)?$")


def catalog(name: str) -> BinaryMatroid:
    """Named matroids, bit-exact and deterministically labeled."""
    name = name.strip()
    if name == "PG32":
        return projective_geometry(4)
    if name == "PG32_minus_e":
        return projective_geometry(4).delete([14])
    if name == "PG32_minus_2":
        return projective_geometry(4).delete([13, 14])
    if name == "PG32_minus_L":
        return BinaryMatroid(BitMatrix.from_rows(_PG32_MINUS_L_ROWS))
    if name == "L11":
        return BinaryMatroid(BitMatrix.from_rows(_L11_ROWS))
    if name == "L19":
        return cycle_matroid(l19_base_graph()).dual()
    if name == "H12":
        return BinaryMatroid(BitMatrix.from_rows(_H12_ROWS))
    if name == "H12_dual":
        return catalog("H12").dual()
    if name == "F7":
        return projective_geometry(3)
    if name == "F7_dual":
        return projective_geometry(3).dual()
    if name == "MK33_dual":
        return cycle_matroid(k33()).dual()
    m = _MK_DUAL_RE.match(name)
    if m:
        n = int(m.group(1))
        if not 2 <= n <= 9:
            raise MatroidError(f"MK_dual(n) supports 2 <= n <= 9, got {n}")
        return cycle_matroid(complete_graph(n)).dual()
    m = _MK_RE.match(name)
    if m:
        n = int(m.group(1))
        if not 2 <= n <= 9:
            raise MatroidError(f"MK(n) supports 2 <= n <= 9, got {n}")
        return cycle_matroid(complete_graph(n))
    m = _X_RE.match(name)
    if m:
        r = int(m.group(1))
        if not 1 <= r <= 10:
            raise MatroidError(f"X(r) supports 1 <= r <= 10, got {r}")
        return BinaryMatroid(x_r_matrix(r))
    raise MatroidError(f"unknown catalog name {name!r}")


CATALOG_NAMES = [
    "PG32", "PG32_minus_e", "PG32_minus_2", "PG32_minus_L",
    "L11", "L19", "H12", "H12_dual", "F7", "F7_dual",
    "MK(n) for 2<=n<=9", "MK_dual(n) for 2<=n<=9", "MK33_dual",
    "X(r) for 1<=r<=10",
]
