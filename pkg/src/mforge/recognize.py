"""Class-membership deciders and minor search.

Graphicness is the primitive everything else reduces to: an even-cycle
matroid is one binary extension away from graphic (contract the new
element), an even-cut matroid is one coextension away on the dual side,
and the blocking-pair class embeds into the fixed host X_r.  Each
decider returns a replayable certificate along with the verdict.

Two independent graphicness paths exist: the realization backtracker
(fast path, produces the graph) and the classical excluded-minor test
(reference path).  Tests cross-validate them; disagreement is a bug,
never silently resolved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .gf2 import Basis, BitMatrix, rank_ints
from .matroid import BinaryMatroid, MatroidError, TooLargeError, embed_columns
from .graphs import MultiGraph, SignedGraph, cycle_matroid, even_cycle_matroid, find_blocking_pair
from .realize import realize_graph, realize_graph_ex
from . import catalog as cat

GRAPHIC_REFERENCE_SIZE_CAP = 25
EVEN_CYCLE_RANK_CAP = 14
EVEN_CUT_CORANK_CAP = 14
BLOCKING_PAIR_RANK_CAP = 10
MINOR_TARGET_CAP = 21
MINOR_HOST_CAP = 40


@dataclass(frozen=True)
class MinorWitness:
    """Replayable minor certificate: contract, then delete, then relabel
    via ``mapping`` (host label -> target label)."""

    contract_set: frozenset
    delete_set: frozenset
    mapping: dict

    def replay(self, host: BinaryMatroid, target: BinaryMatroid) -> bool:
        got = host.contract(self.contract_set).delete(self.delete_set)
        relabeled = BinaryMatroid(
            BitMatrix.from_columns(list(got.cols), got.rank),
            tuple(self.mapping[lab] for lab in got.labels),
        )
        return relabeled.equal_labeled(target)


@dataclass(frozen=True)
class ClassCertificate:
    """Witness for class membership.

    kind 'graph': payload is a MultiGraph whose cycle matroid equals the
    queried matroid.  kind 'signed-graph': a SignedGraph for even-cycle
    membership.  kind 'coextension-row': packed row vector d such that
    stacking d under the dual's representation gives a graphic matroid
    (even-cut membership), payload (d, graph).
    """

    kind: str
    payload: object


# ---------------------------------------------------------------------------
# Graphic / cographic.
# ---------------------------------------------------------------------------

def _graph_from_edges_list(edges: list[tuple[int, int]]) -> MultiGraph:
    nv = 1 + max((max(e) for e in edges), default=-1)
    return MultiGraph(max(nv, 1), tuple(edges))


def is_graphic(m: BinaryMatroid) -> tuple[bool, ClassCertificate | None]:
    """Realization fast path; certificate graph has edge i labeled by
    m.labels[i]."""
    edges = realize_graph(list(m.cols), m.rank)
    if edges is None:
        return False, None
    g = _graph_from_edges_list(edges)
    check = _relabel(cycle_matroid(g), m.labels)
    if not check.equal_labeled(m):
        raise AssertionError("graph certificate failed replay")
    return True, ClassCertificate("graph", g)


def graphic_by_excluded_minors(m: BinaryMatroid) -> bool:
    """Reference decision: graphic iff no minor among the four classical
    obstructions.  Exponential; capped at 25 elements."""
    if m.size > GRAPHIC_REFERENCE_SIZE_CAP:
        raise TooLargeError(
            f"{m.size} elements exceeds the excluded-minor reference cap "
            f"{GRAPHIC_REFERENCE_SIZE_CAP}")
    for name in ("F7", "F7_dual", "MK_dual(5)", "MK33_dual"):
        if has_minor(m, cat.catalog(name)) is not None:
            return False
    return True


def is_cographic(m: BinaryMatroid) -> bool:
    ok, _ = is_graphic(m.dual())
    return ok


# ---------------------------------------------------------------------------
# Even-cycle: sweep binary extensions, contract, test graphic.
# ---------------------------------------------------------------------------

def _contracted_rows(rep: BitMatrix, c: int) -> tuple[list[int], int]:
    """Rows of the representation after adjoining column c and
    contracting it; also returns the pivot row index used."""
    pivot = (c & -c).bit_length() - 1
    prow = rep.rows[pivot]
    rows = []
    for i, r in enumerate(rep.rows):
        if i == pivot:
            continue
        rows.append(r ^ prow if (c >> i) & 1 else r)
    return rows, pivot


def _sign_vector(rep: BitMatrix, graph_rows: list[int]) -> int:
    """First row of rep outside the row space of the realized graph's
    incidence; spans the missing dimension of the even-cycle stack."""
    basis = Basis()
    for r in graph_rows:
        basis.add(r)
    for r in rep.rows:
        if not basis.contains(r):
            return r
    raise AssertionError("no sign row found; ranks inconsistent")


def is_even_cycle(m: BinaryMatroid, candidate_order: list[int] | None = None,
                  node_budget: int | None = None):
    """Decide even-cycle membership; returns (verdict, SignedGraph or
    None, exhausted flag).

    Sweeps extension columns c over GF(2)^rank in lexicographic order
    (c = 0 first, reducing to plain graphicness); for each, contracts
    the new element and tests graphicness of the remainder.
    """
    r = m.rank
    if r > EVEN_CYCLE_RANK_CAP:
        raise TooLargeError(f"rank {r} exceeds even-cycle sweep cap {EVEN_CYCLE_RANK_CAP}")
    candidates = candidate_order if candidate_order is not None else range(1 << r)
    exhausted = True
    from .graphs import incidence_matrix

    for c in candidates:
        if c == 0:
            edges, ex = realize_graph_ex(list(m.cols), r, None, node_budget)
            if edges is None:
                exhausted = exhausted and ex
                continue
            g = _graph_from_edges_list(edges)
            sg = SignedGraph(g, frozenset())
        else:
            rows, _ = _contracted_rows(m.rep, c)
            mat = BitMatrix(len(rows), m.size, tuple(rows))
            sub = BinaryMatroid(mat)  # re-reduced, rank r-1
            edges, ex = realize_graph_ex(list(sub.cols), sub.rank, None, node_budget)
            if edges is None:
                exhausted = exhausted and ex
                continue
            g = _graph_from_edges_list(edges)
            w = _sign_vector(m.rep, list(incidence_matrix(g).rows))
            sg = SignedGraph(g, frozenset(i for i in range(m.size) if (w >> i) & 1))
        check = _relabel(even_cycle_matroid(sg), m.labels)
        if not check.equal_labeled(m):
            raise AssertionError("even-cycle certificate failed replay")
        return True, sg, True
    return False, None, exhausted


def _relabel(m: BinaryMatroid, labels) -> BinaryMatroid:
    return BinaryMatroid(BitMatrix.from_columns(list(m.cols), m.rank), labels)


# ---------------------------------------------------------------------------
# Even-cut: sweep coextension rows of the dual, test graphic.
# ---------------------------------------------------------------------------

def _coset_basis(rep: BitMatrix) -> list[int]:
    """Unit vectors completing rep's row space to full; coextension rows
    matter only modulo the row space."""
    basis = Basis()
    for r in rep.rows:
        basis.add(r)
    comp = []
    for c in range(rep.n_cols):
        v = 1 << c
        if basis.add(v):
            comp.append(v)
    return comp


def is_even_cut(m: BinaryMatroid, node_budget: int | None = None):
    """Decide even-cut membership; returns (verdict, certificate or
    None, exhausted).

    A matroid is even-cut iff some coextension of its dual, minus the
    new element, is graphic; the new row d is swept over representatives
    modulo the dual's row space (2^rank(m) candidates, zero row first,
    which reduces to cographicness).
    """
    if m.corank > EVEN_CUT_CORANK_CAP:
        raise TooLargeError(f"corank {m.corank} exceeds even-cut cap {EVEN_CUT_CORANK_CAP}")
    dual = m.dual()
    comp = _coset_basis(dual.rep)
    exhausted = True
    for mask in range(1 << len(comp)):
        d = 0
        mm = mask
        i = 0
        while mm:
            if mm & 1:
                d ^= comp[i]
            mm >>= 1
            i += 1
        stacked = BinaryMatroid(BitMatrix(dual.rank + 1, m.size, dual.rep.rows + (d,)))
        edges, ex = realize_graph_ex(list(stacked.cols), stacked.rank, None, node_budget)
        if edges is None:
            exhausted = exhausted and ex
            continue
        g = _graph_from_edges_list(edges)
        return True, ClassCertificate("coextension-row", (d, g)), True
    return False, None, exhausted


def replay_even_cut(m: BinaryMatroid, certificate: ClassCertificate) -> bool:
    d, g = certificate.payload
    dual = m.dual()
    stacked = BinaryMatroid(BitMatrix(dual.rank + 1, m.size, dual.rep.rows + (d,)))
    got = _relabel(cycle_matroid(g), stacked.labels)
    return got.equal_labeled(stacked)


# ---------------------------------------------------------------------------
# Restriction embedding and the blocking-pair class.
# ---------------------------------------------------------------------------

def embeds_as_restriction(m: BinaryMatroid, host: BinaryMatroid) -> dict | None:
    """Injection of m's columns into host's columns realized by an
    injective linear row transform; {m label -> host label} or None.

    Backtracking over images of a basis of m, with dependent columns'
    forced images checked against the host column set as soon as their
    supports are placed.
    """
    if not m.is_simple() or not host.is_simple():
        raise MatroidError("restriction embedding requires simple matroids")
    if m.rank > host.rank or m.size > host.size:
        return None
    mapping = embed_columns(list(m.cols), m.rank, list(host.cols), host.rank)
    if mapping is None:
        return None
    return {m.labels[ia]: host.labels[ib] for ia, ib in enumerate(mapping)}


def in_blocking_pair_class(m: BinaryMatroid) -> bool:
    """Membership in the class of even-cycle matroids with a blocking
    pair, decided against the universal host X_r.

    Loops and parallel copies never matter, so the simplification is
    tested.  Rank <= 3 is always inside (X_3 is the full rank-3
    projective space).  At moderate rank the X_r embedding search is
    run directly; at high rank two sound necessary filters (the class
    lies inside even-cycle matroids, and duals of members are even-cut)
    almost always decide, with certificate search / embedding as the
    final word.
    """
    simp, _ = m.simplify()
    r = simp.rank
    if r == 0:
        return True
    if r <= 3:
        return True
    if r > BLOCKING_PAIR_RANK_CAP:
        raise TooLargeError(f"rank {r} exceeds blocking-pair cap {BLOCKING_PAIR_RANK_CAP}")
    if r <= 7:
        host = cat.catalog(f"X({r})")
        return embeds_as_restriction(simp, host) is not None
    # High rank: cheap sound refutations first.
    ok_cut, _, ex = is_even_cut(simp.dual())
    if not ok_cut and ex:
        return False
    found = _blocking_pair_certificate(simp)
    if found:
        return True
    ok_cyc, _, ex = is_even_cycle(simp)
    if not ok_cyc and ex:
        return False
    host = cat.catalog(f"X({r})")
    return embeds_as_restriction(simp, host) is not None


def _blocking_pair_certificate(simp: BinaryMatroid) -> bool:
    """Positive route: sweep even-cycle certificates and test each
    realized signed graph for a blocking pair."""
    r = simp.rank
    from .graphs import incidence_matrix

    for c in range(1 << r):
        if c == 0:
            edges = realize_graph(list(simp.cols), r)
        else:
            rows, _ = _contracted_rows(simp.rep, c)
            sub = BinaryMatroid(BitMatrix(len(rows), simp.size, tuple(rows)))
            edges = realize_graph(list(sub.cols), sub.rank)
        if edges is None:
            continue
        g = _graph_from_edges_list(edges)
        if c == 0:
            sg = SignedGraph(g, frozenset())
        else:
            w = _sign_vector(simp.rep, list(incidence_matrix(g).rows))
            sg = SignedGraph(g, frozenset(i for i in range(simp.size) if (w >> i) & 1))
        if find_blocking_pair(sg) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# Minor search.
# ---------------------------------------------------------------------------

def _distinct_nonzero(cols: list[int], reducer: Basis) -> int:
    seen = set()
    for v in cols:
        w = reducer.reduce(v)
        if w:
            seen.add(w)
    return len(seen)


def has_minor(m: BinaryMatroid, target: BinaryMatroid) -> MinorWitness | None:
    """First minor witness in deterministic order, or None.

    Contraction sets are independent, enumerated smallest-label-first,
    pruned by the simplification size of the partial contraction (which
    only shrinks as the contraction grows); deletions are then found by
    embedding the target into the simplified contraction.
    """
    if target.size > MINOR_TARGET_CAP:
        raise TooLargeError(f"target has {target.size} > {MINOR_TARGET_CAP} elements")
    if m.size > MINOR_HOST_CAP:
        raise TooLargeError(f"host has {m.size} > {MINOR_HOST_CAP} elements")
    if not target.is_simple():
        raise MatroidError("minor search requires a simple target")
    k = m.rank - target.rank
    if k < 0 or m.size < target.size:
        return None

    order = sorted(range(m.size), key=lambda i: m.labels[i])
    result: list[MinorWitness] = []

    def dfs(start: int, chosen: list[int], reducer: Basis) -> bool:
        if _distinct_nonzero(list(m.cols), reducer) < target.size:
            return False
        if len(chosen) == k:
            sub = m.contract([m.labels[i] for i in chosen])
            simp, _ = sub.simplify()
            if simp.rank != target.rank or simp.size < target.size:
                return False
            mapping = embed_columns(list(target.cols), target.rank,
                                    list(simp.cols), simp.rank)
            if mapping is None:
                return False
            chosen_labels = frozenset(m.labels[i] for i in chosen)
            kept = {simp.labels[ib]: target.labels[ia] for ia, ib in enumerate(mapping)}
            delete = frozenset(lab for lab in m.labels
                               if lab not in chosen_labels and lab not in kept)
            result.append(MinorWitness(chosen_labels, delete, kept))
            return True
        for i in range(start, m.size):
            pos = order[i]
            v = reducer.reduce(m.cols[pos])
            if v == 0:
                continue
            saved = list(reducer.vecs)
            reducer.add(m.cols[pos])
            if dfs(i + 1, chosen + [pos], reducer):
                return True
            reducer.vecs = saved
        return False

    if dfs(0, [], Basis()):
        return result[0]
    return None


def has_big_rank4_minor(m: BinaryMatroid, threshold: int):
    """Contraction set S with r(M/S) = 4 and |si(M/S)| >= threshold.

    Threshold 14 certifies a 14-element rank-4 projective restriction as
    a minor; 13 certifies the 13-element one.  Returns the label set or
    None; smallest-label-first, pruned by the monotone simplification
    size.
    """
    k = m.rank - 4
    if k < 0:
        return None
    order = sorted(range(m.size), key=lambda i: m.labels[i])

    def dfs(start: int, chosen: list[int], reducer: Basis):
        if _distinct_nonzero(list(m.cols), reducer) < threshold:
            return None
        if len(chosen) == k:
            return frozenset(m.labels[i] for i in chosen)
        for i in range(start, m.size):
            pos = order[i]
            if reducer.reduce(m.cols[pos]) == 0:
                continue
            saved = list(reducer.vecs)
            reducer.add(m.cols[pos])
            got = dfs(i + 1, chosen + [pos], reducer)
            if got is not None:
                return got
            reducer.vecs = saved
        return None

    return dfs(0, [], Basis())


def is_excluded_minor(m: BinaryMatroid, decider) -> bool:
    """True iff m is outside the class but every single-element deletion
    and contraction is inside.  ``decider`` maps a matroid to bool."""
    if decider(m):
        return False
    for lab in m.labels:
        if not decider(m.delete([lab])):
            return False
        if not decider(m.contract([lab])):
            return False
    return True


# boolean-only adapters for is_excluded_minor
def even_cycle_decider(m: BinaryMatroid) -> bool:
    ok, _, ex = is_even_cycle(m)
    if not ok and not ex:
        raise TooLargeError("even-cycle sweep hit its budget without exhausting")
    return ok


def even_cut_decider(m: BinaryMatroid) -> bool:
    ok, _, ex = is_even_cut(m)
    if not ok and not ex:
        raise TooLargeError("even-cut sweep hit its budget without exhausting")
    return ok


def graphic_decider(m: BinaryMatroid) -> bool:
    ok, _ = is_graphic(m)
    return ok


def cographic_decider(m: BinaryMatroid) -> bool:
    return is_cographic(m)
