"""Graph realization of binary matroids by backtracking.

Given the packed column vectors of a GF(2) representation, search for a
multigraph whose cycle space equals the null space of the matrix, with
edges labeled by column index.  This is the engine behind every
graphicness test (and hence the even-cycle / even-cut sweeps).

Strategy: columns are processed in an order that schedules dependent
columns as early as possible.  A dependent column's placement is forced
(its fundamental circuit minus itself must form a path; the new edge
joins the path's ends), so branching happens only at rank-extending
columns, where the new edge may start a fresh component, hang off an
existing vertex, or join two components.  Every placement is screened
against all future circuits: the already-placed part of a circuit must
stay a disjoint union of paths.  Searching all attachment choices makes
the procedure complete; a final cycle-space verification makes it sound.

An optional per-column "apex" constraint (edge must touch one common
vertex, shared across the whole graph) supports the frame-with-units
searches used by the blocking-pair recognizer.
"""

from __future__ import annotations

import itertools


class _DSU:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent
        while p.setdefault(x, x) != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _schedule(cols: list[int]) -> list[tuple[int, bool, tuple[int, ...]]]:
    """Greedy processing order: (position-in-cols, is_free, circuit).

    ``circuit`` lists the positions (into cols) of the earlier columns
    whose XOR equals this dependent column.  Free columns are chosen to
    maximize how many unprocessed columns they bring into the span.
    """
    n = len(cols)
    unproc = set(range(n))
    tri: list[tuple[int, int]] = []  # (reduced vector, membership mask over positions)
    order: list[tuple[int, bool, tuple[int, ...]]] = []

    def reduce(v: int) -> tuple[int, int]:
        mask = 0
        for tv, tm in tri:
            if v & (tv & -tv):
                v ^= tv
                mask ^= tm
        return v, mask

    while unproc:
        dep = None
        for j in sorted(unproc):
            v, mask = reduce(cols[j])
            if v == 0:
                dep = (j, mask)
                break
        if dep is not None:
            j, mask = dep
            support = tuple(k for k in range(n) if (mask >> k) & 1)
            order.append((j, False, support))
            unproc.remove(j)
            continue
        best_j, best_gain = None, -1
        for j in sorted(unproc):
            v, _ = reduce(cols[j])
            trial = [t for t, _ in tri] + [v]
            gain = 0
            for k in unproc:
                if k == j:
                    continue
                w = cols[k]
                for t in trial:
                    if w & (t & -t):
                        w ^= t
                if w == 0:
                    gain += 1
            if gain > best_gain:
                best_gain, best_j = gain, j
        j = best_j
        v, mask = reduce(cols[j])
        tri.append((v, mask | (1 << j)))
        tri.sort(key=lambda t: t[0] & -t[0])
        order.append((j, True, ()))
        unproc.remove(j)
    return order


def _components(cols: list[int]) -> list[list[int]]:
    """Matroid connected components of the column list (positions).

    Elements sharing a fundamental circuit (w.r.t. the greedy basis) are
    joined; the transitive closure gives exactly the 1-separation
    decomposition.  Zero columns are excluded by the caller.
    """
    dsu = _DSU()
    for j, is_free, support in _schedule(cols):
        for s in support:
            dsu.union(j, s)
    groups: dict[int, list[int]] = {}
    for j in range(len(cols)):
        groups.setdefault(dsu.find(j), []).append(j)
    return sorted(groups.values())


def _placed_part_is_paths(edge_list: list[tuple[int, int]]) -> bool:
    """True iff the edges form a disjoint union of simple paths."""
    deg: dict[int, int] = {}
    dsu = _DSU()
    for u, v in edge_list:
        if u == v:
            return False
        if dsu.find(u) == dsu.find(v):
            return False  # cycle
        dsu.union(u, v)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if deg[u] > 2 or deg[v] > 2:
            return False
    return True


def _path_ends(edge_list: list[tuple[int, int]]) -> tuple[int, int] | None:
    """If the edges form one simple path, its two endpoints, else None."""
    if not edge_list:
        return None
    deg: dict[int, int] = {}
    dsu = _DSU()
    for u, v in edge_list:
        if u == v:
            return None
        if dsu.find(u) == dsu.find(v):
            return None
        dsu.union(u, v)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    roots = {dsu.find(x) for x in deg}
    if len(roots) != 1:
        return None
    ends = sorted(x for x, d in deg.items() if d == 1)
    if len(ends) != 2:
        return None
    return ends[0], ends[1]


def _circuits_of(cols: list[int], corank_cap: int = 12) -> list[int]:
    """All circuits of the column list as position masks, when the
    nullity is small enough to enumerate; otherwise the fundamental
    circuits of the greedy basis."""
    from .gf2 import BitMatrix, null_space

    n = len(cols)
    nrows = max(v.bit_length() for v in cols) if cols else 0
    null = null_space(BitMatrix.from_columns(cols, nrows))
    if len(null) <= corank_cap:
        vecs = set()
        for mask in range(1, 1 << len(null)):
            z = 0
            for i, b in enumerate(null):
                if (mask >> i) & 1:
                    z ^= b
            if z:
                vecs.add(z)
        minimal = [z for z in vecs if not any(w != z and (w & ~z) == 0 for w in vecs)]
        return sorted(minimal)
    out = []
    for j, is_free, support in _schedule(cols):
        if not is_free:
            mask = 1 << j
            for s in support:
                mask |= 1 << s
            out.append(mask)
    return sorted(out)


def _circuit_driven_order(n: int, circuits: list[int]) -> list[int]:
    """Element processing order: whole circuits at a time, each chosen
    to overlap the already-ordered elements as much as possible."""
    remaining = set(range(n))
    placed_mask = 0
    order: list[int] = []
    todo = list(circuits)
    while todo:
        best = None
        best_key = None
        for c in todo:
            overlap = bin(c & placed_mask).count("1")
            size = bin(c).count("1")
            key = (-overlap, size, c)
            if best_key is None or key < best_key:
                best_key, best = key, c
        todo.remove(best)
        for j in range(n):
            if (best >> j) & 1 and j in remaining:
                order.append(j)
                remaining.remove(j)
        placed_mask |= best
    for j in sorted(remaining):
        order.append(j)
    return order


class _ComponentSearch:
    """Backtracking realization of one connected component.

    In apex mode the flagged edges must all share one endpoint; the set
    of still-possible shared vertices is intersected as flagged edges
    are placed, and emptiness prunes the branch.
    """

    def __init__(self, cols: list[int], forced: list[bool], apex_mode: bool,
                 node_budget: int | None = None):
        self.cols = cols
        self.forced = forced
        self.apex_mode = apex_mode
        self.apex_cands: frozenset[int] | None = None  # None = unconstrained yet
        self.circuits = _circuits_of(cols)
        elem_order = _circuit_driven_order(len(cols), self.circuits)
        self.order = _schedule_in_order(cols, elem_order)
        self.rank = sum(1 for _, is_free, _ in self.order if is_free)
        self.member_of: dict[int, list[int]] = {}
        for ci, c in enumerate(self.circuits):
            for j in range(len(cols)):
                if (c >> j) & 1:
                    self.member_of.setdefault(j, []).append(ci)
        self.placement: dict[int, tuple[int, int]] = {}
        self.placed_mask = 0
        self.n_vertices = 0
        self.n_comps = 0  # vertex components of the placed graph
        self.nodes = 0
        self.node_budget = node_budget
        self.exhausted = True

    def _vertex_comps(self) -> dict[int, int]:
        dsu = _DSU()
        for v in range(self.n_vertices):
            dsu.find(v)
        for (u, v) in self.placement.values():
            dsu.union(u, v)
        return {v: dsu.find(v) for v in range(self.n_vertices)}

    def _constraint_ok(self, ci: int) -> bool:
        c = self.circuits[ci]
        placed_bits = c & self.placed_mask
        placed = [self.placement[j] for j in _bits(placed_bits)]
        if placed_bits == c:
            deg: dict[int, int] = {}
            for u, v in placed:
                if u == v:
                    return len(placed) == 1
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            return all(d == 2 for d in deg.values())
        return _placed_part_is_paths(placed)

    def _check_touched(self, pos: int) -> bool:
        for ci in self.member_of.get(pos, ()):
            if not self._constraint_ok(ci):
                return False
        return True

    def run(self) -> dict[int, tuple[int, int]] | None:
        if self._search(0):
            return dict(self.placement)
        return None

    def _search(self, step: int) -> bool:
        if self.node_budget is not None:
            self.nodes += 1
            if self.nodes > self.node_budget:
                self.exhausted = False
                return False
        if step == len(self.order):
            return True
        j, is_free, support = self.order[step]
        if not is_free:
            if len(support) == 0:
                return False  # zero column inside a component: impossible
            edges = [self.placement[s] for s in support]
            if len(support) == 1:
                u, v = edges[0]
                ends = (u, v) if u != v else None
            else:
                ends = _path_ends(edges)
            if ends is None:
                return False
            return self._try_place(j, ends, step, 0)

        remaining_free = self.rank - sum(
            1 for k in range(step) if self.order[k][1]
        )
        for (u, v), dcomps in self._free_candidates(j, remaining_free):
            saved_n = self.n_vertices
            self.n_vertices = max(self.n_vertices, u + 1, v + 1)
            if self._try_place(j, (u, v), step, dcomps):
                return True
            self.n_vertices = saved_n
        return False

    def _try_place(self, j: int, ends: tuple[int, int], step: int, dcomps: int) -> bool:
        saved_cands = self.apex_cands
        if self.apex_mode and self.forced[j]:
            here = frozenset(ends)
            new_cands = here if self.apex_cands is None else self.apex_cands & here
            if not new_cands:
                return False
            self.apex_cands = new_cands
        self.placement[j] = ends
        self.placed_mask |= 1 << j
        self.n_comps += dcomps
        ok = self._check_touched(j) and self._search(step + 1)
        if ok:
            return True
        del self.placement[j]
        self.placed_mask &= ~(1 << j)
        self.n_comps -= dcomps
        self.apex_cands = saved_cands
        return False

    def _free_candidates(self, j: int, remaining_free: int):
        """Placements for a rank-extending edge with the component-count
        delta of each.  Joining inside one vertex component would close a
        cycle, which a free column cannot do, so candidates are: join two
        components, hang off one vertex, or start an isolated edge.

        The final graph of the component is connected (one matroid
        component), so branches that cannot merge down to one vertex
        component with the remaining free placements are dropped.
        """
        comps = self._vertex_comps()
        verts = list(range(self.n_vertices))
        out: list[tuple[tuple[int, int], int]] = []
        need_apex = self.apex_mode and self.forced[j] and self.apex_cands is not None

        def feasible(dcomps: int) -> bool:
            # after this placement, comps-1 more joins must fit
            return (self.n_comps + dcomps) - 1 <= remaining_free - 1

        if need_apex:
            for a in sorted(self.apex_cands):
                for v in verts:
                    if v != a and comps[v] != comps[a] and feasible(-1):
                        out.append(((min(a, v), max(a, v)), -1))
                if feasible(0):
                    out.append(((a, self.n_vertices), 0))
            return out
        # canonical start: the very first edge of a component is (0, 1);
        # with exactly one placed edge (u0, v0), skip the pendant at v0
        # (swapping u0/v0 is an automorphism of the placed graph).
        if self.n_vertices == 0:
            return [((0, 1), 1)] if feasible(1) else []
        skip_pendant = None
        if len(self.placement) == 1:
            only = next(iter(self.placement.values()))
            if only == (0, 1):
                skip_pendant = 1
        for u, v in itertools.combinations(verts, 2):
            if comps[u] != comps[v] and feasible(-1):
                out.append(((u, v), -1))
        for u in verts:
            if u != skip_pendant and feasible(0):
                out.append(((u, self.n_vertices), 0))
        if feasible(1):
            out.append(((self.n_vertices, self.n_vertices + 1), 1))
        return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _schedule_in_order(cols: list[int], elem_order: list[int]) -> list[tuple[int, bool, tuple[int, ...]]]:
    """Free/forced schedule following a prescribed element order.

    Forced steps carry their fundamental-circuit support (positions of
    earlier *free* elements whose columns XOR to this one)."""
    tri: list[tuple[int, int]] = []
    order: list[tuple[int, bool, tuple[int, ...]]] = []
    for j in elem_order:
        v, mask = cols[j], 0
        for tv, tm in tri:
            if v & (tv & -tv):
                v ^= tv
                mask ^= tm
        if v == 0:
            support = tuple(sorted(_bits(mask)))
            order.append((j, False, support))
        else:
            tri.append((v, mask | (1 << j)))
            tri.sort(key=lambda t: t[0] & -t[0])
            order.append((j, True, ()))
    return order


def realize_graph(cols: list[int], n_rows: int, forced: list[bool] | None = None,
                  node_budget: int | None = None) -> list[tuple[int, int]] | None:
    """Realize columns as edges of a multigraph; None if not graphic.

    Returns one edge (u, v) per column, loops allowed for zero columns.
    With ``forced`` flags set, every flagged edge must be incident to
    vertex 0 (one shared apex across all components).  Deterministic.
    When ``node_budget`` is hit, returns None as well; callers needing
    to distinguish exhaustion use :func:`realize_graph_ex`.
    """
    result, _ = realize_graph_ex(cols, n_rows, forced, node_budget)
    return result


def _series_classes(cols: list[int]) -> list[list[int]]:
    """Series classes of a loopless column list: groups with identical
    incidence pattern over the null space (parallel classes of the dual)."""
    from .gf2 import BitMatrix, null_space

    nrows = max(v.bit_length() for v in cols) if cols else 0
    null = null_space(BitMatrix.from_columns(cols, nrows))
    sig: dict[tuple[int, ...], list[int]] = {}
    for j in range(len(cols)):
        key = tuple((z >> j) & 1 for z in null)
        sig.setdefault(key, []).append(j)
    return sorted(sig.values())


def _realize_component(sub_cols: list[int], sub_forced: list[bool], apex_mode: bool,
                       node_budget: int | None):
    """Realize one matroid-connected component (size >= 2, no zero
    columns).  Returns (edges dict position->pair, exhausted flag);
    edges use local vertex ids starting at 0."""
    n = len(sub_cols)
    rank = rank_of_cols(sub_cols)
    if not (apex_mode and any(sub_forced)):
        classes = _series_classes(sub_cols)
        if len(classes) < n:
            # contract all but one representative per series class,
            # realize the smaller matroid, then re-subdivide.
            reps = [cls[0] for cls in classes]
            from .gf2 import Basis

            contracted = Basis()
            for cls in classes:
                for j in cls[1:]:
                    contracted.add(sub_cols[j])
            red_cols = [contracted.reduce(sub_cols[j]) for j in reps]
            red_edges, exhausted = realize_graph_ex(red_cols, max(
                (v.bit_length() for v in red_cols), default=0), None, node_budget)
            if red_edges is None:
                return None, exhausted
            placement: dict[int, tuple[int, int]] = {}
            next_v = 1 + max((x for e in red_edges for x in e), default=-1)
            for cls, (u, v) in zip(classes, red_edges):
                chain = [u] + [next_v + t for t in range(len(cls) - 1)] + [v]
                next_v += len(cls) - 1
                for j, a, b in zip(cls, chain, chain[1:]):
                    placement[j] = (a, b)
            return placement, True
        # cosimple: a connected graphic matroid on r+1 vertices with
        # minimum degree >= 2 must have a vertex of degree <= 2n/(r+1),
        # i.e. a series pair when 2n < 3(r+1); none exists here.
        if 2 * n < 3 * (rank + 1):
            return None, True
    search = _ComponentSearch(sub_cols, sub_forced, apex_mode, node_budget)
    sol = search.run()
    return sol, search.exhausted


def rank_of_cols(cols: list[int]) -> int:
    from .gf2 import rank_ints

    nrows = max((v.bit_length() for v in cols), default=0)
    from .gf2 import BitMatrix

    m = BitMatrix.from_columns(cols, nrows)
    return rank_ints(list(m.rows), m.n_cols)


def realize_graph_ex(cols: list[int], n_rows: int, forced: list[bool] | None = None,
                     node_budget: int | None = None):
    """Like realize_graph; also reports whether the search was exhaustive."""
    n = len(cols)
    forced = forced or [False] * n
    apex_mode = any(forced)
    nonzero = [i for i in range(n) if cols[i] != 0]
    placement: dict[int, tuple[int, int]] = {}

    offset = 1 if apex_mode else 0  # vertex 0 reserved as the apex
    comps = _components([cols[i] for i in nonzero])
    exhausted = True
    for comp in comps:
        idx = [nonzero[p] for p in comp]
        sub_cols = [cols[i] for i in idx]
        sub_forced = [forced[i] for i in idx]
        if len(idx) == 1:
            # coloop: isolated edge; apex-forced coloops hang off the apex
            i = idx[0]
            if apex_mode and forced[i]:
                placement[i] = (0, offset)
                offset += 1
            else:
                placement[i] = (offset, offset + 1)
                offset += 2
            continue
        sol, comp_exhausted = _realize_component(sub_cols, sub_forced, apex_mode, node_budget)
        if sol is None:
            if not comp_exhausted:
                exhausted = False
            return None, exhausted
        # remap component vertices into the global graph; components with
        # flagged edges get their shared endpoint identified with the apex
        remap: dict[int, int] = {}
        if apex_mode and any(sub_forced):
            cands = None
            for p, flag in enumerate(sub_forced):
                if flag:
                    here = set(sol[p])
                    cands = here if cands is None else cands & here
            remap[min(cands)] = 0
        for p, (u, v) in sorted(sol.items()):
            for x in (u, v):
                if x not in remap:
                    remap[x] = offset
                    offset += 1
            placement[idx[p]] = (remap[u], remap[v])
    # loops at one fixed vertex
    if offset == 0 and not apex_mode:
        offset = 1
    for i in range(n):
        if cols[i] == 0:
            placement[i] = (0, 0)

    edges = [placement[i] for i in range(n)]
    if not _verify(cols, n_rows, edges):
        raise AssertionError("realization failed verification; search invariant broken")
    if apex_mode:
        for i in range(n):
            if forced[i] and cols[i] != 0 and 0 not in edges[i]:
                raise AssertionError("apex constraint violated by realization")
    return edges, True


def _verify(cols: list[int], n_rows: int, edges: list[tuple[int, int]]) -> bool:
    """Cycle space of the edge list must equal the matrix null space."""
    from .gf2 import BitMatrix, null_space, rank_ints

    n = len(cols)
    m = BitMatrix.from_columns(cols, n_rows)
    null = null_space(m)
    # every null vector must induce an even subgraph
    for z in null:
        deg: dict[int, int] = {}
        for i in range(n):
            if (z >> i) & 1:
                u, v = edges[i]
                if u == v:
                    continue
                deg[u] = deg.get(u, 0) ^ 1
                deg[v] = deg.get(v, 0) ^ 1
        if any(deg.values()):
            return False
    # dimensions: cycle space of G has dim |E| - |V| + comps == len(null)
    verts = {x for e in edges for x in e}
    dsu = _DSU()
    for u, v in edges:
        dsu.union(u, v)
    comps = len({dsu.find(v) for v in verts})
    cyc_dim = n - len(verts) + comps
    col_rank = rank_ints(list(m.rows), n)
    return cyc_dim == n - col_rank
