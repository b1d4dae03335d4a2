"""Labeled binary matroids with minors, duality, and connectivity.

A matroid is carried as an ordered tuple of distinct integer labels plus
a full-row-rank GF(2) representation (one column per label).  Labels are
assigned at construction and preserved by every operation, so witness
sets always refer to the same elements no matter how many minors deep a
computation is.

Most work happens on packed column vectors (ints over the row index),
which keeps rank queries and closure computations at a handful of word
operations each.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gf2 import (
    Basis,
    BitMatrix,
    GF2Error,
    rank_ints,
    rref_ints,
)

CONNECTIVITY_GROUND_SET_CAP = 24


class MatroidError(ValueError):
    pass


class TooLargeError(MatroidError):
    """Ground set exceeds the enumeration bound of a brute-force check."""


@dataclass(frozen=True)
class ElementSet:
    """A subset of a matroid's labels, stored as a bitmask over label
    positions (bit i set means labels[i] is in the set)."""

    mask: int

    @staticmethod
    def from_labels(m: "BinaryMatroid", labels) -> "ElementSet":
        mask = 0
        for lab in labels:
            mask |= 1 << m.position(lab)
        return ElementSet(mask)

    def labels(self, m: "BinaryMatroid") -> tuple[int, ...]:
        return tuple(m.labels[i] for i in range(len(m.labels)) if (self.mask >> i) & 1)


class BinaryMatroid:
    """M(A) for a GF(2) matrix A, with stable element labels.

    The representation is eagerly row-reduced: ``rep`` always has full
    row rank equal to the matroid's rank.  Two row-equivalent input
    matrices construct equal matroids.
    """

    __slots__ = ("labels", "rep", "cols", "_pos")

    def __init__(self, rep: BitMatrix, labels=None):
        if labels is None:
            labels = tuple(range(rep.n_cols))
        labels = tuple(labels)
        if len(labels) != rep.n_cols:
            raise MatroidError("label count != column count")
        if len(set(labels)) != len(labels):
            raise MatroidError("labels must be pairwise distinct")
        rows, _ = rref_ints(list(rep.rows), rep.n_cols)
        reduced = BitMatrix(len(rows), rep.n_cols, tuple(rows))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "rep", reduced)
        object.__setattr__(self, "cols", tuple(reduced.columns()))
        object.__setattr__(self, "_pos", {lab: i for i, lab in enumerate(labels)})

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMatroid is immutable")

    # -- basics --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return self.rep.n_rows

    @property
    def corank(self) -> int:
        return self.size - self.rank

    def position(self, label) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise MatroidError(f"unknown label {label!r}") from None

    def column_of(self, label) -> int:
        return self.cols[self.position(label)]

    def __repr__(self):
        return f"BinaryMatroid(rank={self.rank}, size={self.size})"

    # -- rank machinery --------------------------------------------------

    def rank_of(self, subset) -> int:
        """Rank of a set of labels."""
        vecs = [self.cols[self.position(lab)] for lab in subset]
        return rank_ints(vecs, self.rank)

    def is_independent(self, subset) -> bool:
        subset = list(subset)
        return self.rank_of(subset) == len(subset)

    def lam(self, subset) -> int:
        """Connectivity function r(S) + r(E-S) - r(M)."""
        s = set(subset)
        comp = [lab for lab in self.labels if lab not in s]
        return self.rank_of(s) + self.rank_of(comp) - self.rank

    # -- minors ----------------------------------------------------------

    def delete(self, subset) -> "BinaryMatroid":
        s = set(subset)
        for lab in s:
            self.position(lab)
        keep = [i for i, lab in enumerate(self.labels) if lab not in s]
        new_labels = tuple(self.labels[i] for i in keep)
        new_cols = [self.cols[i] for i in keep]
        return BinaryMatroid(BitMatrix.from_columns(new_cols, self.rank), new_labels)

    def contract(self, subset) -> "BinaryMatroid":
        s = set(subset)
        for lab in s:
            self.position(lab)
        # Basis of the contracted set, lowest labels first (by position).
        basis = Basis()
        pivot_vecs: list[int] = []
        for i, lab in enumerate(self.labels):
            if lab in s and basis.add(self.cols[i]):
                pivot_vecs.append(self.cols[i])
        keep = [i for i, lab in enumerate(self.labels) if lab not in s]
        # Project surviving columns modulo span(pivot_vecs), then re-coordinatize.
        proj = Basis()
        for v in pivot_vecs:
            proj.add(v)
        base_rank = proj.rank
        reduced_cols = [proj.reduce(self.cols[i]) for i in keep]
        mat = BitMatrix.from_columns(reduced_cols, self.rank)
        return BinaryMatroid(mat, tuple(self.labels[i] for i in keep))

    def minor(self, contract_set, delete_set) -> "BinaryMatroid":
        c = set(contract_set)
        d = set(delete_set)
        if c & d:
            raise MatroidError("contract and delete sets intersect")
        return self.contract(c).delete(d)

    # -- duality -----------------------------------------------------------

    def dual(self) -> "BinaryMatroid":
        """Standard-form dual: if rep ~ [I | D] under a column permutation,
        the dual is [D^T | I] under the inverse permutation."""
        n, r = self.size, self.rank
        rows, pivots = rref_ints(list(self.rep.rows), n)
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        dual_rows = [0] * (n - r)
        for k, q in enumerate(free):
            dual_rows[k] |= 1 << q
            for i, p in enumerate(pivots):
                if (rows[i] >> q) & 1:
                    dual_rows[k] |= 1 << p
        return BinaryMatroid(BitMatrix(n - r, n, tuple(dual_rows)), self.labels)

    # -- simplification ------------------------------------------------------

    def loops(self) -> list:
        return [lab for i, lab in enumerate(self.labels) if self.cols[i] == 0]

    def parallel_classes(self) -> list[list]:
        """Classes of equal nonzero columns, each sorted by position."""
        groups: dict[int, list] = {}
        for i, lab in enumerate(self.labels):
            v = self.cols[i]
            if v == 0:
                continue
            groups.setdefault(v, []).append(lab)
        return list(groups.values())

    def simplify(self) -> tuple["BinaryMatroid", list]:
        """Drop loops, keep the lowest-position representative of each
        parallel class.  Returns (simple matroid, kept labels)."""
        seen: set[int] = set()
        kept: list = []
        for i, lab in enumerate(self.labels):
            v = self.cols[i]
            if v == 0 or v in seen:
                continue
            seen.add(v)
            kept.append(lab)
        dropped = [lab for lab in self.labels if lab not in set(kept)]
        return self.delete(dropped), kept

    def cosimplify(self) -> tuple["BinaryMatroid", list]:
        s, kept = self.dual().simplify()
        return s.dual(), kept

    def is_simple(self) -> bool:
        vals = [v for v in self.cols]
        return 0 not in vals and len(set(vals)) == len(vals)

    # -- connectivity ----------------------------------------------------------

    def _check_connectivity_cap(self):
        if self.size > CONNECTIVITY_GROUND_SET_CAP:
            raise TooLargeError(
                f"ground set of size {self.size} exceeds the enumeration "
                f"bound {CONNECTIVITY_GROUND_SET_CAP} for connectivity checks"
            )

    def _proper_side_ranks(self):
        """Yield (subset positions, r(S), r(E-S), |S|) over all S with
        1 <= |S| <= n/2, ranks computed on packed columns."""
        n = self.size
        idx = range(n)
        for t in range(1, n // 2 + 1):
            for combo in itertools.combinations(idx, t):
                s_cols = [self.cols[i] for i in combo]
                cset = set(combo)
                o_cols = [self.cols[i] for i in idx if i not in cset]
                yield combo, rank_ints(s_cols, self.rank), rank_ints(o_cols, self.rank), t

    def is_k_connected(self, k: int) -> bool:
        """Tutte k-connectivity by exhaustive bipartition enumeration."""
        self._check_connectivity_cap()
        n = self.size
        for combo, rs, ro, t in self._proper_side_ranks():
            lam = rs + ro - self.rank
            other = n - t
            # a j-separation for some j < k exists iff lam(S) <= j-1 and
            # min(|S|, |E-S|) >= j for some j < k; the best j for this S
            # is j = lam + 1.
            j = lam + 1
            if j < k and min(t, other) >= j:
                return False
        return True

    def is_vertically_k_connected(self, k: int) -> bool:
        """For each partition (X, Y) with r(X)+r(Y)-r(M) < k-1, either X
        or Y must be spanning."""
        self._check_connectivity_cap()
        r = self.rank
        for combo, rs, ro, t in self._proper_side_ranks():
            if rs + ro - r < k - 1 and rs < r and ro < r:
                return False
        return True

    def is_cyclically_k_connected(self, k: int) -> bool:
        return self.dual().is_vertically_k_connected(k)

    # -- equality / isomorphism ---------------------------------------------

    def equal_labeled(self, other: "BinaryMatroid") -> bool:
        """Same label set and the same rank on every subset."""
        if set(self.labels) != set(other.labels):
            return False
        order = sorted(self.labels)
        a = [self.cols[self.position(lab)] for lab in order]
        b = [other.cols[other.position(lab)] for lab in order]
        ma = BitMatrix.from_columns(a, self.rank)
        mb = BitMatrix.from_columns(b, other.rank)
        ra, _ = rref_ints(list(ma.rows), len(order))
        rb, _ = rref_ints(list(mb.rows), len(order))
        return ra == rb

    def isomorphic(self, other: "BinaryMatroid") -> dict | None:
        """A label bijection making the matroids equal, or None."""
        if self.size != other.size or self.rank != other.rank:
            return None
        # A bijection is an isomorphism iff it is one for the duals, and
        # the search is far faster at low rank (dependencies bite early).
        if self.rank > self.size - self.rank:
            return self.dual().isomorphic(other.dual())
        my_loops, their_loops = self.loops(), other.loops()
        if len(my_loops) != len(their_loops):
            return None
        sa, kept_a = self.simplify()
        sb, kept_b = other.simplify()
        if sa.size != sb.size:
            return None
        class_a = {min(cls, key=self.position): sorted(cls, key=self.position)
                   for cls in self.parallel_classes()}
        class_b = {min(cls, key=other.position): sorted(cls, key=other.position)
                   for cls in other.parallel_classes()}
        size_a = {lab: len(class_a[lab]) for lab in sa.labels}
        size_b = {lab: len(class_b[lab]) for lab in sb.labels}
        if sorted(size_a.values()) != sorted(size_b.values()):
            return None

        def class_constraint(ia: int, ib: int) -> bool:
            return size_a[sa.labels[ia]] == size_b[sb.labels[ib]]

        mapping = embed_columns(list(sa.cols), sa.rank, list(sb.cols), sb.rank,
                                require_all=True, pair_ok=class_constraint)
        if mapping is None:
            return None
        bij: dict = {}
        for ia, ib in enumerate(mapping):
            for la, lb in zip(class_a[sa.labels[ia]], class_b[sb.labels[ib]]):
                bij[la] = lb
        for la, lb in zip(sorted(my_loops), sorted(their_loops)):
            bij[la] = lb
        return bij

    # -- text format -------------------------------------------------------------

    def to_text(self) -> str:
        header = "labels: " + ", ".join(str(x) for x in self.labels)
        from .gf2 import format_matrix

        return header + "\n" + format_matrix(self.rep) + "\n"

    @staticmethod
    def from_text(text: str) -> "BinaryMatroid":
        from .gf2 import parse_matrix_block

        lines = text.splitlines()
        labels = None
        start = 0
        for i, line in enumerate(lines):
            s = line.strip()
            if s.startswith("#") or s == "":
                continue
            if s.lower().startswith("labels:"):
                body = s.split(":", 1)[1]
                labels = tuple(int(x) for x in body.replace(",", " ").split())
                start = i + 1
            break
        mat, _ = parse_matrix_block(lines, start)
        return BinaryMatroid(mat, labels)


# ---------------------------------------------------------------------------
# Column embedding search: the shared backtracker behind isomorphism and
# restriction-embedding tests.
# ---------------------------------------------------------------------------

def _embedding_schedule(cols: list[int], n_rows: int) -> list[tuple[int, bool, tuple[int, ...]]]:
    """Processing order for the embedding search.

    Returns a list of (column index, is_free, coordinate support) where
    the support names earlier *free* steps whose images XOR to this
    column's forced image.  Greedy: dependent columns are scheduled as
    soon as they are spanned; otherwise the free column spanning the
    most unprocessed columns is taken (lowest index on ties).
    """
    n = len(cols)
    unprocessed = set(range(n))
    basis_vecs: list[int] = []  # images-by-position of free steps
    basis_ids: list[int] = []
    schedule: list[tuple[int, bool, tuple[int, ...]]] = []

    def coords(v: int) -> tuple[int, ...] | None:
        # Express v over basis_vecs by elimination with bookkeeping.
        acc = 0
        vv = v
        work = list(zip(basis_vecs, range(len(basis_vecs))))
        # Gaussian: reduce vv against a triangulated copy.
        tri: list[tuple[int, int]] = []  # (vector, membership mask)
        for vec, i in work:
            cur, mask = vec, 1 << i
            for tvec, tmask in tri:
                if cur & (tvec & -tvec):
                    cur ^= tvec
                    mask ^= tmask
            if cur:
                tri.append((cur, mask))
        mask_out = 0
        for tvec, tmask in tri:
            if vv & (tvec & -tvec):
                vv ^= tvec
                mask_out ^= tmask
        if vv:
            return None
        return tuple(i for i in range(len(basis_vecs)) if (mask_out >> i) & 1)

    while unprocessed:
        placed = None
        for j in sorted(unprocessed):
            c = coords(cols[j])
            if c is not None:
                schedule.append((j, False, c))
                unprocessed.remove(j)
                placed = j
                break
        if placed is not None:
            continue
        # Choose the free column spanning the most unprocessed columns.
        best_j, best_gain = None, -1
        for j in sorted(unprocessed):
            trial = basis_vecs + [cols[j]]
            gain = 0
            tri: list[int] = []
            for v in trial:
                for t in tri:
                    if v & (t & -t):
                        v ^= t
                if v:
                    tri.append(v)
            for k in unprocessed:
                if k == j:
                    continue
                v = cols[k]
                for t in tri:
                    if v & (t & -t):
                        v ^= t
                if v == 0:
                    gain += 1
            if gain > best_gain:
                best_gain, best_j = gain, j
        j = best_j
        schedule.append((j, True, ()))
        basis_vecs.append(cols[j])
        basis_ids.append(j)
        unprocessed.remove(j)

    # Re-express supports in terms of free-step order (already are).
    return schedule


def embed_columns(a_cols: list[int], a_rank: int, b_cols: list[int], b_rank: int,
                  require_all: bool = True, pair_ok=None) -> list[int] | None:
    """Injective map of a's columns into b's columns realized by an
    injective linear transform; returns positions into b_cols, or None.

    ``pair_ok(ia, ib)`` may veto individual assignments (used to respect
    parallel-class sizes during isomorphism search).  Deterministic: the
    first mapping in candidate index order is returned.
    """
    na, nb = len(a_cols), len(b_cols)
    if na > nb or a_rank > b_rank:
        return None
    if na == 0:
        return []
    if any(v == 0 for v in a_cols) or len(set(a_cols)) != na:
        raise MatroidError("embedding search requires simple (distinct, nonzero) columns")
    schedule = _embedding_schedule(a_cols, a_rank)

    b_index: dict[int, int] = {}
    for j, v in enumerate(b_cols):
        if v in b_index:
            raise MatroidError("embedding host must be simple")
        b_index[v] = j

    assign = [-1] * na          # a position -> b position
    used = [False] * nb
    free_images: list[int] = []  # image vectors of free steps, in order

    basis = Basis()

    def backtrack(step: int) -> bool:
        if step == len(schedule):
            return True
        j, is_free, support = schedule[step]
        if not is_free:
            img = 0
            for s in support:
                img ^= free_images[s]
            ib = b_index.get(img, -1)
            if ib < 0 or used[ib]:
                return False
            if pair_ok is not None and not pair_ok(j, ib):
                return False
            assign[j] = ib
            used[ib] = True
            if backtrack(step + 1):
                return True
            used[ib] = False
            assign[j] = -1
            return False
        for ib in range(nb):
            if used[ib]:
                continue
            if pair_ok is not None and not pair_ok(j, ib):
                continue
            v = b_cols[ib]
            if basis.contains(v):
                continue  # image of a free step must extend the image rank
            saved = list(basis.vecs)
            basis.add(v)
            free_images.append(v)
            used[ib] = True
            assign[j] = ib
            if backtrack(step + 1):
                return True
            assign[j] = -1
            used[ib] = False
            free_images.pop()
            basis.vecs = saved
        return False

    if backtrack(0):
        return assign
    return None
