"""Frame templates: values, standard form, conforming-matrix assembly,
reduction operations, and the named minimal templates.

A template constrains matrices in block form: rows split into X and a
frame part, columns into a frame block (graphic structure, tops from
the column group), a Z block (unit-or-zero lower parts, each carrying a
designated Y1 column on top), and the Y0 / Y1 / C block given by A1
with row contributions from the row group.  The matroid of a conforming
matrix, after contracting C and deleting Y1, "conforms" to the
template.  Generation of the largest simple conforming matroid at a
given frame size is the engine behind the lemma-verification jobs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .gf2 import Basis, BitMatrix, GF2Error, parse_matrix_block, format_matrix
from .matroid import BinaryMatroid, MatroidError

GROUP_GENERATOR_CAP = 8
FRAME_SIZE_CAP = 9


class TemplateError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """Subgroup of GF(2)^ambient given by generator rows."""

    ambient: tuple[str, ...]
    generators: BitMatrix

    def __post_init__(self):
        if self.generators.n_cols != len(self.ambient):
            raise TemplateError("generator width != ambient size")
        if self.generators.n_rows > GROUP_GENERATOR_CAP:
            raise TemplateError("too many group generators")

    @staticmethod
    def trivial(ambient) -> "GroupSpec":
        ambient = tuple(ambient)
        return GroupSpec(ambient, BitMatrix(0, len(ambient), ()))

    @staticmethod
    def full(ambient) -> "GroupSpec":
        ambient = tuple(ambient)
        return GroupSpec(ambient, BitMatrix.identity(len(ambient)))

    def elements(self) -> list[int]:
        """All group elements as packed vectors, deterministic order."""
        out = [0]
        for g in self.generators.rows:
            out = out + [x ^ g for x in out]
        return sorted(set(out))

    def contains(self, v: int) -> bool:
        basis = Basis()
        for g in self.generators.rows:
            basis.add(g)
        return basis.contains(v)

    def is_trivial(self) -> bool:
        return all(g == 0 for g in self.generators.rows)

    def coordinate(self, label: str) -> int:
        return self.ambient.index(label)

    def project(self, keep_labels) -> "GroupSpec":
        keep = [self.ambient.index(lab) for lab in keep_labels]
        rows = []
        for g in self.generators.rows:
            v = 0
            for k, idx in enumerate(keep):
                v |= ((g >> idx) & 1) << k
            rows.append(v)
        return GroupSpec(tuple(keep_labels), BitMatrix(len(rows), len(keep), tuple(rows)))

    def map_generators(self, f) -> "GroupSpec":
        rows = tuple(f(g) for g in self.generators.rows)
        return GroupSpec(self.ambient, BitMatrix(len(rows), len(self.ambient), rows))


@dataclass(frozen=True)
class FrameTemplate:
    """(C, X, Y0, Y1, A1, Delta, Lambda); A1 columns ordered Y0|Y1|C."""

    C: tuple[str, ...]
    X: tuple[str, ...]
    Y0: tuple[str, ...]
    Y1: tuple[str, ...]
    A1: BitMatrix
    delta: GroupSpec
    lam: GroupSpec
    # standard-form partitions, filled in by standard_form()
    C0: tuple[str, ...] = ()
    C1: tuple[str, ...] = ()
    X0: tuple[str, ...] = ()
    X1: tuple[str, ...] = ()

    def __post_init__(self):
        names = self.C + self.X + self.Y0 + self.Y1
        if len(set(names)) != len(names):
            raise TemplateError("label sets must be pairwise disjoint")
        if self.A1.n_rows != len(self.X):
            raise TemplateError("A1 row count != |X|")
        if self.A1.n_cols != len(self.Y0) + len(self.Y1) + len(self.C):
            raise TemplateError("A1 column count != |Y0|+|Y1|+|C|")
        if self.delta.ambient != self.Y0 + self.Y1 + self.C:
            raise TemplateError("Delta ambient must be Y0|Y1|C in order")
        if self.lam.ambient != self.X:
            raise TemplateError("Lambda ambient must be X")

    # -- column coordinates in A1 ----------------------------------------

    def col_index(self, label: str) -> int:
        cols = self.Y0 + self.Y1 + self.C
        return cols.index(label)

    def a1_column(self, label: str) -> int:
        return self.A1.column(self.col_index(label))

    def row_index(self, label: str) -> int:
        return self.X.index(label)


def standard_form(t: FrameTemplate) -> FrameTemplate:
    """Row-reduce A1 on the C block (change of basis applied to Lambda),
    then reorder X so the pivot rows come first.  The result has
    A1[X0, C0] an identity and A1[X1, C] zero, with the partitions
    cached on the template."""
    nx = len(t.X)
    offset = len(t.Y0) + len(t.Y1)
    rows = list(t.A1.rows)
    lam_gens = list(t.lam.generators.rows)

    def add_row(src: int, dst: int):
        rows[dst] ^= rows[src]
        # row op on columns over X: lambda vectors transform the same way
        for k in range(len(lam_gens)):
            if (lam_gens[k] >> src) & 1:
                lam_gens[k] ^= 1 << dst

    pivot_rows: list[int] = []
    c0_cols: list[int] = []
    used = set()
    for cj in range(len(t.C)):
        col = offset + cj
        pivot = None
        for i in range(nx):
            if i in used:
                continue
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        for i in range(nx):
            if i != pivot and (rows[i] >> col) & 1:
                add_row(pivot, i)
        used.add(pivot)
        pivot_rows.append(pivot)
        c0_cols.append(cj)
    order = pivot_rows + [i for i in range(nx) if i not in used]
    new_rows = tuple(rows[i] for i in order)
    perm_gens = []
    for g in lam_gens:
        v = 0
        for new_i, old_i in enumerate(order):
            v |= ((g >> old_i) & 1) << new_i
        perm_gens.append(v)
    new_x = tuple(t.X[i] for i in order)
    c0 = tuple(t.C[j] for j in c0_cols)
    c1 = tuple(lab for j, lab in enumerate(t.C) if j not in set(c0_cols))
    x0 = tuple(new_x[: len(c0)])
    x1 = tuple(new_x[len(c0):])
    return FrameTemplate(
        t.C, new_x, t.Y0, t.Y1,
        BitMatrix(nx, t.A1.n_cols, new_rows),
        t.delta,
        GroupSpec(new_x, BitMatrix(len(perm_gens), nx, tuple(perm_gens))),
        C0=c0, C1=c1, X0=x0, X1=x1,
    )


# ---------------------------------------------------------------------------
# Conforming assembly.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConformSpec:
    """One conforming matrix: a frame block, Z columns (unit-or-zero
    lower part paired with a Y1 label or None), a group element on top
    of each frame column, and a group element per lower row (frame rows
    first, then delta_row_count extra rows that are zero on the frame
    block)."""

    frame: BitMatrix
    z_columns: tuple[tuple[int, str | None], ...] = ()
    lambda_choices: tuple[int, ...] | None = None
    delta_choices: tuple[int, ...] | None = None
    delta_row_count: int = 0


def assemble(t: FrameTemplate, spec: ConformSpec, virtual: bool = True) -> BitMatrix:
    """Build the conforming matrix A with columns ordered
    [frame | Z | Y0 | Y1 | C] and rows [X | lower].

    In strict (non-virtual) mode every Z column's lower part must be a
    unit; virtual mode also allows zero.
    """
    nx = len(t.X)
    fr = spec.frame
    n_lower = fr.n_rows + spec.delta_row_count
    lam_choices = spec.lambda_choices or (0,) * fr.n_cols
    delta_choices = spec.delta_choices or (0,) * n_lower
    if len(lam_choices) != fr.n_cols:
        raise TemplateError("one lambda choice per frame column required")
    if len(delta_choices) != n_lower:
        raise TemplateError("one delta choice per lower row required")
    for lv in lam_choices:
        if not t.lam.contains(lv):
            raise TemplateError("lambda choice outside the column group")
    for dv in delta_choices:
        if not t.delta.contains(dv):
            raise TemplateError("delta choice outside the row group")
    for j, (u, y1lab) in enumerate(spec.z_columns):
        if u != 0 and bin(u).count("1") != 1:
            raise TemplateError(f"Z column {j} lower part is not a unit or zero")
        if u == 0 and not virtual:
            raise TemplateError(f"Z column {j} has zero lower part in strict mode")
        if u >> n_lower:
            raise TemplateError(f"Z column {j} lower part out of range")
        if y1lab is not None and y1lab not in t.Y1:
            raise TemplateError(f"Z column {j} names unknown Y1 label {y1lab!r}")
    for c in range(fr.n_cols):
        if bin(fr.column(c)).count("1") > 2:
            raise TemplateError(f"frame column {c} has more than two nonzero entries")

    cols: list[int] = []
    # frame block: lambda tops over frame columns
    for j in range(fr.n_cols):
        cols.append(lam_choices[j] | (fr.column(j) << nx))
    # Z block
    a1cols = t.Y0 + t.Y1 + t.C
    for (u, y1lab) in spec.z_columns:
        top = 0
        low = u
        if y1lab is not None:
            top ^= t.a1_column(y1lab)
            ci = t.col_index(y1lab)
            for b in range(n_lower):
                if (delta_choices[b] >> ci) & 1:
                    low ^= 1 << b
        cols.append(top | (low << nx))
    # Y0 | Y1 | C block
    for ci, lab in enumerate(a1cols):
        top = t.A1.column(ci)
        low = 0
        for b in range(n_lower):
            if (delta_choices[b] >> ci) & 1:
                low |= 1 << b
        cols.append(top | (low << nx))
    return BitMatrix.from_columns(cols, nx + n_lower)


def conform_matroid(t: FrameTemplate, spec: ConformSpec, virtual: bool = True) -> BinaryMatroid:
    """M(A) with C contracted and Y1 deleted; labels are the column
    positions of the assembled matrix."""
    a = assemble(t, spec, virtual)
    m = BinaryMatroid(a)
    base = spec.frame.n_cols + len(spec.z_columns)
    y0_end = base + len(t.Y0)
    y1_end = y0_end + len(t.Y1)
    y1_labels = list(range(y0_end, y1_end))
    c_labels = list(range(y1_end, y1_end + len(t.C)))
    return m.contract(c_labels).delete(y1_labels)


def complete_frame(n: int) -> BitMatrix:
    """Reduced incidence of the complete graph on n vertices (last
    vertex row dropped), edges in lexicographic order."""
    cols = []
    for i in range(n):
        for j in range(i + 1, n):
            v = 0
            if i < n - 1:
                v |= 1 << i
            if j < n - 1:
                v |= 1 << j
            cols.append(v)
    return BitMatrix.from_columns(cols, n - 1)


def _require_generation_shape(t: FrameTemplate, allow_delta: bool):
    if t.C:
        raise TemplateError("generation requires C empty")
    if not t.lam.is_trivial():
        raise TemplateError("generation requires a trivial column group")
    if not allow_delta and not t.delta.is_trivial():
        raise TemplateError("generation requires a trivial row group")
    if allow_delta and t.delta.generators.n_rows > 1:
        raise TemplateError("generation supports a row group of order at most 2")


def largest_spec(t: FrameTemplate, n: int, j_rows: int = 0) -> ConformSpec:
    """ConformSpec holding every column available at frame size n: the
    complete-graph frame plus all distinct Z columns (each Y1 label with
    every unit and the zero lower part).  With a nontrivial row group
    {0, xbar}, the first j_rows frame rows use xbar."""
    if not 2 <= n <= FRAME_SIZE_CAP:
        raise TemplateError(f"frame size {n} outside 2..{FRAME_SIZE_CAP}")
    fr = complete_frame(n)
    if j_rows:
        xbar = t.delta.generators.rows[0]
        deltas = tuple(xbar if b < j_rows else 0 for b in range(fr.n_rows))
    else:
        deltas = (0,) * fr.n_rows
    z = []
    for y1lab in t.Y1:
        z.append((0, y1lab))
        for b in range(fr.n_rows):
            z.append((1 << b, y1lab))
    return ConformSpec(frame=fr, z_columns=tuple(z), delta_choices=deltas)


def largest_simple_conforming(t: FrameTemplate, n: int) -> BinaryMatroid:
    """Largest simple matroid of rank |X| + n - 1 that virtually
    conforms to a trivial-group template at frame size n."""
    _require_generation_shape(t, allow_delta=False)
    m = conform_matroid(t, largest_spec(t, n))
    simp, _ = m.simplify()
    return simp


def largest_simple_conforming_delta(t: FrameTemplate, n: int, delta_row_count: int) -> BinaryMatroid:
    """As largest_simple_conforming for the {0, xbar} row-group shape:
    delta_row_count frame rows carry xbar on the Y0/Y1 block."""
    _require_generation_shape(t, allow_delta=True)
    if t.delta.is_trivial():
        if delta_row_count:
            raise TemplateError("delta_row_count > 0 needs a nontrivial row group")
        return largest_simple_conforming(t, n)
    if not 0 <= delta_row_count <= n - 1:
        raise TemplateError("delta_row_count outside 0..n-1")
    m = conform_matroid(t, largest_spec(t, n, j_rows=delta_row_count))
    simp, _ = m.simplify()
    return simp


# ---------------------------------------------------------------------------
# Reductions (operations 1-11) and the y-shift.
# ---------------------------------------------------------------------------

def _project_delta(t: FrameTemplate, new_y0, new_y1, new_c) -> GroupSpec:
    return t.delta.project(tuple(new_y0) + tuple(new_y1) + tuple(new_c))


def _drop_a1_column(t: FrameTemplate, label: str) -> BitMatrix:
    idx = t.col_index(label)
    keep = [j for j in range(t.A1.n_cols) if j != idx]
    from .gf2 import submatrix

    return submatrix(t.A1, list(range(t.A1.n_rows)), keep)


def _drop_a1_row_col(a1: BitMatrix, row: int, col: int | None) -> BitMatrix:
    from .gf2 import submatrix

    keep_r = [i for i in range(a1.n_rows) if i != row]
    keep_c = list(range(a1.n_cols)) if col is None else [j for j in range(a1.n_cols) if j != col]
    return submatrix(a1, keep_r, keep_c)


def reduce_template(t: FrameTemplate, op: str, **kw) -> FrameTemplate:
    """Apply one reduction / template-minor operation.

    op is one of: 'lambda_subgroup' (1), 'delta_subgroup' (2),
    'remove_y1' (3), 'row_op' (4), 'remove_x' (5), 'contract_c' (6),
    'remove_c' (7), 'remove_y0' (9), 'contract_y0' (10),
    'contract_y0_deltafree' (11), 'y_shift'.

    Violated preconditions raise TemplateError naming the failed side
    condition.
    """
    if op == "lambda_subgroup":
        gens = kw["generators"]
        for g in gens:
            if not t.lam.contains(g):
                raise TemplateError("new column group is not a subgroup")
        return FrameTemplate(t.C, t.X, t.Y0, t.Y1, t.A1, t.delta,
                             GroupSpec(t.X, BitMatrix(len(gens), len(t.X), tuple(gens))))
    if op == "delta_subgroup":
        gens = kw["generators"]
        for g in gens:
            if not t.delta.contains(g):
                raise TemplateError("new row group is not a subgroup")
        amb = t.Y0 + t.Y1 + t.C
        return FrameTemplate(t.C, t.X, t.Y0, t.Y1, t.A1,
                             GroupSpec(amb, BitMatrix(len(gens), len(amb), tuple(gens))), t.lam)
    if op == "remove_y1":
        y = kw["y"]
        if y not in t.Y1:
            raise TemplateError(f"{y!r} is not in Y1")
        new_y1 = tuple(lab for lab in t.Y1 if lab != y)
        a1 = _drop_a1_column(t, y)
        return FrameTemplate(t.C, t.X, t.Y0, new_y1, a1,
                             t.delta.project(t.Y0 + new_y1 + t.C), t.lam)
    if op == "row_op":
        src, dst = kw["src"], kw["dst"]
        i, j = t.row_index(src), t.row_index(dst)
        if i == j:
            raise TemplateError("row_op needs distinct rows")
        rows = list(t.A1.rows)
        rows[j] ^= rows[i]
        lam = t.lam.map_generators(lambda g: g ^ (1 << j) if (g >> i) & 1 else g)
        return FrameTemplate(t.C, t.X, t.Y0, t.Y1,
                             BitMatrix(t.A1.n_rows, t.A1.n_cols, tuple(rows)), t.delta, lam)
    if op == "remove_x":
        x = kw["x"]
        i = t.row_index(x)
        if t.A1.rows[i] != 0:
            raise TemplateError("row of A1 at x is not zero")
        if any((g >> i) & 1 for g in t.lam.generators.rows):
            raise TemplateError("column group is nontrivial at x")
        new_x = tuple(lab for lab in t.X if lab != x)
        return FrameTemplate(t.C, new_x, t.Y0, t.Y1,
                             _drop_a1_row_col(t.A1, i, None),
                             t.delta, t.lam.project(new_x))
    if op == "contract_c":
        c = kw["c"]
        if c not in t.C:
            raise TemplateError(f"{c!r} is not in C")
        ci = t.col_index(c)
        col = t.A1.column(ci)
        if bin(col).count("1") != 1:
            raise TemplateError("A1 column at c is not a unit column")
        xi = col.bit_length() - 1
        lam_trivial_at_x = not any((g >> xi) & 1 for g in t.lam.generators.rows)
        delta_trivial_at_c = not any((g >> ci) & 1 for g in t.delta.generators.rows)
        if not (lam_trivial_at_x or delta_trivial_at_c):
            raise TemplateError("need the column group trivial at x or the row group trivial at c")
        xrow = t.A1.rows[xi]
        delta = t.delta.map_generators(lambda g: g ^ xrow if (g >> ci) & 1 else g)
        new_x = tuple(lab for k, lab in enumerate(t.X) if k != xi)
        new_c = tuple(lab for lab in t.C if lab != c)
        a1 = _drop_a1_row_col(t.A1, xi, ci)
        return FrameTemplate(new_c, new_x, t.Y0, t.Y1, a1,
                             delta.project(t.Y0 + t.Y1 + new_c),
                             t.lam.project(new_x))
    if op == "remove_c":
        c = kw["c"]
        ci = t.col_index(c)
        if t.A1.column(ci) != 0:
            raise TemplateError("A1 column at c is not zero")
        if any((g >> ci) & 1 for g in t.delta.generators.rows):
            raise TemplateError("row group is nontrivial at c")
        new_c = tuple(lab for lab in t.C if lab != c)
        return FrameTemplate(new_c, t.X, t.Y0, t.Y1, _drop_a1_column(t, c),
                             t.delta.project(t.Y0 + t.Y1 + new_c), t.lam)
    if op == "remove_y0":
        y = kw["y"]
        if y not in t.Y0:
            raise TemplateError(f"{y!r} is not in Y0")
        new_y0 = tuple(lab for lab in t.Y0 if lab != y)
        return FrameTemplate(t.C, t.X, new_y0, t.Y1, _drop_a1_column(t, y),
                             t.delta.project(new_y0 + t.Y1 + t.C), t.lam)
    if op in ("contract_y0", "contract_y0_deltafree"):
        y = kw["y"]
        if y not in t.Y0:
            raise TemplateError(f"{y!r} is not in Y0")
        yi = t.col_index(y)
        col = t.A1.column(yi)
        if op == "contract_y0_deltafree":
            if any((g >> yi) & 1 for g in t.delta.generators.rows):
                raise TemplateError("row group is nontrivial at y")
            if col == 0:
                return reduce_template(t, "remove_y0", y=y)
            xi = kw.get("x_index", col.bit_length() - 1)
        else:
            xi = t.row_index(kw["x"])
            if not (col >> xi) & 1:
                raise TemplateError("A1[x, y] is zero")
            if any((g >> xi) & 1 for g in t.lam.generators.rows):
                raise TemplateError("column group is nontrivial at x")
        rows = list(t.A1.rows)
        lam_gens = list(t.lam.generators.rows)
        for i in range(len(rows)):
            if i != xi and (rows[i] >> yi) & 1:
                rows[i] ^= rows[xi]
                for k in range(len(lam_gens)):
                    if (lam_gens[k] >> xi) & 1:
                        lam_gens[k] ^= 1 << i
        a1 = BitMatrix(t.A1.n_rows, t.A1.n_cols, tuple(rows))
        xrow = a1.rows[xi]
        delta = t.delta.map_generators(lambda g: g ^ xrow if (g >> yi) & 1 else g)
        new_x = tuple(lab for k, lab in enumerate(t.X) if k != xi)
        new_y0 = tuple(lab for lab in t.Y0 if lab != y)
        lam = GroupSpec(t.X, BitMatrix(len(lam_gens), len(t.X), tuple(lam_gens)))
        return FrameTemplate(t.C, new_x, new_y0, t.Y1,
                             _drop_a1_row_col(a1, xi, yi),
                             delta.project(new_y0 + t.Y1 + t.C),
                             lam.project(new_x))
    if op == "y_shift":
        y = kw["y"]
        if y not in t.Y1:
            raise TemplateError(f"{y!r} is not in Y1")
        # move the column from the Y1 block to the end of the Y0 block
        new_y0 = t.Y0 + (y,)
        new_y1 = tuple(lab for lab in t.Y1 if lab != y)
        old_order = t.Y0 + t.Y1 + t.C
        new_order = new_y0 + new_y1 + t.C
        perm = [old_order.index(lab) for lab in new_order]
        from .gf2 import submatrix

        a1 = submatrix(t.A1, list(range(t.A1.n_rows)), perm)
        gens = []
        for g in t.delta.generators.rows:
            v = 0
            for k, idx in enumerate(perm):
                v |= ((g >> idx) & 1) << k
            gens.append(v)
        delta = GroupSpec(new_order, BitMatrix(len(gens), len(new_order), tuple(gens)))
        return FrameTemplate(t.C, t.X, new_y0, new_y1, a1, delta, t.lam)
    raise TemplateError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Named templates.
# ---------------------------------------------------------------------------

def template_catalog(name: str) -> FrameTemplate:
    if name == "Phi0":
        return FrameTemplate((), (), (), (), BitMatrix(0, 0, ()),
                             GroupSpec.trivial(()), GroupSpec.trivial(()))
    if name == "PhiC":
        return FrameTemplate(("c0",), (), (), (), BitMatrix(0, 1, ()),
                             GroupSpec.full(("c0",)), GroupSpec.trivial(()))
    if name == "PhiX":
        return FrameTemplate((), ("x0",), (), (), BitMatrix(1, 0, (0,)),
                             GroupSpec.trivial(()), GroupSpec.full(("x0",)))
    if name == "PhiY0":
        return FrameTemplate((), (), ("y0",), (), BitMatrix(0, 1, ()),
                             GroupSpec.full(("y0",)), GroupSpec.trivial(()))
    if name == "PhiCX":
        return FrameTemplate(("c0",), ("x0",), (), (), BitMatrix.from_rows([[1]]),
                             GroupSpec.full(("c0",)), GroupSpec.full(("x0",)))
    if name == "PhiY1":
        return FrameTemplate((), ("x0", "x1"), (), ("y1_0", "y1_1", "y1_2"),
                             BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]]),
                             GroupSpec.trivial(("y1_0", "y1_1", "y1_2")),
                             GroupSpec.trivial(("x0", "x1")))
    if name == "PhiC2":
        return FrameTemplate(("c0", "c1"), (), (), (), BitMatrix(0, 2, ()),
                             GroupSpec.full(("c0", "c1")), GroupSpec.trivial(()))
    raise TemplateError(f"unknown template {name!r}")


TEMPLATE_NAMES = ["Phi0", "PhiC", "PhiX", "PhiY0", "PhiCX", "PhiY1", "PhiC2"]


def lemma_template(p1: list[list[int]] | None, p0: list[list[int]] | None) -> FrameTemplate:
    """Minimal trivial-group template [I | P1 | P0]: an identity over a
    fresh Y1 block, P1 as further Y1 columns, P0 as the Y0 block."""
    rows = len(p1) if p1 else len(p0)
    p1 = p1 or [[] for _ in range(rows)]
    p0 = p0 or [[] for _ in range(rows)]
    if len(p1) != rows or len(p0) != rows:
        raise TemplateError("P1/P0 row counts differ")
    x = tuple(f"x{i}" for i in range(rows))
    y1 = tuple(f"y1_{j}" for j in range(rows + len(p1[0])))
    y0 = tuple(f"y0_{j}" for j in range(len(p0[0])))
    a1_rows = []
    for i in range(rows):
        ident = [1 if k == i else 0 for k in range(rows)]
        a1_rows.append(list(p0[i]) + ident + list(p1[i]))
    a1 = BitMatrix.from_rows(a1_rows)
    return FrameTemplate((), x, y0, y1, a1,
                         GroupSpec.trivial(y0 + y1), GroupSpec.trivial(x))


def delta_lemma_template(a_y1, b_y1, a_y0, b_y0) -> FrameTemplate:
    """Minimal template for the row-group {0, xbar} shape:
    A1 = [I | A_Y1 | B_Y1 | A_Y0 | B_Y0], xbar the indicator of the
    B-block columns.  Each argument is a list of rows (possibly empty
    lists of columns); all must agree on the row count."""
    blocks = [b for b in (a_y1, b_y1, a_y0, b_y0) if b]
    if not blocks:
        raise TemplateError("at least one block required")
    rows = len(blocks[0])
    norm = []
    for b in (a_y1, b_y1, a_y0, b_y0):
        if not b:
            norm.append([[] for _ in range(rows)])
        else:
            if len(b) != rows:
                raise TemplateError("block row counts differ")
            norm.append([list(r) for r in b])
    a_y1, b_y1, a_y0, b_y0 = norm
    w_ay1, w_by1 = len(a_y1[0]), len(b_y1[0])
    w_ay0, w_by0 = len(a_y0[0]), len(b_y0[0])
    x = tuple(f"x{i}" for i in range(rows))
    y1 = tuple(f"y1_{j}" for j in range(rows + w_ay1 + w_by1))
    y0 = tuple(f"y0_{j}" for j in range(w_ay0 + w_by0))
    a1_rows = []
    for i in range(rows):
        ident = [1 if k == i else 0 for k in range(rows)]
        a1_rows.append(a_y0[i] + b_y0[i] + ident + a_y1[i] + b_y1[i])
    a1 = BitMatrix.from_rows(a1_rows)
    amb = y0 + y1
    xbar = 0
    # Y0 block: A_Y0 columns then B_Y0 columns; Y1: identity, A_Y1, B_Y1
    for j in range(w_by0):
        xbar |= 1 << (w_ay0 + j)
    for j in range(w_by1):
        xbar |= 1 << (len(y0) + rows + w_ay1 + j)
    delta = GroupSpec(amb, BitMatrix(1, len(amb), (xbar,)))
    return FrameTemplate((), x, y0, y1, a1, delta, GroupSpec.trivial(x))


# ---------------------------------------------------------------------------
# Text format.
# ---------------------------------------------------------------------------

def parse_template(text: str) -> FrameTemplate:
    lines = text.splitlines()
    sets: dict[str, tuple[str, ...]] = {"C": (), "X": (), "Y0": (), "Y1": ()}
    a1 = None
    delta_gens = None
    lam_gens = None
    i = 0
    while i < len(lines):
        s = lines[i].strip()
        if not s or s.startswith("#"):
            i += 1
            continue
        low = s.lower()
        matched = False
        for key in ("Y0", "Y1", "C", "X"):
            if low.startswith(key.lower() + ":"):
                body = s.split(":", 1)[1]
                sets[key] = tuple(tok for tok in body.replace(",", " ").split())
                i += 1
                matched = True
                break
        if matched:
            continue
        if low.startswith("a1:"):
            a1, i = parse_matrix_block(lines, i + 1)
            continue
        if low.startswith("delta:"):
            delta_gens, i = parse_matrix_block(lines, i + 1)
            continue
        if low.startswith("lambda:"):
            lam_gens, i = parse_matrix_block(lines, i + 1)
            continue
        raise TemplateError(f"line {i + 1}: unexpected content {s!r}")
    n_a1_cols = len(sets["Y0"]) + len(sets["Y1"]) + len(sets["C"])
    if a1 is None:
        a1 = BitMatrix(len(sets["X"]), n_a1_cols, (0,) * len(sets["X"]))
    if a1.n_cols == 0 and n_a1_cols > 0:
        a1 = BitMatrix(a1.n_rows, n_a1_cols, (0,) * a1.n_rows)
    amb = sets["Y0"] + sets["Y1"] + sets["C"]
    delta = (GroupSpec(amb, delta_gens) if delta_gens is not None and delta_gens.n_cols == len(amb)
             else GroupSpec.trivial(amb))
    lam = (GroupSpec(sets["X"], lam_gens) if lam_gens is not None and lam_gens.n_cols == len(sets["X"])
           else GroupSpec.trivial(sets["X"]))
    return FrameTemplate(sets["C"], sets["X"], sets["Y0"], sets["Y1"], a1, delta, lam)


def format_template(t: FrameTemplate) -> str:
    out = [
        "C: " + ", ".join(t.C),
        "X: " + ", ".join(t.X),
        "Y0: " + ", ".join(t.Y0),
        "Y1: " + ", ".join(t.Y1),
        "A1:",
        format_matrix(t.A1),
        "Delta:",
        format_matrix(t.delta.generators),
        "Lambda:",
        format_matrix(t.lam.generators),
    ]
    return "\n".join(out) + "\n"
