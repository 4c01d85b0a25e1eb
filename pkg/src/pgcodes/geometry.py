"""Combinatorics of PG(n,q): canonical points, flats, spans, meets, pencils.

Points are stored as normalized homogeneous coordinate rows (first nonzero
coordinate equals 1) over the integer-encoded field elements of
:mod:`pgcodes.field`.  The canonical point order is lexicographic on the
normalized coordinate tuple, with field elements compared by their
coefficient tuples; the induced integer index is closed-form, so conversion
between coordinates and indices never builds a dictionary.

Flats (``Subspace``) carry a reduced-row-echelon basis, which is canonical
per flat and doubles as the fixed isomorphism used when restricting
codewords: the i-th echelon row maps to the i-th standard coordinate of the
internal PG(k,q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .errors import (
    DimensionError,
    FieldMismatch,
    SingularMatrix,
)
from .field import FieldSpec, factor_prime_power, field_make


def theta(m: int, q: int) -> int:
    """Number of points of PG(m,q); zero for negative m by convention."""
    if m < 0:
        return 0
    return (q ** (m + 1) - 1) // (q - 1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of (k-1)-flats of PG(n-1,q), i.e. k-subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def line_count(n: int, q: int) -> int:
    return gaussian_binomial(n + 1, 2, q)


# ---------------------------------------------------------------------------
# vectorized GF(q) linear algebra on integer-encoded arrays


def matmul_gf(A: np.ndarray, B: np.ndarray, gf: FieldSpec) -> np.ndarray:
    """Matrix product over GF(q) of integer-encoded arrays."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int16))
    B = np.atleast_2d(np.asarray(B, dtype=np.int16))
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int16)
    for k in range(A.shape[1]):
        out = gf.ADD[out, gf.MUL[A[:, k][:, None], B[k][None, :]]]
    return out


def rref_gf(mat: np.ndarray, gf: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(q); returns (rref_rows, pivot_cols).

    Zero rows are dropped, so the result has full row rank.
    """
    m = np.array(np.atleast_2d(mat), dtype=np.int16)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        sub = m[r:, c]
        nz = np.nonzero(sub)[0]
        if len(nz) == 0:
            continue
        pr = r + nz[0]
        m[[r, pr]] = m[[pr, r]]
        m[r] = gf.MUL[m[r], gf.INV[m[r, c]]]
        other = np.nonzero(m[:, c])[0]
        for i in other:
            if i != r:
                m[i] = gf.SUB[m[i], gf.MUL[m[i, c], m[r]]]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def kernel_gf(mat: np.ndarray, gf: FieldSpec) -> np.ndarray:
    """Basis (RREF) of the right kernel {x : mat @ x^T = 0} as rows."""
    m = np.atleast_2d(np.asarray(mat, dtype=np.int16))
    cols = m.shape[1]
    r, pivots = rref_gf(m, gf)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int16)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for rr, pc in enumerate(pivots):
            basis[i, pc] = gf.NEG[r[rr, fc]]
    if len(basis):
        basis, _ = rref_gf(basis, gf)
    return basis


def invert_gf(mat: np.ndarray, gf: FieldSpec) -> np.ndarray:
    m = np.asarray(mat, dtype=np.int16)
    k = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise SingularMatrix("matrix is not square")
    aug = np.concatenate([m, np.eye(k, dtype=np.int16)], axis=1)
    r, pivots = rref_gf(aug, gf)
    if pivots[:k] != list(range(k)) or len(r) < k:
        raise SingularMatrix("matrix is singular")
    return r[:, k:]


# ---------------------------------------------------------------------------
# canonical point tables


class PointTable:
    """Canonical enumeration of the points of PG(n,q) plus index helpers."""

    def __init__(self, gf: FieldSpec, n: int):
        if n < 1:
            raise DimensionError("ambient projective dimension must be >= 1")
        self.gf = gf
        self.n = n
        self.q = gf.q
        self.p = gf.p
        self.h = gf.h
        self.thetas = [theta(m, self.q) for m in range(n + 2)]
        self.num_points = self.thetas[n]
        self.coords = self._enumerate()
        # offsets[j] = index of the first point whose leading 1 is at column j
        offs = np.zeros(n + 1, dtype=np.int64)
        for j in range(n + 1):
            offs[j] = theta(n - j - 1, self.q)
        self.block_offsets = offs
        self.qpowers = np.array([self.q ** (n - i) for i in range(n + 1)], dtype=np.int64)
        self.rank_one = int(gf.rank[1])

    def _enumerate(self) -> np.ndarray:
        n, q, gf = self.n, self.q, self.gf
        blocks = []
        for j in range(n, -1, -1):
            tail = n - j
            count = q**tail
            block = np.zeros((count, n + 1), dtype=np.int16)
            block[:, j] = 1
            if tail:
                ranks = np.indices([q] * tail).reshape(tail, -1).T
                block[:, j + 1 :] = gf.unrank[ranks]
            blocks.append(block)
        return np.concatenate(blocks, axis=0)

    # -- conversions --------------------------------------------------------

    def normalize(self, rows: np.ndarray) -> np.ndarray:
        """Scale rows so the first nonzero coordinate is 1."""
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int16))
        nz = rows != 0
        if not nz.any(axis=1).all():
            raise ValueError("cannot normalize an all-zero row")
        lead = nz.argmax(axis=1)
        factors = self.gf.INV[rows[np.arange(len(rows)), lead]]
        return self.gf.MUL[rows, factors[:, None]]

    def index_of(self, rows: np.ndarray, normalized: bool = False) -> np.ndarray:
        """Canonical indices of points given by coordinate rows."""
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int16))
        if not normalized:
            rows = self.normalize(rows)
        lead = (rows != 0).argmax(axis=1)
        ranks = self.gf.rank[rows]
        s = (ranks * self.qpowers[None, :]).sum(axis=1)
        return self.block_offsets[lead] + s - self.rank_one * self.qpowers[lead]

    def point(self, index: int) -> "ProjPoint":
        return ProjPoint(self, int(index))

    def line_through(self, i: int, j: int) -> np.ndarray:
        """Sorted indices of the q+1 points on the line through points i, j."""
        a, b = self.coords[i], self.coords[j]
        pts = [a]
        for t in range(self.q):
            pts.append(self.gf.ADD[self.gf.MUL[a, np.int16(t)], b])
        idx = self.index_of(np.stack(pts))
        idx.sort()
        return idx


_TABLE_CACHE: dict = {}


def point_table(n: int, q: int) -> PointTable:
    key = (n, q)
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        p, h = factor_prime_power(q)
        tab = PointTable(field_make(p, h), n)
        _TABLE_CACHE[key] = tab
    return tab


@lru_cache(maxsize=None)
def plane_lines(q: int) -> tuple[np.ndarray, np.ndarray]:
    """All lines of PG(2,q): (dual coords theta_2 x 3, point indices theta_2 x (q+1)).

    Line i has dual coordinates equal to point i of the dual plane; its point
    list is sorted ascending.
    """
    tab = point_table(2, q)
    duals = tab.coords
    prods = matmul_gf(duals, tab.coords.T, tab.gf)
    pts = np.zeros((tab.num_points, q + 1), dtype=np.int32)
    for i in range(tab.num_points):
        pts[i] = np.nonzero(prods[i] == 0)[0]
    return duals, pts


# ---------------------------------------------------------------------------
# points, flats, hyperplanes


@dataclass(frozen=True)
class ProjPoint:
    """A point of PG(n,q), identified by canonical index."""

    table: PointTable
    index: int

    @property
    def coords(self) -> np.ndarray:
        return self.table.coords[self.index]

    def __repr__(self):
        return f"P{tuple(int(c) for c in self.coords)}"


class Subspace:
    """A flat of PG(n,q) with canonical RREF basis; dim -1 is the empty flat."""

    __slots__ = ("table", "basis", "_key")

    def __init__(self, table: PointTable, basis: np.ndarray, *, rref: bool = False):
        self.table = table
        b = np.asarray(basis, dtype=np.int16).reshape(-1, table.n + 1)
        if not rref and len(b):
            b, _ = rref_gf(b, table.gf)
        self.basis = b
        self.basis.setflags(write=False)
        self._key = (table.n, table.q, self.basis.tobytes())

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    @property
    def is_empty(self) -> bool:
        return len(self.basis) == 0

    def __eq__(self, other):
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={self.basis.tolist()})"

    def num_points(self) -> int:
        return theta(self.dim, self.table.q)

    def internal_table(self) -> PointTable:
        if self.dim < 1:
            raise DimensionError("internal table needs dim >= 1")
        return point_table(self.dim, self.table.q)

    def point_indices(self) -> np.ndarray:
        """Global canonical indices of all points of the flat, in the order of
        the internal PG(k,q) enumeration."""
        if self.is_empty:
            return np.zeros(0, dtype=np.int64)
        if self.dim == 0:
            return self.table.index_of(self.basis)
        itab = self.internal_table()
        glob = matmul_gf(itab.coords, self.basis, self.table.gf)
        return self.table.index_of(glob)

    def contains_point_index(self, idx: int) -> bool:
        return self.contains_rows(self.table.coords[np.asarray([idx])])[0]

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        """Vectorized membership of coordinate rows in the flat."""
        if self.is_empty:
            return np.zeros(len(np.atleast_2d(rows)), dtype=bool)
        duals = kernel_gf(self.basis, self.table.gf)
        if len(duals) == 0:
            return np.ones(len(np.atleast_2d(rows)), dtype=bool)
        prods = matmul_gf(np.atleast_2d(rows), duals.T, self.table.gf)
        return (prods == 0).all(axis=1)

    def contains_flat(self, other: "Subspace") -> bool:
        if other.is_empty:
            return True
        return bool(self.contains_rows(other.basis).all())

    def translate_to_internal(self, rows: np.ndarray) -> np.ndarray:
        """Solve x @ basis = row for each row; rows must lie in the flat."""
        sol, residual = _solve_rows(self.basis, np.atleast_2d(rows), self.table.gf)
        if residual.any():
            raise ValueError("rows not contained in the flat")
        return sol


def _solve_rows(basis: np.ndarray, rows: np.ndarray, gf: FieldSpec):
    """Express rows as combinations of basis rows (basis in RREF).

    Returns (coefficients, residual_mask); residual_mask flags rows outside
    the row space.
    """
    r, pivots = rref_gf(basis, gf) if len(basis) else (basis, [])
    coeff = np.zeros((len(rows), len(basis)), dtype=np.int16)
    rem = np.array(rows, dtype=np.int16)
    for i, pc in enumerate(pivots):
        c = rem[:, pc].copy()
        coeff[:, i] = c
        rem = gf.SUB[rem, gf.MUL[c[:, None], r[i][None, :]]]
    return coeff, (rem != 0).any(axis=1)


def empty_flat(table: PointTable) -> Subspace:
    return Subspace(table, np.zeros((0, table.n + 1), dtype=np.int16), rref=True)


def full_space(table: PointTable) -> Subspace:
    return Subspace(table, np.eye(table.n + 1, dtype=np.int16), rref=True)


def point_flat(table: PointTable, index: int) -> Subspace:
    return Subspace(table, table.coords[np.asarray([index])])


class Hyperplane:
    """A hyperplane of PG(n,q), stored as a normalized dual coordinate row."""

    __slots__ = ("table", "dual")

    def __init__(self, table: PointTable, dual: np.ndarray):
        self.table = table
        d = np.asarray(dual, dtype=np.int16).reshape(table.n + 1)
        if not d.any():
            raise ValueError("hyperplane dual coordinates are all zero")
        self.dual = table.normalize(d)[0]
        self.dual.setflags(write=False)

    @property
    def index(self) -> int:
        return int(self.table.index_of(self.dual[None, :], normalized=True)[0])

    def subspace(self) -> Subspace:
        return Subspace(self.table, kernel_gf(self.dual[None, :], self.table.gf), rref=True)

    def point_mask(self) -> np.ndarray:
        prods = matmul_gf(self.table.coords, self.dual[:, None], self.table.gf)
        return prods[:, 0] == 0

    def point_indices(self) -> np.ndarray:
        return np.nonzero(self.point_mask())[0]

    def __eq__(self, other):
        return (
            isinstance(other, Hyperplane)
            and self.table is other.table
            and bool((self.dual == other.dual).all())
        )

    def __hash__(self):
        return hash((self.table.n, self.table.q, self.dual.tobytes()))

    def __repr__(self):
        return f"H{tuple(int(c) for c in self.dual)}"


def hyperplane_by_index(table: PointTable, index: int) -> Hyperplane:
    return Hyperplane(table, table.coords[index])


# ---------------------------------------------------------------------------
# span / meet / pencils


FlatLike = Union[Subspace, ProjPoint, Hyperplane]


def _rows_of(x: FlatLike) -> tuple[PointTable, np.ndarray]:
    if isinstance(x, Subspace):
        return x.table, x.basis
    if isinstance(x, ProjPoint):
        return x.table, x.coords[None, :]
    if isinstance(x, Hyperplane):
        s = x.subspace()
        return s.table, s.basis
    raise TypeError(f"not a flat: {x!r}")


def span(*flats: FlatLike) -> Subspace:
    """Smallest flat containing all inputs; empty input gives the empty flat."""
    tables = []
    rows = []
    for f in flats:
        t, r = _rows_of(f)
        tables.append(t)
        if len(r):
            rows.append(r)
    if not tables:
        raise ValueError("span of nothing: pass at least one flat or point")
    table = tables[0]
    if any(t is not table for t in tables):
        raise FieldMismatch("flats live in different ambient spaces")
    if not rows:
        return empty_flat(table)
    return Subspace(table, np.concatenate(rows, axis=0))


def meet(a: FlatLike, b: FlatLike) -> Subspace:
    """Intersection of two flats (Zassenhaus); asserts the Grassmann identity."""
    ta, ra = _rows_of(a)
    tb, rb = _rows_of(b)
    if ta is not tb:
        raise FieldMismatch("flats live in different ambient spaces")
    table, gf = ta, ta.gf
    w = table.n + 1
    if len(ra) == 0 or len(rb) == 0:
        return empty_flat(table)
    top = np.concatenate([ra, ra], axis=1)
    bot = np.concatenate([rb, np.zeros_like(rb)], axis=1)
    r, _ = rref_gf(np.concatenate([top, bot], axis=0), gf)
    zero_left = ~(r[:, :w] != 0).any(axis=1)
    inter = r[zero_left][:, w:]
    out = Subspace(table, inter) if len(inter) else empty_flat(table)
    sp_dim = Subspace(table, np.concatenate([ra, rb], axis=0)).dim
    assert (len(ra) - 1) + (len(rb) - 1) == sp_dim + out.dim, "Grassmann identity"
    return out


def subspaces_of(table: PointTable, dim: int) -> Iterator[Subspace]:
    """Lazily enumerate all flats of the given projective dimension.

    Streams RREF matrices grouped by pivot-column pattern; deterministic order.
    """
    n, q, gf = table.n, table.q, table.gf
    k = dim + 1
    if dim == -1:
        yield empty_flat(table)
        return
    if k > n + 1:
        return
    cols = n + 1
    for pivots in combinations(range(cols), k):
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(cols)
            if c > pivots[r] and c not in pivots
        ]
        base = np.zeros((k, cols), dtype=np.int16)
        for r, pc in enumerate(pivots):
            base[r, pc] = 1
        if not free_positions:
            yield Subspace(table, base.copy(), rref=True)
            continue
        for fill in np.ndindex(*([q] * len(free_positions))):
            m = base.copy()
            for (r, c), v in zip(free_positions, fill):
                m[r, c] = v
            yield Subspace(table, m, rref=True)


def flats_through(
    f: Subspace, dim_target: int, within: Optional[Subspace] = None
) -> Iterator[Subspace]:
    """All flats of dimension dim_target containing f, inside `within` (default
    the whole space).  Lazy; count matches the Gaussian coefficient."""
    table = f.table
    amb = within if within is not None else full_space(table)
    if not (f.dim < dim_target <= amb.dim):
        raise DimensionError(
            f"need dim(f) < dim_target <= dim(ambient), got {f.dim} < {dim_target} <= {amb.dim}"
        )
    if not amb.contains_flat(f):
        raise DimensionError("flat does not lie inside the given ambient flat")
    gf = table.gf
    # complement of f inside amb: internal quotient coordinates
    fb = f.basis
    ab = amb.basis
    comp = []
    work = fb.copy() if len(fb) else np.zeros((0, table.n + 1), dtype=np.int16)
    for row in ab:
        cand = np.concatenate([work, row[None, :]], axis=0)
        r, _ = rref_gf(cand, gf)
        if len(r) > len(work):
            work = r
            comp.append(row)
    comp = np.stack(comp) if comp else np.zeros((0, table.n + 1), dtype=np.int16)
    m = len(comp) - 1  # projective dimension of the quotient
    r = dim_target - f.dim - 1  # dimension of the flat needed in the quotient
    if m < 1:
        # quotient is a single point: only possible flat is amb itself
        if r == 0 and len(comp) == 1:
            yield amb
        return
    qtab = point_table(m, table.q)
    for qflat in subspaces_of(qtab, r):
        rows = matmul_gf(qflat.basis, comp, gf)
        yield Subspace(table, np.concatenate([fb, rows], axis=0) if len(fb) else rows)


def hyperplanes_through(flat: Subspace) -> list[Hyperplane]:
    """All hyperplanes containing the flat, in canonical dual-point order."""
    table = flat.table
    duals = kernel_gf(flat.basis, table.gf) if len(flat.basis) else np.eye(
        table.n + 1, dtype=np.int16
    )
    k = len(duals)
    if k == 0:
        return []
    if k == 1:
        return [Hyperplane(table, duals[0])]
    small = point_table(k - 1, table.q)
    rows = matmul_gf(small.coords, duals, table.gf)
    rows = table.normalize(rows)
    order = np.argsort(table.index_of(rows, normalized=True), kind="stable")
    return [Hyperplane(table, rows[i]) for i in order]


# ---------------------------------------------------------------------------
# collineations


class Collineation:
    """A projectivity of PG(n,q), i.e. an invertible matrix acting on rows."""

    __slots__ = ("table", "matrix", "_inv")

    def __init__(self, table: PointTable, matrix: np.ndarray):
        self.table = table
        m = np.asarray(matrix, dtype=np.int16) % table.q if table.h == 1 else np.asarray(
            matrix, dtype=np.int16
        )
        if m.shape != (table.n + 1, table.n + 1):
            raise DimensionError("collineation matrix has wrong shape")
        try:
            self._inv = invert_gf(m, table.gf)
        except SingularMatrix:
            raise SingularMatrix("collineation matrix is singular")
        self.matrix = m

    def point_permutation(self) -> np.ndarray:
        """perm[i] = index of the image of point i."""
        imgs = matmul_gf(self.table.coords, self.matrix, self.table.gf)
        return self.table.index_of(imgs)

    def apply_subspace(self, s: Subspace) -> Subspace:
        if s.is_empty:
            return s
        return Subspace(self.table, matmul_gf(s.basis, self.matrix, self.table.gf))

    def apply_hyperplane(self, hp: Hyperplane) -> Hyperplane:
        new_dual = matmul_gf(hp.dual[None, :], self._inv.T, self.table.gf)[0]
        return Hyperplane(self.table, new_dual)

    def apply_point(self, pt: ProjPoint) -> ProjPoint:
        img = matmul_gf(pt.coords[None, :], self.matrix, self.table.gf)
        return ProjPoint(self.table, int(self.table.index_of(img)[0]))


def apply_collineation(g: Collineation, x):
    """Image of a point, flat, hyperplane or codeword under the projectivity."""
    from .code import Codeword  # local import to avoid a cycle

    if isinstance(x, ProjPoint):
        return g.apply_point(x)
    if isinstance(x, Hyperplane):
        return g.apply_hyperplane(x)
    if isinstance(x, Subspace):
        return g.apply_subspace(x)
    if isinstance(x, Codeword):
        perm = g.point_permutation()
        out = np.empty_like(x.values)
        out[perm] = x.values
        return Codeword(x.table, out)
    raise TypeError(f"cannot apply a collineation to {type(x).__name__}")


def random_collineation(table: PointTable, rng: np.random.Generator) -> Collineation:
    while True:
        m = rng.integers(0, table.q, size=(table.n + 1, table.n + 1), dtype=np.int16)
        try:
            return Collineation(table, m)
        except SingularMatrix:
            continue


def random_flat(table: PointTable, dim: int, rng: np.random.Generator) -> Subspace:
    """Uniform-ish random flat of the given dimension via random full-rank rows."""
    if dim == -1:
        return empty_flat(table)
    k = dim + 1
    while True:
        rows = rng.integers(0, table.q, size=(k, table.n + 1), dtype=np.int16)
        r, _ = rref_gf(rows, table.gf)
        if len(r) == k:
            return Subspace(table, r, rref=True)


# ---------------------------------------------------------------------------
# cone machinery shared by constructions and the decomposer


def complement_plane(vertex: Subspace) -> Subspace:
    """Canonical plane disjoint from the vertex: standard vectors on the
    non-pivot columns of the vertex RREF basis."""
    table = vertex.table
    _, pivots = rref_gf(vertex.basis, table.gf) if len(vertex.basis) else (None, [])
    free = [c for c in range(table.n + 1) if c not in pivots]
    rows = np.zeros((len(free), table.n + 1), dtype=np.int16)
    for i, c in enumerate(free):
        rows[i, c] = 1
    return Subspace(table, rows, rref=True)


def flat_to_text(flat: Subspace) -> str:
    """Textual flat format: one basis row per line; elements comma-separated
    for prime fields, else semicolon-separated coefficient tuples."""
    gf = flat.table.gf
    lines = []
    for row in flat.basis:
        if gf.h == 1:
            lines.append(",".join(str(int(v)) for v in row))
        else:
            lines.append(";".join(",".join(str(int(d)) for d in gf.digits[v]) for v in row))
    return "\n".join(lines) + "\n"


def flat_from_text(text: str, table: PointTable) -> Subspace:
    """Parse the textual flat format back into a Subspace."""
    from .errors import ParseError

    gf = table.gf
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            if gf.h == 1:
                vals = [int(x) % gf.p for x in line.split(",")]
            else:
                vals = [
                    gf.element(tuple(int(d) for d in tok.split(","))).value
                    for tok in line.split(";")
                ]
        except (ValueError, IndexError):
            raise ParseError(f"line {lineno}: malformed flat row {line!r}")
        if len(vals) != table.n + 1:
            raise ParseError(
                f"line {lineno}: expected {table.n + 1} elements, got {len(vals)}"
            )
        rows.append(vals)
    if not rows:
        return empty_flat(table)
    return Subspace(table, np.array(rows, dtype=np.int16))


def cone_projection(vertex: Subspace, plane: Subspace) -> np.ndarray:
    """Project every point of the ambient space through the vertex onto the
    plane.

    Returns an int64 array of length theta_n: for a point index i off the
    vertex, the value is the internal plane index of <vertex, P_i> meet plane;
    vertex points get -1.  Requires vertex and plane disjoint and spanning.
    """
    table = vertex.table
    gf = table.gf
    K = vertex.basis
    B = plane.basis
    if len(B) != 3:
        raise DimensionError("base flat must be a plane")
    M = np.concatenate([K, B], axis=0) if len(K) else B
    if M.shape[0] != table.n + 1:
        raise DimensionError("vertex and plane do not span the ambient space")
    Minv = invert_gf(M, gf)
    Y = matmul_gf(table.coords, Minv, gf)
    bot = Y[:, len(K):]
    vertex_mask = ~(bot != 0).any(axis=1)
    proj = np.full(table.num_points, -1, dtype=np.int64)
    ptab = point_table(2, table.q)
    live = ~vertex_mask
    proj[live] = ptab.index_of(bot[live])
    return proj
