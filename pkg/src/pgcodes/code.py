"""The p-ary code of points and hyperplanes of PG(n,q).

Codewords are dense integer vectors of length theta_n indexed by the
canonical point order, with entries in [0, p).  Code membership is decided
exactly:

* for prime q, a vector is in the code iff its lift to F_p^{n+1} agrees with
  a polynomial that is a constant plus a homogeneous reduced polynomial of
  degree p-1; the reduced coefficient tensor is computed by an inverse
  evaluation transform along each axis, so a query costs O(p^{n+1}) with no
  precomputed basis;
* for proper prime powers, a row-reduced basis of hyperplane incidence
  vectors is built once per (n,q) and cached; every generator row is checked
  against the basis, so the cache is a certified spanning set.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    DimensionError,
    DimensionMismatch,
    ParseError,
)
from .field import factor_prime_power
from .geometry import (
    Hyperplane,
    PointTable,
    Subspace,
    line_count,
    matmul_gf,
    point_table,
    theta,
)


class Codeword:
    """A p-ary function on the points of PG(n,q), immutable."""

    __slots__ = ("table", "values")

    def __init__(self, table: PointTable, values):
        vals = np.asarray(values, dtype=np.int16)
        if vals.shape != (table.num_points,):
            raise DimensionError(
                f"expected {table.num_points} values for PG({table.n},{table.q}), got {vals.shape}"
            )
        if vals.min(initial=0) < 0 or vals.max(initial=0) >= table.p:
            vals = vals % table.p
        self.table = table
        self.values = vals
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def q(self) -> int:
        return self.table.q

    @property
    def p(self) -> int:
        return self.table.p

    def weight(self) -> int:
        return int(np.count_nonzero(self.values))

    def support(self) -> np.ndarray:
        return np.nonzero(self.values)[0]

    def holes(self) -> np.ndarray:
        return np.nonzero(self.values == 0)[0]

    def _check_same_space(self, other: "Codeword") -> None:
        if self.table is not other.table:
            raise DimensionMismatch("codewords live in different spaces")

    def __add__(self, other: "Codeword") -> "Codeword":
        self._check_same_space(other)
        return Codeword(self.table, (self.values + other.values) % self.p)

    def __sub__(self, other: "Codeword") -> "Codeword":
        self._check_same_space(other)
        return Codeword(self.table, (self.values - other.values) % self.p)

    def __rmul__(self, scalar: int) -> "Codeword":
        return Codeword(self.table, (int(scalar) % self.p) * self.values % self.p)

    def __eq__(self, other):
        return (
            isinstance(other, Codeword)
            and self.table is other.table
            and bool((self.values == other.values).all())
        )

    def __hash__(self):
        return hash((self.n, self.q, self.values.tobytes()))

    def __repr__(self):
        return f"Codeword(PG({self.n},{self.q}), wt={self.weight()})"


def zero_codeword(table: PointTable) -> Codeword:
    return Codeword(table, np.zeros(table.num_points, dtype=np.int16))


def incidence_vector(hp: Hyperplane) -> Codeword:
    """The 0/1 vector of a hyperplane: weight theta_{n-1}."""
    return Codeword(hp.table, hp.point_mask().astype(np.int16))


def linear_combination(table: PointTable, terms) -> Codeword:
    """Pointwise mod-p sum of coefficient * incidence_vector(H).

    Zero coefficients are dropped with a warning.
    """
    acc = np.zeros(table.num_points, dtype=np.int64)
    for coeff, hp in terms:
        c = int(coeff) % table.p
        if c == 0:
            warnings.warn("dropping zero-coefficient term in linear combination")
            continue
        acc += c * hp.point_mask()
    return Codeword(table, acc % table.p)


def support_and_weight(c: Codeword) -> tuple[np.ndarray, int]:
    supp = c.support()
    return supp, len(supp)


def scalar_product(v: Codeword, w: Codeword) -> int:
    v._check_same_space(w)
    return int(np.dot(v.values.astype(np.int64), w.values.astype(np.int64)) % v.p)


def subspace_dot(c: Codeword, f: Subspace, allow_points: bool = False) -> int:
    """Sum of c over the points of the flat, mod p.

    For any combination c = sum_i a_i H_i and any flat of dimension >= 1 this
    equals sum_i a_i; dimension 0 is allowed only with an explicit flag since
    that identity needs k >= 1.
    """
    if f.dim < 1 and not allow_points:
        raise DimensionError("subspace_dot needs a flat of dimension >= 1")
    if f.is_empty:
        return 0
    idx = f.point_indices()
    return int(c.values[idx].astype(np.int64).sum() % c.p)


def restrict(c: Codeword, f: Subspace) -> Codeword:
    """Restriction of c to the flat, as a codeword of the internal PG(k,q).

    The fixed isomorphism maps the i-th echelon basis row of f to the i-th
    standard coordinate of PG(k,q).
    """
    if f.dim < 1:
        raise DimensionError("restriction needs a flat of dimension >= 1")
    idx = f.point_indices()
    return Codeword(point_table(f.dim, c.q), c.values[idx])


# ---------------------------------------------------------------------------
# membership


_PRIME_LIFT_CACHE: dict = {}
_BASIS_CACHE: dict = {}


def _prime_lift_map(n: int, p: int) -> np.ndarray:
    """Map from affine vectors of F_p^{n+1} (row-major digit encoding) to
    canonical point indices; the zero vector maps to -1."""
    key = (n, p)
    cached = _PRIME_LIFT_CACHE.get(key)
    if cached is not None:
        return cached
    tab = point_table(n, p)
    size = p ** (n + 1)
    out = np.full(size, -1, dtype=np.int64)
    # all nonzero vectors: scalar multiples t * coords for t in 1..p-1
    weights = np.array([p ** (n - i) for i in range(n + 1)], dtype=np.int64)
    for t in range(1, p):
        rows = (t * tab.coords.astype(np.int64)) % p
        keys = rows @ weights
        out[keys] = np.arange(tab.num_points)
    _PRIME_LIFT_CACHE[key] = out
    return out


def _vandermonde_inverse(p: int) -> np.ndarray:
    """Inverse mod p of the evaluation matrix V[t,e] = t^e."""
    V = np.array([[pow(t, e, p) for e in range(p)] for t in range(p)], dtype=np.int64)
    aug = np.concatenate([V, np.eye(p, dtype=np.int64)], axis=1) % p
    for c in range(p):
        pr = next(r for r in range(c, p) if aug[r, c] % p)
        aug[[c, pr]] = aug[[pr, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), p - 2, p) % p
        for r in range(p):
            if r != c and aug[r, c]:
                aug[r] = (aug[r] - aug[r, c] * aug[c]) % p
    return aug[:, p:]


def _is_codeword_prime(c: Codeword) -> bool:
    n, p = c.n, c.p
    lift = _prime_lift_map(n, p)
    size = p ** (n + 1)
    # products of the transform stay below 2**24 for p <= 127, so float32 is
    # exact and halves the footprint of large tensors
    dtype = np.float32 if size > 4_000_000 else np.float64
    u = np.zeros(size, dtype=dtype)
    live = lift >= 0
    u[live] = c.values[lift[live]]
    u = u.reshape((p,) * (n + 1))
    vinv_t = _vandermonde_inverse(p).T.astype(dtype)
    for ax in range(n + 1):
        u = np.moveaxis(u, ax, -1)
        u = (u @ vinv_t) % p
        u = np.moveaxis(u, -1, ax)
    f = u.astype(np.int64)

    deg = np.zeros((p,) * (n + 1), dtype=np.int64)
    for ax in range(n + 1):
        shape = [1] * (n + 1)
        shape[ax] = p
        deg = deg + np.arange(p).reshape(shape)
    allowed = (deg == 0) | (deg == p - 1)

    # the unknown value at the zero vector contributes c0 * prod(1 - x_i^(p-1));
    # its coefficient pattern lives on exponents in {0, p-1}^(n+1)
    estar = tuple([p - 1, p - 1] + [0] * (n - 1))
    c0 = (-f[estar]) % p
    if c0:
        for pattern in np.ndindex(*([2] * (n + 1))):
            e = tuple((p - 1) * b for b in pattern)
            sign = (-1) ** sum(pattern)
            f[e] = (f[e] + c0 * sign) % p
    return bool((f[~allowed] == 0).all())


def _hyperplane_row_basis(n: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-reduced spanning basis of all hyperplane incidence rows over F_p.

    Returns (basis, pivot_columns).  Every hyperplane row is verified to
    reduce to zero against the final basis, so the result is exact.
    """
    key = (n, q)
    cached = _BASIS_CACHE.get(key)
    if cached is not None:
        return cached
    tab = point_table(n, q)
    p = tab.p
    N = tab.num_points
    coords_t = tab.coords.T

    def rows_of(lo: int, hi: int) -> np.ndarray:
        inc = matmul_gf(tab.coords[lo:hi], coords_t, tab.gf) == 0
        return inc.astype(np.float64)

    basis = np.zeros((0, N), dtype=np.float64)
    pivots: list[int] = []
    chunk = 256
    for lo in range(0, N, chunk):
        block = rows_of(lo, min(lo + chunk, N))
        if len(pivots):
            block = (block - block[:, pivots] @ basis) % p
        added_in_block = False
        for row in block:
            if added_in_block:
                # re-reduce against pivots added earlier in this block
                row = (row - row[pivots] @ basis) % p
            if not row.any():
                continue
            piv = int(np.nonzero(row)[0][0])
            row = row * pow(int(row[piv]), p - 2, p) % p
            if len(pivots):
                basis = (basis - np.outer(basis[:, piv], row)) % p
            basis = np.concatenate([basis, row[None, :]], axis=0)
            pivots.append(piv)
            order = np.argsort(pivots, kind="stable")
            pivots = [pivots[i] for i in order]
            basis = basis[order]
            added_in_block = True
    # certify: every hyperplane row reduces to zero
    for lo in range(0, N, 1024):
        block = rows_of(lo, min(lo + 1024, N))
        red = (block - block[:, pivots] @ basis) % p
        if red.any():
            raise AssertionError("hyperplane basis failed certification")
    result = (basis, np.array(pivots, dtype=np.int64))
    _BASIS_CACHE[key] = result
    return result


def code_dimension(n: int, q: int) -> int:
    """Dimension over F_p of the hyperplane code, from the cached basis."""
    p, h = factor_prime_power(q)
    if h == 1:
        return math.comb(p + n - 1, n) + 1
    basis, _ = _hyperplane_row_basis(n, q)
    return len(basis)


def is_codeword(v: Codeword) -> bool:
    """True iff v lies in the F_p-row space of the point-hyperplane incidence
    matrix."""
    if v.table.h == 1:
        return _is_codeword_prime(v)
    basis, pivots = _hyperplane_row_basis(v.n, v.q)
    x = v.values.astype(np.float64)
    red = (x - x[pivots] @ basis) % v.p
    return not red.any()


def is_dual_codeword(v: Codeword) -> bool:
    """True iff v is orthogonal to every hyperplane incidence vector."""
    tab = v.table
    supp = v.support()
    if len(supp) == 0:
        return True
    vals = v.values[supp].astype(np.int64)
    coords = tab.coords[supp]
    chunk = 4096
    for lo in range(0, tab.num_points, chunk):
        duals = tab.coords[lo : lo + chunk]
        inc = matmul_gf(duals, coords.T, tab.gf) == 0
        sums = inc @ vals % v.p
        if sums.any():
            return False
    return True


# ---------------------------------------------------------------------------
# lines against a support: canonical keys, spectra


def _leading_cols(rows: np.ndarray) -> np.ndarray:
    return (rows != 0).argmax(axis=1)


def canonical_line_keys(tab: PointTable, pi: np.ndarray, qi: np.ndarray) -> np.ndarray:
    """Canonical int64 key of the line through point pairs (pi[k], qi[k]).

    The key encodes the RREF basis of the line, so it identifies the line
    independently of the spanning pair.  Lines are canonically ordered by key.
    """
    gf = tab.gf
    a = tab.coords[pi]
    b = tab.coords[qi]
    la = _leading_cols(a)
    lb = _leading_cols(b)
    swapmask = la > lb
    r1 = np.where(swapmask[:, None], b, a)
    r2 = np.where(swapmask[:, None], a, b)
    j1 = np.minimum(la, lb)
    ar = np.arange(len(a))
    # clear column j1 of the second row (first row has a 1 there)
    fac = r2[ar, j1]
    r2 = gf.SUB[r2, gf.MUL[fac[:, None], r1]]
    r2 = tab.normalize(r2)
    j2 = _leading_cols(r2)
    fac = r1[ar, j2]
    r1 = gf.SUB[r1, gf.MUL[fac[:, None], r2]]
    ranks = np.concatenate([gf.rank[r1], gf.rank[r2]], axis=1)
    key = np.zeros(len(a), dtype=np.int64)
    for col in range(ranks.shape[1]):
        key = key * tab.q + ranks[:, col]
    return key


def _support_pairs(supp: np.ndarray):
    """Yield (pi, qi) index-array chunks covering all unordered support pairs."""
    wt = len(supp)
    budget = 2_000_000
    # anchor ranges sized to keep each chunk under the budget
    start = 0
    while start < wt - 1:
        rows = 0
        stop = start
        while stop < wt - 1 and rows + (wt - stop - 1) <= budget:
            rows += wt - stop - 1
            stop += 1
        if stop == start:
            stop = start + 1
        anchors = []
        others = []
        for a in range(start, stop):
            anchors.append(np.full(wt - a - 1, supp[a], dtype=np.int64))
            others.append(supp[a + 1 :].astype(np.int64))
        yield np.concatenate(anchors), np.concatenate(others)
        start = stop


@dataclass
class SecantSpectrum:
    """Per-alpha line counts against a support; counts[alpha] for 0..q+1."""

    n: int
    q: int
    counts: np.ndarray

    def total(self) -> int:
        return int(self.counts.sum())

    def offending(self, lo: int, hi: int) -> list[int]:
        """Alphas with nonzero count in the closed interval [lo, hi]."""
        return [a for a in range(lo, hi + 1) if 0 <= a < len(self.counts) and self.counts[a]]


def secant_spectrum(c: Codeword) -> SecantSpectrum:
    """Exact per-alpha line counts, streaming over support point pairs.

    Lines meeting the support at least twice are identified by canonical
    keys from all support pairs; 1-secant and 0-secant counts follow from
    incidence totals.
    """
    tab = c.table
    n, q = c.n, c.q
    total = line_count(n, q)
    counts = np.zeros(q + 2, dtype=object)
    supp = c.support()
    wt = len(supp)
    if wt == 0:
        counts[0] = total
        return SecantSpectrum(n, q, counts)
    if n == 1:
        counts[wt] = 1
        return SecantSpectrum(n, q, counts)
    keys = np.concatenate(
        [canonical_line_keys(tab, pi, qi) for pi, qi in _support_pairs(supp)]
    )
    _, cnt = np.unique(keys, return_counts=True)
    alpha = ((1.0 + np.sqrt(1.0 + 8.0 * cnt.astype(np.float64))) / 2.0).astype(np.int64)
    assert (alpha * (alpha - 1) // 2 == cnt).all(), "pair multiplicity is not triangular"
    hist = np.bincount(alpha, minlength=q + 2)
    covered = int((alpha * 1).sum())
    for a in range(2, q + 2):
        counts[a] = int(hist[a])
    counts[1] = wt * theta(n - 1, q) - covered
    counts[0] = total - int(sum(counts[1:]))
    return SecantSpectrum(n, q, counts)


def lines_meeting_support(
    c: Codeword, alpha: int, limit: Optional[int] = None
) -> list[Subspace]:
    """Alpha-secant lines (alpha >= 2) in canonical line-key order, at most
    `limit` of them (all when omitted)."""
    tab = c.table
    supp = c.support()
    if len(supp) < 2 or alpha < 2:
        return []
    all_keys = []
    all_pi = []
    all_qi = []
    for pi, qi in _support_pairs(supp):
        all_keys.append(canonical_line_keys(tab, pi, qi))
        all_pi.append(pi)
        all_qi.append(qi)
    keys = np.concatenate(all_keys)
    pis = np.concatenate(all_pi)
    qis = np.concatenate(all_qi)
    uniq, first, cnt = np.unique(keys, return_index=True, return_counts=True)
    want = alpha * (alpha - 1) // 2
    hits = first[cnt == want]
    if limit is not None:
        hits = hits[:limit]
    out = []
    for f in hits:
        i, j = int(pis[f]), int(qis[f])
        out.append(Subspace(tab, np.stack([tab.coords[i], tab.coords[j]])))
    return out


# ---------------------------------------------------------------------------
# PGCODE file format


def pgcode_dumps(c: Codeword, sparse: bool = False) -> str:
    tab = c.table
    head = f"{'PGCODE-SPARSE' if sparse else 'PGCODE'} {c.n} {c.q} {tab.p} {tab.h}"
    if sparse:
        supp = c.support()
        body = " ".join(f"{int(i)}:{int(c.values[i])}" for i in supp)
        return head + "\n" + body + "\n"
    lines = [head]
    vals = c.values
    per_line = 32
    for lo in range(0, len(vals), per_line):
        lines.append(" ".join(str(int(v)) for v in vals[lo : lo + per_line]))
    return "\n".join(lines) + "\n"


def pgcode_loads(text: str) -> Codeword:
    lines = text.splitlines()
    if not lines:
        raise ParseError("line 1: empty PGCODE input")
    head = lines[0].split()
    if len(head) != 5 or head[0] not in ("PGCODE", "PGCODE-SPARSE"):
        raise ParseError(f"line 1: malformed header {lines[0]!r}")
    try:
        n, q, p, h = (int(x) for x in head[1:])
    except ValueError:
        raise ParseError(f"line 1: non-integer header fields in {lines[0]!r}")
    try:
        pp, hh = factor_prime_power(q)
    except ValueError:
        raise ParseError(f"line 1: q = {q} is not a prime power")
    if (pp, hh) != (p, h):
        raise ParseError(f"line 1: header says q={q}, p={p}, h={h}, but q = {pp}^{hh}")
    tab = point_table(n, q)
    body = " ".join(lines[1:]).split()
    if head[0] == "PGCODE":
        if len(body) != tab.num_points:
            raise ParseError(
                f"expected {tab.num_points} values, found {len(body)}"
            )
        try:
            vals = np.array([int(x) for x in body], dtype=np.int16)
        except ValueError:
            raise ParseError("non-integer codeword value")
    else:
        vals = np.zeros(tab.num_points, dtype=np.int16)
        for tok in body:
            try:
                idx, val = tok.split(":")
                idx, val = int(idx), int(val)
            except ValueError:
                raise ParseError(f"malformed sparse entry {tok!r}")
            if not 0 <= idx < tab.num_points:
                raise ParseError(f"point index {idx} out of range")
            vals[idx] = val % p
    if (vals < 0).any() or (vals >= p).any():
        raise ParseError(f"codeword values must lie in [0, {p})")
    return Codeword(tab, vals)


def pgcode_dump_path(c: Codeword, path, sparse: bool = False) -> None:
    with open(path, "w") as fh:
        fh.write(pgcode_dumps(c, sparse=sparse))


def pgcode_load_path(path) -> Codeword:
    with open(path) as fh:
        return pgcode_loads(fh.read())
