"""Decomposition of small-weight codewords into hyperplanes through a fixed
(n-3)-space.

The low weight range (at most min{(3q-6)theta_{n-2}+2, B}) is handled by the
two-hyperplane representation recovered from long secants through support
anchors.  Above it, candidate heavy hyperplanes are found the same way;
their triple meets (or a consistent-point scan inside a pairwise meet)
produce the vertex, which is then verified globally by the cone property.
A pencil sweep through a 3-secant remains as a fallback mirroring the
existence proof.  All returned decompositions are self-verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

import numpy as np

from .bounds import bounds
from .classify import classify_plane, cone_structure
from .code import (
    Codeword,
    incidence_vector,
    is_codeword,
    lines_meeting_support,
    linear_combination,
    restrict,
    secant_spectrum,
)
from .errors import (
    DecompositionFailed,
    DimensionError,
    NoRepresentation,
    NotACodeword,
    WeightOutOfRange,
)
from .geometry import (
    Hyperplane,
    hyperplane_by_index,
    PointTable,
    Subspace,
    complement_plane,
    empty_flat,
    full_space,
    hyperplanes_through,
    kernel_gf,
    matmul_gf,
    meet,
    plane_lines,
    point_table,
    span,
    theta,
)


@dataclass
class Decomposition:
    """Vertex flat, disjoint value plane, base values, and hyperplane terms.

    Every term hyperplane contains the vertex; reconstructing the cone from
    (vertex, plane, values) reproduces the codeword exactly.
    """

    vertex: Subspace
    plane: Subspace
    values: np.ndarray
    terms: list
    family: Optional[str] = None
    seed: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "vertex": self.vertex.basis.tolist(),
            "plane": self.plane.basis.tolist(),
            "values": [
                {"point_index": int(i), "value": int(v)}
                for i, v in enumerate(self.values)
                if v
            ],
            "terms": [
                {"coeff": int(c), "dual_coords": h.dual.tolist()} for c, h in self.terms
            ],
        }


def verify_decomposition(c: Codeword, d: Decomposition) -> bool:
    """Rebuild the cone from the decomposition and compare pointwise."""
    from .construct import cone_codeword

    if d.plane.table is not c.table:
        return False
    base = Codeword(point_table(2, c.q), d.values)
    try:
        rebuilt = cone_codeword(d.vertex, d.plane, base)
    except Exception:
        return False
    if rebuilt != c:
        return False
    return all(h.subspace().contains_flat(d.vertex) for _, h in d.terms)


# ---------------------------------------------------------------------------
# secants and candidate hyperplanes


def find_3_secant(c: Codeword) -> Optional[Subspace]:
    """First 3-secant in canonical line order, or None."""
    lines = lines_meeting_support(c, 3, limit=1)
    return lines[0] if lines else None


def _anchored_keys(tab: PointTable, anchor: int, others: np.ndarray) -> np.ndarray:
    from .classify import _anchored_direction_keys

    return _anchored_direction_keys(tab, tab.coords[anchor], tab.coords[others])


def _candidate_hyperplanes(c: Codeword, max_flats: int = 8) -> list[Subspace]:
    """Span of the long secants through successive support anchors.

    For combinations of hyperplanes and for cones over plane codewords these
    spans are exactly the heavy hyperplanes covering the support; anchors on
    intersections span the whole space and are skipped.  Anchors already
    covered by a found hyperplane are skipped, so the scan is near-linear.
    """
    tab = c.table
    q = c.q
    supp = c.support()
    if q <= 3:
        # the long-secant threshold q-1 <= 2 cannot separate heavy lines from
        # crossings; these spaces are tiny, so scan hyperplanes directly
        counts = np.zeros(tab.num_points, dtype=np.int64)
        coords_t = tab.coords[supp].T
        for lo in range(0, tab.num_points, 2048):
            inc = matmul_gf(tab.coords[lo : lo + 2048], coords_t, tab.gf) == 0
            counts[lo : lo + inc.shape[0]] = inc.sum(axis=1)
        thresh = (q - 1) * q ** (tab.n - 2)
        heavy = np.nonzero(counts >= thresh)[0]
        order = np.lexsort((heavy, -counts[heavy]))
        flats = [hyperplane_by_index(tab, int(heavy[i])).subspace() for i in order]
        return flats[:max_flats]
    covered = np.zeros(tab.num_points, dtype=bool)
    found: list[Subspace] = []
    for anchor in supp.tolist():
        if covered[anchor]:
            continue
        others = supp[supp != anchor]
        if len(others) == 0:
            break
        keys = _anchored_keys(tab, anchor, others)
        uniq, cnt = np.unique(keys, return_counts=True)
        long_keys = uniq[cnt >= q - 2]
        if len(long_keys) == 0:
            continue
        mates = others[np.isin(keys, long_keys)]
        rows = np.concatenate([tab.coords[anchor][None, :], tab.coords[mates]], axis=0)
        flat = Subspace(tab, rows)
        if flat.dim == tab.n - 1 and flat not in found:
            found.append(flat)
            covered |= _hyperplane_of_flat(flat).point_mask()
            if len(found) >= max_flats:
                break
    return found


def _hyperplane_of_flat(flat: Subspace) -> Hyperplane:
    duals = kernel_gf(flat.basis, flat.table.gf)
    assert len(duals) == 1
    return Hyperplane(flat.table, duals[0])


def decompose_two_hyperplanes(
    c: Codeword, *, check_weight: bool = True, check_membership: bool = True
) -> list:
    """Exact representation over at most two distinct hyperplanes.

    Weight 0 gives the empty combination; weight theta_{n-1} the unique
    hyperplane spanned by the support; otherwise the two hyperplanes are
    recovered from long secants through support anchors and the coefficients
    solved from the exclusive regions.  Failure raises NoRepresentation.

    The default weight precondition is min{(3q-6)theta_{n-2}+2, floor(B)};
    callers may disable it to attempt a representation anyway.
    """
    tab = c.table
    n, q, p = c.n, c.q, c.p
    wt = c.weight()
    if check_weight:
        bt = bounds(n, q)
        limit = min((3 * q - 6) * theta(n - 2, q) + 2, bt.floor_B)
        if wt > limit:
            raise WeightOutOfRange(f"weight {wt} exceeds the two-hyperplane range {limit}")
    if check_membership and not is_codeword(c):
        raise NotACodeword("input is not in the hyperplane code")
    if wt == 0:
        return []
    # for tiny q the candidate scan may return spurious heavy hyperplanes
    # alongside the true ones, so keep a longer list and verify each guess
    flats = _candidate_hyperplanes(c, max_flats=3 if q > 3 else tab.num_points)
    for f1 in flats:
        hp = _hyperplane_of_flat(f1)
        pts = hp.point_indices()
        vals = c.values[pts]
        a = int(vals[0]) if len(pts) else 0
        if a and (vals == a).all() and wt == len(pts):
            return [(a, hp)]
    for f1, f2 in combinations(flats, 2):
        h1, h2 = _hyperplane_of_flat(f1), _hyperplane_of_flat(f2)
        m1, m2 = h1.point_mask(), h2.point_mask()
        only1 = np.nonzero(m1 & ~m2)[0]
        only2 = np.nonzero(m2 & ~m1)[0]
        if len(only1) == 0 or len(only2) == 0:
            continue
        a = int(c.values[only1[0]])
        b = int(c.values[only2[0]])
        if a == 0 or b == 0:
            continue
        recon = (a * m1.astype(np.int64) + b * m2.astype(np.int64)) % p
        if (recon.astype(np.int16) == c.values).all():
            return [(a, h1), (b, h2)]
    raise NoRepresentation("no representation over at most two hyperplanes found")


# ---------------------------------------------------------------------------
# plane-code solver: express a plane codeword over the line pencil


class _PlaneSolver:
    """Row-reduced line-incidence system of PG(2,q) with tracked transform,
    for deterministic coefficient recovery."""

    def __init__(self, q: int):
        tab = point_table(2, q)
        p = tab.p
        _, pts = plane_lines(q)
        nl = tab.num_points
        L = np.zeros((nl, nl), dtype=np.int64)
        for i in range(nl):
            L[i, pts[i]] = 1
        T = np.eye(nl, dtype=np.int64)
        pivots: list[int] = []
        r = 0
        for col in range(nl):
            rows = np.nonzero(L[r:, col])[0]
            if len(rows) == 0:
                continue
            pr = r + rows[0]
            L[[r, pr]] = L[[pr, r]]
            T[[r, pr]] = T[[pr, r]]
            inv = pow(int(L[r, col]), p - 2, p)
            L[r] = L[r] * inv % p
            T[r] = T[r] * inv % p
            hit = np.nonzero(L[:, col])[0]
            for i in hit:
                if i != r:
                    f = int(L[i, col])
                    L[i] = (L[i] - f * L[r]) % p
                    T[i] = (T[i] - f * T[r]) % p
            pivots.append(col)
            r += 1
        self.p = p
        self.R = L[:r]
        self.T = T[:r]
        self.pivots = pivots

    def solve(self, target: np.ndarray) -> Optional[np.ndarray]:
        """Coefficients per line with sum_l x_l * incidence(l) = target."""
        res = target.astype(np.int64) % self.p
        cvec = np.zeros(len(self.pivots), dtype=np.int64)
        for i, pc in enumerate(self.pivots):
            f = int(res[pc])
            if f:
                cvec[i] = f
                res = (res - f * self.R[i]) % self.p
        if res.any():
            return None
        return (cvec @ self.T) % self.p


@lru_cache(maxsize=None)
def plane_solver(q: int) -> _PlaneSolver:
    return _PlaneSolver(q)


# ---------------------------------------------------------------------------
# canonical vertex and full decompositions


def _plane_consistent_points(base_vals: np.ndarray, q: int) -> list[int]:
    """Plane points through which every line has constant values off the
    point; for a codeword these are exactly the directions along which the
    cone vertex may grow."""
    _, pts = plane_lines(q)
    npts = len(base_vals)
    disqualified = np.zeros(npts, dtype=bool)
    for line in pts:
        vals = base_vals[line]
        uniq, cnt = np.unique(vals, return_counts=True)
        if len(uniq) == 1:
            continue
        if len(uniq) == 2 and cnt.min() == 1:
            outlier = line[vals == uniq[cnt.argmin()]][0]
            mask = line != outlier
            disqualified[line[mask]] = True
        else:
            disqualified[line] = True
    return [int(i) for i in range(npts) if not disqualified[i]]


def _drop_rule(f: Subspace, target_dim: int) -> Subspace:
    return Subspace(f.table, f.basis[: target_dim + 1], rref=True)


def _terms_from_base(
    vertex: Subspace, plane: Subspace, base_vals: np.ndarray, q: int
) -> Optional[list]:
    """Hyperplane terms through the vertex from a line representation of the
    base: classification witness lines when at most three suffice, else the
    deterministic pencil solve."""
    tab = vertex.table
    ptab = point_table(2, q)
    base = Codeword(ptab, base_vals)
    st = classify_plane(base)
    pairs: list[tuple[int, np.ndarray]] = []
    if st.tag in ("T0", "Tq1", "T2q", "T2q1", "Tstar", "Ttriangle") and st.witness:
        for coeff, dual in zip(st.witness["coeffs"], st.witness["lines"]):
            pairs.append((int(coeff), np.array(dual, dtype=np.int16)))
    else:
        x = plane_solver(q).solve(base_vals)
        if x is None:
            return None
        duals = plane_lines(q)[0]
        for i in np.nonzero(x)[0]:
            pairs.append((int(x[i]), duals[i]))
    terms = []
    for coeff, dual in pairs:
        line_pts = kernel_gf(dual[None, :], ptab.gf)
        rows = matmul_gf(line_pts, plane.basis, tab.gf)
        flat = span(vertex, Subspace(tab, rows))
        if flat.dim != tab.n - 1:
            return None
        terms.append((coeff, _hyperplane_of_flat(flat)))
    return terms


def decomposition_from_vertex(c: Codeword, kappa0: Subspace) -> Optional[Decomposition]:
    """Validate a candidate vertex, grow it to the canonical maximal vertex,
    and assemble the full decomposition; None if the cone property fails."""
    tab = c.table
    n = tab.n
    st = cone_structure(c, kappa0)
    if st is None:
        return None
    plane0, base_vals0, _ = st
    cons = _plane_consistent_points(base_vals0, c.q)
    vertex = kappa0
    if cons:
        itab = point_table(2, c.q)
        lifted = matmul_gf(itab.coords[np.array(cons)], plane0.basis, tab.gf)
        grown = span(kappa0, Subspace(tab, lifted))
        if grown.dim > n - 3:
            cand = _drop_rule(grown, n - 3)
            if cone_structure(c, cand) is not None:
                vertex = cand
    if vertex != kappa0:
        st = cone_structure(c, vertex)
        if st is None:  # canonicalization must stay valid
            vertex = kappa0
            st = cone_structure(c, vertex)
    plane, base_vals, _ = st
    terms = _terms_from_base(vertex, plane, base_vals, c.q)
    if terms is None:
        return None
    d = Decomposition(vertex, plane, base_vals, terms)
    return d if verify_decomposition(c, d) else None


def _vertex_candidates_in_meet(c: Codeword, m_flat: Subspace) -> list[Subspace]:
    """Vertex candidates inside an (n-2)-dimensional meet of heavy
    hyperplanes: span of globally cone-consistent points, then the drop-rule
    subflat (valid when every subflat works)."""
    from .classify import _is_cone_consistent_point

    n = c.n
    cands = []
    pts = m_flat.point_indices()
    survivors = [int(v) for v in pts if _is_cone_consistent_point(c, int(v))]
    if survivors:
        flat = Subspace(c.table, c.table.coords[np.array(survivors)])
        if flat.dim == n - 3:
            cands.append(flat)
    cands.append(_drop_rule(m_flat, n - 3))
    return cands


def decompose(c: Codeword) -> Decomposition:
    """Vertex plane decomposition of a codeword with weight below the bound.

    Mirrors the constructive proof: the low range goes through the
    two-hyperplane representation; the high range locates heavy hyperplanes,
    meets them to a vertex candidate (falling back to a pencil sweep through
    a 3-secant) and verifies the cone property globally.  A failure inside
    the weight range is surfaced as DecompositionFailed with diagnostics.
    """
    tab = c.table
    n, q = c.n, c.q
    if n < 2:
        raise DimensionError("decompose needs n >= 2")
    bt = bounds(n, q)
    wt = c.weight()
    if wt > bt.floor_B:
        raise WeightOutOfRange(f"weight {wt} exceeds floor(B) = {bt.floor_B}")
    if not is_codeword(c):
        raise NotACodeword("input is not in the hyperplane code")

    if n == 2:
        d = decomposition_from_vertex(c, empty_flat(tab))
        if d is None:
            raise DecompositionFailed(
                "plane codeword admits no line decomposition", _diagnostics(c)
            )
        return d

    low_limit = min((3 * q - 6) * theta(n - 2, q) + 2, bt.floor_B)
    if wt <= low_limit:
        try:
            terms = decompose_two_hyperplanes(c, check_weight=False, check_membership=False)
        except NoRepresentation as exc:
            raise DecompositionFailed(str(exc), _diagnostics(c))
        if not terms:
            kappa0 = _drop_rule(full_space(tab), n - 3)
        elif len(terms) == 1:
            kappa0 = _drop_rule(terms[0][1].subspace(), n - 3)
        else:
            m = meet(terms[0][1].subspace(), terms[1][1].subspace())
            kappa0 = _drop_rule(m, n - 3)
        d = decomposition_from_vertex(c, kappa0)
        if d is None:
            raise DecompositionFailed(
                "two-hyperplane vertex failed cone verification", _diagnostics(c)
            )
        return d

    # high range: heavy hyperplane meets, then the pencil fallback
    flats = _candidate_hyperplanes(c)
    tried = 0
    for combo in combinations(flats, 3):
        f = meet(meet(combo[0], combo[1]), combo[2])
        cands = []
        if f.dim == n - 3:
            cands = [f]
        elif f.dim == n - 2:
            cands = _vertex_candidates_in_meet(c, f)
        for kappa in cands:
            tried += 1
            d = decomposition_from_vertex(c, kappa)
            if d is not None:
                return d
    for combo in combinations(flats, 2):
        f = meet(combo[0], combo[1])
        if f.dim == n - 2:
            for kappa in _vertex_candidates_in_meet(c, f):
                tried += 1
                d = decomposition_from_vertex(c, kappa)
                if d is not None:
                    return d
    t = find_3_secant(c)
    if t is not None:
        for hp in hyperplanes_through(t):
            sub = hp.subspace()
            cpi = restrict(c, sub)
            inner = _candidate_hyperplanes(cpi, max_flats=4)
            for combo3 in combinations(inner, 3):
                f_in = meet(meet(combo3[0], combo3[1]), combo3[2])
                # a three-term pencil inside the hyperplane meets in an
                # internal (k-2)-flat, k = n-1, which lifts to the vertex
                if f_in.dim != n - 3:
                    continue
                rows = matmul_gf(f_in.basis, sub.basis, tab.gf)
                kappa = Subspace(tab, rows)
                if kappa.dim != n - 3:
                    continue
                tried += 1
                d = decomposition_from_vertex(c, kappa)
                if d is not None:
                    return d
    raise DecompositionFailed(
        f"no valid vertex found after {tried} candidates", _diagnostics(c)
    )


def _diagnostics(c: Codeword) -> dict:
    sp = secant_spectrum(c)
    return {
        "n": c.n,
        "q": c.q,
        "weight": c.weight(),
        "spectrum": {str(a): int(sp.counts[a]) for a in range(c.q + 2) if sp.counts[a]},
    }
