"""Plane and k-space type classification for small-weight codewords.

Planes are classified by exact representation over at most three long
secants, then by the odd-characteristic three-concurrent-lines signature,
else Other.  Higher-dimensional spaces are recognised as cones: a vertex
flat is recovered from locally cone-consistent points, a disjoint base
plane is classified, and the cone property is verified pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .bounds import BoundTable, bounds
from .code import Codeword, restrict, secant_spectrum, subspace_dot
from .errors import DimensionError, NotAPlaneCodeword
from .geometry import (
    PointTable,
    Subspace,
    complement_plane,
    cone_projection,
    full_space,
    plane_lines,
    point_table,
    span,
    theta,
)

PLANE_TAGS = ("T0", "Tq1", "T2q", "T2q1")
ALL_TAGS = PLANE_TAGS + ("Todd", "Ttriangle", "Tstar", "Other")
EXCLUDED_PLANE_Q = frozenset({8, 9, 16, 25, 27, 49})


@dataclass
class SpaceType:
    """Classification result: tag, weight, and a witness for the tag."""

    tag: str
    weight: int
    witness: Optional[dict] = None
    alt: Optional[dict] = None

    @property
    def in_t_family(self) -> bool:
        return self.tag != "Other"

    def as_dict(self) -> dict:
        out = {"tag": self.tag, "weight": self.weight}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.alt is not None:
            out["alt"] = _jsonable(self.alt)
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Subspace):
        return obj.basis.tolist()
    if isinstance(obj, SpaceType):
        return obj.as_dict()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj


def _tag_for_line_count(r: int, coeff_sum: int, q: int) -> str:
    if r == 0:
        return "T0"
    if r == 1:
        return "Tq1"
    return "T2q" if coeff_sum == 0 else "T2q1"


def _solve_line_combo(values: np.ndarray, line_ids, pts: np.ndarray, p: int):
    """Exact coefficients making the combination of the chosen lines equal to
    values, or None.  Coefficients are pinned on points exclusive to each line."""
    k = len(line_ids)
    coeffs = []
    sets = [pts[i] for i in line_ids]
    for i in range(k):
        others = np.concatenate([sets[j] for j in range(k) if j != i]) if k > 1 else None
        excl = (
            np.setdiff1d(sets[i], others, assume_unique=False)
            if others is not None
            else sets[i]
        )
        if len(excl) == 0:
            return None
        vals = values[excl]
        v0 = int(vals[0])
        if v0 == 0 or not (vals == v0).all():
            return None
        coeffs.append(v0)
    recon = np.zeros(len(values), dtype=np.int64)
    for c, s in zip(coeffs, sets):
        recon[s] += c
    if ((recon % p).astype(np.int16) != values).any():
        return None
    return coeffs


def _todd_signature(c2: Codeword, long_ids: np.ndarray):
    """Cover by three concurrent long secants whose off-center values each
    enumerate F_p exactly once; q must be an odd prime."""
    tab = c2.table
    q, p = c2.q, c2.p
    if tab.h != 1 or p == 2:
        return None
    duals, pts = plane_lines(q)
    supp = set(c2.support().tolist())
    full = np.arange(p)
    for combo in combinations(sorted(int(i) for i in long_ids), 3):
        s0 = set(pts[combo[0]].tolist())
        centers = s0 & set(pts[combo[1]].tolist()) & set(pts[combo[2]].tolist())
        if len(centers) != 1:
            continue
        center = centers.pop()
        union = set()
        for i in combo:
            union |= set(pts[i].tolist())
        if not supp <= union:
            continue
        ok = True
        for i in combo:
            off = np.array([x for x in pts[i] if x != center])
            vals = np.sort(c2.values[off])
            if len(off) != q or not (vals == full).all():
                ok = False
                break
        if not ok:
            continue
        wt = c2.weight()
        if wt != 3 * p - 3 + (1 if c2.values[center] else 0):
            continue
        return {
            "lines": [duals[i].tolist() for i in combo],
            "center": int(center),
            "center_value": int(c2.values[center]),
        }
    return None


def classify_plane(c2: Codeword) -> SpaceType:
    """Classify a codeword of C_1(2,q) into the plane taxonomy.

    Representations over at most three long secants win over the
    three-concurrent-lines odd signature; when both match, the odd witness is
    attached as `alt`.
    """
    if c2.n != 2:
        raise NotAPlaneCodeword(f"expected a PG(2,q) codeword, got n={c2.n}")
    q, p = c2.q, c2.p
    wt = c2.weight()
    if wt == 0:
        return SpaceType("T0", 0, {"lines": [], "coeffs": []})
    duals, pts = plane_lines(q)
    counts = (c2.values[pts] != 0).sum(axis=1)
    long_ids = np.nonzero(counts >= q - 1)[0]
    for r in (1, 2, 3):
        if r == 3 and q in EXCLUDED_PLANE_Q:
            break
        for combo in combinations(sorted(int(i) for i in long_ids), r):
            coeffs = _solve_line_combo(c2.values, combo, pts, p)
            if coeffs is None:
                continue
            witness = {
                "lines": [duals[i].tolist() for i in combo],
                "coeffs": coeffs,
            }
            if r <= 2:
                tag = _tag_for_line_count(r, sum(coeffs) % p, q)
            else:
                shared = (
                    set(pts[combo[0]].tolist())
                    & set(pts[combo[1]].tolist())
                    & set(pts[combo[2]].tolist())
                )
                tag = "Tstar" if shared else "Ttriangle"
            alt = _todd_signature(c2, long_ids) if r == 3 else None
            return SpaceType(tag, wt, witness, alt)
    if q not in EXCLUDED_PLANE_Q:
        todd = _todd_signature(c2, long_ids)
        if todd is not None:
            return SpaceType("Todd", wt, todd)
    return SpaceType("Other", wt, None)


# ---------------------------------------------------------------------------
# cone recognition in dimension k >= 3


def _anchored_direction_keys(tab: PointTable, anchor_coords: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Key of the line through the anchor and each row: the canonical
    representative normalize(row - row[j0] * anchor), j0 the anchor pivot."""
    gf = tab.gf
    j0 = int((anchor_coords != 0).argmax())
    fac = rows[:, j0]
    reps = gf.SUB[rows, gf.MUL[fac[:, None], anchor_coords[None, :]]]
    reps = tab.normalize(reps)
    ranks = gf.rank[reps]
    key = np.zeros(len(rows), dtype=np.int64)
    for col in range(ranks.shape[1]):
        key = key * tab.q + ranks[:, col]
    return key


def _is_cone_consistent_point(c: Codeword, v_idx: int) -> bool:
    """True iff every line through the point has constant values off it."""
    tab = c.table
    q = c.q
    supp = c.support()
    supp = supp[supp != v_idx]
    if len(supp) == 0:
        return True
    keys = _anchored_direction_keys(tab, tab.coords[v_idx], tab.coords[supp])
    order = np.argsort(keys, kind="stable")
    keys_s = keys[order]
    vals_s = c.values[supp][order]
    boundaries = np.nonzero(np.diff(keys_s))[0] + 1
    starts = np.concatenate([[0], boundaries])
    ends = np.concatenate([boundaries, [len(keys_s)]])
    sizes = ends - starts
    # each class must have exactly q support points off v, all equal in value
    if (sizes != q).any():
        return False
    for s, e in zip(starts, ends):
        seg = vals_s[s:e]
        if (seg != seg[0]).any():
            return False
    return True


def _vertex_candidate_pool(c: Codeword) -> np.ndarray:
    """Points on long secants through the first support point; every locally
    cone-consistent point lies in this pool since its line to the anchor is a
    q- or (q+1)-secant."""
    tab = c.table
    q = c.q
    supp = c.support()
    anchor = int(supp[0])
    others = supp[supp != anchor]
    keys = _anchored_direction_keys(tab, tab.coords[anchor], tab.coords[others])
    uniq, cnt = np.unique(keys, return_counts=True)
    long_keys = set(uniq[cnt >= q - 1].tolist())
    pool = set()
    for idx, k in zip(others.tolist(), keys.tolist()):
        if k in long_keys:
            pool.update(tab.line_through(anchor, idx).tolist())
    return np.array(sorted(pool), dtype=np.int64)


def _drop_rule_subflat(f: Subspace, target_dim: int) -> Subspace:
    """Deterministic subflat: leading rows of the canonical RREF basis."""
    rows = target_dim + 1
    if f.dim < target_dim:
        raise DimensionError("flat too small for requested subflat")
    return Subspace(f.table, f.basis[:rows], rref=True)


def cone_structure(
    c: Codeword, vertex: Subspace
) -> Optional[tuple[Subspace, np.ndarray, int]]:
    """Verify c is a cone with the given vertex.

    Returns (plane, base_values, vertex_value) with the canonical disjoint
    plane, or None if the cone property fails.
    """
    tab = c.table
    plane = complement_plane(vertex)
    if plane.dim != 2:
        return None
    proj = cone_projection(vertex, plane)
    base_vals = c.values[plane.point_indices()]
    live = proj >= 0
    if (c.values[live] != base_vals[proj[live]]).any():
        return None
    ptab = point_table(2, c.q)
    _, line_pts = plane_lines(c.q)
    s = int(base_vals[line_pts[0]].astype(np.int64).sum() % c.p)
    if (c.values[~live] != s).any():
        return None
    return plane, base_vals, s


def classify_space(c: Codeword, f: Optional[Subspace] = None) -> SpaceType:
    """Classify the restriction of c to a k-space (k >= 2) into the taxonomy.

    For k = 2 this is plane classification; for k >= 3 a (k-3)-dimensional
    vertex with constant restriction is searched among locally
    cone-consistent points, pruned by the fact that lines through a vertex
    point meet the support in 0, 1, q or q+1 points.
    """
    if f is not None and f.dim < c.n:
        if f.dim < 2:
            raise DimensionError("classification needs a flat of dimension >= 2")
        return classify_space(restrict(c, f))
    k = c.n
    if k == 2:
        return classify_plane(c)
    tab = c.table
    wt = c.weight()
    if wt == 0:
        vertex = _drop_rule_subflat(full_space(tab), k - 3)
        plane = complement_plane(vertex)
        return SpaceType(
            "T0", 0, {"vertex": vertex, "plane": plane, "base": {"tag": "T0"}}
        )
    pool = _vertex_candidate_pool(c)
    survivors = [int(v) for v in pool if _is_cone_consistent_point(c, int(v))]
    if not survivors:
        return SpaceType("Other", wt, None)
    pts = tab.coords[np.array(survivors)]
    flat = Subspace(tab, pts)
    # the consistent set must itself be a flat of dimension >= k-3
    if flat.num_points() != len(survivors) or flat.dim < k - 3:
        return SpaceType("Other", wt, None)
    vertex = flat if flat.dim == k - 3 else _drop_rule_subflat(flat, k - 3)
    st = cone_structure(c, vertex)
    if st is None:
        return SpaceType("Other", wt, None)
    plane, base_vals, s = st
    base = classify_plane(Codeword(point_table(2, c.q), base_vals))
    if not base.in_t_family:
        return SpaceType("Other", wt, None)
    return SpaceType(
        base.tag,
        wt,
        {"vertex": vertex, "plane": plane, "vertex_value": s, "base": base},
    )


@dataclass
class ShortLongReport:
    short_long_ok: bool
    strict_ok: bool
    offending_short_long: list
    offending_strict: list
    spectrum: object

    def as_dict(self) -> dict:
        return {
            "short_long_ok": self.short_long_ok,
            "strict_ok": self.strict_ok,
            "offending_short_long": self.offending_short_long,
            "offending_strict": self.offending_strict,
            "spectrum": [int(x) for x in self.spectrum.counts],
        }


def short_long_check(c: Codeword) -> ShortLongReport:
    """Line-spectrum dichotomy: short/long form vanishes on [4, q-2], strict
    form on [3, q-1]."""
    sp = secant_spectrum(c)
    q = c.q
    off_sl = sp.offending(4, q - 2)
    off_strict = sp.offending(3, q - 1)
    return ShortLongReport(
        short_long_ok=not off_sl,
        strict_ok=not off_strict,
        offending_short_long=off_sl,
        offending_strict=off_strict,
        spectrum=sp,
    )
