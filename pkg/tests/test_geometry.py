"""PG(n,q) combinatorics: enumeration, spans, meets, pencils, collineations."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pgcodes.errors import DimensionError, SingularMatrix
from pgcodes.geometry import (
    Collineation,
    Hyperplane,
    Subspace,
    apply_collineation,
    complement_plane,
    cone_projection,
    empty_flat,
    flats_through,
    full_space,
    gaussian_binomial,
    hyperplane_by_index,
    hyperplanes_through,
    line_count,
    meet,
    plane_lines,
    point_flat,
    point_table,
    random_collineation,
    random_flat,
    span,
    subspaces_of,
    theta,
)


def test_theta_values():
    assert theta(1, 2) == 3
    assert theta(-2, 7) == 0
    assert theta(2, 3) == 13
    assert theta(0, 9) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13]))
def test_theta_recurrence(n, q):
    assert theta(n, q) == q * theta(n - 1, q) + 1


def test_enumerate_points_pg12():
    tab = point_table(1, 2)
    assert tab.num_points == 3
    assert tab.coords.tolist() == [[0, 1], [1, 0], [1, 1]]


def test_enumerate_points_counts():
    assert point_table(2, 3).num_points == 13
    # oracle: orbit count of nonzero vectors under scalars
    assert point_table(3, 4).num_points == (4**4 - 1) // (4 - 1) == 85


def test_point_index_round_trip():
    for (n, q) in [(2, 3), (3, 2), (2, 4), (3, 3)]:
        tab = point_table(n, q)
        idx = tab.index_of(tab.coords, normalized=True)
        assert (idx == np.arange(tab.num_points)).all()


def test_point_order_is_lexicographic():
    tab = point_table(2, 3)
    ranked = tab.gf.rank[tab.coords]
    for i in range(len(ranked) - 1):
        assert tuple(ranked[i]) < tuple(ranked[i + 1])


def test_span_of_point_and_line():
    tab = point_table(2, 3)
    p = tab.point(0)
    s = span(p)
    assert s.dim == 0
    line = span(tab.point(0), tab.point(1))
    assert line.dim == 1
    assert line.num_points() == 4  # q+1
    assert span(empty_flat(tab)).is_empty


def test_meet_identities():
    tab = point_table(3, 3)
    h = hyperplane_by_index(tab, 5).subspace()
    assert meet(h, h) == h
    h2 = hyperplane_by_index(tab, 7).subspace()
    m = meet(h, h2)
    assert m.dim == tab.n - 2


def test_meet_of_skew_lines_is_empty():
    # explicit skew pair in PG(3,q): <e0,e1> and <e2,e3>
    tab = point_table(3, 2)
    l1 = Subspace(tab, np.array([[1, 0, 0, 0], [0, 1, 0, 0]]))
    l2 = Subspace(tab, np.array([[0, 0, 1, 0], [0, 0, 0, 1]]))
    assert meet(l1, l2).is_empty


@pytest.mark.parametrize("n,q", [(2, 3), (3, 2), (3, 3)])
def test_every_line_has_q_plus_1_points_and_two_points_one_line(n, q):
    tab = point_table(n, q)
    rng = np.random.default_rng(7)
    for _ in range(30):
        i, j = rng.choice(tab.num_points, size=2, replace=False)
        line = span(tab.point(int(i)), tab.point(int(j)))
        assert line.dim == 1
        assert len(line.point_indices()) == q + 1


def test_hyperplane_contains_theta_nm1_points():
    for (n, q) in [(2, 3), (3, 2), (3, 3), (2, 5)]:
        tab = point_table(n, q)
        for idx in range(0, tab.num_points, max(1, tab.num_points // 7)):
            hp = hyperplane_by_index(tab, idx)
            assert len(hp.point_indices()) == theta(n - 1, q)


def test_flats_through_pencils():
    tab2 = point_table(2, 5)
    pt = point_flat(tab2, 3)
    lines = list(flats_through(pt, 1))
    assert len(lines) == 5 + 1
    assert all(l.contains_flat(pt) for l in lines)

    tab3 = point_table(3, 3)
    line = span(tab3.point(0), tab3.point(1))
    planes = list(flats_through(line, 2))
    assert len(planes) == 3 + 1

    nm2 = Subspace(tab3, np.array([[1, 0, 0, 0], [0, 1, 0, 0]]))
    hps = list(flats_through(nm2, 2))
    assert len(hps) == 3 + 1


def test_flats_through_counts_match_gaussian():
    tab = point_table(3, 2)
    pt = point_flat(tab, 0)
    # planes through a point of PG(3,2): Gaussian [3 choose 2]_2 = 7
    planes = list(flats_through(pt, 2))
    assert len(planes) == gaussian_binomial(3, 2, 2) == 7
    assert len(set(planes)) == 7


def test_subspaces_of_counts():
    tab = point_table(3, 2)
    assert sum(1 for _ in subspaces_of(tab, 1)) == line_count(3, 2) == 35
    assert sum(1 for _ in subspaces_of(tab, 0)) == 15


def test_hyperplanes_through_flat():
    tab = point_table(3, 3)
    m = Subspace(tab, np.array([[1, 0, 0, 0], [0, 1, 0, 0]]))
    hps = hyperplanes_through(m)
    assert len(hps) == 4  # pencil through an (n-2)-flat
    for hp in hps:
        assert hp.subspace().contains_flat(m)


def test_collineation_identity_and_weight_preservation():
    tab = point_table(2, 3)
    g = Collineation(tab, np.eye(3, dtype=int))
    perm = g.point_permutation()
    assert (perm == np.arange(tab.num_points)).all()


def test_collineation_swap_maps_line():
    tab = point_table(2, 3)
    # X0 = 0 has dual (1,0,0); swapping coords 0,1 sends it to X1 = 0
    swap = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    g = Collineation(tab, swap)
    h = Hyperplane(tab, np.array([1, 0, 0]))
    img = g.apply_hyperplane(h)
    assert img.dual.tolist() == [0, 1, 0]


def test_singular_matrix_rejected():
    tab = point_table(2, 3)
    with pytest.raises(SingularMatrix):
        Collineation(tab, np.zeros((3, 3), dtype=int))


def test_grassmann_identity_random_flats():
    tab = point_table(3, 3)
    rng = np.random.default_rng(3)
    for _ in range(25):
        a = random_flat(tab, int(rng.integers(0, 3)), rng)
        b = random_flat(tab, int(rng.integers(0, 3)), rng)
        meet(a, b)  # asserts Grassmann internally


def test_complement_plane_disjoint_and_spanning():
    tab = point_table(4, 3)
    rng = np.random.default_rng(11)
    for _ in range(10):
        v = random_flat(tab, tab.n - 3, rng)
        pi = complement_plane(v)
        assert pi.dim == 2
        assert meet(v, pi).is_empty
        assert span(v, pi).dim == tab.n


def test_cone_projection_partitions_space():
    tab = point_table(3, 3)
    rng = np.random.default_rng(5)
    v = random_flat(tab, 0, rng)
    pi = complement_plane(v)
    proj = cone_projection(v, pi)
    assert (proj == -1).sum() == 1  # the vertex point
    # points of the plane project to themselves
    plane_pts = pi.point_indices()
    itab = point_table(2, 3)
    assert (proj[plane_pts] == np.arange(itab.num_points)).all()
    # every fiber off the vertex has size q^(n-2)
    counts = np.bincount(proj[proj >= 0])
    assert (counts == 3 ** (tab.n - 2)).all()


def test_plane_lines_table():
    duals, pts = plane_lines(3)
    assert pts.shape == (13, 4)
    # every pair of distinct points lies on exactly one common line
    tab = point_table(2, 3)
    for i in range(13):
        for j in range(i + 1, 13):
            shared = [k for k in range(13) if i in pts[k] and j in pts[k]]
            assert len(shared) == 1


def test_apply_collineation_on_subspace_preserves_dim():
    tab = point_table(3, 3)
    rng = np.random.default_rng(2)
    for _ in range(10):
        g = random_collineation(tab, rng)
        f = random_flat(tab, 1, rng)
        assert g.apply_subspace(f).dim == 1
