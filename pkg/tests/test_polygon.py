import math

import pytest

from hexaudit.lineset import LineSet
from hexaudit.pg import projective_space
from hexaudit.polygon import (
    KGon,
    all_kgons,
    find_kgon,
    girth_and_diameter,
    is_kgon_of,
    pencil_plane_qp1_bound,
    pentagon_extension_check,
    pentagon_span_check,
    qp1_points_on_line,
)


def unit(space, i):
    return tuple(1 if j == i else 0 for j in range(space.width))


@pytest.fixture(scope="module")
def pentagon_ls():
    """Five coordinate points of PG(4, 2) joined cyclically: one pentagon."""
    space = projective_space(4, 2)
    e = [unit(space, i) for i in range(5)]
    pairs = [(e[i], e[(i + 1) % 5]) for i in range(5)]
    return LineSet(space, pairs)


@pytest.fixture(scope="module")
def two_pencil_ls():
    """Two full pencils in PG(4, 2) sharing the line AB.

    Pencil at A = e0 in the plane <e0, e1, e2> and pencil at B = e1 in the
    plane <e0, e1, e3>.  A and B are the only points of degree q+1 = 3.
    """
    space = projective_space(4, 2)
    e0, e1, e2, e3 = (unit(space, i) for i in range(4))
    gf_add = lambda x, y: tuple(space.gf.add(a, b) for a, b in zip(x, y))  # noqa: E731
    pairs = [
        (e0, e1),
        (e0, e2),
        (e0, gf_add(e1, e2)),
        (e1, e3),
        (e1, gf_add(e0, e3)),
    ]
    return LineSet(space, pairs)


class TestFindKGon:
    def test_pentagon_found(self, pentagon_ls):
        gon = find_kgon(pentagon_ls, 5)
        assert gon is not None and gon.k == 5
        assert is_kgon_of(pentagon_ls, gon)

    def test_no_short_polygons_in_pentagon(self, pentagon_ls):
        assert find_kgon(pentagon_ls, 3) is None
        assert find_kgon(pentagon_ls, 4) is None

    def test_digon_needs_two_lines_through_two_points(self, pentagon_ls):
        assert find_kgon(pentagon_ls, 2) is None

    def test_hexagon_has_no_small_gons(self, h2):
        for k in (3, 4, 5):
            assert find_kgon(h2, k) is None

    def test_hexagon_has_hexagons(self, h2):
        gon = find_kgon(h2, 6)
        assert gon is not None and gon.k == 6
        assert is_kgon_of(h2, gon)
        assert len(set(gon.vertices)) == 6
        assert len(set(gon.edges)) == 6

    def test_deterministic(self, h2):
        assert find_kgon(h2, 6) == find_kgon(h2, 6)

    def test_k_range_checked(self, h2):
        with pytest.raises(ValueError):
            find_kgon(h2, 1)
        with pytest.raises(ValueError):
            find_kgon(h2, 7)


class TestAllKGons:
    def test_single_pentagon_up_to_symmetry(self, pentagon_ls):
        gons = all_kgons(pentagon_ls, 5)
        assert len(gons) == 1
        assert is_kgon_of(pentagon_ls, gons[0])

    def test_no_triangles(self, pentagon_ls):
        assert all_kgons(pentagon_ls, 3) == []


class TestIsKGon:
    def test_bogus_gon_rejected(self, pentagon_ls):
        assert not is_kgon_of(pentagon_ls, KGon((0, 1, 2), (0, 1, 2)))
        gon = find_kgon(pentagon_ls, 5)
        broken = KGon(gon.vertices, (gon.edges[0],) * 5)
        assert not is_kgon_of(pentagon_ls, broken)


class TestGirthDiameter:
    def test_hexagon_incidence_graph(self, h2):
        assert girth_and_diameter(h2) == (12, 6)

    def test_pentagon_incidence_graph(self, pentagon_ls):
        girth, diameter = girth_and_diameter(pentagon_ls)
        assert girth == 10
        # Farthest pairs are antipodal free points of the 5 lines.
        assert diameter >= 5

    def test_tree_has_no_girth(self):
        space = projective_space(3, 2)
        e = [unit(space, i) for i in range(4)]
        star = LineSet(space, [(e[0], e[1]), (e[0], e[2])])
        girth, diameter = girth_and_diameter(star)
        assert girth == math.inf
        assert diameter == 4


class TestPentagonSpan:
    def test_span_report_mechanics(self, pentagon_ls):
        gon = find_kgon(pentagon_ls, 5)
        rep = pentagon_span_check(pentagon_ls, gon)
        assert rep.dim_u == 4
        assert rep.dim_is_4
        assert rep.lines_in_u == 5
        # The fixture is far below the structural thresholds on purpose.
        assert not rep.at_least_5q
        assert not rep.at_least_cubic_bound
        assert rep.span.projdim == 4

    def test_rejects_non_pentagon(self, pentagon_ls, h2):
        gon = find_kgon(h2, 6)
        with pytest.raises(ValueError):
            pentagon_span_check(h2, gon)
        fake = KGon((0, 1, 2, 3, 4), (0, 1, 2, 3, 4))
        with pytest.raises(ValueError):
            pentagon_span_check(pentagon_ls, fake)


class TestFullPencilCounts:
    def test_two_pencil_line_counts(self, two_pencil_ls):
        ls = two_pencil_ls
        space = ls.space
        u = space.whole_space()
        a = space.point_index[unit(space, 0)]
        b = space.point_index[unit(space, 1)]
        assert ls.degree(a) == ls.degree(b) == 3
        line_ab = space.rref((unit(space, 0), unit(space, 1)))
        # Both endpoints of AB carry a full pencil inside u.
        assert qp1_points_on_line(ls, u, line_ab) == 2
        line_ac = space.rref((unit(space, 0), unit(space, 2)))
        assert qp1_points_on_line(ls, u, line_ac) == 1

    def test_line_outside_subspace_rejected(self, two_pencil_ls):
        ls = two_pencil_ls
        space = ls.space
        solid = space.subspace(
            [unit(space, 0), unit(space, 1), unit(space, 2), unit(space, 3)]
        )
        outside = (unit(space, 0), unit(space, 4))
        with pytest.raises(ValueError):
            qp1_points_on_line(ls, solid, outside)

    def test_pencil_plane_bound(self, two_pencil_ls):
        ls = two_pencil_ls
        ok, counts = pencil_plane_qp1_bound(ls, ls.space.whole_space())
        assert ok
        a = ls.space.point_index[unit(ls.space, 0)]
        b = ls.space.point_index[unit(ls.space, 1)]
        # B = e1 lies in the pencil plane of A and vice versa.
        assert counts == {a: 2, b: 2}


class TestPentagonExtension:
    def test_refuses_axiom_violating_set(self, pentagon_ls):
        u = pentagon_ls.space.whole_space()
        with pytest.raises(ValueError):
            pentagon_extension_check(pentagon_ls, u)

    def test_refuses_pentagon_free_subspace(self, h2):
        u = next(iter(h2.space.enumerate_subspaces(4)))
        with pytest.raises(ValueError):
            pentagon_extension_check(h2, u)
