import pytest

from hexaudit.errors import InternalConsistencyError
from hexaudit.hexagon import (
    build,
    hexagon_line_predicate,
    span_dim,
    verify_flat_full,
)
from hexaudit.lineset import LineSet
from hexaudit.pg import projective_space
from hexaudit.quadric import parabolic_quadric


class TestBuild:
    def test_counts_q2(self, h2):
        assert len(h2) == 63
        assert len(h2.point_lines) == 63

    def test_counts_q3(self, h3):
        assert len(h3) == 364
        assert len(h3.point_lines) == 364

    def test_unsupported_q(self):
        with pytest.raises(ValueError):
            build(5)
        with pytest.raises(ValueError):
            build(6)

    def test_lines_are_isotropic(self, h2):
        quad = parabolic_quadric(2)
        for rows in h2.lines:
            assert quad.line_is_isotropic(rows)

    def test_points_are_all_quadric_points(self, h2):
        quad = parabolic_quadric(2)
        space = h2.space
        covered = {space.points[i] for i in h2.point_lines}
        assert covered == set(quad.points())


class TestLinePredicate:
    def test_accepts_hexagon_lines(self, h2):
        quad = parabolic_quadric(2)
        for rows in h2.lines[:10]:
            assert hexagon_line_predicate(quad, rows)

    def test_rejects_some_isotropic_lines(self, h2):
        """The 315 isotropic lines properly contain the 63 hexagon lines."""
        quad = parabolic_quadric(2)
        chosen = set(h2.lines)
        rejected = [
            rows
            for rows in quad.isotropic_lines()
            if rows not in chosen
        ]
        assert len(rejected) == 315 - 63
        for rows in rejected[:10]:
            assert not hexagon_line_predicate(quad, rows)

    def test_non_isotropic_line_raises(self):
        quad = parabolic_quadric(2)
        rows = quad.space.rref(((1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0)))
        with pytest.raises(ValueError):
            hexagon_line_predicate(quad, rows)


class TestFlatFull:
    @pytest.mark.parametrize("fixture", ["h2", "h3"])
    def test_hexagon_is_flat_full_of_order_q_q(self, fixture, request):
        ls = request.getfixturevalue(fixture)
        rep = verify_flat_full(ls)
        assert rep.ok
        assert rep.flat and rep.full
        assert rep.order == (ls.q, ls.q)
        assert rep.non_planar_pencils == []
        assert rep.degree_histogram == {ls.q + 1: len(ls.point_lines)}

    def test_non_flat_set_detected(self):
        """Three concurrent lines spanning a solid are not a planar pencil."""
        space = projective_space(3, 2)
        e = [tuple(1 if j == i else 0 for j in range(4)) for i in range(4)]
        ls = LineSet(
            space,
            [(e[0], e[1]), (e[0], e[2]), (e[0], e[3])],
        )
        rep = verify_flat_full(ls)
        assert not rep.flat
        assert space.point_index[e[0]] in rep.non_planar_pencils
        assert not rep.ok

    def test_mixed_degrees_have_no_order(self):
        space = projective_space(3, 2)
        e = [tuple(1 if j == i else 0 for j in range(4)) for i in range(4)]
        ls = LineSet(space, [(e[0], e[1]), (e[0], e[2])])
        rep = verify_flat_full(ls)
        assert rep.order is None


class TestSpan:
    def test_hexagon_spans_everything(self, h2, h3):
        assert span_dim(h2) == 6
        assert span_dim(h3) == 6

    def test_empty_set_rejected(self):
        ls = LineSet(projective_space(3, 2), [])
        with pytest.raises(ValueError):
            span_dim(ls)
