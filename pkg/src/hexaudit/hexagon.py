"""The natural embedding of the split Cayley hexagon H(q) in PG(6, q).

The point set is the parabolic quadric Q(6, q); the lines are the
totally isotropic lines whose Grassmann coordinates satisfy

    p12 = p34,  p54 = p32,  p20 = p35,  p65 = p30,  p01 = p36,  p46 = p31,

read with the antisymmetric convention p(j, i) = -p(i, j).  The line
set is built by filtering the isotropic lines against these equations
rather than by orbit generation, and the resulting count is verified
against (q^6 - 1) / (q - 1); a mismatch would indicate a broken sign
convention and aborts construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import InternalConsistencyError
from .lineset import LineSet
from .pg import PluckerCoords, projective_space
from .quadric import ParabolicQuadric, parabolic_quadric

SUPPORTED_Q = (2, 3, 4)

# The six line conditions as ((i, j), (k, l)) meaning p(i,j) == p(k,l).
_LINE_CONDITIONS = (
    ((1, 2), (3, 4)),
    ((5, 4), (3, 2)),
    ((2, 0), (3, 5)),
    ((6, 5), (3, 0)),
    ((0, 1), (3, 6)),
    ((4, 6), (3, 1)),
)


def hexagon_line_predicate(quad: ParabolicQuadric, rows) -> bool:
    """True iff the totally isotropic line satisfies the six Plücker equations."""
    rows = tuple(tuple(r) for r in rows)
    if not quad.line_is_isotropic(rows):
        raise ValueError("line is not totally isotropic on Q(6, q)")
    p = PluckerCoords(quad.gf, rows[0], rows[1])
    return all(p(i, j) == p(k, l) for (i, j), (k, l) in _LINE_CONDITIONS)


def build(q: int) -> LineSet:
    """Construct the line set of H(q) naturally embedded in PG(6, q)."""
    if q not in SUPPORTED_Q:
        raise ValueError(f"unsupported field order {q}; supported: {SUPPORTED_Q}")
    quad = parabolic_quadric(q)
    lines = [rows for rows in quad.isotropic_lines() if hexagon_line_predicate(quad, rows)]
    expected = (q**6 - 1) // (q - 1)
    if len(lines) != expected:
        raise InternalConsistencyError(
            f"H({q}) construction produced {len(lines)} lines, expected {expected}"
        )
    ls = LineSet(projective_space(6, q), lines, canonical=True)
    if len(ls.point_lines) != expected:
        raise InternalConsistencyError(
            f"H({q}) covers {len(ls.point_lines)} points, expected {expected}"
        )
    return ls


@lru_cache(maxsize=8)
def build_cached(q: int) -> LineSet:
    return build(q)


@dataclass
class FlatFullReport:
    flat: bool
    full: bool
    order: tuple[int, int] | None
    non_planar_pencils: list = dc_field(default_factory=list)
    degree_histogram: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.flat and self.full and self.order is not None


def verify_flat_full(ls: LineSet) -> FlatFullReport:
    """Check flatness (pencils coplanar), fullness, and uniform order (q, t).

    Every line carries all q+1 projective points by construction, so the
    embedding is full; the order check additionally requires a common
    point degree.
    """
    space = ls.space
    non_planar = []
    degrees: dict[int, int] = {}
    for pi, line_ids in ls.point_lines.items():
        degrees[len(line_ids)] = degrees.get(len(line_ids), 0) + 1
        rows = [r for li in line_ids for r in ls.lines[li]]
        if len(space.rref(rows)) - 1 > 2:
            non_planar.append(pi)
    flat = not non_planar
    order = None
    if len(degrees) == 1:
        t_plus_1 = next(iter(degrees))
        order = (ls.q, t_plus_1 - 1)
    return FlatFullReport(
        flat=flat,
        full=True,
        order=order,
        non_planar_pencils=non_planar,
        degree_histogram=dict(sorted(degrees.items())),
    )


def span_dim(ls: LineSet) -> int:
    """Projective dimension of the span of all covered points."""
    if not ls.lines:
        raise ValueError("empty line set has no span")
    return ls.span_dim()
