"""The parabolic quadric Q(6, q) and classification of its 4-space sections.

The quadratic form is fixed as ``x0*x4 + x1*x5 + x2*x6 - x3**2``.  A
4-space can meet the quadric in exactly four ways: a parabolic quadric
Q(4, q), a cone over an elliptic or hyperbolic 3-space quadric, or a
cone with line vertex over a conic.  Classification goes through the
radical of the restricted form.

In characteristic 2 the bilinearization ``b(x, y) = Q(x+y) - Q(x) - Q(y)``
is the symplectic form and the x3 term drops out, so a vector in the
bilinear radical need not be singular.  The singular radical is therefore
computed as the set of bilinear-radical vectors on which Q itself
vanishes; on the bilinear radical Q is additive, so this set is a
subspace in every characteristic.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .errors import InternalConsistencyError
from .pg import PG, Subspace, projective_space


class SectionType(enum.Enum):
    PARABOLIC_Q4 = "parabolic-Q4"
    CONE_OVER_ELLIPTIC = "cone-over-elliptic"
    CONE_OVER_HYPERBOLIC = "cone-over-hyperbolic"
    LINE_CONE_OVER_CONIC = "line-cone-over-conic"


class ParabolicQuadric:
    """Q(6, q) in PG(6, q) for the fixed form x0x4 + x1x5 + x2x6 - x3^2."""

    def __init__(self, space: PG):
        if space.n != 6:
            raise ValueError(f"parabolic quadric needs ambient PG(6, q), got PG{space.key}")
        self.space = space
        self.gf = space.gf
        self._points: list[tuple[int, ...]] | None = None
        self._iso_lines: tuple | None = None

    def form(self, v) -> int:
        """Evaluate Q(v) as an element code."""
        if len(v) != 7:
            raise ValueError("expected 7 coordinates")
        gf = self.gf
        add, mul, sub = gf.add_table, gf.mul_table, gf.sub_table
        s = add[add[mul[v[0]][v[4]]][mul[v[1]][v[5]]]][mul[v[2]][v[6]]]
        return sub[s][mul[v[3]][v[3]]]

    def on_quadric(self, point) -> bool:
        return self.form(point) == 0

    def bilinear(self, x, y) -> int:
        gf = self.gf
        s = tuple(gf.add_table[a][b] for a, b in zip(x, y))
        return gf.sub_table[gf.sub_table[self.form(s)][self.form(x)]][self.form(y)]

    def points(self) -> list[tuple[int, ...]]:
        """All quadric points, in point-table order (cached)."""
        if self._points is None:
            self._points = [p for p in self.space.points if self.form(p) == 0]
        return self._points

    def line_is_isotropic(self, rows) -> bool:
        """True iff all q+1 points of the line lie on the quadric."""
        x, y = rows
        if self.form(x) or self.form(y):
            return False
        gf = self.gf
        add, mul = gf.add_table, gf.mul_table
        for c in range(1, gf.q):
            mt = mul[c]
            v = tuple(add[a][mt[b]] for a, b in zip(x, y))
            if self.form(v):
                return False
        return True

    def isotropic_lines(self) -> tuple:
        """Canonical bases of all totally isotropic lines, sorted (cached).

        Built from pairs of quadric points rather than by filtering the
        full line enumeration; for q = 4 the latter is 15x larger.
        """
        if self._iso_lines is None:
            pts = self.points()
            space = self.space
            seen = set()
            for i in range(len(pts)):
                x = pts[i]
                for j in range(i + 1, len(pts)):
                    rows = space.rref((x, pts[j]))
                    if rows in seen:
                        continue
                    if self.line_is_isotropic(rows):
                        seen.add(rows)
            self._iso_lines = tuple(sorted(seen))
        return self._iso_lines

    def section_points(self, u: Subspace) -> list[tuple[int, ...]]:
        return [p for p in u.points() if self.form(p) == 0]

    def section_isotropic_lines(self, u: Subspace) -> list:
        """Totally isotropic lines contained in the subspace ``u``."""
        pts = self.section_points(u)
        seen = set()
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                rows = self.space.rref((pts[i], pts[j]))
                if rows not in seen and self.line_is_isotropic(rows):
                    seen.add(rows)
        return sorted(seen)

    def singular_radical(self, u: Subspace) -> Subspace:
        """Vertex of the section cone: singular points of Q restricted to u.

        Computed as the span of the bilinear-radical points on which Q
        vanishes.
        """
        space = self.space
        basis = u.rows
        k = len(basis)
        gf = self.gf
        # Gram matrix of the bilinearized form on the section basis.
        gram = [
            [self.bilinear(basis[i], basis[j]) for j in range(k)] for i in range(k)
        ]
        # Kernel in coefficient space (k coordinates), then lift to ambient.
        coeff_space = projective_space(k - 1, gf.q) if k >= 2 else None
        if coeff_space is None:
            kernel = ((1,),) if all(g == 0 for g in gram[0]) else ()
        else:
            kernel = coeff_space.nullspace(gram)
        if not kernel:
            return space.empty_subspace()
        add, mul = gf.add_table, gf.mul_table
        singular = []
        ker_sub = Subspace(coeff_space, kernel, canonical=True) if coeff_space else None
        coeffs = ker_sub.points() if ker_sub else [(1,)]
        for c in coeffs:
            v = [0] * space.width
            for ci, row in zip(c, basis):
                if ci:
                    mt = mul[ci]
                    for j in range(space.width):
                        if row[j]:
                            v[j] = add[v[j]][mt[row[j]]]
            if self.form(v) == 0:
                singular.append(v)
        return Subspace(space, singular)

    def classify_section(self, u: Subspace) -> tuple[SectionType, int]:
        """Classify a 4-space section; returns (type, quadric point count)."""
        self.space.check_ambient(u.space)
        if u.projdim != 4:
            raise ValueError(f"expected a 4-space, got projdim {u.projdim}")
        q = self.gf.q
        npoints = len(self.section_points(u))
        rad = self.singular_radical(u)
        rdim = rad.projdim
        if rdim == -1:
            if npoints != (q**4 - 1) // (q - 1):
                raise InternalConsistencyError(
                    f"nondegenerate 4-space section with {npoints} points"
                )
            return SectionType.PARABOLIC_Q4, npoints
        if rdim == 0:
            if npoints == q**3 + q + 1:
                return SectionType.CONE_OVER_ELLIPTIC, npoints
            if npoints == q**3 + 2 * q**2 + q + 1:
                return SectionType.CONE_OVER_HYPERBOLIC, npoints
            raise InternalConsistencyError(
                f"point-vertex cone section with {npoints} points"
            )
        if rdim == 1:
            if npoints != (q + 1) * (q**2 + 1):
                raise InternalConsistencyError(
                    f"line-vertex cone section with {npoints} points"
                )
            return SectionType.LINE_CONE_OVER_CONIC, npoints
        raise InternalConsistencyError(f"section radical has projdim {rdim}")


@lru_cache(maxsize=8)
def parabolic_quadric(q: int) -> ParabolicQuadric:
    return ParabolicQuadric(projective_space(6, q))
