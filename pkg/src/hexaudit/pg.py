"""Projective space PG(n, q): canonical subspaces, span/meet, enumeration.

Conventions, fixed once for the whole package:

* A projective point is a normalized coordinate tuple: the leftmost
  nonzero coordinate equals 1, giving a unique representative.
* A subspace is the reduced row echelon form (RREF) of any basis matrix
  of its underlying vector subspace; the RREF matrix is the canonical
  key.  Projective dimension is ``rows - 1``; zero rows encode the empty
  subspace (projdim -1).
* Enumeration order is lexicographic on the RREF matrix read row-major
  by integer element code, so all streams and file outputs are stable.
* Plücker coordinates are stored for i < j; the signed accessor returns
  ``-p_ij`` when asked for ``p(j, i)``.  In characteristic 2 the sign is
  immaterial, but the convention is applied uniformly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .gf import GF, field


def gaussian_binomial(n_dim: int, k: int, q: int) -> int:
    """Number of k-dimensional vector subspaces of GF(q)^n_dim.

    Equivalently the number of (k-1)-dimensional projective subspaces of
    PG(n_dim - 1, q).  Exact integer product formula.
    """
    if k < 0 or k > n_dim:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n_dim - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def rref_matrices(vdim: int, k: int, q: int):
    """Yield every full-rank k x vdim RREF matrix over GF(q), as row tuples.

    One matrix per k-dimensional subspace of GF(q)^vdim.  Generation
    order is by pivot set; callers needing lexicographic order sort the
    materialized list.
    """
    for pivots in itertools.combinations(range(vdim), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, vdim)
            if j not in pivot_set
        ]
        base = [[0] * vdim for _ in range(k)]
        for i, pc in enumerate(pivots):
            base[i][pc] = 1
        if not free:
            yield tuple(tuple(r) for r in base)
            continue
        for vals in itertools.product(range(q), repeat=len(free)):
            m = [row[:] for row in base]
            for (i, j), v in zip(free, vals):
                m[i][j] = v
            yield tuple(tuple(r) for r in m)


@lru_cache(maxsize=64)
def _quotient_matrices(vdim: int, k: int, q: int):
    """Sorted RREF matrices of GF(q)^vdim with their pivot row indices."""
    mats = sorted(rref_matrices(vdim, k, q))
    out = []
    for rows in mats:
        pivots = tuple(next(j for j, x in enumerate(r) if x) for r in rows)
        out.append((rows, pivots))
    return tuple(out)


class Subspace:
    """A projective subspace, canonically represented by its RREF basis."""

    __slots__ = ("space", "rows")

    def __init__(self, space: "PG", rows, *, canonical: bool = False):
        self.space = space
        self.rows = tuple(tuple(r) for r in rows) if canonical else space.rref(rows)

    @property
    def projdim(self) -> int:
        return len(self.rows) - 1

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.rows)

    def contains_vec(self, v) -> bool:
        """True iff the vector lies in the row space of the basis."""
        gf = self.space.gf
        mul, sub = gf.mul_table, gf.sub_table
        w = list(v)
        for row in self.rows:
            pc = next(j for j, x in enumerate(row) if x)
            c = w[pc]
            if c:
                mt = mul[c]
                for j in range(pc, len(w)):
                    if row[j]:
                        w[j] = sub[w[j]][mt[row[j]]]
        return not any(w)

    def contains(self, other: "Subspace") -> bool:
        self.space.check_ambient(other.space)
        return all(self.contains_vec(r) for r in other.rows)

    def points(self):
        """Yield the projective points of the subspace, each exactly once."""
        gf = self.space.gf
        q, width = gf.q, self.space.width
        add, mul = gf.add_table, gf.mul_table
        k = len(self.rows)
        for lead in range(k):
            for tail in itertools.product(range(q), repeat=k - lead - 1):
                v = list(self.rows[lead])
                for row, c in zip(self.rows[lead + 1:], tail):
                    if c:
                        mt = mul[c]
                        for j in range(width):
                            if row[j]:
                                v[j] = add[v[j]][mt[row[j]]]
                yield self.space.normalize(v)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.space.key == self.space.key
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.space.key, self.rows))

    def __lt__(self, other):
        return self.rows < other.rows

    def __repr__(self):
        return f"Subspace(dim={self.projdim}, rows={self.rows})"


class PluckerCoords:
    """Grassmann coordinates of a line, canonically rescaled.

    Stores ``p_ij`` for i < j with the first nonzero coordinate (in
    lexicographic (i, j) order) scaled to 1.  The call accessor applies
    the antisymmetric convention ``p(j, i) == -p(i, j)``.
    """

    __slots__ = ("gf", "raw")

    def __init__(self, gf: GF, x, y):
        mul, sub = gf.mul_table, gf.sub_table
        width = len(x)
        raw = {}
        for i in range(width):
            for j in range(i + 1, width):
                raw[(i, j)] = sub[mul[x[i]][y[j]]][mul[x[j]][y[i]]]
        scale = None
        for key in sorted(raw):
            if raw[key]:
                scale = gf.inv(raw[key])
                break
        if scale is None:
            raise ValueError("degenerate basis: all Plücker coordinates vanish")
        if scale != 1:
            mt = mul[scale]
            raw = {key: mt[v] for key, v in raw.items()}
        self.gf = gf
        self.raw = raw

    def __call__(self, i: int, j: int) -> int:
        if i == j:
            return 0
        if i < j:
            return self.raw[(i, j)]
        return self.gf.neg_table[self.raw[(j, i)]]

    def vector(self) -> tuple[int, ...]:
        return tuple(self.raw[key] for key in sorted(self.raw))


class PG:
    """PG(n, q) with interned point table and subspace machinery."""

    def __init__(self, n: int, q: int):
        if not 0 < n <= 10:
            raise ValueError(f"ambient dimension {n} not supported")
        self.n = n
        self.q = q
        self.gf: GF = field(q)
        self.width = n + 1
        pts = []
        for lead in range(self.width):
            prefix = (0,) * lead + (1,)
            for tail in itertools.product(range(q), repeat=self.width - lead - 1):
                pts.append(prefix + tail)
        pts.sort()
        self.points: list[tuple[int, ...]] = pts
        self.point_index: dict[tuple[int, ...], int] = {
            p: i for i, p in enumerate(pts)
        }
        self.key = (n, q)

    def check_ambient(self, other: "PG") -> None:
        if other.key != self.key:
            raise ValueError(f"ambient mismatch: PG{self.key} vs PG{other.key}")

    # -- vectors --

    def normalize(self, v) -> tuple[int, ...]:
        gf = self.gf
        for x in v:
            if x:
                if x == 1:
                    return tuple(v)
                mt = gf.mul_table[gf.inv(x)]
                return tuple(mt[c] for c in v)
        raise ValueError("cannot normalize the zero vector")

    def rref(self, rows) -> tuple[tuple[int, ...], ...]:
        """Canonical reduced row echelon form; zero rows are dropped."""
        gf = self.gf
        mul, sub, inv = gf.mul_table, gf.sub_table, gf.inv_table
        m = [list(r) for r in rows]
        if any(len(r) != self.width for r in m):
            raise ValueError("row width does not match ambient space")
        nrows = len(m)
        prow = 0
        for col in range(self.width):
            sel = None
            for r in range(prow, nrows):
                if m[r][col]:
                    sel = r
                    break
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            row = m[prow]
            c = row[col]
            if c != 1:
                mt = mul[inv[c]]
                for j in range(col, self.width):
                    row[j] = mt[row[j]]
            for r in range(nrows):
                if r != prow and m[r][col]:
                    mt = mul[m[r][col]]
                    other = m[r]
                    for j in range(col, self.width):
                        if row[j]:
                            other[j] = sub[other[j]][mt[row[j]]]
            prow += 1
            if prow == nrows:
                break
        return tuple(tuple(r) for r in m[:prow])

    def nullspace(self, rows) -> tuple[tuple[int, ...], ...]:
        """Canonical basis of ``{x : rows @ x == 0}`` (w.r.t. the dot form)."""
        rr = self.rref(rows)
        pivots = [next(j for j, x in enumerate(r) if x) for r in rr]
        pivot_set = set(pivots)
        gf = self.gf
        basis = []
        for free in range(self.width):
            if free in pivot_set:
                continue
            v = [0] * self.width
            v[free] = 1
            for row, pc in zip(rr, pivots):
                v[pc] = gf.neg_table[row[free]]
            basis.append(v)
        return self.rref(basis)

    # -- subspaces --

    def subspace(self, rows) -> Subspace:
        return Subspace(self, rows)

    def point_subspace(self, point) -> Subspace:
        return Subspace(self, (self.normalize(point),), canonical=True)

    def empty_subspace(self) -> Subspace:
        return Subspace(self, (), canonical=True)

    def whole_space(self) -> Subspace:
        rows = tuple(
            tuple(1 if j == i else 0 for j in range(self.width))
            for i in range(self.width)
        )
        return Subspace(self, rows, canonical=True)

    def span(self, a: Subspace, b: Subspace) -> Subspace:
        self.check_ambient(a.space)
        self.check_ambient(b.space)
        return Subspace(self, a.rows + b.rows)

    def meet(self, a: Subspace, b: Subspace) -> Subspace:
        self.check_ambient(a.space)
        self.check_ambient(b.space)
        na = self.nullspace(a.rows)
        nb = self.nullspace(b.rows)
        return Subspace(self, self.nullspace(na + nb), canonical=True)

    def line_through(self, p1, p2) -> Subspace:
        line = Subspace(self, (p1, p2))
        if line.projdim != 1:
            raise ValueError("points do not span a line")
        return line

    def line_point_indices(self, rows) -> tuple[int, ...]:
        """Indices of the q+1 points on a line given by two basis rows."""
        x, y = rows
        gf = self.gf
        add, mul = gf.add_table, gf.mul_table
        idx = self.point_index
        out = [idx[self.normalize(y)]]
        for c in range(self.q):
            if c == 0:
                v = x
            else:
                mt = mul[c]
                v = tuple(add[a][mt[b]] for a, b in zip(x, y))
            out.append(idx[self.normalize(v)])
        return tuple(sorted(out))

    def enumerate_subspaces(self, d: int):
        """All d-dimensional subspaces, canonical, in lexicographic order."""
        if not 0 <= d <= self.n:
            raise ValueError(f"dimension {d} out of range for PG({self.n}, {self.q})")
        mats = sorted(rref_matrices(self.width, d + 1, self.q))
        for rows in mats:
            yield Subspace(self, rows, canonical=True)

    def subspaces_through_rows(self, frows, d: int):
        """Canonical bases of all d-subspaces containing the RREF basis ``frows``.

        Unsorted; the public wrapper sorts.  The lift exploits that the
        quotient rows are supported on the complement columns, so only
        the pivot columns of the lifted rows need clearing from the
        fixed rows -- no full Gaussian elimination.
        """
        k = len(frows)
        r = d + 1 - k
        if r <= 0:
            raise ValueError("target dimension must exceed the subspace dimension")
        if d > self.n:
            raise ValueError(f"dimension {d} out of range for PG({self.n}, {self.q})")
        width = self.width
        fpivots = [next(j for j, x in enumerate(row) if x) for row in frows]
        pivot_set = set(fpivots)
        comp = [j for j in range(width) if j not in pivot_set]
        gf = self.gf
        mul, sub = gf.mul_table, gf.sub_table
        out = []
        for qrows, qpivs in _quotient_matrices(width - k, r, self.q):
            lifted = []
            for u in qrows:
                w = [0] * width
                for j, c in enumerate(comp):
                    w[c] = u[j]
                lifted.append(w)
            fr = [list(row) for row in frows]
            for w, qp in zip(lifted, qpivs):
                pc = comp[qp]
                for row in fr:
                    c = row[pc]
                    if c:
                        mt = mul[c]
                        for j in comp:
                            if w[j]:
                                row[j] = sub[row[j]][mt[w[j]]]
            tagged = [(pv, row) for pv, row in zip(fpivots, fr)]
            tagged += [(comp[qp], w) for qp, w in zip(qpivs, lifted)]
            tagged.sort(key=lambda t: t[0])
            out.append(tuple(tuple(row) for _, row in tagged))
        return out

    def subspaces_through(self, f: Subspace, d: int):
        """All d-subspaces containing ``f``, canonical, sorted."""
        self.check_ambient(f.space)
        mats = sorted(self.subspaces_through_rows(f.rows, d))
        return [Subspace(self, rows, canonical=True) for rows in mats]

    def plucker(self, line: Subspace) -> PluckerCoords:
        self.check_ambient(line.space)
        if line.projdim != 1:
            raise ValueError(f"expected a line, got projdim {line.projdim}")
        return PluckerCoords(self.gf, line.rows[0], line.rows[1])

    def __repr__(self):
        return f"PG({self.n}, {self.q})"


@lru_cache(maxsize=32)
def projective_space(n: int, q: int) -> PG:
    """Shared PG(n, q) instance; geometry tables are immutable."""
    return PG(n, q)
