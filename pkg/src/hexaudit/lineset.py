"""Line sets under audit, with point/line incidence indexes."""

from __future__ import annotations

from .pg import PG, Subspace


class LineSet:
    """An immutable set of projective lines with incidence indexes.

    Lines are stored as canonical RREF basis pairs, deduplicated and
    sorted, so equal sets always serialize identically.  The indexes map
    point indices (into the ambient point table) to the incident lines
    of the set and back.
    """

    def __init__(self, space: PG, lines, *, canonical: bool = False):
        self.space = space
        keys = set()
        for rows in lines:
            if isinstance(rows, Subspace):
                rows = rows.rows
            if not canonical:
                rows = space.rref(rows)
            if len(rows) != 2:
                raise ValueError(f"not a line: projdim {len(rows) - 1}")
            keys.add(tuple(tuple(r) for r in rows))
        self.lines: tuple = tuple(sorted(keys))
        self.line_points: tuple = tuple(
            space.line_point_indices(rows) for rows in self.lines
        )
        point_lines: dict[int, list[int]] = {}
        for li, pts in enumerate(self.line_points):
            for pi in pts:
                point_lines.setdefault(pi, []).append(li)
        self.point_lines: dict[int, tuple[int, ...]] = {
            pi: tuple(ls) for pi, ls in sorted(point_lines.items())
        }
        self._line_index = {rows: i for i, rows in enumerate(self.lines)}

    @property
    def q(self) -> int:
        return self.space.q

    @property
    def n(self) -> int:
        return self.space.n

    def __len__(self):
        return len(self.lines)

    def __contains__(self, rows) -> bool:
        if isinstance(rows, Subspace):
            rows = rows.rows
        return tuple(tuple(r) for r in rows) in self._line_index

    def line_id(self, rows) -> int:
        if isinstance(rows, Subspace):
            rows = rows.rows
        return self._line_index[tuple(tuple(r) for r in rows)]

    def point_indices(self) -> tuple[int, ...]:
        """Indices of all points covered by at least one line."""
        return tuple(self.point_lines)

    def degree(self, point_index: int) -> int:
        return len(self.point_lines.get(point_index, ()))

    def lines_through(self, point_index: int) -> tuple[int, ...]:
        return self.point_lines.get(point_index, ())

    def line_subspace(self, line_id: int) -> Subspace:
        return Subspace(self.space, self.lines[line_id], canonical=True)

    def span_rows(self) -> tuple:
        rows = [r for key in self.lines for r in key]
        return self.space.rref(rows)

    def span_dim(self) -> int:
        """Projective dimension of the span of all covered points."""
        return len(self.span_rows()) - 1

    def restrict_to(self, sub: Subspace) -> "LineSet":
        """The sub-line-set of lines fully contained in ``sub``."""
        keep = [
            rows
            for rows in self.lines
            if sub.contains_vec(rows[0]) and sub.contains_vec(rows[1])
        ]
        return LineSet(self.space, keep, canonical=True)

    def __eq__(self, other):
        return (
            isinstance(other, LineSet)
            and other.space.key == self.space.key
            and other.lines == self.lines
        )

    def __hash__(self):
        return hash((self.space.key, self.lines))

    def __repr__(self):
        return f"LineSet(PG{self.space.key}, {len(self.lines)} lines)"
