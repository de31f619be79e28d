"""Heuristic search for line sets satisfying configurable axiom subsets.

The point axiom forces degree q+1 at every covered point and the plane
axiom forces those q+1 lines to be coplanar, so moves are made at pencil
granularity: a move picks a point P and a plane through it and adds all
q+1 lines of the plane through P, rejecting early any move that would
push a point past degree q+1, a plane past q+1 lines or a solid past
2q+1 lines.  "Dirty" points (degree strictly between 0 and q+1) are
repaired first, inside the plane their current lines already span.

Every candidate in a clean state is re-validated with the independent
audit module before being reported.  Runs are fully reproducible from
the recorded seed (Python's Mersenne Twister); the log embeds generator
name, seed and spec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .audit import AxiomConfig, audit
from .lineset import LineSet
from .pg import PG, Subspace, projective_space
from .polygon import find_kgon

MODES = ("randomized-greedy", "local-swap")
TARGETS = ("pentagon", "span-lt-6", "any")

GENERATOR_NAME = "python-random-mt19937"


@dataclass(frozen=True)
class SearchSpec:
    n: int
    q: int
    axioms: AxiomConfig
    mode: str = "randomized-greedy"
    seed: int = 0
    budget: int = 1000
    target: str = "pentagon"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.target not in TARGETS:
            raise ValueError(f"target must be one of {TARGETS}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")

    @classmethod
    def from_dict(cls, d: dict) -> "SearchSpec":
        return cls(
            n=int(d["n"]),
            q=int(d["q"]),
            axioms=AxiomConfig.from_names(d["axioms"]),
            mode=d.get("mode", "randomized-greedy"),
            seed=int(d.get("seed", 0)),
            budget=int(d.get("budget", 1000)),
            target=d.get("target", "pentagon"),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "axioms": list(self.axioms.enabled()),
            "mode": self.mode,
            "seed": self.seed,
            "budget": self.budget,
            "target": self.target,
        }


@dataclass
class SearchResult:
    found: LineSet | None
    log: str
    iterations: int
    restarts: int
    best_score: int
    candidates_checked: int = 0


class _State:
    """Incrementally maintained degrees and plane/solid line counts."""

    def __init__(self, space: PG, q: int):
        self.space = space
        self.q = q
        self.chosen: set = set()
        self.degree: dict[int, int] = {}
        self.plane_counts: dict[bytes, int] = {}
        self.solid_counts: dict[bytes, int] = {}
        self._line_pts: dict = {}
        self._line_planes: dict = {}
        self._line_solids: dict = {}

    def line_pts(self, key):
        pts = self._line_pts.get(key)
        if pts is None:
            pts = self.space.line_point_indices(key)
            self._line_pts[key] = pts
        return pts

    def _incident(self, key, d, cache):
        subs = cache.get(key)
        if subs is None:
            if d > self.space.n:
                subs = ()
            else:
                subs = tuple(
                    bytes(x for row in rows for x in row)
                    for rows in self.space.subspaces_through_rows(key, d)
                )
            cache[key] = subs
        return subs

    def line_planes(self, key):
        return self._incident(key, 2, self._line_planes)

    def line_solids(self, key):
        return self._incident(key, 3, self._line_solids)

    def can_add(self, keys) -> bool:
        """Cap check for adding the given new lines as one move."""
        q = self.q
        dd: dict[int, int] = {}
        pp: dict[bytes, int] = {}
        ss: dict[bytes, int] = {}
        for key in keys:
            for p in self.line_pts(key):
                dd[p] = dd.get(p, 0) + 1
            for b in self.line_planes(key):
                pp[b] = pp.get(b, 0) + 1
            for b in self.line_solids(key):
                ss[b] = ss.get(b, 0) + 1
        for p, inc in dd.items():
            if self.degree.get(p, 0) + inc > q + 1:
                return False
        for b, inc in pp.items():
            if self.plane_counts.get(b, 0) + inc > q + 1:
                return False
        for b, inc in ss.items():
            if self.solid_counts.get(b, 0) + inc > 2 * q + 1:
                return False
        return True

    def add(self, keys) -> None:
        for key in keys:
            assert key not in self.chosen
            self.chosen.add(key)
            for p in self.line_pts(key):
                self.degree[p] = self.degree.get(p, 0) + 1
            for b in self.line_planes(key):
                self.plane_counts[b] = self.plane_counts.get(b, 0) + 1
            for b in self.line_solids(key):
                self.solid_counts[b] = self.solid_counts.get(b, 0) + 1

    def remove(self, keys) -> None:
        for key in keys:
            self.chosen.discard(key)
            for p in self.line_pts(key):
                self.degree[p] -= 1
            for b in self.line_planes(key):
                self.plane_counts[b] -= 1
            for b in self.line_solids(key):
                self.solid_counts[b] -= 1

    def dirty_points(self) -> list[int]:
        q = self.q
        return sorted(p for p, d in self.degree.items() if 0 < d < q + 1)

    def score(self) -> int:
        """Distance to a (Pt)/(Pl)/(Sd)-clean state; 0 means clean."""
        q = self.q
        s = sum(q + 1 - d for d in self.degree.values() if 0 < d < q + 1)
        s += sum(1 for c in self.plane_counts.values() if 1 < c < q + 1)
        s += sum(
            1
            for c in self.solid_counts.values()
            if c not in (0, 1, q + 1, 2 * q + 1)
        )
        return s


def _lines_through_in_plane(space: PG, point, plane_rows) -> list:
    """Canonical keys of the q+1 lines through the point inside the plane."""
    plane = Subspace(space, plane_rows, canonical=True)
    keys = set()
    for other in plane.points():
        if other == point:
            continue
        keys.add(space.rref((point, other)))
    return sorted(keys)


def _pencil_move(state: _State, point_idx: int, plane_rows):
    """Missing lines of the pencil at the point inside the plane, or None."""
    space = state.space
    point = space.points[point_idx]
    pencil = _lines_through_in_plane(space, point, plane_rows)
    missing = [key for key in pencil if key not in state.chosen]
    if not missing:
        return None
    if not state.can_add(missing):
        return None
    return missing


def _target_met(ls: LineSet, target: str) -> bool:
    if target == "any":
        return True
    if target == "pentagon":
        return find_kgon(ls, 5) is not None
    if target == "span-lt-6":
        return ls.span_dim() < 6
    raise ValueError(target)


def run(spec: SearchSpec) -> SearchResult:
    """Run the search; returns a validated candidate or None plus a log."""
    space = projective_space(spec.n, spec.q)
    rng = random.Random(spec.seed)
    q = spec.q
    state = _State(space, q)
    log_lines = [
        "hexaudit search log",
        f"generator: {GENERATOR_NAME}",
        f"seed: {spec.seed}",
        f"spec: n={spec.n} q={spec.q} mode={spec.mode} budget={spec.budget} "
        f"target={spec.target} axioms={','.join(spec.axioms.enabled())}",
    ]
    best_score = None
    iterations = 0
    restarts = 0
    candidates = 0
    found: LineSet | None = None

    def fresh_plane_rows(point_idx):
        point = space.points[point_idx]
        planes = space.subspaces_through_rows((point,), 2)
        return planes[rng.randrange(len(planes))]

    while iterations < spec.budget and found is None:
        iterations += 1
        dirty = state.dirty_points()
        moved = False
        if dirty:
            p = dirty[rng.randrange(len(dirty))]
            lines_at_p = [key for key in state.chosen if p in state.line_pts(key)]
            rows = [r for key in lines_at_p for r in key]
            span = space.rref(rows)
            if len(span) == 2:
                candidates_planes = space.subspaces_through_rows(span, 2)
                plane_rows = candidates_planes[rng.randrange(len(candidates_planes))]
            elif len(span) == 3:
                plane_rows = span
            else:
                plane_rows = None
            if plane_rows is not None:
                missing = _pencil_move(state, p, plane_rows)
                if missing is not None:
                    state.add(missing)
                    moved = True
            if not moved:
                # Unrepairable point: drop its lines and start over there.
                state.remove(lines_at_p)
                restarts += 1
                moved = True
        else:
            if state.chosen and state.score() == 0:
                candidates += 1
                ls = LineSet(space, sorted(state.chosen), canonical=True)
                rep = audit(ls, spec.axioms)
                if rep.passed and _target_met(ls, spec.target):
                    found = ls
                    log_lines.append(
                        f"hit: iteration={iterations} lines={len(ls)}"
                    )
                    break
                if spec.mode == "local-swap":
                    # Perturb: remove a random full pencil and keep going.
                    full = sorted(
                        p for p, d in state.degree.items() if d == q + 1
                    )
                    if full:
                        p = full[rng.randrange(len(full))]
                        state.remove(
                            [k for k in state.chosen if p in state.line_pts(k)]
                        )
                        moved = True
            if not moved:
                covered = {p for p, d in state.degree.items() if d > 0}
                pool = [i for i in range(len(space.points)) if i not in covered]
                if not pool:
                    break
                p = pool[rng.randrange(len(pool))]
                missing = _pencil_move(state, p, fresh_plane_rows(p))
                if missing is not None:
                    state.add(missing)
        sc = state.score()
        if best_score is None or sc < best_score:
            best_score = sc
    log_lines.append(f"iterations: {iterations}")
    log_lines.append(f"restarts: {restarts}")
    log_lines.append(f"candidates_checked: {candidates}")
    log_lines.append(f"best_score: {best_score if best_score is not None else -1}")
    log_lines.append(f"outcome: {'found' if found is not None else 'none'}")
    return SearchResult(
        found=found,
        log="\n".join(log_lines) + "\n",
        iterations=iterations,
        restarts=restarts,
        best_score=best_score if best_score is not None else -1,
        candidates_checked=candidates,
    )
