"""The intersection-number auditor.

For a line set L and each relevant dimension d, the auditor needs the
multiset of counts |L_U| over d-subspaces U.  Every axiom admits count
zero, so it is enough to visit the subspaces incident with at least one
line: for each line of L, enumerate the d-subspaces through it and
accumulate.  A subspace containing k lines is then visited exactly k
times, so the accumulated multiplicity *is* |L_U| (scheme
"multiplicity-sum", recorded in the report).  For H(3) this replaces
~10^8 subspaces by ~10^6 incidences.

A naive full-enumeration audit is kept alongside as an oracle; both
must produce identical histograms.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass, field as dc_field

from .lineset import LineSet
from .pg import PG, Subspace, gaussian_binomial

DEDUP_SCHEME = "multiplicity-sum"

AXIOM_ORDER = ("Pt", "Pl", "Sd", "Sd'", "4d", "Hp", "Hp'", "To", "6d")

_ALIASES = {
    "pt": "Pt", "pl": "Pl", "sd": "Sd", "sd'": "Sd'", "sdp": "Sd'",
    "sdprime": "Sd'", "4d": "4d", "hp": "Hp", "hp'": "Hp'", "hpp": "Hp'",
    "hpprime": "Hp'", "to": "To", "6d": "6d",
}


@dataclass(frozen=True)
class AxiomConfig:
    """Which intersection-number axioms the audit should check."""

    pt: bool = False
    pl: bool = False
    sd: bool = False
    sd_prime: bool = False
    four_d: bool = False
    hp: bool = False
    hp_prime: bool = False
    to: bool = False
    six_d: bool = False

    _FIELDS = {
        "Pt": "pt", "Pl": "pl", "Sd": "sd", "Sd'": "sd_prime", "4d": "four_d",
        "Hp": "hp", "Hp'": "hp_prime", "To": "to", "6d": "six_d",
    }

    def __post_init__(self):
        if not any(getattr(self, f) for f in self._FIELDS.values()):
            raise ValueError("at least one axiom flag must be set")

    @classmethod
    def all(cls) -> "AxiomConfig":
        return cls(**{f: True for f in cls._FIELDS.values()})

    @classmethod
    def main_theorem(cls) -> "AxiomConfig":
        """(Pt), (Pl), (Sd), (4d), (Hp), (Hp'), (To): the exhaustive suite."""
        return cls(pt=True, pl=True, sd=True, four_d=True, hp=True,
                   hp_prime=True, to=True)

    @classmethod
    def from_names(cls, names) -> "AxiomConfig":
        flags = {}
        for name in names:
            key = _ALIASES.get(name.strip().lower())
            if key is None:
                raise ValueError(f"unknown axiom name: {name!r}")
            flags[cls._FIELDS[key]] = True
        return cls(**flags)

    def enabled(self) -> tuple[str, ...]:
        return tuple(a for a in AXIOM_ORDER if getattr(self, self._FIELDS[a]))


def axiom_allowed(axiom: str, q: int):
    """Allowed nonzero counts (set) or upper bound (int) for one axiom."""
    if axiom == "Pt":
        return {q + 1}
    if axiom == "Pl":
        return {1, q + 1}
    if axiom == "Sd":
        return {1, q + 1, 2 * q + 1}
    if axiom == "Sd'":
        return 2 * q + 1
    if axiom == "4d":
        return q**3 - q**2 + 4 * q
    if axiom == "Hp":
        return q**3 + 3 * q**2 + 3 * q
    if axiom == "Hp'":
        return q**4 - q**3 + 3 * q**2 + 2 * q
    raise ValueError(f"axiom {axiom!r} has no per-subspace count rule")


_AXIOM_DIM = {"Pl": 2, "Sd": 3, "Sd'": 3, "4d": 4, "Hp": 5, "Hp'": 5}


@dataclass
class AuditReport:
    n: int
    q: int
    num_lines: int
    num_points: int
    span_dim: int
    axioms: tuple[str, ...]
    verdicts: dict = dc_field(default_factory=dict)
    witnesses: dict = dc_field(default_factory=dict)
    histograms: dict = dc_field(default_factory=dict)
    dedup_scheme: str = DEDUP_SCHEME

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "totals": {
                "lines": self.num_lines,
                "points": self.num_points,
                "span_dim": self.span_dim,
            },
            "dedup_scheme": self.dedup_scheme,
            "axioms": list(self.axioms),
            "verdicts": {a: self.verdicts[a] for a in self.axioms},
            "witnesses": {
                a: (
                    None
                    if self.witnesses.get(a) is None
                    else [list(row) for row in self.witnesses[a]]
                )
                for a in self.axioms
            },
            "histograms": {
                str(d): {str(c): m for c, m in sorted(hist.items())}
                for d, hist in sorted(self.histograms.items())
            },
        }


def count_in(ls: LineSet, u: Subspace) -> int:
    """|{l in L : l inside u}|."""
    ls.space.check_ambient(u.space)
    return sum(
        1 for key in ls.lines if u.contains_vec(key[0]) and u.contains_vec(key[1])
    )


# -- closure enumeration of per-subspace counts --

_WORKER_STATE: dict = {}


def _init_worker(space_key, lines):
    from .pg import projective_space

    _WORKER_STATE["space"] = projective_space(*space_key)
    _WORKER_STATE["lines"] = lines


def _count_chunk(args):
    d, lo, hi = args
    space: PG = _WORKER_STATE["space"]
    lines = _WORKER_STATE["lines"]
    counts: dict[bytes, int] = {}
    get = counts.get
    for key in lines[lo:hi]:
        for rows in space.subspaces_through_rows(key, d):
            b = bytes(x for row in rows for x in row)
            counts[b] = get(b, 0) + 1
    return counts


def _closure_counts(ls: LineSet, d: int, threads: int = 1) -> dict[bytes, int]:
    """Map (flattened canonical basis) -> |L_U| over d-subspaces meeting L."""
    if d == ls.n:
        # The whole space: every line is inside it.
        rows = ls.space.whole_space().rows
        return {bytes(x for row in rows for x in row): len(ls.lines)}
    if threads > 1 and len(ls.lines) >= 2 * threads:
        chunk = (len(ls.lines) + threads - 1) // threads
        jobs = [
            (d, lo, min(lo + chunk, len(ls.lines)))
            for lo in range(0, len(ls.lines), chunk)
        ]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(
            threads, initializer=_init_worker, initargs=(ls.space.key, ls.lines)
        ) as pool:
            partials = pool.map(_count_chunk, jobs)
        merged: dict[bytes, int] = {}
        for part in partials:
            for b, c in part.items():
                merged[b] = merged.get(b, 0) + c
        return merged
    _init_worker(ls.space.key, ls.lines)
    return _count_chunk((d, 0, len(ls.lines)))


def _hist_and_verdicts(counts: dict[bytes, int], axioms, q, width):
    hist: dict[int, int] = {}
    for c in counts.values():
        hist[c] = hist.get(c, 0) + 1
    results = {}
    for axiom in axioms:
        rule = axiom_allowed(axiom, q)
        if isinstance(rule, set):
            bad = lambda c: c not in rule  # noqa: E731
        else:
            bad = lambda c: c > rule  # noqa: E731
        witness = None
        if any(bad(c) for c in hist):
            wkey = min(b for b, c in counts.items() if bad(c))
            witness = tuple(
                tuple(wkey[i : i + width]) for i in range(0, len(wkey), width)
            )
        results[axiom] = (witness is None, witness)
    return hist, results


def default_threads() -> int:
    env = os.environ.get("HEXAUDIT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def audit(ls: LineSet, cfg: AxiomConfig, threads: int = 1) -> AuditReport:
    """Audit the enabled axioms; verdicts, witnesses and count histograms.

    Dimensions are enumerated by closure over the lines of the set; the
    (To) and (6d) verdicts come from the totals.
    """
    if not ls.lines:
        raise ValueError("cannot audit an empty line set")
    q = ls.q
    report = AuditReport(
        n=ls.n,
        q=q,
        num_lines=len(ls.lines),
        num_points=len(ls.point_lines),
        span_dim=ls.span_dim(),
        axioms=cfg.enabled(),
    )
    enabled = set(cfg.enabled())
    if "Pt" in enabled:
        hist: dict[int, int] = {}
        for line_ids in ls.point_lines.values():
            hist[len(line_ids)] = hist.get(len(line_ids), 0) + 1
        report.histograms[0] = hist
        bad_pts = sorted(
            pi for pi, line_ids in ls.point_lines.items() if len(line_ids) != q + 1
        )
        report.verdicts["Pt"] = not bad_pts
        report.witnesses["Pt"] = (
            None if not bad_pts else (ls.space.points[bad_pts[0]],)
        )
    dims = sorted({_AXIOM_DIM[a] for a in enabled if a in _AXIOM_DIM})
    for d in dims:
        axioms_d = [a for a in report.axioms if _AXIOM_DIM.get(a) == d]
        if d > ls.n:
            # No such subspaces in this ambient space: vacuously satisfied.
            for a in axioms_d:
                report.verdicts[a] = True
                report.witnesses[a] = None
            continue
        counts = _closure_counts(ls, d, threads=threads)
        hist, results = _hist_and_verdicts(counts, axioms_d, q, ls.space.width)
        report.histograms[d] = hist
        for a, (ok, witness) in results.items():
            report.verdicts[a] = ok
            report.witnesses[a] = witness
    if "To" in enabled:
        bound = q**5 + q**4 + q**3 + q**2 + q + 1
        report.verdicts["To"] = len(ls.lines) <= bound
        report.witnesses["To"] = None
    if "6d" in enabled:
        report.verdicts["6d"] = q > 3 or report.span_dim >= 6
        report.witnesses["6d"] = None
    return report


def naive_audit(ls: LineSet, cfg: AxiomConfig) -> AuditReport:
    """Oracle audit by full subspace enumeration; must match `audit` exactly."""
    if not ls.lines:
        raise ValueError("cannot audit an empty line set")
    q = ls.q
    report = AuditReport(
        n=ls.n,
        q=q,
        num_lines=len(ls.lines),
        num_points=len(ls.point_lines),
        span_dim=ls.span_dim(),
        axioms=cfg.enabled(),
    )
    enabled = set(cfg.enabled())
    if "Pt" in enabled:
        hist = {}
        for line_ids in ls.point_lines.values():
            hist[len(line_ids)] = hist.get(len(line_ids), 0) + 1
        report.histograms[0] = hist
        bad_pts = sorted(
            pi for pi, line_ids in ls.point_lines.items() if len(line_ids) != q + 1
        )
        report.verdicts["Pt"] = not bad_pts
        report.witnesses["Pt"] = (
            None if not bad_pts else (ls.space.points[bad_pts[0]],)
        )
    dims = sorted({_AXIOM_DIM[a] for a in enabled if a in _AXIOM_DIM})
    for d in dims:
        axioms_d = [a for a in report.axioms if _AXIOM_DIM.get(a) == d]
        if d > ls.n:
            for a in axioms_d:
                report.verdicts[a] = True
                report.witnesses[a] = None
            continue
        counts: dict[bytes, int] = {}
        for sub in ls.space.enumerate_subspaces(d):
            c = count_in(ls, sub)
            if c:
                counts[bytes(x for row in sub.rows for x in row)] = c
        hist, results = _hist_and_verdicts(counts, axioms_d, q, ls.space.width)
        report.histograms[d] = hist
        for a, (ok, witness) in results.items():
            report.verdicts[a] = ok
            report.witnesses[a] = witness
    if "To" in enabled:
        report.verdicts["To"] = len(ls.lines) <= q**5 + q**4 + q**3 + q**2 + q + 1
        report.witnesses["To"] = None
    if "6d" in enabled:
        report.verdicts["6d"] = q > 3 or report.span_dim >= 6
        report.witnesses["6d"] = None
    return report


@dataclass
class ExpansionReport:
    lines_in_m: int
    meets_unique_s: bool | None
    alpha: int | None
    alpha_at_most_q: bool | None
    bound: int
    holds: bool


def expansion_bound(ls: LineSet, m: Subspace, l) -> ExpansionReport:
    """Check the line-count expansion inequality for a line leaving ``m``.

    With L_M the lines inside m and l a line of L meeting m in exactly
    one point: if l meets no line of L_M, |L| >= q|L_M| + 1; if it meets
    a line s with a (alpha = number of full-pencil points of m on s),
    |L| >= q|L_M| - alpha q^2 + alpha q + 1.
    """
    from .polygon import _full_pencil_points

    if isinstance(l, Subspace):
        lrows = l.rows
    else:
        lrows = ls.space.rref(l)
    if lrows not in set(ls.lines):
        raise ValueError("l is not a line of the set")
    lsub = Subspace(ls.space, lrows, canonical=True)
    inter = ls.space.meet(lsub, m)
    if inter.projdim != 0:
        raise ValueError("l must meet the subspace in exactly one point")
    q = ls.q
    in_m = [
        key
        for key in ls.lines
        if m.contains_vec(key[0]) and m.contains_vec(key[1])
    ]
    lm = len(in_m)
    l_pts = set(ls.space.line_point_indices(lrows))
    meeting = [
        key
        for key in in_m
        if l_pts & set(ls.space.line_point_indices(key))
    ]
    if not meeting:
        bound = q * lm + 1
        return ExpansionReport(lm, None, None, None, bound, len(ls.lines) >= bound)
    s = meeting[0]
    special = _full_pencil_points(ls, m)
    alpha = sum(1 for p in ls.space.line_point_indices(s) if p in special)
    bound = q * lm - alpha * q**2 + alpha * q + 1
    return ExpansionReport(
        lines_in_m=lm,
        meets_unique_s=len(meeting) == 1,
        alpha=alpha,
        alpha_at_most_q=alpha <= q,
        bound=bound,
        holds=len(ls.lines) >= bound,
    )


@dataclass
class HyperplaneConsequenceReport:
    vacuous: bool
    bound: int
    best_count: int | None
    hyperplane: Subspace | None
    span_dim_at_most_6: bool

    @property
    def ok(self) -> bool:
        return self.vacuous or (
            self.best_count is not None and self.best_count >= self.bound
        )


def hyperplane_consequence_check(ls: LineSet) -> HyperplaneConsequenceReport:
    """If the set has a pentagon, a 5-space through its span must carry at
    least q^4 - q^3 + 3q^2 + 2q + 1 lines; also the whole set must span at
    most a 6-space.  Preconditions (Pt), (Pl), (Sd), (To) are the caller's.
    """
    from .polygon import find_kgon, pentagon_span_check

    q = ls.q
    bound = q**4 - q**3 + 3 * q**2 + 2 * q + 1
    sdim_ok = ls.span_dim() <= 6
    gon = find_kgon(ls, 5)
    if gon is None:
        return HyperplaneConsequenceReport(True, bound, None, None, sdim_ok)
    u = pentagon_span_check(ls, gon).span
    best, best_h = -1, None
    if u.projdim < 5 <= ls.n:
        for h in ls.space.subspaces_through(u, 5):
            c = count_in(ls, h)
            if c > best:
                best, best_h = c, h
    return HyperplaneConsequenceReport(False, bound, best, best_h, sdim_ok)
