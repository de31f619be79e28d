"""Strongly-regular-graph feasibility tests.

The restriction used downstream: a girth-5, diameter-2, (q+1)-regular
graph arising from the full-pencil points of a 4-space is strongly
regular with parameters (q^2 + 2q + 2, q + 1, 0, 1); unless it is a
conference graph its eigenvalues must be integers, which forces 1 + 4q
to be an odd perfect square, i.e. q = u(u+1).  All feasibility
decisions use exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import is_prime_power


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if min(self.v, self.k, self.lam, self.mu) < 0:
            raise ValueError("parameters must be non-negative")
        if self.k >= self.v:
            raise ValueError("need k < v")
        if self.mu > self.k:
            raise ValueError("need mu <= k")
        if self.mu > 0 and self.k * (self.k - self.lam - 1) != (
            self.v - self.k - 1
        ) * self.mu:
            raise ValueError(
                "parameter identity k(k-lam-1) = (v-k-1)mu violated"
            )


def eigenvalues(p: SrgParams) -> tuple[float, float]:
    """The two non-principal eigenvalues, standard sign convention.

    ((lam - mu) +/- sqrt((lam - mu)^2 + 4(k - mu))) / 2, returned as
    (r, s) with r >= s; for the Petersen parameters (10, 3, 0, 1) this
    gives (1, -2).  See also :func:`eigenvalues_displayed_sign`.
    """
    d = p.lam - p.mu
    disc = math.sqrt(d * d + 4 * (p.k - p.mu))
    return (d + disc) / 2, (d - disc) / 2


def eigenvalues_displayed_sign(p: SrgParams) -> tuple[float, float]:
    """The same expression with (mu - lam) in place of (lam - mu).

    For non-symmetric discriminants this is the negated pair; both
    conventions yield the same integrality verdict.
    """
    d = p.mu - p.lam
    disc = math.sqrt(d * d + 4 * (p.k - p.mu))
    return (d + disc) / 2, (d - disc) / 2


def is_conference(p: SrgParams) -> bool:
    """Conference-graph parameters (4mu+1, 2mu, mu-1, mu)."""
    mu = p.mu
    return (p.v, p.k, p.lam, p.mu) == (4 * mu + 1, 2 * mu, mu - 1, mu)


def integrality_feasible(p: SrgParams) -> bool:
    """True iff p is conference-exempt or both eigenvalues are integers."""
    if is_conference(p):
        return True
    d = p.lam - p.mu
    disc = d * d + 4 * (p.k - p.mu)
    r = math.isqrt(disc)
    if r * r != disc:
        return False
    return (d + r) % 2 == 0


def pencil_graph_params(q: int) -> SrgParams:
    """Parameters forced on the full-pencil-point graph of a 4-space."""
    return SrgParams(q * q + 2 * q + 2, q + 1, 0, 1)


def q_feasible(q: int) -> bool:
    """True iff 1 + 4q is an odd perfect square, i.e. q = u(u+1)."""
    if q < 2:
        raise ValueError("need q >= 2")
    s = math.isqrt(1 + 4 * q)
    return s * s == 1 + 4 * q


def q_to_u(q: int) -> int | None:
    """The u with q = u(u+1), if any."""
    if not q_feasible(q):
        return None
    return (math.isqrt(1 + 4 * q) - 1) // 2


def feasible_prime_powers(limit: int) -> list[int]:
    """Prime powers q <= limit passing :func:`q_feasible` (expected: [2])."""
    return [q for q in range(2, limit + 1) if is_prime_power(q) and q_feasible(q)]


def local_count_check(v_observed: int, q: int) -> bool:
    """Vertex count forced by girth 5, diameter 2, degree q+1."""
    return v_observed == q * q + 2 * q + 2
