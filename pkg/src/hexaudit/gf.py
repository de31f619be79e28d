"""Arithmetic in GF(q) for small prime powers.

Field elements are plain integer codes in ``[0, q)``.  A code is read
base-p, little-endian, as the coefficient vector of a polynomial over
GF(p), so code ``0`` is the additive and code ``1`` the multiplicative
identity.  Extension fields use a fixed irreducible modulus, which keeps
the integer encoding (and therefore every file format) stable across
runs and machines.

Multiplication is backed by log/antilog tables over a generator and then
flattened into a full q x q product table, since the audit inner loops
are dominated by field operations.  All tables are immutable after
construction; every operation is pure.
"""

from __future__ import annotations

from functools import lru_cache

MAX_Q = 16

# Fixed moduli, little-endian coefficients (constant term first).
_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
}


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise ``ValueError``."""
    if q < 2:
        raise ValueError(f"field order must be at least 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    e, m = 0, q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except ValueError:
        return False
    return True


class GF:
    """The finite field GF(q) with precomputed operation tables, q <= 16."""

    def __init__(self, q: int):
        p, e = factor_prime_power(q)
        if q > MAX_Q:
            raise ValueError(f"GF({q}) not supported, need q <= {MAX_Q}")
        self.q = q
        self.p = p
        self.e = e
        self.modulus: tuple[int, ...] | None = _MODULI[(p, e)] if e > 1 else None

        self.neg_table = [self._neg_raw(a) for a in range(q)]
        self.add_table = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self.sub_table = [
            [self.add_table[a][self.neg_table[b]] for b in range(q)] for a in range(q)
        ]
        self._build_mul_tables()

    # -- raw coefficient arithmetic, used only to build the tables --

    def _digits(self, code: int) -> list[int]:
        d = []
        for _ in range(self.e):
            code, r = divmod(code, self.p)
            d.append(r)
        return d

    def _code(self, digits: list[int]) -> int:
        c = 0
        for d in reversed(digits):
            c = c * self.p + d
        return c

    def _add_raw(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._code([(x + y) % self.p for x, y in zip(da, db)])

    def _neg_raw(self, a: int) -> int:
        return self._code([(-x) % self.p for x in self._digits(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        if e > 1:
            mod = self.modulus
            for i in range(len(prod) - 1, e - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j in range(e):
                        prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return self._code(prod[: max(e, 1)])

    def _build_mul_tables(self) -> None:
        q = self.q
        # Find a generator of the multiplicative group by brute force.
        gen = None
        for g in range(1, q):
            seen, x = set(), 1
            for _ in range(q - 1):
                x = self._mul_raw(x, g)
                seen.add(x)
            if len(seen) == q - 1:
                gen = g
                break
        assert gen is not None
        self.exp_table = [0] * (2 * (q - 1))
        self.log_table = [0] * q
        x = 1
        for i in range(q - 1):
            self.exp_table[i] = x
            self.exp_table[i + q - 1] = x
            self.log_table[x] = i
            x = self._mul_raw(x, gen)
        exp, log = self.exp_table, self.log_table
        self.mul_table = [
            [exp[log[a] + log[b]] if a and b else 0 for b in range(q)]
            for a in range(q)
        ]
        self.inv_table: list[int | None] = [None] + [
            exp[(q - 1 - log[a]) % (q - 1)] for a in range(1, q)
        ]

    # -- public scalar operations on integer codes --

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.sub_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]  # type: ignore[return-value]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        r = 1
        while k:
            if k & 1:
                r = self.mul_table[r][a]
            a = self.mul_table[a][a]
            k >>= 1
        return r

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"


class FieldElement:
    """A field element bound to its GF context.

    Mixing elements of different fields raises ``ValueError``.  This
    wrapper is the public arithmetic surface; the geometry inner loops
    use the raw integer codes with the tables on :class:`GF` directly.
    """

    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        if not 0 <= code < field.q:
            raise ValueError(f"code {code} out of range for {field!r}")
        self.field = field
        self.code = code

    def _coerce(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other.code

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._coerce(other)))

    def __truediv__(self, other):
        c = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(c)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.code, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def __int__(self):
        return self.code

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.code == self.code
        )

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __repr__(self):
        return f"GF({self.field.q})[{self.code}]"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    """Shared GF(q) instance; tables are immutable, so caching is safe."""
    return GF(q)
