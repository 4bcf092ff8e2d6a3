"""Exact arithmetic in GF(2^m), 1 <= m <= 16.

Field elements are plain Python ints: the binary digits of an int are the
coefficients of a polynomial over GF(2), lowest degree in the lowest bit.
Zero and one are therefore represented by 0 and 1, addition is ``^``, and
multiplication is carry-less shift-XOR reduced modulo an irreducible
modulus polynomial.  A :class:`GF2m` instance carries the interpretation;
it is immutable and safe to share across threads.

Vectors over the field are tuples of ints.  The module-level helpers
implement the coordinatewise (Schur) product, coordinatewise inverse and
coordinatewise square used by the code-rescaling machinery.
"""

from __future__ import annotations

from array import array
from functools import lru_cache

MAX_DEGREE = 16


class FieldError(ValueError):
    """Invalid field construction or element."""


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, b: int) -> int:
    """Remainder of carry-less division of a by b over GF(2)."""
    db = poly_degree(b)
    while a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def poly_str(p: int) -> str:
    """Human-readable form of a GF(2) polynomial, e.g. 0b1011 -> 'x^3+x+1'."""
    if p == 0:
        return "0"
    terms = []
    for d in range(poly_degree(p), -1, -1):
        if (p >> d) & 1:
            terms.append("1" if d == 0 else ("x" if d == 1 else f"x^{d}"))
    return "+".join(terms)


def reducibility_witness(poly: int) -> int | None:
    """Smallest nontrivial divisor of poly over GF(2), or None if irreducible.

    Trial division against every polynomial of degree 1..deg(poly)//2.
    """
    m = poly_degree(poly)
    for d in range(1, m // 2 + 1):
        for div in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, div) == 0:
                return div
    return None


@lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """Smallest (as an integer encoding) irreducible polynomial of degree m."""
    if not 1 <= m <= MAX_DEGREE:
        raise FieldError(f"extension degree m={m} out of range 1..{MAX_DEGREE}")
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        if reducibility_witness(cand) is None:
            return cand
    raise AssertionError("unreachable: an irreducible exists for every degree")


class GF2m:
    """The field GF(2^m) defined by an irreducible modulus polynomial.

    With no explicit modulus the smallest irreducible of degree m is used,
    so tables are reproducible across runs and machines.
    """

    __slots__ = ("m", "modulus", "q", "_mul_flat", "_inv_flat")

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise FieldError(f"extension degree m={m} out of range 1..{MAX_DEGREE}")
        if modulus is None:
            modulus = default_modulus(m)
        if poly_degree(modulus) != m:
            raise FieldError(
                f"modulus {poly_str(modulus)} has degree {poly_degree(modulus)}, expected {m}"
            )
        if not modulus & 1:
            raise FieldError(f"modulus {poly_str(modulus)} has no constant term")
        witness = reducibility_witness(modulus)
        if witness is not None:
            raise FieldError(
                f"modulus {poly_str(modulus)} is reducible: divisible by {poly_str(witness)}"
            )
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self._mul_flat: array | None = None
        self._inv_flat: array | None = None

    # -- scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        p = 0
        top = 1 << self.m
        for _ in range(self.m):
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return p

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def sqrt(self, a: int) -> int:
        # Squaring is the Frobenius bijection in characteristic 2, so the
        # square root is a^(2^(m-1)).
        for _ in range(self.m - 1):
            a = self.mul(a, a)
        return a

    def trace(self, a: int, j: int) -> int:
        """Sum of the first j iterated Frobenius images a + a^2 + ... + a^(2^(j-1))."""
        if not 1 <= j <= self.m:
            raise FieldError(f"trace length j={j} out of range 1..{self.m}")
        acc = a
        t = a
        for _ in range(j - 1):
            t = self.mul(t, t)
            acc ^= t
        return acc

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"element {a:#x} out of range for GF(2^{self.m})")
        return a

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # -- lookup tables (optimization only; semantics identical) ------------

    def mul_table(self) -> array:
        """Flat q*q multiplication table; requires m <= 8."""
        if self.m > 8:
            raise FieldError("multiplication table limited to m <= 8")
        if self._mul_flat is None:
            q = self.q
            t = array("H", bytes(2 * q * q))
            for a in range(q):
                for b in range(a, q):
                    v = self.mul(a, b)
                    t[a * q + b] = v
                    t[b * q + a] = v
            self._mul_flat = t
        return self._mul_flat

    def inv_table(self) -> array:
        """Flat inverse table (index 0 unused); requires m <= 8."""
        if self.m > 8:
            raise FieldError("inverse table limited to m <= 8")
        if self._inv_flat is None:
            t = array("H", bytes(2 * self.q))
            for a in range(1, self.q):
                t[a] = self.inv(a)
            self._inv_flat = t
        return self._inv_flat

    # -- serialization ------------------------------------------------------

    def serialize(self) -> str:
        return f"GF2M m={self.m} mod={self.modulus:#x}"

    @classmethod
    def parse(cls, text: str) -> "GF2m":
        parts = text.split()
        if len(parts) != 3 or parts[0] != "GF2M":
            raise FieldError(f"bad field header: {text!r}")
        try:
            fields = dict(p.split("=", 1) for p in parts[1:])
            m = int(fields["m"])
            modulus = int(fields["mod"], 16)
        except (KeyError, ValueError) as exc:
            raise FieldError(f"bad field header: {text!r}") from exc
        return cls(m, modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, modulus={self.modulus:#x})"


def element_hex(a: int) -> str:
    return format(a, "x")


def parse_element(field: GF2m, token: str) -> int:
    try:
        a = int(token, 16)
    except ValueError as exc:
        raise FieldError(f"bad field element {token!r}") from exc
    return field.check(a)


# -- vector operations ------------------------------------------------------


def schur(field: GF2m, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinatewise product of two equal-length vectors."""
    if len(u) != len(v):
        raise FieldError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(field.mul(a, b) for a, b in zip(u, v))


def vec_inverse(field: GF2m, v: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinatewise inverse; every coordinate must be nonzero."""
    if any(a == 0 for a in v):
        raise ZeroDivisionError("vector has a zero coordinate")
    return tuple(field.inv(a) for a in v)


def vec_square(field: GF2m, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(field.mul(a, a) for a in v)
