"""One-point algebraic geometry codes at desk scale.

Two curve families are instantiated: the rational function field (genus 0,
giving Reed-Solomon codes) and Hermitian curves y^r + y = x^(r+1) over
GF(r^2) (genus r(r-1)/2, with r^3 affine rational places).  Functions with
poles only at the place at infinity are modelled by monomials x^i y^j
(j < r on the Hermitian curve); their pole orders i*r + j*(r+1) enumerate
the Weierstrass semigroup generated by r and r+1.

A code is built by evaluating the monomial basis with pole order at most m
at a list of affine places; the dual is obtained by kernel linear algebra
in the linear-code layer, not by residue calculus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode, from_generator
from .gf2m import GF2m


@dataclass(frozen=True)
class Curve:
    family: str          # "rational" | "hermitian"
    r: int | None = None

    @property
    def genus(self) -> int:
        if self.family == "rational":
            return 0
        return self.r * (self.r - 1) // 2

    @property
    def semigroup_gens(self) -> tuple[int, ...]:
        if self.family == "rational":
            return (1,)
        return (self.r, self.r + 1)

    def __repr__(self) -> str:
        if self.family == "rational":
            return "Curve(rational)"
        return f"Curve(hermitian, r={self.r})"


def rational_curve() -> Curve:
    return Curve("rational")


def hermitian_curve(r: int) -> Curve:
    if r < 2 or r & (r - 1):
        raise ValueError(
            f"Hermitian parameter r={r} must be a power of 2 (even characteristic)"
        )
    return Curve("hermitian", r)


def hermitian_places(r: int, field: GF2m) -> list[tuple[int, int]]:
    """All affine rational places (x, y) with y^r + y = x^(r+1), in
    lexicographic order; there are exactly r^3 of them."""
    if r < 2 or r & (r - 1):
        raise ValueError(
            f"Hermitian parameter r={r} must be a power of 2 (even characteristic)"
        )
    if field.q != r * r:
        raise ValueError(
            f"Hermitian curve with r={r} needs the field GF({r * r}), got GF({field.q})"
        )
    s = r.bit_length() - 1  # r = 2^s, so t^r is s-fold squaring
    places = []
    for x in field.elements():
        rhs = field.mul(field.pow(x, r), x)
        for y in field.elements():
            yr = y
            for _ in range(s):
                yr = field.mul(yr, yr)
            if yr ^ y == rhs:
                places.append((x, y))
    assert len(places) == r**3
    return places


def rational_places(field: GF2m, count: int) -> list[int]:
    """The first `count` field elements, used as evaluation points on the
    projective line (the place at infinity is never evaluated)."""
    if not 1 <= count <= field.q:
        raise ValueError(f"need 1 <= count <= {field.q}, got {count}")
    return list(range(count))


def pole_order(curve: Curve, i: int, j: int) -> int:
    if curve.family == "rational":
        return i
    return i * curve.r + j * (curve.r + 1)


def rr_basis(m: int, curve: Curve) -> list[tuple[int, int]]:
    """Monomial exponents (i, j) with pole order at most m, sorted by pole
    order; a basis of the functions with pole divisor dominated by m times
    the place at infinity."""
    if m < 0:
        raise ValueError("divisor degree m must be >= 0")
    if curve.family == "rational":
        return [(i, 0) for i in range(m + 1)]
    r = curve.r
    monos = []
    for j in range(r):
        base = j * (r + 1)
        if base > m:
            break
        monos.extend((i, j) for i in range((m - base) // r + 1))
    monos.sort(key=lambda ij: pole_order(curve, *ij))
    return monos


def rr_dimension(m: int, curve: Curve) -> int:
    """Number of Weierstrass pole orders at most m; equals m - g + 1 for
    every m >= 2g - 1 (Riemann-Roch)."""
    return len(rr_basis(m, curve))


def weierstrass_gaps(curve: Curve) -> list[int]:
    """Positive integers that are not pole orders; there are exactly g."""
    g = curve.genus
    if g == 0:
        return []
    orders = {pole_order(curve, i, j) for (i, j) in rr_basis(2 * g, curve)}
    return [t for t in range(1, 2 * g + 1) if t not in orders]


def _eval_monomial(field: GF2m, curve: Curve, ij: tuple[int, int], place) -> int:
    i, j = ij
    if curve.family == "rational":
        return field.pow(place, i)
    x, y = place
    return field.mul(field.pow(x, i), field.pow(y, j))


def evaluation_rows(field: GF2m, curve: Curve, places, m: int) -> list[tuple[int, ...]]:
    basis = rr_basis(m, curve)
    return [tuple(_eval_monomial(field, curve, ij, p) for p in places)
            for ij in basis]


def build_code(field: GF2m, curve: Curve, places, m: int) -> LinearCode:
    """Evaluation code of the functions with pole order <= m at the given
    affine places.  Requires m < n; then the evaluation map is injective,
    the dimension is rr_dimension(m), and the distance is at least n - m."""
    places = list(places)
    n = len(places)
    if len(set(places)) != n:
        raise ValueError("evaluation places must be pairwise distinct")
    if curve.family == "hermitian":
        valid = set(hermitian_places(curve.r, field))
        bad = [p for p in places if p not in valid]
        if bad:
            raise ValueError(f"not affine places of the curve: {bad[:3]}")
    else:
        for p in places:
            field.check(p)
    if not 0 <= m < n:
        raise ValueError(f"divisor degree m={m} must satisfy 0 <= m < n={n}")
    return from_generator(field, n, evaluation_rows(field, curve, places, m))


@dataclass(frozen=True)
class DesignedParameters:
    k: int
    d_lower: int
    k_dual: int
    d_dual_lower: int


def designed_parameters(n: int, m: int, g: int) -> DesignedParameters:
    """Exact dimensions and designed distance lower bounds for a one-point
    code of divisor degree m on a genus-g curve with n evaluation places.

    Valid for 2g - 2 < m < n: then k = m - g + 1 exactly, the dual has
    dimension n - m + g - 1, and the distances satisfy d >= n - m and
    d_dual >= m - 2g + 2.
    """
    if not m > 2 * g - 2:
        raise ValueError(f"need m > 2g-2: m={m}, 2g-2={2 * g - 2}")
    if not m < n:
        raise ValueError(f"need m < n: m={m}, n={n}")
    k = m - g + 1
    params = DesignedParameters(k, n - m, n - k, m - 2 * g + 2)
    assert params.k + params.k_dual == n
    return params
