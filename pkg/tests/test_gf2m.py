import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdcodes.gf2m import (GF2m, FieldError, default_modulus, element_hex,
                           parse_element, poly_mod, schur, vec_inverse,
                           vec_square)

F2 = GF2m(1)
F4 = GF2m(2)
F8 = GF2m(3)
F16 = GF2m(4)


def irreducible_oracle(poly: int) -> bool:
    """Brute force: no product of two smaller polynomials equals poly."""
    deg = poly.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for a in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, a) == 0:
                return False
    return True


class TestConstruction:
    def test_gf4_default(self):
        assert F4.modulus == 0b111  # x^2+x+1, the unique degree-2 irreducible
        assert F4.q == 4

    def test_gf8_default(self):
        assert F8.modulus == 0b1011
        assert irreducible_oracle(0b1011)

    def test_reducible_modulus_names_divisor(self):
        with pytest.raises(FieldError, match=r"x\+1"):
            GF2m(2, 0b101)  # x^2+1 = (x+1)^2

    def test_wrong_degree(self):
        with pytest.raises(FieldError, match="degree"):
            GF2m(3, 0b111)

    def test_missing_constant_term(self):
        with pytest.raises(FieldError, match="constant"):
            GF2m(2, 0b110)

    def test_m_out_of_range(self):
        with pytest.raises(FieldError):
            GF2m(0)
        with pytest.raises(FieldError):
            GF2m(17)

    def test_default_moduli_are_smallest_irreducible(self):
        for m in range(1, 13):
            want = next(p for p in range((1 << m) + 1, 1 << (m + 1))
                        if p.bit_length() - 1 == m and irreducible_oracle(p))
            assert default_modulus(m) == want

    def test_known_small_defaults(self):
        assert default_modulus(4) == 0b10011      # x^4+x+1
        assert default_modulus(7) == 0b10000011   # x^7+x+1

    def test_override_modulus(self):
        f = GF2m(3, 0b1101)  # x^3+x^2+1, the other degree-3 irreducible
        assert f.mul(f.inv(5), 5) == 1


class TestScalarOps:
    def test_add_examples(self):
        assert F4.add(2, 3) == 1
        assert F8.add(5, 3) == 6
        for a in F4.elements():
            assert F4.add(a, a) == 0

    def test_mul_examples(self):
        assert F4.mul(2, 2) == 3  # x^2 reduces to x+1
        assert F4.mul(2, 3) == 1
        for f in (F4, F8, F16):
            for a in f.elements():
                assert f.mul(1, a) == a

    def test_inv_examples(self):
        assert F4.inv(2) == 3
        assert F4.inv(1) == 1
        # brute-force oracle over the 7 nonzero elements
        want = next(b for b in F8.nonzero() if F8.mul(2, b) == 1)
        assert want == 5
        assert F8.inv(2) == 5

    def test_inv_zero(self):
        with pytest.raises(ZeroDivisionError):
            F4.inv(0)

    def test_sqrt_examples(self):
        squares = {F4.mul(a, a): a for a in F4.elements()}
        assert squares[2] == 3  # 3^2 = 2
        assert F4.sqrt(2) == 3
        for f in (F2, F4, F8):
            assert f.sqrt(0) == 0 and f.sqrt(1) == 1
            for a in f.elements():
                s = f.sqrt(a)
                assert f.mul(s, s) == a

    def test_trace_examples(self):
        assert F4.trace(2, 2) == 1  # 2 + 2^2 = 2 xor 3
        assert F4.trace(0, 2) == 0
        assert F4.trace(1, 2) == 0  # 1 + 1
        with pytest.raises(FieldError):
            F4.trace(1, 3)

    def test_trace_into_prime_subfield_and_linear(self):
        for m in range(1, 9):
            f = GF2m(m)
            for a in f.elements():
                assert f.trace(a, m) in (0, 1)
        for a in F16.elements():
            for b in F16.elements():
                assert F16.trace(a ^ b, 4) == F16.trace(a, 4) ^ F16.trace(b, 4)


class TestFieldAxioms:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_exhaustive_axioms(self, m):
        f = GF2m(m)
        els = list(f.elements())
        for a in els:
            assert f.add(a, a) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
            for b in els:
                assert f.mul(a, b) == f.mul(b, a)
                assert f.add(a, b) == f.add(b, a)
                for c in els:
                    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                    assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)

    @pytest.mark.parametrize("m", [5, 9, 12, 16])
    def test_random_axioms_larger_fields(self, m):
        f = GF2m(m)
        rng = random.Random(2024 + m)
        for _ in range(2500):
            a, b, c = (rng.randrange(f.q) for _ in range(3))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
            assert f.mul(a, b) == f.mul(b, a)
            if a:
                assert f.mul(a, f.inv(a)) == 1

    @pytest.mark.parametrize("m", list(range(1, 9)))
    def test_frobenius_additive_exhaustive(self, m):
        f = GF2m(m)
        sq = [f.mul(a, a) for a in f.elements()]
        for a in f.elements():
            for b in f.elements():
                assert sq[a ^ b] == sq[a] ^ sq[b]

    @pytest.mark.parametrize("m", list(range(1, 9)))
    def test_sqrt_square_identity_exhaustive(self, m):
        f = GF2m(m)
        for a in f.elements():
            assert f.sqrt(f.mul(a, a)) == a
            s = f.sqrt(a)
            assert f.mul(s, s) == a

    @given(st.integers(1, 16), st.data())
    @settings(max_examples=200, deadline=None)
    def test_mul_matches_table_free_pow(self, m, data):
        f = GF2m(m)
        a = data.draw(st.integers(0, f.q - 1))
        e = data.draw(st.integers(0, 2 * f.q))
        acc = 1
        for _ in range(e):
            acc = f.mul(acc, a)
        assert f.pow(a, e) == acc


class TestVectors:
    def test_schur_examples(self):
        v = (2, 3, 1)
        assert schur(F4, (1, 1, 1), v) == v
        assert schur(F4, (2, 3), (2, 2)) == (3, 1)
        assert schur(F4, v, (0, 0, 0)) == (0, 0, 0)
        with pytest.raises(FieldError):
            schur(F4, (1,), (1, 2))

    def test_vec_inverse(self):
        assert vec_inverse(F4, (2, 3)) == (3, 2)
        assert vec_inverse(F4, (1, 1, 1)) == (1, 1, 1)
        with pytest.raises(ZeroDivisionError):
            vec_inverse(F4, (1, 0))

    def test_vec_square(self):
        assert vec_square(F4, (2, 3)) == (3, 2)
        assert vec_square(F4, (1, 1)) == (1, 1)

    def test_vec_square_bijective_on_nonzero(self):
        from itertools import product
        for n in range(1, 5):
            vecs = list(product(F4.nonzero(), repeat=n))
            images = {vec_square(F4, v) for v in vecs}
            assert len(images) == len(vecs) == 3**n


class TestSerialization:
    def test_field_round_trip(self):
        for f in (F2, F4, F8, GF2m(8)):
            assert GF2m.parse(f.serialize()) == f
        assert F4.serialize() == "GF2M m=2 mod=0x7"

    def test_element_hex(self):
        assert element_hex(10) == "a"
        assert parse_element(F16, "a") == 10
        with pytest.raises(FieldError):
            parse_element(F4, "5")
        with pytest.raises(FieldError):
            parse_element(F4, "zz")

    def test_bad_header(self):
        with pytest.raises(FieldError):
            GF2m.parse("GF2M m=2")
        with pytest.raises(FieldError):
            GF2m.parse("NOPE m=2 mod=0x7")
