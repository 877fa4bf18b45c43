"""Boundary-ideal membership certificates and the finite ring dimension test."""

import pytest

from trdeg.coquand_lombardi import (
    CLCertificate,
    NotFoundUpTo,
    cl_check,
    cl_search,
    cl_to_submonic,
    cl_verify,
    finite_ring_dim_lt,
)
from trdeg.dependence import verify_certificate
from trdeg.errors import ResourceCapExceeded, UnsupportedConfigError
from trdeg.monomials import Monomial
from trdeg.parsing import parse_elem, parse_ring_text
from trdeg.rings import ZZ, ModularRing, PrimeField


def m(*pairs):
    return Monomial(pairs)


class TestSearch:
    def test_mod_12_single(self):
        cert = cl_search(ModularRing(12), (2,), 5)
        assert isinstance(cert, CLCertificate)
        assert cert.exponents == (2,)
        assert cl_verify(cert)

    def test_mod_4_single(self):
        cert = cl_search(ModularRing(4), (2,), 6)
        assert cert.exponents == (2,)

    def test_prime_field_inverts_immediately(self):
        cert = cl_search(PrimeField(7), (5,), 0)
        assert cert.exponents == (0,)
        assert cert.coeffs == (3,)  # 1 = 3 * 5 in GF(7)

    def test_integers_pair(self):
        cert = cl_search(ZZ, (12, 18), 4)
        assert cert.exponents == (0, 2)
        assert cert.coeffs == (27, 0)

    def test_integers_single_never_terminates_in_the_box(self):
        for bound in (0, 5, 20):
            assert cl_search(ZZ, (2,), bound) == NotFoundUpTo(bound)

    def test_box_order_prefers_smaller_totals(self):
        # units first: for a pair of units 1 lies in the degree (0,0) ideal
        cert = cl_search(ZZ, (2, 3), 3)
        assert cert.exponents == (0, 0)

    def test_quotient_ring_pair(self):
        ring = parse_ring_text("Quot(Poly(QQ; x,y); [x*y])")
        x = parse_elem("x", ring)
        y = parse_elem("y", ring)
        cert = cl_search(ring, (x, y), 3)
        assert cert.exponents == (1, 1)
        assert cert.coeffs == (ring.zero(), ring.zero())

    def test_cap(self):
        with pytest.raises(ResourceCapExceeded):
            cl_search(ZZ, (2, 3, 5), 100, cap=1000)

    def test_validation(self):
        with pytest.raises(ValueError):
            cl_search(ZZ, (), 3)
        with pytest.raises(ValueError):
            cl_search(ZZ, (2,), -1)

    def test_unsupported_ring(self):
        ring = parse_ring_text("Poly(QQ; x)")
        with pytest.raises(UnsupportedConfigError):
            cl_search(ring, (parse_elem("x", ring),), 2)


class TestCertificate:
    def test_hand_built_mod_12(self):
        cert = CLCertificate(ModularRing(12), (2,), (2,), (2,))
        assert cl_verify(cert)  # 2^2 = 2 * 2^3 mod 12

    def test_check_reasons(self):
        bad_len = CLCertificate(ZZ, (12, 18), (0,), (27, 0))
        assert cl_check(bad_len) == (
            "exponent and coefficient counts must match the element count"
        )
        negative = CLCertificate(ZZ, (12, 18), (0, -2), (27, 0))
        assert cl_check(negative) == "exponents must be nonnegative"
        wrong = CLCertificate(ModularRing(12), (2,), (2,), (1,))
        assert cl_check(wrong) == (
            "membership identity does not hold for the stated coefficients"
        )

    def test_json_roundtrip(self):
        cert = cl_search(ModularRing(12), (2,), 5)
        text = cert.to_json()
        back = CLCertificate.from_json(text)
        assert cl_verify(back)
        assert back.to_json() == text
        assert '"verified": true' in text

    def test_schema_keys(self):
        data = cl_search(ZZ, (12, 18), 4).to_dict()
        assert set(data) == {"ring", "elements", "exponents", "coeffs", "verified"}


class TestConversion:
    def test_mod_12_hand_built(self):
        cert = CLCertificate(ModularRing(12), (2,), (2,), (2,))
        sub = cl_to_submonic(cert)
        assert dict(sub.poly.terms) == {m((1, 2)): 1, m((1, 3)): 10}
        assert sub.trailing == m((1, 2))
        assert sub.verified and verify_certificate(sub)

    def test_integer_pair_matches_direct_search(self):
        cert = cl_search(ZZ, (12, 18), 4)
        sub = cl_to_submonic(cert)
        assert dict(sub.poly.terms) == {m((2, 2)): 1, m((1, 1)): -27}
        assert sub.trailing == m((2, 2))

    def test_quotient_pair(self):
        ring = parse_ring_text("Quot(Poly(QQ; x,y); [x*y])")
        x = parse_elem("x", ring)
        y = parse_elem("y", ring)
        sub = cl_to_submonic(cl_search(ring, (x, y), 3))
        assert sub.trailing == m((1, 1), (2, 1))
        assert verify_certificate(sub)

    def test_refuses_unverified(self):
        bad = CLCertificate(ModularRing(12), (2,), (2,), (1,))
        with pytest.raises(ValueError):
            cl_to_submonic(bad)

    def test_conversion_is_always_lex_submonic(self):
        ring = ModularRing(8)
        for a in range(8):
            for b in range(8):
                cert = cl_search(ring, (a, b), 8)
                assert isinstance(cert, CLCertificate)
                sub = cl_to_submonic(cert)
                assert verify_certificate(sub)
                assert sub.degree_bound >= sub.poly.total_degree()


class TestFiniteRingDim:
    def test_every_residue_ring_is_zero_dimensional(self):
        for n in (4, 6, 12):
            result = finite_ring_dim_lt(ModularRing(n), 1)
            assert result.holds
            assert len(result.witnesses) == n
            assert result.failing is None
            for tup, cert in result.witnesses:
                assert cert.elements == tup
                assert cl_verify(cert)

    def test_pairs_also_hold(self):
        result = finite_ring_dim_lt(ModularRing(6), 2)
        assert result.holds and len(result.witnesses) == 36

    def test_tuple_cap(self):
        with pytest.raises(ResourceCapExceeded):
            finite_ring_dim_lt(ModularRing(30), 4)

    def test_infinite_ring_rejected(self):
        with pytest.raises(UnsupportedConfigError):
            finite_ring_dim_lt(ZZ, 1)

    def test_arity_validated(self):
        with pytest.raises(ValueError):
            finite_ring_dim_lt(ModularRing(4), 0)

    def test_to_dict_serializes(self):
        import json

        result = finite_ring_dim_lt(ModularRing(4), 1)
        data = result.to_dict()
        assert data["holds"] is True and data["arity"] == 1
        assert json.dumps(data)
