"""Tests for group parameters, elements and randomness."""

import pytest

from src.errors import (
    BadGenerator,
    BadLength,
    GeneratorsEqual,
    GroupError,
    IdentityElement,
    InvalidParams,
    NotInSubgroup,
    NotPrime,
    OrderMismatch,
    OutOfRange,
    ParamsMismatch,
    RngFailure,
    UnknownParamSet,
)
from src.group import (
    BUILTIN_PARAM_SETS,
    GroupElement,
    Scalar,
    ScriptedSource,
    decode_element,
    derive_h,
    derive_h_value,
    encode_element,
    generator,
    get_param_set,
    identity,
    invert,
    is_probable_prime,
    mul,
    power,
    random_scalar,
    seeded_source,
    validate_element,
    validate_params,
)


class TestValidateParams:
    """Tests for parameter validation."""

    def test_toy_set_is_valid(self, toy):
        """Test the toy set passes and keeps its values."""
        assert (toy.p, toy.q, toy.g, toy.h) == (23, 11, 2, 4)
        assert toy.is_toy
        assert toy.width == 1
        assert toy.cofactor == 2

    def test_modp_set_is_valid(self, modp):
        """Test the 2048-bit set passes validation."""
        assert modp.p.bit_length() == 2048
        assert modp.q == (modp.p - 1) // 2
        assert modp.width == 256
        assert not modp.is_toy
        assert pow(modp.h, modp.q, modp.p) == 1
        assert modp.h == derive_h_value(4, modp.p, modp.q)

    def test_equal_generators(self):
        """Test g == h is rejected."""
        with pytest.raises(InvalidParams) as exc:
            validate_params({"p": 23, "q": 11, "g": 2, "h": 2, "name": "bad"})
        assert any(isinstance(v, GeneratorsEqual) for v in exc.value.violations)

    def test_generator_outside_subgroup(self):
        """Test a non-subgroup h is rejected."""
        with pytest.raises(InvalidParams) as exc:
            validate_params({"p": 23, "q": 11, "g": 2, "h": 5, "name": "bad"})
        assert [type(v) for v in exc.value.violations] == [BadGenerator]
        assert exc.value.violations[0].which == "h"

    def test_identity_generator(self):
        """Test g = 1 is rejected."""
        with pytest.raises(InvalidParams) as exc:
            validate_params({"p": 23, "q": 11, "g": 1, "h": 4, "name": "bad"})
        assert any(isinstance(v, BadGenerator) and v.which == "g" for v in exc.value.violations)

    def test_every_violation_listed(self):
        """Test several broken invariants are all reported."""
        with pytest.raises(InvalidParams) as exc:
            validate_params({"p": 24, "q": 9, "g": 2, "h": 2, "name": "bad"})
        kinds = {type(v) for v in exc.value.violations}
        assert NotPrime in kinds
        assert OrderMismatch in kinds
        assert GeneratorsEqual in kinds
        assert {v.which for v in exc.value.violations if isinstance(v, NotPrime)} == {"p", "q"}

    def test_base_defaults_to_g(self):
        """Test the negotiation base defaults to g."""
        params = validate_params({"p": 23, "q": 11, "g": 2, "h": 4, "name": "t"})
        assert params.gb == 2

    def test_unknown_set(self):
        """Test looking up an unknown set."""
        with pytest.raises(UnknownParamSet):
            get_param_set("modp1024")

    def test_builtin_sets_are_lazy(self, mocker):
        """Test resolving toy23 never builds the 2048-bit set."""
        build_modp = mocker.Mock()
        mocker.patch.dict(BUILTIN_PARAM_SETS, {"modp2048": build_modp})
        get_param_set.cache_clear()
        assert get_param_set("toy23").name == "toy23"
        build_modp.assert_not_called()

    def test_primality(self):
        """Test the probabilistic primality check."""
        assert is_probable_prime(23)
        assert not is_probable_prime(21)
        assert not is_probable_prime(561)  # Carmichael


class TestElements:
    """Tests for element arithmetic."""

    def test_power(self, toy):
        """Test modular exponentiation."""
        assert power(generator(toy), Scalar(4, toy.q)).value == 16
        assert power(generator(toy), Scalar(7, toy.q)).value == 13

    def test_power_zero_is_identity(self, toy):
        """Test e = 0 returns the identity."""
        assert power(generator(toy), Scalar(0, toy.q)) == identity(toy)

    def test_power_foreign_scalar(self, toy):
        """Test an exponent for another q is refused."""
        with pytest.raises(ParamsMismatch):
            power(generator(toy), Scalar(1, 13))

    def test_mul(self, toy):
        """Test multiplication."""
        assert mul(GroupElement(16, toy), GroupElement(18, toy)).value == 12

    def test_invert(self, toy):
        """Test modular inversion."""
        assert invert(GroupElement(2, toy)).value == 12
        assert invert(GroupElement(18, toy)).value == 9

    def test_element_range(self, toy):
        """Test out-of-range element construction."""
        with pytest.raises(OutOfRange):
            GroupElement(0, toy)
        with pytest.raises(OutOfRange):
            GroupElement(23, toy)

    def test_scalar_range(self):
        """Test out-of-range scalars."""
        with pytest.raises(OutOfRange):
            Scalar(11, 11)
        assert Scalar(3, 11).negate().value == 8
        assert "3" not in repr(Scalar(3, 11))


class TestValidateElement:
    """Tests for subgroup membership checks."""

    def test_accepts_subgroup_member(self, toy):
        """Test every nonidentity subgroup member is accepted."""
        for value in (2, 4, 8, 16, 9, 18, 13, 3, 6, 12):
            assert validate_element(value, toy).value == value

    def test_rejects_identity(self, toy):
        """Test the identity is rejected."""
        with pytest.raises(IdentityElement):
            validate_element(1, toy)

    @pytest.mark.parametrize("value", [0, 23, 24, -1])
    def test_rejects_out_of_range(self, toy, value):
        """Test values outside (1, p) are rejected."""
        with pytest.raises(OutOfRange):
            validate_element(value, toy)

    @pytest.mark.parametrize("value", [5, 7, 22])
    def test_rejects_non_member(self, toy, value):
        """Test values outside the order-q subgroup are rejected."""
        with pytest.raises(NotInSubgroup):
            validate_element(value, toy)


class TestEncoding:
    """Tests for fixed-width element encoding."""

    def test_encode_toy(self, toy):
        """Test one-byte encoding."""
        assert encode_element(GroupElement(12, toy)) == b"\x0c"

    def test_encode_modp_width(self, modp):
        """Test elements are padded to 256 bytes."""
        encoded = encode_element(generator(modp))
        assert len(encoded) == 256
        assert encoded[-1] == 4
        assert encoded[:-1] == bytes(255)

    def test_decode(self, toy):
        """Test decoding validates the element."""
        assert decode_element(b"\x0d", toy).value == 13
        with pytest.raises(NotInSubgroup):
            decode_element(b"\x05", toy)

    def test_decode_bad_length(self, toy):
        """Test a wrong-length encoding."""
        with pytest.raises(BadLength):
            decode_element(b"\x00\x0d", toy)


class TestDeriveH:
    """Tests for the second-generator derivation."""

    def test_toy_derivation(self, toy):
        """Test the derived h is a usable generator."""
        h = derive_h(generator(toy), toy.p, toy.q)
        assert h.value not in (1, toy.g)
        assert pow(h.value, toy.q, toy.p) == 1

    def test_deterministic(self, toy):
        """Test the derivation is reproducible."""
        assert derive_h_value(2, 23, 11) == derive_h_value(2, 23, 11)

    def test_order_mismatch(self):
        """Test q must divide p - 1."""
        with pytest.raises(OrderMismatch):
            derive_h_value(2, 23, 7)

    def test_params_mismatch(self, toy):
        """Test p and q must match g's parameters."""
        with pytest.raises(ParamsMismatch):
            derive_h(generator(toy), 47, 23)


class TestRandomScalar:
    """Tests for scalar sampling."""

    def test_rejection_sampling(self):
        """Test 0 and values >= q are rejected."""
        assert random_scalar(ScriptedSource([0, 11, 15, 5]), 11).value == 5

    def test_always_rejecting_source(self):
        """Test a source that never yields a usable value."""
        with pytest.raises(RngFailure):
            random_scalar(ScriptedSource([0] * 1024), 11)

    def test_exhausted_source(self):
        """Test a scripted source running dry."""
        with pytest.raises(RngFailure):
            random_scalar(ScriptedSource([]), 11)

    def test_failing_source(self, mocker):
        """Test source exceptions become RngFailure."""
        source = mocker.Mock()
        source.getrandbits.side_effect = OSError("entropy unavailable")
        with pytest.raises(RngFailure):
            random_scalar(source, 11)

    def test_range(self):
        """Test draws stay in [1, q-1]."""
        rng = seeded_source(0)
        draws = {random_scalar(rng, 11).value for _ in range(500)}
        assert draws == set(range(1, 11))

    def test_uniformity(self):
        """Test 10^4 draws over [1, 10] pass a chi-square check."""
        rng = seeded_source(0)
        draws = 10_000
        counts = dict.fromkeys(range(1, 11), 0)
        for _ in range(draws):
            counts[random_scalar(rng, 11).value] += 1
        expected = draws / 10
        chi_square = sum((n - expected) ** 2 / expected for n in counts.values())
        # 9 degrees of freedom; 27.88 is the 0.999 quantile
        assert chi_square < 27.88


class TestToyGroupExhaustive:
    """Exhaustive checks over every element and exponent of toy23."""

    def test_subgroup_size(self, toy):
        """Test exactly 11 residues satisfy x^q = 1 and 10 of them validate."""
        members = {x for x in range(1, toy.p) if pow(x, toy.q, toy.p) == 1}
        assert len(members) == 11
        accepted = set()
        for x in range(1, toy.p):
            try:
                accepted.add(validate_element(x, toy).value)
            except GroupError:
                pass
        assert accepted == members - {1}

    def test_power_of_power(self, toy):
        """Test (g^a)^b = g^(a*b mod q) for a, b in [0, 10]."""
        g = generator(toy)
        for a in range(11):
            for b in range(11):
                lhs = power(power(g, Scalar(a, toy.q)), Scalar(b, toy.q))
                assert lhs == power(g, Scalar(a * b % toy.q, toy.q)), (a, b)

    def test_inverse_of_every_member(self, toy):
        """Test x * invert(x) = 1 for every subgroup element."""
        for x in range(1, toy.p):
            if pow(x, toy.q, toy.p) != 1:
                continue
            element = GroupElement(x, toy)
            assert mul(element, invert(element)) == identity(toy), x

    def test_decode_every_byte(self, toy):
        """Test decode accepts exactly the 10 valid elements and round-trips them."""
        valid = {2, 4, 8, 16, 9, 18, 13, 3, 6, 12}
        accepted = set()
        for byte in range(256):
            data = bytes([byte])
            try:
                element = decode_element(data, toy)
            except GroupError:
                continue
            assert encode_element(element) == data
            accepted.add(element.value)
        assert accepted == valid
