"""Unit tests for sign vectors and sign systems."""

import pytest

from core.exceptions import GroundSetMismatch, InvalidInput, ResourceLimitExceeded
from models.sign_system import SignSystem
from models.sign_vector import GroundSet, Sign, SignVector, compose_seq


def sv(text: str) -> SignVector:
    return SignVector.from_string(text)


class TestGroundSet:
    """Test ground-set validation."""

    def test_standard_labels(self):
        """Default labels are e0..e{n-1}."""
        assert GroundSet.standard(3).labels == ("e0", "e1", "e2")

    def test_duplicate_labels_rejected(self):
        """Labels must be pairwise distinct."""
        with pytest.raises(InvalidInput):
            GroundSet(("a", "b", "a"))

    def test_empty_ground_rejected(self):
        """A ground set has at least one element."""
        with pytest.raises(InvalidInput):
            GroundSet(())

    def test_oversized_ground_is_resource_error(self):
        """More than 64 elements do not fit one machine word per sign part."""
        with pytest.raises(ResourceLimitExceeded):
            GroundSet.standard(65)

    def test_index_of_unknown_label(self):
        """Unknown labels are input errors."""
        with pytest.raises(InvalidInput):
            GroundSet.standard(2).index("x")


class TestSupports:
    """Test support and zero-support."""

    @pytest.mark.parametrize(
        "text,support,zeros",
        [("0++", {1, 2}, {0}), ("000", set(), {0, 1, 2}), ("+-0", {0, 1}, {2})],
    )
    def test_support_and_zero_support(self, text, support, zeros):
        """Support and zero-support partition the ground set."""
        vector = sv(text)
        assert vector.support() == support
        assert vector.zero_support() == zeros

    def test_signs_round_trip(self):
        """Indexing and the string form agree."""
        vector = sv("+0-")
        assert vector.signs == (Sign.PLUS, Sign.ZERO, Sign.MINUS)
        assert str(vector) == "+0-"

    def test_invalid_character(self):
        """Only '+', '0' and '-' are sign characters."""
        with pytest.raises(InvalidInput):
            sv("+x0")

    def test_overlapping_parts_rejected(self):
        """Positive and negative parts are disjoint."""
        with pytest.raises(InvalidInput):
            SignVector(GroundSet.standard(2), 0b01, 0b01)


class TestNegationAndSeparator:
    """Test negation and separators."""

    @pytest.mark.parametrize("text,negated", [("0++", "0--"), ("000", "000"), ("+-0", "-+0")])
    def test_negate(self, text, negated):
        """Negation swaps the parts and is an involution."""
        assert str(-sv(text)) == negated
        assert -(-sv(text)) == sv(text)

    def test_separator_examples(self):
        """Elements with strictly opposite signs."""
        assert sv("0++").separator(sv("+-0")) == {1}
        assert sv("0++").separator(sv("0++")) == set()
        assert sv("0++").separator(sv("0--")) == {1, 2}

    def test_separator_symmetric_and_negation_invariant(self):
        """S(X, Y) = S(Y, X) = S(-X, -Y)."""
        x, y = sv("+-0+"), sv("-0++")
        assert x.separator(y) == y.separator(x) == (-x).separator(-y)

    def test_mismatched_grounds(self):
        """Combining vectors on different ground sets is an error."""
        other = SignVector.from_string("0+", GroundSet(("a", "b")))
        with pytest.raises(GroundSetMismatch):
            sv("0+").separator(other)


class TestComposition:
    """Test composition and the conformal order."""

    def test_compose_examples(self):
        """First nonzero sign wins."""
        assert str(sv("0++").compose(sv("+-0"))) == "+++"
        assert str(sv("+-0").compose(sv("0++"))) == "+-+"
        assert sv("000").compose(sv("+-0")) == sv("+-0")

    def test_compose_seq(self):
        """Left fold; the empty composition is the zero vector."""
        ground = GroundSet.standard(3)
        assert str(compose_seq([], ground)) == "000"
        assert str(compose_seq([sv("0++")], ground)) == "0++"
        assert str(compose_seq([sv("0++"), sv("+-0"), sv("-0-")], ground)) == "+++"

    def test_compose_support_is_union(self):
        """support(X∘Y) = support(X) ∪ support(Y)."""
        x, y = sv("+0-0"), sv("0+-+")
        assert x.compose(y).support() == x.support() | y.support()

    def test_compose_associative_and_idempotent(self):
        """Composition is associative and idempotent."""
        x, y, z = sv("+0-0"), sv("0+-+"), sv("-+00")
        assert x.compose(y).compose(z) == x.compose(y.compose(z))
        assert x.compose(x) == x

    def test_leq_examples(self):
        """Y ≤ X iff Y conforms to X."""
        assert sv("0+0").leq(sv("0++"))
        assert not sv("0-0").leq(sv("0++"))
        assert sv("000").leq(sv("+-0"))

    def test_leq_implies_absorption(self):
        """Y ≤ X implies X∘Y = X."""
        x, y = sv("+-+"), sv("+00")
        assert y.leq(x)
        assert x.compose(y) == x


class TestSignSystem:
    """Test canonical sign systems."""

    def test_canonical_order(self):
        """Members sort lexicographically with + < 0 < -."""
        system = SignSystem.from_strings(["0++", "0--", "+0+", "-0-", "+-0", "-+0"])
        assert system.strings() == ["+0+", "+-0", "0++", "0--", "-+0", "-0-"]

    def test_duplicates_removed(self):
        """Duplicate members collapse."""
        system = SignSystem.from_strings(["0+", "0+", "+0"])
        assert len(system) == 2

    def test_order_independent_of_input(self):
        """Reordered input gives the identical system."""
        a = SignSystem.from_strings(["0++", "+-0", "-0-"])
        b = SignSystem.from_strings(["-0-", "0++", "+-0"])
        assert a == b
        assert a.strings() == b.strings()

    def test_membership_and_negation(self):
        """Negating a system negates every member."""
        system = SignSystem.from_strings(["0++", "+-0"])
        assert SignVector.from_string("0++", system.ground) in system
        assert system.negated().strings() == ["0--", "-+0"]

    def test_empty_needs_ground(self):
        """The ground set of an empty system cannot be inferred."""
        with pytest.raises(InvalidInput):
            SignSystem.from_strings([])
        assert len(SignSystem(GroundSet.standard(3))) == 0
