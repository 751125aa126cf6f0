"""Unit tests for realizable systems, uniform families and near-misses."""

import pytest

from core.exceptions import InvalidInput, SamplingBudgetExhausted
from models.configuration import VectorConfiguration
from models.sign_system import SignSystem
from models.sign_vector import GroundSet
from models.types import MutationKind


def matrix(*rows: list[int]) -> VectorConfiguration:
    return VectorConfiguration.of(list(rows))


class TestFromMatrix:
    """Test cocircuits of integer vector configurations."""

    def test_u23(self, generator_service, u23):
        """Columns (1,0), (0,1), (1,1) give U(2,3)."""
        assert generator_service.from_matrix(matrix([1, 0, 1], [0, 1, 1])) == u23

    def test_identity(self, generator_service):
        """Coordinate vectors give the coordinate cocircuits."""
        system = generator_service.from_matrix(matrix([1, 0], [0, 1]))
        assert system.strings() == ["+0", "0+", "0-", "-0"]

    def test_positive_column_scaling(self, generator_service, u23):
        """Scaling columns by positive integers keeps the system."""
        assert generator_service.from_matrix(matrix([2, 0, 3], [0, 5, 3])) == u23

    def test_parallel_columns(self, generator_service):
        """Parallel columns share every hyperplane."""
        system = generator_service.from_matrix(matrix([1, 0, 1], [0, 1, 0]))
        assert system.strings() == ["+0+", "0+0", "0-0", "-0-"]

    def test_rank_one(self, generator_service):
        """A single row has one cocircuit pair: the column signs."""
        system = generator_service.from_matrix(matrix([1, 2, -1]))
        assert system.strings() == ["++-", "--+"]

    def test_rank_deficient(self, generator_service):
        """The matrix must have full row rank."""
        with pytest.raises(InvalidInput):
            generator_service.from_matrix(matrix([1, 2], [2, 4]))

    def test_zero_column(self):
        """Loops are rejected on construction."""
        with pytest.raises(InvalidInput):
            matrix([1, 0], [0, 0])

    def test_ragged_rows(self):
        """Rows must have equal length."""
        with pytest.raises(InvalidInput):
            matrix([1, 0, 1], [0, 1])


class TestFamilies:
    """Test the uniform families."""

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_u2n_counts(self, generator_service, axiom_service, n):
        """2n cocircuits, each vanishing on one element."""
        system = generator_service.u2n(n)
        assert len(system) == 2 * n
        assert generator_service.is_uniform(system, 2)
        assert axiom_service.check_all(system).passed

    def test_u2n_too_small(self, generator_service):
        """One element cannot carry rank 2."""
        with pytest.raises(InvalidInput):
            generator_service.u2n(1)

    @pytest.mark.parametrize("r,n,count", [(2, 4, 8), (3, 4, 12), (3, 6, 30), (4, 6, 40)])
    def test_cyclic_counts(self, generator_service, r, n, count):
        """2 * C(n, r-1) cocircuits."""
        system = generator_service.cyclic(r, n)
        assert len(system) == count
        assert generator_service.is_uniform(system, r)

    @pytest.mark.parametrize("r,n", [(1, 3), (4, 3), (3, 11)])
    def test_cyclic_bounds(self, generator_service, r, n):
        """2 <= r <= n <= 10."""
        with pytest.raises(InvalidInput):
            generator_service.cyclic(r, n)

    def test_from_spec(self, generator_service):
        """Inline specs for every family."""
        assert len(generator_service.from_spec("u2n:3")) == 6
        assert len(generator_service.from_spec("cyclic:3:4")) == 12
        assert len(generator_service.from_spec("random:4:3", seed=1)) == 6

    @pytest.mark.parametrize("spec", ["bogus", "u2n:x", "cyclic:3", "u2n:3:4"])
    def test_from_spec_invalid(self, generator_service, spec):
        """Unknown families and malformed arguments."""
        with pytest.raises(InvalidInput):
            generator_service.from_spec(spec)


class TestMutate:
    """Test seeded mutations."""

    def test_drop_pair_reaches_negative_system(self, generator_service, u23, negative_system):
        """Some seed drops exactly ±(+-0) from U(2,3)."""
        mutants = [
            generator_service.mutate(u23, MutationKind.DROP_PAIR, seed) for seed in range(50)
        ]
        assert negative_system in mutants
        assert all(len(mutant) == 4 for mutant in mutants)

    @pytest.mark.parametrize("kind", list(MutationKind))
    def test_mutants_stay_symmetric(self, generator_service, axiom_service, u23, kind):
        """Every mutation keeps the system closed under negation."""
        for seed in range(10):
            mutant = generator_service.mutate(u23, kind, seed)
            assert axiom_service.check_c1(mutant).passed

    def test_deterministic(self, generator_service, u23):
        """Same seed, same mutant."""
        first = generator_service.mutate(u23, MutationKind.FLIP_ENTRY, 42)
        second = generator_service.mutate(u23, MutationKind.FLIP_ENTRY, 42)
        assert first == second

    def test_empty_system(self, generator_service):
        """Nothing to drop or flip; adding still works."""
        empty = SignSystem(GroundSet.standard(3))
        with pytest.raises(InvalidInput):
            generator_service.mutate(empty, MutationKind.DROP_PAIR)
        assert len(generator_service.mutate(empty, MutationKind.ADD_RANDOM)) == 2


class TestRandomC0C2:
    """Test rejection sampling of (C0)-(C2) systems."""

    @pytest.mark.parametrize("seed", range(5))
    def test_satisfies_hypothesis(self, generator_service, axiom_service, seed):
        """Accepted systems satisfy (C0)-(C2) with the requested number of pairs."""
        system = generator_service.random_c0c2(5, 4, seed)
        assert len(system) == 8
        assert axiom_service.check_hypothesis(system).passed

    def test_deterministic(self, generator_service):
        """Same seed, same system."""
        assert generator_service.random_c0c2(6, 5, 9) == generator_service.random_c0c2(6, 5, 9)

    def test_zero_and_one_pair(self, generator_service):
        """Degenerate sizes."""
        assert len(generator_service.random_c0c2(3, 0)) == 0
        assert len(generator_service.random_c0c2(3, 1)) == 2

    def test_budget_exhausted(self, generator_service):
        """Two elements carry at most two incomparable supports."""
        with pytest.raises(SamplingBudgetExhausted):
            generator_service.random_c0c2(2, 3, budget=200)

    @pytest.mark.parametrize("n,pairs", [(0, 1), (13, 1), (3, -1), (3, 201)])
    def test_bounds(self, generator_service, n, pairs):
        """Out-of-range arguments are input errors."""
        with pytest.raises(InvalidInput):
            generator_service.random_c0c2(n, pairs)
