"""
Tests for path enumeration, turn profiles and suffix counts
"""
import pytest
from hypothesis import given, settings, strategies as st

from closedform.formulas import fuss_catalan
from config import ORACLE_BOUND_ENV
from errors import OracleBoundError, ParameterError
from oracle.enumerator import (DyckPath, Step, TurnProfile, check_work_bound, enumerate_paths,
                               oracle_sum, oracle_sums, path_count, split_prefixes,
                               suffix_count, turn_profile)


class TestDyckPath:

    def test_from_string(self):
        path = DyckPath.from_string('uudd', 1)
        assert str(path) == 'UUDD'
        assert path.up_count == 2
        assert path.length == 4
        assert path.levels() == [0, 1, 2, 1, 0]

    @pytest.mark.parametrize('text, k', [('DU', 1), ('UD', 2), ('UUD', 1), ('UXD', 1)])
    def test_invalid_paths(self, text, k):
        with pytest.raises(ParameterError):
            DyckPath.from_string(text, k)

    def test_k_must_be_positive(self):
        with pytest.raises(ParameterError):
            DyckPath(0, ())

    def test_steps_are_normalized(self):
        assert DyckPath(1, ('U', 'D')).steps == (Step.UP, Step.DOWN)


class TestEnumeration:

    def test_k1_n2(self):
        assert [str(p) for p in enumerate_paths(1, 2)] == ['UUDD', 'UDUD']

    def test_k2_n2(self):
        assert [str(p) for p in enumerate_paths(2, 2)] == ['UUDDDD', 'UDUDDD', 'UDDUDD']

    def test_empty_path(self):
        paths = list(enumerate_paths(3, 0))
        assert len(paths) == 1
        assert paths[0].steps == ()

    def test_counts_and_uniqueness(self, small_instances):
        for k, n_up in small_instances:
            paths = [str(p) for p in enumerate_paths(k, n_up)]
            assert len(paths) == fuss_catalan(k, n_up)
            assert len(set(paths)) == len(paths)
            assert paths == sorted(paths, key=lambda p: p.replace('U', '0').replace('D', '1'))

    def test_prefix_restricts_the_stream(self):
        assert [str(p) for p in enumerate_paths(1, 3, 'UD')] == ['UDUUDD', 'UDUDUD']
        with pytest.raises(ParameterError):
            list(enumerate_paths(1, 2, 'D'))

    @pytest.mark.parametrize('k, n_up, depth', [(1, 5, 3), (2, 4, 4), (3, 3, 2), (1, 2, 10)])
    def test_split_prefixes_partition_the_stream(self, k, n_up, depth):
        whole = [str(p) for p in enumerate_paths(k, n_up)]
        parts = [str(p) for prefix in split_prefixes(k, n_up, depth) for p in enumerate_paths(k, n_up, prefix)]
        assert parts == whole

    def test_negative_n(self):
        with pytest.raises(ParameterError):
            list(enumerate_paths(1, -1))


class TestTurnProfile:

    def test_k1_path(self):
        profile = turn_profile(DyckPath.from_string('UUDD', 1))
        assert profile.max_levels == (1, 2)
        assert profile.min_levels == (1, 0)
        assert profile.wavy_lengths == (0, 2)

    def test_k2_path(self):
        profile = turn_profile(DyckPath.from_string('UDDUDD', 2))
        assert profile.max_levels == (2, 2)
        assert profile.min_levels == (0, 0)

    def test_empty_path(self):
        assert turn_profile(DyckPath(1, ())) == TurnProfile()

    def test_violations(self):
        broken = TurnProfile((1, 4), (2, 1))
        problems = broken.violations(1)
        assert any('negative length' in p for p in problems)
        assert any('does not start' in p for p in problems)
        assert any('not 0' in p for p in problems)
        assert TurnProfile((1,), ()).violations(1)

    @given(k=st.integers(min_value=1, max_value=3), n_up=st.integers(min_value=1, max_value=5))
    @settings(max_examples=25, deadline=None)
    @pytest.mark.property_based
    def test_every_profile_is_well_formed(self, k, n_up):
        for path in enumerate_paths(k, n_up):
            profile = turn_profile(path)
            assert len(profile.max_levels) == n_up
            assert profile.violations(k) == []


class TestOracleSums:

    def test_k1_n3(self):
        totals = oracle_sums(1, 3)
        assert totals.count == 5
        assert totals.osc_sums[0] == 2
        assert totals.violations == []
        assert totals.total('max', 2) == 8

    def test_total_range(self):
        with pytest.raises(ParameterError):
            oracle_sums(1, 2).total('min', 3)

    def test_oracle_sum_validates(self):
        assert oracle_sum(2, 2, 1, 'min') == 3
        with pytest.raises(ParameterError):
            oracle_sum(1, 2, 0, 'min')


class TestSuffixCount:

    @pytest.mark.parametrize('k, h, length, must_start_up, expected', [
        (1, 1, 1, False, 1),
        (1, 1, 3, True, 1),
        (2, 1, 4, True, 1),
        (1, 1, 3, False, 2),
        (1, 0, 0, False, 1),
        (1, 0, 0, True, 0),
        (1, 2, 1, False, 0),
    ])
    def test_known_counts(self, k, h, length, must_start_up, expected):
        assert suffix_count(k, h, length, must_start_up) == expected

    def test_path_count(self):
        assert path_count(2, 8) == 43263
        assert path_count(1, 0) == 1

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            suffix_count(1, -1, 3, False)
        with pytest.raises(ParameterError):
            suffix_count(0, 1, 3, False)


class TestWorkBound:

    def test_within_bound(self):
        assert check_work_bound(1, 3, bound=5) == 5

    def test_above_bound(self):
        with pytest.raises(OracleBoundError) as info:
            check_work_bound(1, 4, bound=5)
        assert info.value.count == 14
        assert info.value.bound == 5

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv(ORACLE_BOUND_ENV, '10')
        with pytest.raises(OracleBoundError):
            check_work_bound(1, 4)
        monkeypatch.setenv(ORACLE_BOUND_ENV, 'lots')
        assert check_work_bound(1, 4) == 14
