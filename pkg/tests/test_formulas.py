"""
Tests for the closed-form coefficient formulas and turn sums
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import binomial as sympy_binomial

from closedform import formulas
from closedform.formulas import (StatRequest, TurnKind, avg_max, avg_min, avg_osc, binomial,
                                 down_coeff, exact_div, fuss_catalan, max_sum, min_sum,
                                 osc_sum, turn_average, turn_sum, uhat_coeff)
from errors import ExactnessError, ParameterError
from oracle.enumerator import oracle_sum, oracle_sums, path_count
from tests.strategies import turn_queries


class TestBinomial:

    @given(n=st.integers(min_value=0, max_value=80), r=st.integers(min_value=-3, max_value=85))
    @settings(max_examples=200)
    @pytest.mark.property_based
    def test_matches_sympy(self, n, r):
        expected = int(sympy_binomial(n, r)) if 0 <= r <= n else 0
        assert binomial(n, r) == expected

    def test_out_of_range(self):
        assert binomial(4, 5) == 0
        assert binomial(4, -1) == 0
        assert binomial(0, 0) == 1

    def test_exact_div(self):
        assert exact_div(12, 4) == 3
        with pytest.raises(ExactnessError):
            exact_div(7, 2)


class TestCoefficientFamilies:

    @pytest.mark.parametrize('k, n_up, expected', [(1, 3, 5), (2, 2, 3), (1, 0, 1), (3, 0, 1), (2, 8, 43263)])
    def test_fuss_catalan(self, k, n_up, expected):
        assert fuss_catalan(k, n_up) == expected

    @pytest.mark.parametrize('k, lam, expected', [(1, 0, 1), (2, 1, 3), (1, 2, 2)])
    def test_down_coeff(self, k, lam, expected):
        assert down_coeff(k, lam) == expected

    @given(k=st.integers(min_value=1, max_value=6), lam=st.integers(min_value=0, max_value=30))
    @settings(max_examples=100)
    @pytest.mark.property_based
    def test_two_fuss_catalan_forms_agree(self, k, lam):
        assert uhat_coeff(k, lam) == fuss_catalan(k, lam)
        assert fuss_catalan(k, lam) == int(sympy_binomial((k + 1) * lam, lam)) // (k * lam + 1)

    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_counts_paths(self, k):
        for n_up in range(7):
            assert fuss_catalan(k, n_up) == path_count(k, n_up)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            fuss_catalan(0, 3)
        with pytest.raises(ParameterError):
            fuss_catalan(1, -1)
        with pytest.raises(ParameterError):
            uhat_coeff(1, -1)
        with pytest.raises(ParameterError):
            down_coeff(2, -2)


class TestStatRequest:

    @pytest.mark.parametrize('k, n_up, s', [(0, 2, 1), (1, -1, 1), (1, 2, 0), (1, 2, 3), (1, 0, 1)])
    def test_invalid(self, k, n_up, s):
        with pytest.raises(ParameterError):
            StatRequest(k, n_up, s)

    def test_non_integers(self):
        with pytest.raises(ParameterError):
            StatRequest(True, 2, 1)
        with pytest.raises(ParameterError):
            StatRequest(1, 2.0, 1)

    def test_length(self):
        assert StatRequest(2, 3, 1).length == 9


class TestTurnSums:

    @pytest.mark.parametrize('func, k, n_up, s, expected', [
        (min_sum, 1, 2, 1, 1),
        (min_sum, 2, 2, 1, 3),
        (min_sum, 1, 2, 2, 0),
        (max_sum, 1, 2, 1, 2),
        (max_sum, 2, 2, 2, 9),
        (max_sum, 1, 3, 2, 8),
        (osc_sum, 1, 2, 1, 1),
        (osc_sum, 2, 2, 1, 3),
        (osc_sum, 1, 3, 1, 2),
    ])
    def test_known_sums(self, func, k, n_up, s, expected):
        assert func(StatRequest(k, n_up, s)) == expected

    def test_averages(self):
        assert avg_max(StatRequest(1, 2, 1)) == 1
        assert avg_min(StatRequest(2, 2, 1)) == 1
        assert avg_osc(StatRequest(1, 3, 1)) == Fraction(2, 5)
        assert turn_average(StatRequest(1, 3, 1), 'osc') == Fraction(2, 5)

    def test_turn_kind_parsing(self):
        assert TurnKind.parse('min') is TurnKind.MIN
        assert TurnKind.parse(TurnKind.OSC) is TurnKind.OSC
        with pytest.raises(ParameterError):
            TurnKind.parse('median')

    @given(query=turn_queries())
    @settings(max_examples=60, deadline=None)
    @pytest.mark.property_based
    def test_osc_is_max_minus_min(self, query):
        req = StatRequest(*query)
        assert osc_sum(req) == max_sum(req) - min_sum(req)

    @given(query=turn_queries(k_max=5, n_max=12))
    @settings(max_examples=60, deadline=None)
    @pytest.mark.property_based
    def test_boundary_turns(self, query):
        k, n_up, _ = query
        assert max_sum(StatRequest(k, n_up, 1)) == k * fuss_catalan(k, n_up)
        assert min_sum(StatRequest(k, n_up, n_up)) == 0

    @given(query=turn_queries(k_max=3, n_max=5))
    @settings(max_examples=40, deadline=None)
    @pytest.mark.property_based
    def test_matches_enumeration(self, query):
        k, n_up, s = query
        totals = oracle_sums(k, n_up)
        for kind in TurnKind:
            assert turn_sum(StatRequest(k, n_up, s), kind) == totals.total(kind, s)

    def test_osc_normalizes_by_the_turn_index(self):
        """Using 1/(kN+1) in place of 1/(ki+1) does not reproduce enumeration"""
        def mutated_osc(k, n_up, s):
            return sum(
                Fraction(binomial((k + 1) * i, i), k * n_up + 1) * down_coeff(k, n_up - i)
                for i in range(1, s + 1)
            )

        k, n_up, s = 1, 3, 1
        assert osc_sum(StatRequest(k, n_up, s)) == oracle_sum(k, n_up, s, 'osc') == 2
        assert mutated_osc(k, n_up, s) != oracle_sum(k, n_up, s, 'osc')

    def test_turn_sum_dispatches_at_call_time(self, monkeypatch):
        monkeypatch.setattr(formulas, 'max_sum', lambda req: -1)
        assert turn_sum(StatRequest(1, 2, 1), 'max') == -1
