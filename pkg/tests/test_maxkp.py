"""Maximum knapsack: exact table vs oracle, greedy ratio, oversized items."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

import knapscale.maxkp as maxkp
from knapscale import (
    DomainError,
    InstanceTooLarge,
    approx_half_max,
    brute_force_max,
    exact_dp_max,
    fptas_max,
    max_knapsack,
)

from conftest import max_instances, random_pairs


def feasible(inst, selected):
    return inst.structure.is_feasible(selected)


class TestExactDP:
    def test_three_item_example(self):
        report = exact_dp_max(max_knapsack([6, 5, 4], [5, 4, 3], 7))
        assert report.original_value == 9
        assert report.selected == frozenset([1, 2])

    def test_zero_capacity(self):
        report = exact_dp_max(max_knapsack([6, 5], [5, 4], 0))
        assert report.original_value == 0
        assert report.selected == frozenset()

    def test_single_exact_fit(self):
        report = exact_dp_max(max_knapsack([10], [3], 3))
        assert report.original_value == 10
        assert report.selected == frozenset([0])

    def test_cell_count_contract(self):
        assert exact_dp_max(max_knapsack([6, 5, 4], [5, 4, 3], 7)).dp_cells == 3 * 16
        assert exact_dp_max(max_knapsack([], [], 0)).dp_cells == 0

    def test_backtracking_prefers_excluding_later_items(self):
        report = exact_dp_max(max_knapsack([5, 5], [2, 2], 2))
        assert report.selected == frozenset([0])

    @given(inst=max_instances())
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_force(self, inst):
        dp = exact_dp_max(inst)
        oracle = brute_force_max(inst)
        assert dp.original_value == oracle.original_value
        assert feasible(inst, dp.selected)
        assert inst.value_of(dp.selected) == dp.original_value

    @given(inst=max_instances(max_n=7, weight_max=25, size_max=9))
    @settings(max_examples=60, deadline=None)
    def test_numpy_path_matches_python_path(self, inst):
        reference = exact_dp_max(inst)
        saved = maxkp._SMALL_TABLE_CELLS
        maxkp._SMALL_TABLE_CELLS = 0
        try:
            forced = exact_dp_max(inst)
        finally:
            maxkp._SMALL_TABLE_CELLS = saved
        assert forced.original_value == reference.original_value
        assert feasible(inst, forced.selected)
        assert inst.value_of(forced.selected) == forced.original_value

    def test_numpy_path_on_midsize_instance(self, rng):
        weights, sizes = random_pairs(rng, 40, 5000, 20)
        capacity = sum(sizes) // 2
        inst = max_knapsack(weights, sizes, capacity)
        report = exact_dp_max(inst)
        assert feasible(inst, report.selected)
        assert report.original_value >= approx_half_max(inst).original_value


class TestApproxHalf:
    def test_hand_traced_selection(self):
        report = approx_half_max(max_knapsack([6, 5, 4], [5, 4, 3], 7))
        assert report.selected == frozenset([1, 2])
        assert report.original_value == 9
        assert report.guarantee == Fraction(1, 2)

    def test_zero_capacity(self):
        report = approx_half_max(max_knapsack([6, 5], [5, 4], 0))
        assert report.original_value == 0
        assert report.selected == frozenset()

    def test_single_heavy_item_beats_greedy_prefix(self):
        # density favors the small items, but the single big item is worth more
        inst = max_knapsack([10, 10, 18], [2, 2, 5], 5)
        report = approx_half_max(inst)
        assert report.original_value == 20

    def test_density_tie_broken_by_smaller_index(self):
        inst = max_knapsack([4, 4], [2, 2], 2)
        report = approx_half_max(inst)
        assert report.selected == frozenset([0])

    @given(inst=max_instances())
    @settings(max_examples=120, deadline=None)
    def test_ratio_between_half_and_one(self, inst):
        lb = approx_half_max(inst)
        opt = brute_force_max(inst)
        assert feasible(inst, lb.selected)
        assert 2 * lb.original_value >= opt.original_value >= lb.original_value


class TestBruteForce:
    def test_three_item_example(self):
        assert brute_force_max(max_knapsack([6, 5, 4], [5, 4, 3], 7)).original_value == 9

    def test_empty_instance(self):
        report = brute_force_max(max_knapsack([], [], 0))
        assert report.original_value == 0

    def test_nothing_fits(self):
        report = brute_force_max(max_knapsack([5, 6], [9, 9], 3))
        assert report.original_value == 0
        assert report.selected == frozenset()

    def test_size_guard(self):
        with pytest.raises(InstanceTooLarge):
            brute_force_max(max_knapsack([1] * 26, [1] * 26, 1))


class TestFptasMax:
    def test_half_epsilon_on_three_item_example(self):
        inst = max_knapsack([6, 5, 4], [5, 4, 3], 7)
        report = fptas_max(inst, Fraction(1, 2))
        assert report.original_value >= 5  # at least (1 - eps) * 9, integral
        assert feasible(inst, report.selected)

    def test_tight_epsilon_forces_optimum(self):
        inst = max_knapsack([6, 5, 4], [5, 4, 3], 7)
        assert fptas_max(inst, Fraction(1, 100)).original_value == 9

    def test_zero_capacity(self):
        report = fptas_max(max_knapsack([6, 5], [5, 4], 0), Fraction(1, 2))
        assert report.original_value == 0
        assert report.selected == frozenset()

    def test_epsilon_at_least_one_rejected(self):
        inst = max_knapsack([6, 5], [5, 4], 7)
        with pytest.raises(DomainError):
            fptas_max(inst, Fraction(1))
        with pytest.raises(DomainError):
            fptas_max(inst, Fraction(3, 2))

    def test_oversized_items_never_feasible(self, rng):
        # an item wider than the capacity appears in no feasible subset,
        # and the scheme never returns it
        for _ in range(40):
            n = rng.randint(2, 9)
            weights, sizes = random_pairs(rng, n, 60, 12)
            capacity = rng.randint(0, sum(sizes) // 2)
            wide = rng.randrange(n)
            sizes[wide] = capacity + 1 + rng.randint(0, 5)
            weights[wide] = 10_000
            inst = max_knapsack(weights, sizes, capacity)
            report = fptas_max(inst, Fraction(1, 2))
            assert wide not in report.selected
            assert feasible(inst, report.selected)

    def test_seeded_sweep_respects_guarantee(self):
        rng = random.Random(4321)
        for _ in range(150):
            n = rng.randint(1, 12)
            weights, sizes = random_pairs(rng, n, 100, 100)
            capacity = rng.randint(0, sum(sizes))
            inst = max_knapsack(weights, sizes, capacity)
            opt = brute_force_max(inst).original_value
            for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)):
                report = fptas_max(inst, eps)
                assert feasible(inst, report.selected)
                assert report.original_value >= (1 - eps) * opt
