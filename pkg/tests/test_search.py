import pytest

from girthmax.btu import IncompatiblePermutations
from girthmax.girth import girth_bfs, girth_oracle
from girthmax.perm import Permutation, ScalingStrategy, one_based
from girthmax.search import (
    NoSquareFactor,
    NoValidShift,
    SearchConfig,
    candidate_space,
    construct_candidate,
    factor_for_search,
    search_r3,
    valid_shifts,
)


class TestValidShifts:
    def test_m25(self):
        assert valid_shifts(25, 5) == [6, 7, 8, 9, 11, 12, 13, 14, 16, 17, 18, 19]

    def test_m9(self):
        assert valid_shifts(9, 3) == [4, 5]

    def test_m6_boundary_exclusion(self):
        assert valid_shifts(6, 1) == []

    def test_unrestricted(self):
        assert valid_shifts(6, 0) == [1, 5]

    def test_precondition(self):
        with pytest.raises(ValueError):
            valid_shifts(6, 3)


class TestFactorForSearch:
    def test_perfect_square(self):
        assert factor_for_search(100) == (1, 10)

    def test_square_divisor(self):
        assert factor_for_search(12) == (3, 2)

    def test_squarefree(self):
        with pytest.raises(NoSquareFactor):
            factor_for_search(30)

    def test_minimum(self):
        with pytest.raises(ValueError):
            factor_for_search(3)


class TestConstructCandidate:
    def test_k3_block(self):
        cfg = SearchConfig(k=3)
        b = construct_candidate(Permutation([1, 2, 0]), 4, cfg)
        assert b.perms[0].image == (3, 4, 5, 6, 7, 8, 0, 1, 2)
        assert b.perms[1].image == tuple(range(9))
        assert b.perms[2].image == tuple((i + 4) % 9 for i in range(9))

    def test_fixed_point_collides_with_identity(self):
        cfg = SearchConfig(k=3)
        with pytest.raises(IncompatiblePermutations):
            construct_candidate(Permutation([0, 2, 1]), 4, cfg)

    def test_k2_unfiltered_by_hand(self):
        # scale([1,0], 2, block) = [2,3,0,1]; never hits I_4 nor C_1
        cfg = SearchConfig(k=2, j_range_filter=False)
        b = construct_candidate(Permutation([1, 0]), 1, cfg)
        assert b.perms[0].image == (2, 3, 0, 1)

    def test_k2_interleaved_collides(self):
        # scale([1,0], 2, interleaved) = [1,0,3,2] agrees with C_1 at 0
        cfg = SearchConfig(k=2, strategy=ScalingStrategy.INTERLEAVED, j_range_filter=False)
        with pytest.raises(IncompatiblePermutations):
            construct_candidate(Permutation([1, 0]), 1, cfg)

    def test_wrong_q1_size(self):
        with pytest.raises(ValueError):
            construct_candidate(Permutation([1, 0]), 4, SearchConfig(k=3))


class TestSearchSmall:
    def test_k3_exhaustive_against_oracle(self):
        # 1 q1 x 2 shifts with fix_first; check the maximum by hand
        cfg = SearchConfig(k=3, fix_first=True)
        by_oracle = {
            (q1.image, j): girth_oracle(construct_candidate(q1, j, cfg).to_bipartite()).value
            for q1, j in candidate_space(cfg)
        }
        assert len(by_oracle) == 2
        result = search_r3(cfg)
        assert result.best_girth == max(by_oracle.values()) == 6
        assert result.witness_j == 4

    def test_no_valid_shift(self):
        with pytest.raises(NoValidShift):
            search_r3(SearchConfig(k=2))

    def test_witness_reconstructs_best_girth(self):
        for strategy in ScalingStrategy:
            cfg = SearchConfig(k=4, strategy=strategy)
            result = search_r3(cfg)
            rebuilt = construct_candidate(result.witness_q1, result.witness_j, cfg)
            assert girth_bfs(rebuilt.to_bipartite()).value == result.best_girth

    def test_candidate_count_invariant(self):
        cfg = SearchConfig(k=4)
        result = search_r3(cfg)
        total = sum(1 for _ in candidate_space(cfg))
        assert result.candidates_evaluated == total - result.skipped_incompatible

    def test_skipped_candidates_are_counted(self):
        # interleaved scaling without the j filter collides with C_j
        # whenever some q1 displacement equals j
        cfg = SearchConfig(
            k=3, strategy=ScalingStrategy.INTERLEAVED, j_range_filter=False, cutoff_pruning=False
        )
        result = search_r3(cfg)
        assert result.skipped_incompatible == 4
        total = sum(1 for _ in candidate_space(cfg))
        assert result.candidates_evaluated + result.skipped_incompatible == total

    def test_all_candidates_incompatible(self):
        # at k=2 both unfiltered shifts collide with the scaled transposition
        cfg = SearchConfig(k=2, strategy=ScalingStrategy.INTERLEAVED, j_range_filter=False)
        with pytest.raises(NoValidShift):
            search_r3(cfg)

    def test_family_girth_ceiling(self):
        # every candidate contains the 2*b*k cycles of p1 against p2
        for strategy in ScalingStrategy:
            cfg = SearchConfig(k=4, strategy=strategy)
            for q1, j in candidate_space(cfg):
                try:
                    b = construct_candidate(q1, j, cfg)
                except IncompatiblePermutations:
                    continue
                assert girth_bfs(b.to_bipartite()).value <= 2 * cfg.b * cfg.k


class TestDeterminism:
    def test_worker_count_invariance(self):
        base = None
        for workers in (1, 2, 3):
            cfg = SearchConfig(k=5, strategy=ScalingStrategy.INTERLEAVED, worker_count=workers)
            result = search_r3(cfg)
            snapshot = (
                result.best_girth,
                result.witness_q1.image,
                result.witness_j,
                result.candidates_evaluated,
                result.skipped_incompatible,
            )
            if base is None:
                base = snapshot
            assert snapshot == base

    def test_pruning_invariance(self):
        for strategy in ScalingStrategy:
            with_pruning = search_r3(SearchConfig(k=5, strategy=strategy, cutoff_pruning=True))
            without = search_r3(SearchConfig(k=5, strategy=strategy, cutoff_pruning=False))
            assert with_pruning.best_girth == without.best_girth
            assert with_pruning.witness_q1 == without.witness_q1
            assert with_pruning.witness_j == without.witness_j

    def test_tie_break_is_smallest_j_then_lex_q1(self):
        # the witness is the first candidate in (j ascending, q1 lex) order
        # that attains the maximum girth
        for k in (4, 5):
            cfg = SearchConfig(k=k, cutoff_pruning=False)
            result = search_r3(cfg)
            first = None
            for q1, j in candidate_space(cfg):  # candidate_space is in scan order
                try:
                    b = construct_candidate(q1, j, cfg)
                except IncompatiblePermutations:
                    continue
                if girth_bfs(b.to_bipartite()).value == result.best_girth:
                    first = (j, q1)
                    break
            assert first == (result.witness_j, result.witness_q1)


class TestConfig:
    def test_m_is_derived(self):
        assert SearchConfig(k=5, b=2).m == 50

    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(k=1)
        with pytest.raises(ValueError):
            SearchConfig(k=3, b=0)
        with pytest.raises(ValueError):
            SearchConfig(k=3, worker_count=0)

    def test_strategy_coercion(self):
        assert SearchConfig(k=3, strategy="interleaved").strategy is ScalingStrategy.INTERLEAVED


class TestProgress:
    def test_progress_called(self):
        calls = []
        search_r3(SearchConfig(k=4), progress=lambda done, total, best: calls.append((done, total, best)))
        assert calls
        done, total, best = calls[-1]
        assert done == total
        assert best == 6


def test_one_based_rendering_in_reports():
    result = search_r3(SearchConfig(k=3, fix_first=True))
    assert one_based(result.witness_q1) == "2 3 1"
