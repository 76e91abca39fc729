import pytest

import naive
from conjucyclic import (
    BudgetExceededError,
    ConjucyclicCode,
    NotDualContainingError,
    ZeroCodeError,
    build_tower,
    enumerate_divisors,
    expand,
    factor_x2n_minus_1,
    is_alternating_dual_containing,
    min_weight,
    stabilizer_params,
    symplectic_weight_distribution,
    tower_for_q,
    weight_distribution,
)


def all_divisor_codes(pairs):
    for q, n in pairs:
        tower = tower_for_q(q)
        for _, g in enumerate_divisors(factor_x2n_minus_1(tower, n)):
            yield ConjucyclicCode(tower, n, g)


def test_zero_code_distribution(f9):
    code = ConjucyclicCode(f9, 2, (2, 0, 0, 0, 1))
    dist = weight_distribution(code)
    assert dist.counts == [1, 0, 0]
    assert dist.min_weight is None
    assert dist.cardinality == 1
    with pytest.raises(ZeroCodeError):
        min_weight(code)


def test_full_space_code(f9):
    code = ConjucyclicCode(f9, 2, (1,))
    dist = weight_distribution(code)
    assert sum(dist.counts) == 3 ** 4 == dist.cardinality
    assert dist.counts[0] == 1
    assert min_weight(code) == 1


def test_distribution_matches_naive_enumeration():
    # oracle equivalence on every code with at most 3^6 codewords
    checked = 0
    sweep = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)]
    for code in all_divisor_codes(sweep):
        if code.tower.q ** code.card_log_q > 3 ** 6:
            continue
        words = naive.span(code.tower, code.gen_matrix, code.n)
        expected = naive.weight_histogram(words, code.n, naive.hamming_weight)
        dist = weight_distribution(code)
        assert dist.counts == expected
        assert sum(dist.counts) == code.tower.q ** code.card_log_q
        checked += 1
    assert checked > 50


def test_min_weight_matches_symplectic_mirror():
    # per-code transport: min Hamming weight over GF(q^2) equals the
    # minimum symplectic weight of the expanded q-ary code, for every
    # code small enough to cross-check against a naive sweep
    checked = 0
    sweep = [(2, 1), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)]
    for code in all_divisor_codes(sweep):
        if code.card_log_q == 0 or code.tower.q ** code.card_log_q > 3 ** 8:
            continue
        mirror = symplectic_weight_distribution(
            code.tower, code.cyclic.generator_matrix()
        )
        assert min_weight(code) == mirror.min_weight
        words = naive.span(code.tower, code.cyclic.generator_matrix(), 2 * code.n)
        assert mirror.counts == naive.weight_histogram(
            words, code.n, naive.symplectic_weight
        )
        checked += 1
    assert checked > 50


def test_per_codeword_weight_transport():
    for code in all_divisor_codes([(3, 2), (4, 2)]):
        words = naive.span(code.tower, code.gen_matrix, code.n)
        for w in words:
            assert naive.hamming_weight(w) == naive.symplectic_weight(
                expand(code.tower, w)
            )


def test_worker_count_independence(ternary_code):
    base = weight_distribution(ternary_code, workers=1)
    for workers in (2, 4):
        assert weight_distribution(ternary_code, workers=workers).counts == base.counts


def test_budget_enforcement(ternary_code):
    with pytest.raises(BudgetExceededError):
        weight_distribution(ternary_code, budget=3 ** 11)
    with pytest.raises(BudgetExceededError):
        min_weight(ternary_code, budget=10)


def test_dual_containing_verdicts(f9, quaternary_code):
    assert is_alternating_dual_containing(ConjucyclicCode(f9, 2, (1,)))
    assert not is_alternating_dual_containing(ConjucyclicCode(f9, 2, (2, 0, 0, 0, 1)))
    assert is_alternating_dual_containing(quaternary_code)


def test_dual_containing_matches_naive_inclusion():
    for code in all_divisor_codes([(2, 2), (3, 2), (4, 1), (5, 1)]):
        words = naive.span(code.tower, code.gen_matrix, code.n)
        dual_words = naive.span(
            code.tower, code.alternating_dual_matrix(), code.n
        )
        assert is_alternating_dual_containing(code) == (dual_words <= words)


def test_stabilizer_params_full_space():
    tower = build_tower(3, 1)
    code = ConjucyclicCode(tower, 2, (1,))
    params = stabilizer_params(code)
    assert (params.n, params.k_logical, params.d_lower, params.q) == (2, 2, 1, 3)
    assert params.pure
    assert str(params) == "[[2,2,1]]_3"


def test_stabilizer_params_requires_dual_containing(f9):
    zero = ConjucyclicCode(f9, 2, (2, 0, 0, 0, 1))
    with pytest.raises(NotDualContainingError):
        stabilizer_params(zero)


def test_dual_containing_codes_have_enough_logical_space():
    for code in all_divisor_codes([(2, 2), (3, 2), (4, 2), (5, 1)]):
        if is_alternating_dual_containing(code):
            assert code.card_log_q >= code.n
            if code.card_log_q:
                params = stabilizer_params(code)
                assert params.k_logical >= 0
                assert params.d_lower >= 1


def test_distribution_json(ternary_code):
    dist = weight_distribution(ternary_code)
    blob = dist.to_json()
    assert blob["card"] == "3^12"
    assert blob["minWeight"] == 5
    assert blob["counts"][0] == 1 and len(blob["counts"]) == 12
