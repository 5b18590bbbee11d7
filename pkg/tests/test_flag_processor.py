import itertools

import pytest

from common.errors import DomainError
from common.flag_processor import (
    FlagPair, FlagStore, from_phase_range, mul_i, negate, phase_range, successive_gate_count, summarize,
)

PAIRS = [FlagPair(i, n) for i in (0, 1) for n in (0, 1)]


@pytest.mark.parametrize("pair", PAIRS)
def test_mul_i_four_times_is_identity(pair):
    assert mul_i(mul_i(mul_i(mul_i(pair)))) == pair
    assert mul_i(pair) != pair


@pytest.mark.parametrize("pair", PAIRS)
def test_negate_twice_is_identity(pair):
    assert negate(negate(pair)) == pair


@pytest.mark.parametrize("pair", PAIRS)
def test_flag_pair_value_follows_single_steps(pair):
    assert mul_i(pair).value == pytest.approx(1j * pair.value)
    assert negate(pair).value == pytest.approx(-pair.value)


def test_summarize_matches_step_by_step_fold():
    for start, n_i, n_neg in itertools.product(PAIRS, range(9), range(9)):
        folded = start
        for _ in range(n_i):
            folded = mul_i(folded)
        for _ in range(n_neg):
            folded = negate(folded)
        assert summarize(n_i, n_neg, start) == folded


def test_summarize_rejects_negative_counts():
    with pytest.raises(DomainError):
        summarize(-1, 0, FlagPair())


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (2, 0), (7, 1)])
def test_successive_gate_count(n, expected):
    assert successive_gate_count(n) == expected


def test_store_word_layout():
    store = FlagStore(2)
    store.set_pair(3, FlagPair(0, 1))
    assert store.word() == 0b00000001
    store.set_pair(0, FlagPair(1, 0))
    assert store.word() == 0b10000001
    assert FlagStore.from_word(0b10000001, 2) == store


def test_store_x_swaps_complement_pairs():
    store = FlagStore(2)
    store.set_pair(3, FlagPair(0, 1))
    store.apply_x(0)
    assert store.pair(1) == FlagPair(0, 1)
    assert store.pair(3) == FlagPair(0, 0)


def test_store_z_negates_states_with_qubit_set():
    store = FlagStore(2).apply_z(1)
    assert [p.negative for p in store.pairs()] == [0, 1, 0, 1]
    store.apply_mul_i([0])
    assert store.pair(0) == FlagPair(1, 0)


def test_store_hex_carries_qubit_count():
    store = FlagStore(2)
    store.set_pair(3, FlagPair(0, 1))
    assert store.to_hex() == "0022"
    assert FlagStore.from_hex("0022") == store


def test_phase_range_round_trip_and_limit():
    store = from_phase_range(1, 2)
    assert store.pair(3) == FlagPair(0, 1)
    assert phase_range(store) == 1
    with pytest.raises(DomainError):
        phase_range(FlagStore(3))


def test_store_validation():
    with pytest.raises(DomainError):
        FlagStore(0)
    with pytest.raises(DomainError):
        FlagStore(1, imaginary=[0, 2])
    with pytest.raises(DomainError):
        FlagStore(2).apply_x(2)
