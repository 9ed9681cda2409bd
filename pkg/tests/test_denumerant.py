import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scalarpart.denumerant import (
    GeneratorVector,
    brute_force_count,
    denumerant,
    denumerant_table,
    eval_signed_term,
    normalize_signed,
)

D = (2, 3, 6, 7)


def enumerate_solutions(s, d):
    ranges = [range(s // g + 1) for g in d]
    return [x for x in product(*ranges) if sum(g * v for g, v in zip(d, x)) == s]


def test_hand_enumeration_s10():
    sols = enumerate_solutions(10, D)
    # 7+3, 6+2+2, 2*5, 3+3+2+2
    assert sorted(sols) == sorted([(0, 1, 0, 1), (2, 0, 1, 0), (5, 0, 0, 0), (2, 2, 0, 0)])


@pytest.mark.parametrize("s", [0, 10, 12, 17])
def test_against_enumeration(s):
    expected = len(enumerate_solutions(s, D))
    assert denumerant(s, D) == expected == brute_force_count(s, D)


def test_frozen_values():
    # from the enumeration oracle above
    assert [denumerant(s, D) for s in (0, 10, 12, 17)] == [1, 4, 7, 10]


def test_table_small_cases():
    assert denumerant_table([1], 20) == [1] * 21
    t = denumerant_table([2], 4)
    assert t[3] == 0 and t[4] == 1


def test_negative_argument():
    assert denumerant(-5, [2, 3]) == 0


def test_brute_force_small():
    assert brute_force_count(5, [1, 2]) == 3
    assert brute_force_count(0, [4, 9, 9]) == 1


def test_generator_vector_rejects_bad_entries():
    with pytest.raises(ValueError):
        GeneratorVector([])
    with pytest.raises(ValueError):
        GeneratorVector([3, 0])
    g = GeneratorVector([2, 3, 6, 7])
    assert g.sigma(1) == 18 and g.sigma(2) == 98 and g.product == 252


@pytest.mark.parametrize(
    "raw, sign, shift",
    [((7, -5, -4, -1), -1, -10), ((2, 1, 4, 5), 1, 0), ((3, -1, 3, 4), -1, -1)],
)
def test_normalize_signed(raw, sign, shift):
    t = normalize_signed(raw, 1)
    assert (t.sign, t.shift) == (sign, shift)
    assert tuple(t.abs_generators) == tuple(abs(x) for x in raw)


def test_normalize_rejects_zero():
    with pytest.raises(ValueError):
        normalize_signed([3, 0, 1])


def test_eval_signed_term():
    assert eval_signed_term(1, normalize_signed([3, -1, 3, 4])) == -1
    assert eval_signed_term(0, normalize_signed([7, -5, -4, -1])) == 0
    assert eval_signed_term(1, normalize_signed([2, 1, 4, 5])) == 1


def test_oracle_equivalence_random():
    rng = random.Random(7)
    for _ in range(40):
        d = [rng.randint(1, 9) for _ in range(rng.randint(1, 4))]
        table = denumerant_table(d, 40)
        assert table == [brute_force_count(s, d) for s in range(41)]


gens = st.lists(st.integers(1, 12), min_size=1, max_size=5)


@settings(max_examples=40, deadline=None)
@given(gens)
def test_recursion(d):
    rest_tables = [denumerant_table(d[:i] + d[i + 1:], 100) if len(d) > 1 else None
                   for i in range(len(d))]
    for i, g in enumerate(d):
        for s in range(101):
            rest = rest_tables[i][s] if rest_tables[i] else int(s == 0)
            assert denumerant(s, d) - denumerant(s - g, d) == rest


@settings(max_examples=30, deadline=None)
@given(gens, st.randoms(use_true_random=False))
def test_permutation_invariance(d, rnd):
    shuffled = list(d)
    rnd.shuffle(shuffled)
    assert denumerant_table(d, 60) == denumerant_table(shuffled, 60)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.sampled_from([2, 3]),
       st.integers(0, 40))
def test_scaling(d, k, s):
    assert denumerant(k * s, [k * g for g in d]) == denumerant(s, d)


@settings(max_examples=20, deadline=None)
@given(gens)
def test_table_matches_pointwise(d):
    t = denumerant_table(d, 50)
    assert t == [denumerant(s, d) for s in range(51)]
