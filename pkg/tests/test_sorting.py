import itertools

import pytest

from perms import identity, parse_permutation, permutations_of_length
from sorting import (SortOperator, bubble_once, is_west_k_sortable, iterate, sorted_after, sorting_depth,
                     stack_sort_k, stack_sort_once, trace_bubble, trace_stack_sort)
import oracles

@pytest.mark.parametrize('before, after', [('231', '213'), ('2341', '2314'), ('', ''), ('1', '1')])
def test_stack_sort_once(before, after):
    assert stack_sort_once(parse_permutation(before)) == parse_permutation(after)

def test_stack_sort_iterates():
    p = parse_permutation('2341')
    assert stack_sort_k(p, 2) == parse_permutation('2134')
    assert stack_sort_k(p, 3) == identity(4)
    assert not is_west_k_sortable(p, 2)
    assert is_west_k_sortable(p, 3)
    assert sorting_depth(p) == 3

@pytest.mark.parametrize('before, after', [('521634', '215346'), ('52134', '21345')])
def test_bubble_once(before, after):
    assert bubble_once(parse_permutation(before)) == parse_permutation(after)

@pytest.mark.parametrize('n', range(0, 9))
def test_operators_match_recursive_definitions(n):
    for p in permutations_of_length(n):
        assert stack_sort_once(p).word == oracles.stack_sort_recursive(p)
        assert bubble_once(p).word == oracles.bubble_recursive(p)

@pytest.mark.parametrize('op', list(SortOperator))
def test_non_inversions_are_preserved(op):
    for n in range(0, 9):
        for p in permutations_of_length(n):
            out = op.once(p)
            where = {v: i for i, v in enumerate(out)}
            for a, b in itertools.combinations(p, 2):
                if a < b:
                    assert where[a] < where[b]

def test_traces_record_input_positions():
    trace = trace_stack_sort(parse_permutation('231'))
    assert trace.output == parse_permutation('213')
    assert trace.origin == (1, 3, 2)
    trace = trace_bubble(parse_permutation('312'))
    assert trace.output == parse_permutation('123')
    assert trace.origin == (2, 3, 1)
    assert SortOperator.STACK.trace(parse_permutation('12')).origin == (1, 2)

def test_iterate():
    p = parse_permutation('4321')
    assert iterate(SortOperator.BUBBLE, p, 0) == p
    assert iterate(SortOperator.BUBBLE, p, 3) == identity(4)
    assert sorted_after(SortOperator.BUBBLE, 3, p)
    assert not sorted_after(SortOperator.BUBBLE, 2, p)
    with pytest.raises(ValueError):
        iterate(SortOperator.STACK, p, -1)

@pytest.mark.parametrize('op', list(SortOperator))
def test_depth_is_at_most_n_minus_one(op):
    for p in permutations_of_length(6):
        assert sorting_depth(p, op) <= 5
    assert sorting_depth(parse_permutation('654321'), SortOperator.BUBBLE) == 5
    assert sorting_depth(identity(6), op) == 0
