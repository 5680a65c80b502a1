#!/usr/bin/env python
"""
One-pass sorting operators: the stack-sort operator S and the bubble-sort
operator B, their iterates, and traces of where each output entry came from.
"""
import enum
from dataclasses import dataclass

from perms import Permutation

@dataclass(frozen=True)
class SortTrace:
    """
    Parameters
    ----------
    output : Permutation
    origin : tuple of int
        origin[i-1] is the input position (1-based) of output entry i.
    """
    output: Permutation
    origin: tuple

def _trace(p, output_word):
    where = {v: i for i, v in enumerate(p, start=1)}
    return SortTrace(Permutation.trusted(output_word), tuple(where[v] for v in output_word))

def stack_sort_once(p):
    """
    Passes p once through a stack kept increasing from the top: before x is
    pushed, every smaller entry on the stack is popped to the output.

    Parameters
    ----------
    p : Permutation

    Returns
    -------
    Permutation : e.g. 231 -> 213, 2341 -> 2314
    """
    stack = []
    out = []
    for x in p:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return Permutation.trusted(out)

def bubble_once(p):
    """One left-to-right pass of adjacent swaps, e.g. 521634 -> 215346."""
    word = list(p)
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            word[i], word[i + 1] = word[i + 1], word[i]
    return Permutation.trusted(word)

def trace_stack_sort(p):
    return _trace(p, stack_sort_once(p).word)

def trace_bubble(p):
    return _trace(p, bubble_once(p).word)

class SortOperator(enum.Enum):
    STACK = 'stack'
    BUBBLE = 'bubble'

    def once(self, p):
        if self is SortOperator.STACK:
            return stack_sort_once(p)
        return bubble_once(p)

    def trace(self, p):
        if self is SortOperator.STACK:
            return trace_stack_sort(p)
        return trace_bubble(p)

def iterate(op, p, k):
    """op applied k times; k = 0 returns p."""
    if k < 0:
        raise ValueError('Number of passes must be non-negative, got {k}.'.format(k=k))
    for _ in range(k):
        p = op.once(p)
    return p

def stack_sort_k(p, k):
    """S^k(p), e.g. S^2(2341) = 2134 and S^3(2341) = 1234."""
    return iterate(SortOperator.STACK, p, k)

def is_west_k_sortable(p, k):
    return stack_sort_k(p, k).is_identity()

def sorted_after(op, k, p):
    """True if k passes of op sort p. Argument order suits functools.partial."""
    return iterate(op, p, k).is_identity()

def sorting_depth(p, op=SortOperator.STACK):
    """
    The least k with op^k(p) = id. Both operators put the largest unsorted
    entry in place on every pass, so the answer is at most n - 1.
    """
    k = 0
    while not p.is_identity():
        p = op.once(p)
        k += 1
    return k