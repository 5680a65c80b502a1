#!/usr/bin/env python
"""
Preimage bases: given a classical pattern p and a sorting operator, build a
set P of marked mesh patterns with operator^-1(Av(p)) = Av(P).

Candidates are the permutations p' of the same length in which every pair of
entries inverted in p is still inverted. For each inverted pair a > b of p'
(a to the left of b):

* if a must still precede b after the pass, and no entry of p' can push a out
  of the way first, the region above a and before b is marked with "at least
  one entry";
* if b must overtake a, the same region is shaded, and a candidate with an
  entry of its own in that region is impossible.

The stack operator looks at the columns between a and b; bubble sort also
looks at the columns left of a.
"""
import logging
import itertools
import functools
from dataclasses import dataclass

from perms import inverted_values, permutations_of_length
from patterns import (AtLeast, Pattern, Shaded, UnsupportedPatternError,
                      insert_point, as_pattern)
from matcher import avoids_all
from sorting import SortOperator
from reports import VerificationReport, Timer, compare_lengths
from enumeration import DEFAULT_WORKERS

DEFAULT_N_MAX = 7

@dataclass(frozen=True)
class PreimageBasis:
    """
    Parameters
    ----------
    target : Pattern
        Classical pattern the sorted output must avoid.
    operator : SortOperator
    patterns : tuple of Pattern
        Marked mesh patterns, one per surviving candidate word.
    """
    target: Pattern
    operator: SortOperator
    patterns: tuple

def _region(op, i, j, a, k):
    first_col = i if op is SortOperator.STACK else 0
    return frozenset((t, u) for t in range(first_col, j) for u in range(a, k + 1))

def _has_witness(op, word, i, j, a):
    # An entry larger than a, placed where it is pushed after a and before b
    #   (stack), or anywhere before b other than a itself (bubble).
    columns = range(i + 1, j) if op is SortOperator.STACK else [c for c in range(1, j) if c != i]
    return any(word[c - 1] > a for c in columns)

def _candidate_pattern(op, target_inversions, word):
    """The marked mesh pattern for one candidate word, or None if impossible."""
    k = len(word)
    shaded = set()
    marks = []
    for i, j in itertools.combinations(range(1, k + 1), 2):
        a, b = word[i - 1], word[j - 1]
        if a < b:
            continue
        region = _region(op, i, j, a, k)
        witness = _has_witness(op, word, i, j, a)
        if (a, b) in target_inversions:
            if not witness:
                marks.append(region)
        else:
            if witness:
                logging.debug('+++ {word}: entry inside the region that {a} needs empty'.format(word=word, a=a))
                return None
            shaded |= region
    marks = [frozenset(m - shaded) for m in marks]
    if any(len(m) == 0 for m in marks):
        logging.debug('+++ {word}: a marked region is fully shaded'.format(word=word))
        return None
    # A mark implied by a smaller one adds nothing.
    unique = set(marks)
    kept = [m for m in unique if not any(other < m for other in unique)]
    constraints = [Shaded(shaded)] if shaded else []
    constraints += [AtLeast(m, 1) for m in kept]
    return Pattern(word, tuple(constraints))

def preimage_basis(target, op):
    """
    Builds the preimage basis of a classical pattern under one pass of op.

    Parameters
    ----------
    target : Pattern
        A classical pattern (no region constraints).
    op : SortOperator

    Returns
    -------
    PreimageBasis

    Raises
    ------
    UnsupportedPatternError : target carries region constraints
    """
    target = as_pattern(target)
    if not target.is_classical:
        raise UnsupportedPatternError('Preimage bases are only built for classical targets, got {t}.'.format(t=target))
    k = len(target)
    target_inversions = inverted_values(target.word)
    pats = []
    for candidate in permutations_of_length(k):
        if not target_inversions <= inverted_values(candidate):
            continue
        pat = _candidate_pattern(op, target_inversions, candidate)
        if pat is not None:
            pats.append(pat)
    logging.info('++ {op} preimage of {t}: {n} patterns'.format(op=op.value, t=target, n=len(pats)))
    return PreimageBasis(target, op, tuple(pats))

def stack_preimage_basis(target):
    """S^-1(Av(target)), e.g. 21 -> {21|mark{(1,2)}>=1}."""
    return preimage_basis(target, SortOperator.STACK)

def bubble_preimage_basis(target):
    """B^-1(Av(target)), e.g. 21 -> {21|mark{(0,2),(1,2)}>=1}."""
    return preimage_basis(target, SortOperator.BUBBLE)

def _expand(pat):
    marks = pat.marks
    if len(marks) == 0:
        return {pat}
    shaded = pat.shaded_boxes
    expanded = set()
    for box in sorted(marks[0].boxes - shaded):
        expanded |= _expand(insert_point(pat, box))
    return expanded

def expand_marks(pat):
    """
    Replaces every "at least one entry" region by an explicit entry, one
    pattern per choice of box; markings satisfied by an inserted entry are
    dropped along the way.

    Parameters
    ----------
    pat : Pattern
        All markings must have count 1.

    Returns
    -------
    tuple of Pattern : mark-free patterns, avoidance-equivalent to {pat}

    Raises
    ------
    UnsupportedPatternError : a marking with count above 1
    """
    pat = as_pattern(pat)
    if any(m.count != 1 for m in pat.marks):
        raise UnsupportedPatternError('Only markings with count 1 can be expanded: {p}'.format(p=pat))
    return tuple(sorted(_expand(pat), key=lambda q: q.sort_key()))

def expand_all(pats):
    """expand_marks over a set of patterns, merged and deduplicated."""
    expanded = set()
    for pat in pats:
        expanded.update(expand_marks(pat))
    return tuple(sorted(expanded, key=lambda q: q.sort_key()))

def image_avoids(op, target, p):
    """True if one pass of op takes p into Av(target)."""
    return avoids_all((target,), op.once(p))

def image_contains(op, target, p):
    return not image_avoids(op, target, p)

def preimage_verify(basis, n_max=DEFAULT_N_MAX, workers=DEFAULT_WORKERS):
    """
    Checks {p : op(p) avoids target} = Av_n(basis.patterns) for n <= n_max.

    Returns
    -------
    VerificationReport
    """
    report = VerificationReport('preimage-{op}-{t}'.format(op=basis.operator.value, t=basis.target), n_max,
                                lhs_label='op(p) avoids', rhs_label='Av(basis)')
    with Timer(report):
        compare_lengths(report,
                        functools.partial(image_avoids, basis.operator, basis.target),
                        functools.partial(avoids_all, basis.patterns),
                        range(n_max + 1), workers=workers)
    return report
