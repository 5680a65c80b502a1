#!/usr/bin/env python
"""
Occurrences of patterns in permutations.

An occurrence of a pattern of length k in a permutation p of length n is a
choice of positions alpha(1) < ... < alpha(k) whose values standardize to the
pattern word. With alpha(0) = beta(0) = 0 and alpha(k+1) = beta(k+1) = n+1,
where beta lists the chosen values in increasing order, box (i, j) of the
pattern covers the cells

    alpha(i)+1 .. alpha(i+1)-1   x   beta(j)+1 .. beta(j+1)-1

and every region constraint is evaluated on the entries of p inside the union
of its boxes.
"""
import functools
from dataclasses import dataclass

import numpy as np

from perms import PointSet, standardize
from patterns import AtLeast, Avoids, Shaded, as_pattern
from enumeration import (DEFAULT_ENUMERATION_MAX, DEFAULT_WORKERS,
                         compare_on_length, count_on_length, iter_satisfying)

@dataclass(frozen=True)
class Occurrence:
    """
    Parameters
    ----------
    alpha : tuple of int
        Strictly increasing 1-based positions in p.
    beta : tuple of int
        The values at those positions, in increasing order.
    """
    alpha: tuple
    beta: tuple

    def values_in_order(self, p):
        return tuple(p(x) for x in self.alpha)

class DominanceCounts:
    """
    Rectangle counts over the diagram of a permutation.

    table[x][y] is the number of entries at positions <= x with values <= y;
    it is built on the first query.
    """
    def __init__(self, p):
        self.p = p
        self._table = None

    @property
    def table(self):
        if self._table is None:
            n = len(self.p)
            grid = np.zeros((n + 1, n + 1), dtype=np.int64)
            if n > 0:
                grid[np.arange(1, n + 1), np.asarray(self.p.word)] = 1
            self._table = np.cumsum(np.cumsum(grid, axis=0), axis=1).tolist()
        return self._table

    def query_rect(self, x1, x2, y1, y2):
        """Entries with x1 <= position <= x2 and y1 <= value <= y2."""
        if x1 > x2 or y1 > y2:
            return 0
        t = self.table
        return t[x2][y2] - t[x1 - 1][y2] - t[x2][y1 - 1] + t[x1 - 1][y1 - 1]

def _bounds(word):
    # For each pattern index, the earlier indices holding the nearest smaller
    #   and nearest larger pattern values (None if absent).
    bounds = []
    for t, w in enumerate(word):
        below = [s for s in range(t) if word[s] < w]
        above = [s for s in range(t) if word[s] > w]
        lo = max(below, key=lambda s: word[s]) if below else None
        hi = min(above, key=lambda s: word[s]) if above else None
        bounds.append((lo, hi))
    return bounds

def _classical_embeddings(word, p):
    """Position tuples (0-based) of p order-isomorphic to word, in lexicographic order."""
    k = len(word)
    values = p.word
    n = len(values)
    bounds = _bounds(word)
    chosen = [0] * k

    def extend(t, start):
        if t == k:
            yield tuple(chosen)
            return
        lo, hi = bounds[t]
        lo_v = values[chosen[lo]] if lo is not None else 0
        hi_v = values[chosen[hi]] if hi is not None else n + 1
        for x in range(start, n - (k - t) + 1):
            v = values[x]
            if lo_v < v < hi_v:
                chosen[t] = x
                yield from extend(t + 1, x + 1)

    if k > n:
        return
    yield from extend(0, 0)

def region_points(p, alpha, beta, boxes):
    """The entries of p inside the union of the given boxes, as a PointSet."""
    n = len(p)
    a = (0,) + tuple(alpha) + (n + 1,)
    b = (0,) + tuple(beta) + (n + 1,)
    points = []
    for i, j in boxes:
        for x in range(a[i] + 1, a[i + 1]):
            y = p(x)
            if b[j] < y < b[j + 1]:
                points.append((x, y))
    return PointSet(points)

def _region_count(counts, a, b, boxes):
    return sum(counts.query_rect(a[i] + 1, a[i + 1] - 1, b[j] + 1, b[j + 1] - 1) for i, j in boxes)

def constraints_hold(pat, p, alpha, beta, counts=None):
    """
    Evaluates every region constraint of pat for one classical occurrence.

    Parameters
    ----------
    pat : Pattern
    p : Permutation
    alpha, beta : tuple of int
        1-based positions and sorted values of the occurrence.
    counts : DominanceCounts, optional
        Shared across calls on the same p.

    Returns
    -------
    bool
    """
    if counts is None:
        counts = DominanceCounts(p)
    n = len(p)
    a = (0,) + tuple(alpha) + (n + 1,)
    b = (0,) + tuple(beta) + (n + 1,)
    for c in pat.constraints:
        if isinstance(c, Shaded):
            if _region_count(counts, a, b, c.boxes) != 0:
                return False
        elif isinstance(c, AtLeast):
            if _region_count(counts, a, b, c.boxes) < c.count:
                return False
        elif isinstance(c, Avoids):
            if _region_count(counts, a, b, c.boxes) < len(c.pattern):
                continue
            if pointset_contains(region_points(p, alpha, beta, c.boxes), c.pattern):
                return False
    return True

def iter_occurrences(pat, p, counts=None):
    """
    Yields the occurrences of a pattern in p, ordered lexicographically by
    positions.

    Parameters
    ----------
    pat : Pattern or BarredPattern
        Barred patterns are translated first; see patterns.as_pattern.
    p : Permutation
    counts : DominanceCounts, optional

    Yields
    ------
    Occurrence
    """
    pat = as_pattern(pat)
    if pat.constraints and counts is None:
        counts = DominanceCounts(p)
    for positions in _classical_embeddings(pat.word.word, p):
        alpha = tuple(x + 1 for x in positions)
        beta = tuple(sorted(p.word[x] for x in positions))
        if not pat.constraints or constraints_hold(pat, p, alpha, beta, counts):
            yield Occurrence(alpha, beta)

def occurrences(pat, p):
    """All occurrences of pat in p as a list, e.g. three for 132 in 526413."""
    return list(iter_occurrences(pat, p))

def contains(pat, p, counts=None):
    for _ in iter_occurrences(pat, p, counts):
        return True
    return False

def avoids_all(pats, p):
    """True if p contains none of the patterns."""
    counts = DominanceCounts(p)
    return not any(contains(pat, p, counts) for pat in pats)

def contains_any(pats, p):
    return not avoids_all(pats, p)

def pointset_contains(ps, pat):
    """
    Tests a pattern against a set of points by first standardizing the set
    into a permutation.

    Parameters
    ----------
    ps : PointSet or iterable of (x, y)
    pat : Pattern

    Returns
    -------
    bool : False for a set smaller than the pattern
    """
    ps = ps if isinstance(ps, PointSet) else PointSet(ps)
    if len(ps) < len(as_pattern(pat)):
        return False
    return contains(pat, ps.standardize())

def iter_avoidance_class(n, pats, n_max=DEFAULT_ENUMERATION_MAX):
    """Streams Av_n(pats) in lexicographic order."""
    pats = tuple(as_pattern(pat) for pat in pats)
    return iter_satisfying(n, functools.partial(avoids_all, pats), n_max=n_max)

def avoidance_class(n, pats, n_max=DEFAULT_ENUMERATION_MAX):
    """
    Av_n(pats), materialized.

    Returns
    -------
    list of Permutation : lexicographic order; its length is the count.

    Raises
    ------
    EnumerationLimitError : n above n_max
    """
    return list(iter_avoidance_class(n, pats, n_max=n_max))

def count_avoiders(n, pats, workers=DEFAULT_WORKERS, n_max=DEFAULT_ENUMERATION_MAX):
    pats = tuple(as_pattern(pat) for pat in pats)
    return count_on_length(n, functools.partial(avoids_all, pats), workers=workers, n_max=n_max)

def equivalent_on(lhs, rhs, n_max, workers=DEFAULT_WORKERS):
    """
    Checks Av_n(lhs) = Av_n(rhs) for every n <= n_max.

    Parameters
    ----------
    lhs, rhs : iterable of Pattern
    n_max : int
    workers : int

    Returns
    -------
    (bool, Permutation or None) : the verdict and the smallest permutation
        (by length, then lexicographically) in exactly one class.
    """
    lhs = tuple(as_pattern(pat) for pat in lhs)
    rhs = tuple(as_pattern(pat) for pat in rhs)
    for n in range(n_max + 1):
        comparison = compare_on_length(n, functools.partial(avoids_all, lhs),
                                       functools.partial(avoids_all, rhs),
                                       mode='equal', workers=workers, n_max=max(n_max, DEFAULT_ENUMERATION_MAX))
        if not comparison.ok:
            return False, comparison.counterexample
    return True, None

def implication_counterexample(strong, weak, n_max, workers=DEFAULT_WORKERS):
    """The smallest permutation containing strong but not weak, or None."""
    strong = as_pattern(strong)
    weak = as_pattern(weak)
    for n in range(len(strong), n_max + 1):
        comparison = compare_on_length(n, functools.partial(contains, strong),
                                       functools.partial(contains, weak),
                                       mode='implies', workers=workers, n_max=max(n_max, DEFAULT_ENUMERATION_MAX))
        if not comparison.ok:
            return comparison.counterexample
    return None

def implies_containment(strong, weak, n_max, workers=DEFAULT_WORKERS):
    """
    True if every permutation of length <= n_max containing strong also
    contains weak.
    """
    return implication_counterexample(strong, weak, n_max, workers) is None
