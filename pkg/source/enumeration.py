#!/usr/bin/env python
"""
Exhaustive passes over S_n.

S_n is split by first entry into n partitions. Each partition is scanned in
lexicographic order, and results are merged in partition order, so every
answer (counts and first counterexample alike) is the same for any worker
count.
"""
import time
import logging
import itertools
import multiprocessing as mp
from dataclasses import dataclass

from perms import Permutation

# Largest n scanned without an explicit opt-in
DEFAULT_ENUMERATION_MAX = 10
# Largest n scanned at all
HARD_N_MAX = 12
DEFAULT_WORKERS = 1

class EnumerationLimitError(ValueError):
    pass

def check_length(n, n_max=DEFAULT_ENUMERATION_MAX):
    """
    Raises EnumerationLimitError unless 0 <= n <= min(n_max, HARD_N_MAX).
    """
    limit = min(n_max, HARD_N_MAX)
    if n < 0:
        raise EnumerationLimitError('Length must be non-negative, got {n}.'.format(n=n))
    if n > limit:
        raise EnumerationLimitError(
            'Length {n} is above the enumeration limit of {limit}. '.format(n=n, limit=limit) +
            'Raise the limit explicitly (at most {hard}) if you mean it.'.format(hard=HARD_N_MAX))

def partition_keys(n):
    """First entries that split S_n; S_0 is one partition holding the empty permutation."""
    if n == 0:
        return [None]
    return list(range(1, n + 1))

def iter_partition(n, first):
    """
    Yields the permutations of length n that start with `first`, in
    lexicographic order.
    """
    if first is None:
        yield Permutation.trusted(())
        return
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        yield Permutation.trusted((first,) + tail)

def iter_length(n):
    """Streams all of S_n in lexicographic order."""
    for first in partition_keys(n):
        yield from iter_partition(n, first)

def map_partitions(worker, n, extra=(), workers=DEFAULT_WORKERS):
    """
    Runs worker((n, first) + extra) over every partition of S_n.

    Parameters
    ----------
    worker : callable
        A module-level function, so it can be sent to a process pool.
    n : int
    extra : tuple
        Further (picklable) arguments passed to every call.
    workers : int
        Pool size; 1 runs everything in this process.

    Returns
    -------
    list : worker results in partition order
    """
    jobs = [(n, first) + tuple(extra) for first in partition_keys(n)]
    if workers > 1 and len(jobs) > 1:
        with mp.Pool(min(workers, len(jobs))) as pool:
            return pool.map(worker, jobs)
    return [worker(job) for job in jobs]

@dataclass
class LengthComparison:
    """Outcome of comparing two predicates on every permutation of one length."""
    n: int
    lhs: int
    rhs: int
    counterexample: Permutation = None

    @property
    def ok(self):
        return self.counterexample is None

def _compare_partition(args):
    n, first, lhs, rhs, mode = args
    lhs_count = 0
    rhs_count = 0
    counterexample = None
    for p in iter_partition(n, first):
        left = lhs(p)
        right = rhs(p)
        lhs_count += left
        rhs_count += right
        if counterexample is None:
            if mode == 'equal' and left != right:
                counterexample = p
            elif mode == 'implies' and left and not right:
                counterexample = p
    return lhs_count, rhs_count, counterexample

def compare_on_length(n, lhs, rhs, mode='equal', workers=DEFAULT_WORKERS, n_max=DEFAULT_ENUMERATION_MAX):
    """
    Evaluates two predicates on every permutation of length n.

    Parameters
    ----------
    n : int
    lhs, rhs : callable
        Picklable predicates on Permutation (module-level functions or
        functools.partial objects over them).
    mode : str
        'equal' flags a permutation where the predicates disagree; 'implies'
        flags one where lhs holds and rhs does not.
    workers : int
    n_max : int
        Enumeration limit for this call.

    Returns
    -------
    LengthComparison : counts of permutations satisfying each side, and the
        lexicographically first flagged permutation, if any.
    """
    if mode not in ('equal', 'implies'):
        raise ValueError('Unknown comparison mode {mode!r}.'.format(mode=mode))
    check_length(n, n_max)
    t1 = time.time()
    results = map_partitions(_compare_partition, n, extra=(lhs, rhs, mode), workers=workers)
    comparison = LengthComparison(n=n, lhs=sum(r[0] for r in results), rhs=sum(r[1] for r in results))
    for _, _, counterexample in results:
        if counterexample is not None:
            comparison.counterexample = counterexample
            break
    logging.debug('+++ n={n}: {lhs} vs {rhs} in {time:.2f}s'.format(n=n, lhs=comparison.lhs, rhs=comparison.rhs, time=time.time() - t1))
    return comparison

def _count_partition(args):
    n, first, predicate = args
    return sum(1 for p in iter_partition(n, first) if predicate(p))

def count_on_length(n, predicate, workers=DEFAULT_WORKERS, n_max=DEFAULT_ENUMERATION_MAX):
    """Number of permutations of length n satisfying a picklable predicate."""
    check_length(n, n_max)
    return sum(map_partitions(_count_partition, n, extra=(predicate,), workers=workers))

def iter_satisfying(n, predicate, n_max=DEFAULT_ENUMERATION_MAX):
    """Streams, in lexicographic order, the permutations of length n satisfying predicate."""
    check_length(n, n_max)
    for p in iter_length(n):
        if predicate(p):
            yield p

def parse_length_range(text):
    """
    Reads "5", "1..8" or "1,2,5" (ranges allowed inside lists) into a sorted
    list of lengths.
    """
    lengths = set()
    for el in [el.strip() for el in str(text).split(',') if len(el.strip()) > 0]:
        if '..' in el:
            lo, hi = el.split('..', 1)
            lengths.update(range(int(lo), int(hi) + 1))
        else:
            lengths.add(int(el))
    return sorted(lengths)
