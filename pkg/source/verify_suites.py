#!/usr/bin/env python
"""
Named verification suites. Each one restates a sorting or avoidance identity
as a comparison of two predicates over S_n, checks it exhaustively for every
length up to n_max and returns a VerificationReport.
"""
import math
import time
import logging
import traceback
import functools
import collections

from perms import Permutation, is_simple, parse_permutation
from patterns import make_pattern
from pattern_dsl import parse, parse_pattern
from matcher import (DominanceCounts, avoids_all, constraints_hold, contains_any,
                     equivalent_on, implication_counterexample, iter_occurrences)
from enumeration import DEFAULT_WORKERS, iter_length, iter_partition, map_partitions
from sorting import SortOperator, bubble_once, sorted_after, sorting_depth, trace_stack_sort
from preimage import (bubble_preimage_basis, expand_all, expand_marks, image_avoids,
                      image_contains, preimage_verify, stack_preimage_basis)
from reports import Timer, VerificationReport, compare_lengths
import fixture_sets as fx

DEFAULT_N_MAX = {'knuth': 8,
                 'west2': 8,
                 'west3': 9,
                 'w3-stages': 8,
                 'lemma-i': 8,
                 'lemma-j3': 8,
                 'simple': 8,
                 'bubble': 8,
                 'count-table': 8,
                 'preimage': 7}

# Occurrence-level pullback is quadratic in the occurrences; keep it small.
LEMMA_I_OCCURRENCE_MAX = 7
# Index of the auxiliary large entry inside each I pattern
LEMMA_I_AUX_INDEX = 3

DEFAULT_COUNT_TABLE_K = 3

# Smallest length for recovering known bases from the stack derivation
PREIMAGE_RECOVERY_N_MIN = 8

def attempt(errorMsg):
    # Decorator for attempting to run a function, but continuing on error.
    # Error message may be a string or a list of strings for a multiline
    #   message.
    def actual_decorator(func):
        def wrapped_func(*args, errorMsg=errorMsg, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception:
                logging.critical(traceback.format_exc())
                if not isinstance(errorMsg, list):
                    errorMsg = [errorMsg]
                for msg in errorMsg:
                    logging.critical(msg)
        return wrapped_func
    return actual_decorator

def banner(msg):
    return '{0}\n{1:^80}\n{2}'.format('=' * 80, msg, '=' * 80)

def west2_formula(n):
    """2(3n)!/((n+1)!(2n+1)!), the number of West-2-stack-sortable permutations of length n >= 1."""
    return 2 * math.factorial(3 * n) // (math.factorial(n + 1) * math.factorial(2 * n + 1))

def catalan(n):
    return math.comb(2 * n, n) // (n + 1)

def _implication_checks(report, label, strongs, weak, n_max, workers):
    for index, strong in strongs:
        counterexample = implication_counterexample(strong, weak, n_max, workers)
        report.add_check('{label}: {strong} => {weak}'.format(label=label, strong=index, weak=str(weak)),
                         counterexample is None, counterexample)

def verify_knuth(n_max=DEFAULT_N_MAX['knuth'], workers=DEFAULT_WORKERS, basis=None):
    """
    {p : S(p) = id} = Av_n(231) for n <= n_max.

    Parameters
    ----------
    basis : sequence of Pattern, optional
        Replaces fixture('knuth'), e.g. to watch the suite fail on {321}.
    """
    basis = tuple(basis) if basis is not None else fx.fixture('knuth')
    report = VerificationReport('knuth', n_max, lhs_label='S(p)=id', rhs_label='Av(basis)')
    with Timer(report):
        compare_lengths(report, functools.partial(sorted_after, SortOperator.STACK, 1),
                        functools.partial(avoids_all, basis), range(n_max + 1), workers=workers)
    return report

def verify_west2(n_max=DEFAULT_N_MAX['west2'], workers=DEFAULT_WORKERS):
    """
    {p : S^2(p) = id} = Av_n(2341, 3241|sh{(1,4)}), with the counts checked
    against the closed formula, the shading variant and the barred form.
    """
    basis = fx.fixture('west2')
    report = VerificationReport('west2', n_max, lhs_label='S^2(p)=id', rhs_label='Av(basis)')
    with Timer(report):
        compare_lengths(report, functools.partial(sorted_after, SortOperator.STACK, 2),
                        functools.partial(avoids_all, basis), range(n_max + 1), workers=workers)
        mismatches = [row.n for row in report.rows if row.n >= 1 and row.lhs != west2_formula(row.n)]
        report.add_check('counts follow 2(3n)!/((n+1)!(2n+1)!)', len(mismatches) == 0,
                         detail='first mismatch at n={n}'.format(n=mismatches[0]) if mismatches else '')
        ok, counterexample = equivalent_on(basis, fx.fixture('west2_variant'), n_max, workers)
        report.add_check('shading variant 3241|sh{(1,3),(1,4)} is equivalent', ok, counterexample)
        barred = (parse('2341'), parse("35'241"))
        ok, counterexample = equivalent_on(barred, basis, n_max, workers)
        report.add_check("barred form 35'241 matches the mesh form", ok, counterexample)
    return report

def verify_west3(n_max=DEFAULT_N_MAX['west3'], workers=DEFAULT_WORKERS):
    """{p : S^3(p) = id} = Av_n(W3 basis) for n <= n_max."""
    report = VerificationReport('west3', n_max, lhs_label='S^3(p)=id', rhs_label='Av(W3 basis)')
    with Timer(report):
        compare_lengths(report, functools.partial(sorted_after, SortOperator.STACK, 3),
                        functools.partial(avoids_all, fx.fixture('w3_basis')), range(n_max + 1), workers=workers)
    return report

def verify_w3_stages(n_max=DEFAULT_N_MAX['w3-stages'], workers=DEFAULT_WORKERS):
    """
    The 29 patterns produced before simplification describe the same class as
    the West-3 condition, and each removal step is a containment implication.
    """
    stage = fx.stage_patterns()
    report = VerificationReport('w3-stages', n_max, lhs_label='S^3(p)=id', rhs_label='Av(29 patterns)')
    with Timer(report):
        compare_lengths(report, functools.partial(sorted_after, SortOperator.STACK, 3),
                        functools.partial(avoids_all, stage), range(n_max + 1), workers=workers)
        _implication_checks(report, 'I1 removes', [('J1,{i}'.format(i=i), fx.j1(i)) for i in range(1, 7)],
                            fx.i_pattern(1), n_max, workers)
        _implication_checks(report, 'J2,12 removes', [('J1,{i}'.format(i=i), fx.j1(i)) for i in range(7, 10)],
                            fx.j2(12), n_max, workers)
        _implication_checks(report, 'I1 removes', [('J2,{i}'.format(i=i), fx.j2(i)) for i in range(1, 7)],
                            fx.i_pattern(1), n_max, workers)
        _implication_checks(report, 'I2 removes', [('J2,{i}'.format(i=i), fx.j2(i)) for i in range(7, 10)],
                            fx.i_pattern(2), n_max, workers)
        _implication_checks(report, 'I4 removes', [('J3', fx.fixture('j3')[0])],
                            fx.i_pattern(4), n_max, workers)
        extra = fx.fixture('simplify_extra')
        _implication_checks(report, 'split-off side pattern', [('side 1', extra[0])],
                            fx.w3_pattern('J2,10'), n_max, workers)
        _implication_checks(report, 'split-off side pattern', [('side 2', extra[1])],
                            fx.w3_pattern('J2,11'), n_max, workers)
        ok, counterexample = equivalent_on(stage, fx.fixture('w3_basis'), n_max, workers)
        report.add_check('29 patterns and the 10-pattern basis agree', ok, counterexample)
    return report

def pullback_matches(p, occurrence_values, i_patterns, counts=None):
    """
    Indices of the I patterns that explain one occurrence of W1 in S(p).

    Parameters
    ----------
    p : Permutation
    occurrence_values : tuple of int
        The values of the W1 occurrence, read left to right in S(p).
    i_patterns : sequence of Pattern
        Each has its auxiliary large entry at LEMMA_I_AUX_INDEX.

    Returns
    -------
    list of int : t such that some entry of p, added to the pulled-back
        points, forms an occurrence of i_patterns[t] with its constraints.
    """
    counts = counts if counts is not None else DominanceCounts(p)
    where = {v: x for x, v in enumerate(p, start=1)}
    positions = sorted(where[v] for v in occurrence_values)
    matches = []
    for t, pat in enumerate(i_patterns):
        for x in range(1, len(p) + 1):
            if x in positions:
                continue
            alpha = tuple(sorted(positions + [x]))
            if alpha.index(x) != LEMMA_I_AUX_INDEX:
                continue
            values = [p(y) for y in alpha]
            if Permutation.trusted([sorted(values).index(v) + 1 for v in values]) != pat.word:
                continue
            if constraints_hold(pat, p, alpha, tuple(sorted(values)), counts):
                matches.append(t)
                break
    return matches

def verify_lemma_I(n_max=DEFAULT_N_MAX['lemma-i'], workers=DEFAULT_WORKERS):
    """
    S(p) contains W1 exactly when p contains one of I1..I5, and every single
    occurrence of W1 in S(p) pulls back to exactly one of them.
    """
    w1 = fx.fixture('w1')[0]
    i_set = fx.fixture('i_set')
    report = VerificationReport('lemma-i', n_max, lhs_label='S(p)>W1', rhs_label='p>some I')
    with Timer(report):
        compare_lengths(report, functools.partial(image_contains, SortOperator.STACK, w1),
                        functools.partial(contains_any, i_set), range(n_max + 1), workers=workers)
        bad = None
        checked = 0
        for n in range(min(n_max, LEMMA_I_OCCURRENCE_MAX) + 1):
            for p in iter_length(n):
                image = trace_stack_sort(p).output
                counts = DominanceCounts(p)
                for occ in iter_occurrences(w1, image):
                    checked += 1
                    if len(pullback_matches(p, occ.values_in_order(image), i_set, counts)) != 1:
                        bad = p
                        break
                if bad is not None:
                    break
            if bad is not None:
                break
        report.add_check('every occurrence pulls back to exactly one I pattern', bad is None, bad,
                         detail='{n} occurrences, n <= {m}'.format(n=checked, m=min(n_max, LEMMA_I_OCCURRENCE_MAX)))
    return report

def verify_lemma_j3(n_max=DEFAULT_N_MAX['lemma-j3'], workers=DEFAULT_WORKERS):
    """Containing J3 forces S(p) to contain W2; J3's marked and mesh forms agree."""
    j3 = fx.fixture('j3')
    j3_mesh = fx.fixture('j3_mesh')
    report = VerificationReport('lemma-j3', n_max, lhs_label='p>J3', rhs_label='S(p)>W2')
    with Timer(report):
        compare_lengths(report, functools.partial(contains_any, j3),
                        functools.partial(image_contains, SortOperator.STACK, fx.fixture('w2')[0]),
                        range(n_max + 1), mode='implies', workers=workers)
        ok, counterexample = equivalent_on(j3, j3_mesh, n_max, workers)
        report.add_check('marked and mesh forms of J3 are equivalent', ok, counterexample)
        report.add_check('expanding J3 gives its mesh form', j3_mesh[0] in expand_marks(j3[0]))
    return report

def verify_simple(n_max=DEFAULT_N_MAX['simple'], workers=DEFAULT_WORKERS):
    """A permutation is simple exactly when it avoids the closed simple basis."""
    basis = fx.simple_basis()
    report = VerificationReport('simple', n_max, lhs_label='simple', rhs_label='Av(basis)')
    with Timer(report):
        compare_lengths(report, is_simple, functools.partial(avoids_all, basis), range(n_max + 1), workers=workers)
        p = parse_permutation('28465317')
        report.add_check('28465317 is not simple and contains a basis pattern',
                         not is_simple(p) and contains_any(basis, p))
        p = parse_permutation('2413')
        report.add_check('2413 is simple and avoids the basis', is_simple(p) and avoids_all(basis, p))
    return report

def verify_bubble(n_max=DEFAULT_N_MAX['bubble'], workers=DEFAULT_WORKERS):
    """
    One bubble pass sorts exactly Av(231, 321); the preimage of Av(1243)
    is Av of the four marked patterns.
    """
    report = VerificationReport('bubble', n_max, lhs_label='B(p)=id', rhs_label='Av(231,321)')
    with Timer(report):
        classical = fx.fixture('bubble_id_classical')
        compare_lengths(report, functools.partial(sorted_after, SortOperator.BUBBLE, 1),
                        functools.partial(avoids_all, classical), range(n_max + 1), workers=workers)
        powers = [row.n for row in report.rows if row.n >= 1 and row.lhs != 2 ** (row.n - 1)]
        report.add_check('counts are 2^(n-1)', len(powers) == 0)
        ok, counterexample = equivalent_on(fx.fixture('bubble_id'), classical, n_max, workers)
        report.add_check('marked pattern 21 matches {231, 321}', ok, counterexample)
        target = parse_pattern('1243')
        side = VerificationReport('bubble-1243', n_max)
        compare_lengths(side, functools.partial(image_avoids, SortOperator.BUBBLE, target),
                        functools.partial(avoids_all, fx.fixture('bubble_1243')), range(n_max + 1), workers=workers)
        report.add_check('B(p) avoids 1243 iff p avoids the four marked patterns', side.passed, side.counterexample,
                         detail='counts ' + ','.join(str(c) for c in side.lhs_counts()))
        report.add_check('B(52134) = 21345', bubble_once(parse_permutation('52134')) == parse_permutation('21345'))
    return report

def _depth_partition(args):
    n, first, op = args
    return collections.Counter(sorting_depth(p, op) for p in iter_partition(n, first))

def depth_histogram(n, op=SortOperator.STACK, workers=DEFAULT_WORKERS):
    """hist[k] = number of p in S_n whose sorting depth is exactly k."""
    total = collections.Counter()
    for part in map_partitions(_depth_partition, n, extra=(op,), workers=workers):
        total.update(part)
    return [total.get(k, 0) for k in range(max(n, 1))]

def bubble_formula(n, k):
    """k!(k+1)^(n-k): permutations of length n sorted by k bubble passes, for k <= n."""
    return math.factorial(k) * (k + 1) ** (n - k)

def count_table(op=SortOperator.STACK, k_max=DEFAULT_COUNT_TABLE_K, n_max=DEFAULT_N_MAX['count-table'],
                workers=DEFAULT_WORKERS):
    """
    Counts of {p in S_n : op^k(p) = id} for k = 0..k_max, n = 1..n_max.

    Returns
    -------
    VerificationReport : report.table maps n to the list of counts by k,
        with checks against the known closed forms.
    """
    op = SortOperator(op)
    report = VerificationReport('count-table-{op}'.format(op=op.value), n_max)
    report.table = {}
    with Timer(report):
        for n in range(1, n_max + 1):
            t1 = time.time()
            hist = depth_histogram(n, op, workers)
            cumulative = [sum(hist[:k + 1]) for k in range(k_max + 1)]
            report.table[n] = cumulative
            logging.info('++ {suite}: n={n} {counts} ({time:.1f}s)'.format(
                suite=report.suite, n=n, counts=cumulative, time=time.time() - t1))
        full = all(report.table[n][k] == math.factorial(n)
                   for n in report.table for k in range(k_max + 1) if k >= n - 1)
        report.add_check('k >= n-1 passes sort everything', full)
        if op is SortOperator.STACK:
            if k_max >= 1:
                report.add_check('k=1 column is Catalan', all(report.table[n][1] == catalan(n) for n in report.table))
            if k_max >= 2:
                report.add_check('k=2 column follows 2(3n)!/((n+1)!(2n+1)!)',
                                 all(report.table[n][2] == west2_formula(n) for n in report.table))
        else:
            report.add_check('columns follow k!(k+1)^(n-k)',
                             all(report.table[n][k] == bubble_formula(n, k)
                                 for n in report.table for k in range(k_max + 1) if k <= n))
    return report

def classical_targets(max_length=3):
    targets = []
    for k in range(1, max_length + 1):
        targets.extend(make_pattern(p) for p in iter_length(k))
    return targets

def verify_preimage(n_max=DEFAULT_N_MAX['preimage'], workers=DEFAULT_WORKERS):
    """
    Derived preimage bases for every classical target of length <= 3 under
    both operators, and the two bases recovered from the stack derivation.
    """
    report = VerificationReport('preimage', n_max)
    with Timer(report):
        for op, derive in ((SortOperator.STACK, stack_preimage_basis), (SortOperator.BUBBLE, bubble_preimage_basis)):
            for target in classical_targets():
                sub = preimage_verify(derive(target), n_max, workers)
                report.add_check('{op} preimage of {t}'.format(op=op.value, t=target), sub.passed, sub.counterexample,
                                 detail='counts ' + ','.join(str(c) for c in sub.lhs_counts()))
        recovery_n = max(n_max, PREIMAGE_RECOVERY_N_MIN)
        ok, counterexample = equivalent_on(stack_preimage_basis(parse_pattern('231')).patterns,
                                           fx.fixture('west2'), recovery_n, workers)
        report.add_check('stack preimage of 231 matches the West-2 basis', ok, counterexample,
                         detail='n <= {n}'.format(n=recovery_n))
        expanded = expand_all(stack_preimage_basis(parse_pattern('2341')).patterns)
        ok, counterexample = equivalent_on(expanded, fx.fixture('i_set'), recovery_n, workers)
        report.add_check('expanded stack preimage of 2341 matches I1..I5', ok, counterexample,
                         detail='n <= {n}'.format(n=recovery_n))
    return report

def _count_table_suite(n_max=DEFAULT_N_MAX['count-table'], workers=DEFAULT_WORKERS):
    return count_table(SortOperator.STACK, DEFAULT_COUNT_TABLE_K, n_max, workers)

SUITES = collections.OrderedDict([
    ('knuth', verify_knuth),
    ('west2', verify_west2),
    ('west3', verify_west3),
    ('w3-stages', verify_w3_stages),
    ('lemma-i', verify_lemma_I),
    ('lemma-j3', verify_lemma_j3),
    ('simple', verify_simple),
    ('bubble', verify_bubble),
    ('count-table', _count_table_suite),
    ('preimage', verify_preimage),
])

def run_suite(name, n_max=None, workers=DEFAULT_WORKERS):
    """
    Runs one suite by name at its default length unless n_max is given.

    Raises
    ------
    KeyError : unknown suite name
    """
    if name not in SUITES:
        raise KeyError('Unknown suite {name!r}; choose from {names}.'.format(name=name, names=', '.join(SUITES)))
    n_max = DEFAULT_N_MAX[name] if n_max is None else n_max
    logging.info('+ Running {name} up to n={n_max}'.format(name=name, n_max=n_max))
    return SUITES[name](n_max=n_max, workers=workers)

def verify_all(n_max=None, workers=DEFAULT_WORKERS):
    """
    Runs every suite in order. A suite that raises is logged and reported as
    failed; the remaining suites still run.

    Returns
    -------
    list of VerificationReport
    """
    logging.warning(banner('Verifying all suites'))
    t1 = time.time()
    reports = []
    for name in SUITES:
        guarded = attempt(['', banner('Suite {name} crashed'.format(name=name)), ''])(run_suite)
        report = guarded(name, n_max=n_max, workers=workers)
        if report is None:
            report = VerificationReport(name, DEFAULT_N_MAX[name] if n_max is None else n_max,
                                        error='suite raised an exception; see log')
        reports.append(report)
    failed = [r.suite for r in reports if not r.passed]
    logging.warning(banner('{n} suites, {f} failed, {time:.1f}s'.format(n=len(reports), f=len(failed), time=time.time() - t1)))
    return reports
