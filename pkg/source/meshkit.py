#!/usr/bin/env python

# Command-line entry point for pattern matching, avoidance classes, sorting
#   operators, preimage derivation and the verification suites.
#
# Patterns use the textual notation, e.g.
#   132|sh{(0,2),(1,2),(2,2)}     mesh pattern
#   21|mark{(1,2)}>=1             marked mesh pattern
#   21|dec{(1,1)}avoids(12)       decorated pattern
#   35'241                        barred pattern (bar after the digit)
# Quote them on the shell.

import os
import sys
import json
import time
import logging
import argparse
import textwrap
import functools

from perms import Symmetry, parse_permutation, to_text as perm_text
from patterns import PatternError, apply_symmetry_pattern, as_pattern
from pattern_dsl import parse, render_ascii
from matcher import count_avoiders, iter_avoidance_class, iter_occurrences, avoids_all
from enumeration import (DEFAULT_ENUMERATION_MAX, DEFAULT_WORKERS, HARD_N_MAX,
                         check_length, count_on_length, parse_length_range)
from sorting import SortOperator, iterate, sorted_after
from preimage import DEFAULT_N_MAX as PREIMAGE_N_MAX, expand_marks, preimage_basis, preimage_verify
from fixture_sets import fixture, set_fixture_dir
import verify_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VERBOSITY = {0 : logging.CRITICAL,
             1 : logging.WARNING,
             2 : logging.INFO,
             3 : logging.DEBUG}

def parse_comma_separated_list(cslist):
    """
    Parses a string containing a comma-separate list of parameters.

    Parameters
    ----------
    cslist : str
        A string containing a comma-separate list of parameters

    Returns
    -------
    list : a list of parameters
    """
    return [el.strip() for el in cslist.split(',') if len(el.strip()) > 0]

def emit(params, record, text):
    # Machine output only; logs go to stderr.
    if params['json']:
        print(json.dumps(record))
    else:
        print(text)

def length_limit(params):
    return HARD_N_MAX if params.get('allow_large') else DEFAULT_ENUMERATION_MAX

def load_patterns(params):
    pats = [parse(text) for text in (params.get('avoiding') or [])]
    for name in parse_comma_separated_list(params.get('basis') or ''):
        pats.extend(fixture(name))
    if len(pats) == 0:
        raise PatternError('No patterns given; use --avoiding and/or --basis.')
    return pats

def cmd_match(params):
    pat = parse(params['pattern'])
    p = parse_permutation(params['perm'])
    found = 0
    for occ in iter_occurrences(pat, p):
        found += 1
        values = occ.values_in_order(p)
        emit(params, {'pattern': str(pat), 'perm': perm_text(p), 'positions': list(occ.alpha), 'values': list(values)},
             'positions {pos}  values {vals}'.format(pos=','.join(map(str, occ.alpha)), vals=','.join(map(str, values))))
    logging.info('+ {n} occurrences of {pat} in {p}'.format(n=found, pat=pat, p=perm_text(p)))
    return EXIT_OK

def cmd_avoids(params):
    *texts, perm = params['items']
    if len(texts) == 0:
        raise PatternError('avoids needs at least one pattern before the permutation.')
    pats = [parse(text) for text in texts]
    p = parse_permutation(perm)
    result = avoids_all(pats, p)
    emit(params, {'perm': perm_text(p), 'patterns': [str(pat) for pat in pats], 'avoids': result},
         'avoids' if result else 'contains')
    return EXIT_OK

def cmd_enumerate(params):
    pats = load_patterns(params)
    n = params['length']
    for p in iter_avoidance_class(n, pats, n_max=length_limit(params)):
        emit(params, {'n': n, 'perm': perm_text(p)}, perm_text(p))
    return EXIT_OK

def cmd_count(params):
    pats = load_patterns(params)
    for n in parse_length_range(params['lengths']):
        t1 = time.time()
        count = count_avoiders(n, pats, workers=params['workers'], n_max=length_limit(params))
        logging.info('++ n={n} in {time:.2f}s'.format(n=n, time=time.time() - t1))
        emit(params, {'n': n, 'count': count}, '{n} {count}'.format(n=n, count=count))
    return EXIT_OK

def cmd_sort(params):
    op = SortOperator(params['op'])
    p = parse_permutation(params['perm'])
    out = iterate(op, p, params['passes'])
    emit(params, {'op': op.value, 'passes': params['passes'], 'perm': perm_text(p), 'output': perm_text(out)},
         perm_text(out))
    return EXIT_OK

def cmd_sortable_count(params):
    op = SortOperator(params['op'])
    for n in parse_length_range(params['lengths']):
        count = count_on_length(n, functools.partial(sorted_after, op, params['passes']),
                                workers=params['workers'], n_max=length_limit(params))
        emit(params, {'op': op.value, 'passes': params['passes'], 'n': n, 'count': count},
             '{n} {count}'.format(n=n, count=count))
    return EXIT_OK

def cmd_preimage(params):
    target = parse(params['pattern'])
    basis = preimage_basis(target, SortOperator(params['op']))
    for pat in basis.patterns:
        members = expand_marks(pat) if params['expand'] else (pat,)
        for member in members:
            emit(params, {'target': str(basis.target), 'op': basis.operator.value, 'pattern': str(member),
                          'candidate': perm_text(pat.word)},
                 '{pat}\n# from candidate {word}'.format(pat=member, word=perm_text(pat.word)))
    if params['n_max'] is None:
        return EXIT_OK
    check_length(params['n_max'], length_limit(params))
    report = preimage_verify(basis, params['n_max'], params['workers'])
    print_report(params, report)
    return EXIT_OK if report.passed else EXIT_FAILED

def cmd_expand(params):
    pat = parse(params['pattern'])
    for member in expand_marks(pat):
        emit(params, {'pattern': str(as_pattern(pat)), 'expanded': str(member)}, str(member))
    return EXIT_OK

def print_report(params, report):
    if params['json']:
        for record in report.to_records():
            print(json.dumps(record))
    else:
        print(report.to_text())

def cmd_verify(params):
    names = parse_comma_separated_list(params['suite'])
    n_max = params['n_max']
    if n_max is not None:
        check_length(n_max, length_limit(params))
    if names == ['all']:
        reports = verify_suites.verify_all(n_max=n_max, workers=params['workers'])
    else:
        reports = [verify_suites.run_suite(name, n_max=n_max, workers=params['workers']) for name in names]
    for report in reports:
        print_report(params, report)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED

def cmd_render(params):
    pat = parse(params['pattern'])
    text = render_ascii(pat)
    emit(params, {'pattern': str(pat), 'lines': text.split('\n')}, text)
    return EXIT_OK

def cmd_symmetries(params):
    pat = as_pattern(parse(params['pattern']))
    seen = set()
    for s in Symmetry:
        image = apply_symmetry_pattern(s, pat)
        if image in seen:
            continue
        seen.add(image)
        emit(params, {'symmetry': s.label, 'pattern': str(image)}, '{label:<28}{pat}'.format(label=s.label, pat=image))
    return EXIT_OK

COMMANDS = {'match': cmd_match,
            'avoids': cmd_avoids,
            'enumerate': cmd_enumerate,
            'count': cmd_count,
            'sort': cmd_sort,
            'sortable-count': cmd_sortable_count,
            'preimage': cmd_preimage,
            'expand': cmd_expand,
            'verify': cmd_verify,
            'render': cmd_render,
            'symmetries': cmd_symmetries}

def parseArgs(argv=None):
    epilog = textwrap.dedent('''\
Example usage:

python meshkit.py match "132|sh{(0,2),(1,2),(2,2)}" 526413
    List the occurrences of a mesh pattern in 526413.

python meshkit.py count --lengths 1..8 --avoiding 2341 "3241|sh{(1,4)}"
    Count the permutations avoiding both patterns for each length 1 to 8.

python meshkit.py sort --op bubble --passes 1 521634
    One pass of bubble sort (prints 215346).

python meshkit.py preimage --op stack 231
    Marked mesh patterns whose avoiders are exactly the permutations that
    stack-sort into Av(231).

python meshkit.py -v verify all --workers 4
    Run every verification suite at its default length.
''')

    parser = argparse.ArgumentParser(description='Match, count and verify ' +
         'permutation patterns (classical, mesh, marked mesh, decorated and ' +
         'barred) against sorting operators.',
         epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('-v', dest='verbose', action='count', default=0,
                        help='Print occasional log messages to stderr.'      +
                        ' Increase number of v\'s to increase number of'      +
                        ' messages.'                                          )
    parser.add_argument('--json', dest='json', action='store_true', default=False,
                        help='Write one JSON object per line instead of text.')
    parser.add_argument('--workers', dest='workers', type=int, default=DEFAULT_WORKERS,
                        help='Number of processes for exhaustive passes. '    +
                        'Default: ' + str(DEFAULT_WORKERS)                    )
    parser.add_argument('--fixtures', dest='fixtures', metavar='dir', default=None,
                        help='Directory holding the named pattern sets. '     +
                        'Overrides the MESHKIT_FIXTURES environment variable.')
    parser.add_argument('--allow-large', dest='allow_large', action='store_true', default=False,
                        help='Allow lengths above ' + str(DEFAULT_ENUMERATION_MAX) +
                        ' (up to ' + str(HARD_N_MAX) + '). Expect long runs.')
    # Exhaustive subcommands also take --workers after their own name; SUPPRESS
    #   keeps the top-level value when it is not repeated there.
    workers_parent = argparse.ArgumentParser(add_help=False)
    workers_parent.add_argument('--workers', dest='workers', type=int, default=argparse.SUPPRESS,
                                help='Number of processes for exhaustive passes.')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('match', help='List occurrences of a pattern in a permutation.')
    p.add_argument('pattern')
    p.add_argument('perm')

    p = sub.add_parser('avoids', help='Check whether a permutation avoids every given pattern.')
    p.add_argument('items', nargs='+', metavar='pattern... perm')

    for name, helptext in (('enumerate', 'List Av_n of the given patterns.'),
                           ('count', 'Count Av_n of the given patterns for several lengths.')):
        p = sub.add_parser(name, help=helptext, parents=[workers_parent])
        if name == 'enumerate':
            p.add_argument('--length', dest='length', type=int, required=True)
        else:
            p.add_argument('--lengths', dest='lengths', required=True, metavar='list',
                           help='Lengths as "1..8" or "1,2,5".')
        p.add_argument('--avoiding', dest='avoiding', nargs='+', default=None, metavar='pattern')
        p.add_argument('--basis', dest='basis', default=None, metavar='list',
                       help='Comma-separated names of fixture pattern sets, e.g. w3_basis.')

    p = sub.add_parser('sort', help='Apply a sorting operator k times.')
    p.add_argument('--op', dest='op', choices=[op.value for op in SortOperator], default='stack')
    p.add_argument('--passes', dest='passes', type=int, default=1)
    p.add_argument('perm')

    p = sub.add_parser('sortable-count', help='Count permutations sorted by k passes.', parents=[workers_parent])
    p.add_argument('--op', dest='op', choices=[op.value for op in SortOperator], default='stack')
    p.add_argument('--passes', dest='passes', type=int, default=1)
    p.add_argument('--lengths', dest='lengths', required=True, metavar='list')

    p = sub.add_parser('preimage', help='Derive the preimage basis of a classical pattern.', parents=[workers_parent])
    p.add_argument('--op', dest='op', choices=[op.value for op in SortOperator], default='stack')
    p.add_argument('--expand', dest='expand', action='store_true', default=False,
                   help='Print the mark-free expansion of every member.')
    p.add_argument('--n-max', dest='n_max', type=int, default=None,
                   help='Also verify the basis up to this length (' + str(PREIMAGE_N_MAX) + ' is quick).')
    p.add_argument('pattern')

    p = sub.add_parser('expand', help='Replace "at least one" markings by explicit entries.')
    p.add_argument('pattern')

    p = sub.add_parser('verify', help='Run verification suites: ' + ', '.join(verify_suites.SUITES) + ' or all.',
                       parents=[workers_parent])
    p.add_argument('suite', help='Suite name, comma-separated names, or "all".')
    p.add_argument('--n-max', dest='n_max', type=int, default=None,
                   help='Largest length to check. Default: per suite (8, 9 for west3, 7 for preimage).')

    p = sub.add_parser('render', help='Draw a pattern grid.')
    p.add_argument('pattern')

    p = sub.add_parser('symmetries', help='List the distinct images under the eight symmetries.')
    p.add_argument('pattern')

    params = vars(parser.parse_args(argv))
    if params['workers'] < 1:
        parser.error('--workers must be at least 1')
    return params

def run(argv=None):
    """
    Runs one subcommand.

    Returns
    -------
    int : 0 on success, 1 when a verification finds a counterexample, 2 for
        usage, parse or limit errors.
    """
    try:
        params = parseArgs(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    logging.basicConfig(level=VERBOSITY.get(params['verbose'], logging.DEBUG),
                        format='%(message)s')
    logging.debug('Location of python:')
    logging.debug(sys.executable)
    if params['fixtures'] is not None:
        set_fixture_dir(os.path.realpath(params['fixtures']))
    try:
        return COMMANDS[params['command']](params)
    except (ValueError, IOError, KeyError) as err:
        logging.critical('{kind}: {err}'.format(kind=type(err).__name__, err=err))
        return EXIT_USAGE

def main():
    sys.exit(run())

if __name__ == "__main__":
    main()
