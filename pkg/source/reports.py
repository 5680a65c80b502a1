#!/usr/bin/env python
"""
Verification reports: per-length counts of two sides of a claimed identity,
named sub-checks, and the first counterexample found.
"""
import time
import logging
from dataclasses import dataclass, field

from perms import to_text
from enumeration import DEFAULT_WORKERS, HARD_N_MAX, compare_on_length

@dataclass
class CheckResult:
    label: str
    passed: bool
    counterexample: object = None
    detail: str = ''

@dataclass
class VerificationReport:
    """
    Parameters
    ----------
    suite : str
    n_max : int
    rows : list of enumeration.LengthComparison
        One per length checked, ascending.
    checks : list of CheckResult
        Named sub-checks (implications, spot checks, formula comparisons).
    duration : float
        Wall-clock seconds.
    error : str or None
        Set when the suite crashed instead of finishing.
    table : dict, optional
        Extra per-n columns to print, e.g. a sorting-depth count table.
    """
    suite: str
    n_max: int
    lhs_label: str = 'lhs'
    rhs_label: str = 'rhs'
    rows: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    duration: float = 0.0
    error: str = None
    table: dict = None

    @property
    def passed(self):
        return (self.error is None and all(row.ok for row in self.rows)
                and all(check.passed for check in self.checks))

    @property
    def counterexample(self):
        for row in self.rows:
            if not row.ok:
                return row.counterexample
        for check in self.checks:
            if not check.passed and check.counterexample is not None:
                return check.counterexample
        return None

    def lhs_counts(self):
        return [row.lhs for row in self.rows]

    def rhs_counts(self):
        return [row.rhs for row in self.rows]

    def add_check(self, label, passed, counterexample=None, detail=''):
        self.checks.append(CheckResult(label, bool(passed), counterexample, detail))
        level = logging.INFO if passed else logging.WARNING
        logging.log(level, '++ {suite}: {label} ... {verdict}'.format(
            suite=self.suite, label=label, verdict='ok' if passed else 'FAILED'))

    def to_text(self):
        lines = ['{suite}: {verdict} (n <= {n_max}, {time:.1f}s)'.format(
            suite=self.suite, verdict='PASS' if self.passed else 'FAIL',
            n_max=self.n_max, time=self.duration)]
        if self.error is not None:
            lines.append('  error: {err}'.format(err=self.error))
        if self.rows:
            lines.append('  {n:>3} {lhs:>12} {rhs:>12}  {ok}'.format(n='n', lhs=self.lhs_label[:12], rhs=self.rhs_label[:12], ok='ok'))
            for row in self.rows:
                lines.append('  {n:>3} {lhs:>12} {rhs:>12}  {ok}'.format(
                    n=row.n, lhs=row.lhs, rhs=row.rhs, ok='yes' if row.ok else 'NO ' + to_text(row.counterexample)))
        if self.table:
            for n, counts in sorted(self.table.items()):
                lines.append('  {n:>3} '.format(n=n) + ' '.join('{c:>8}'.format(c=c) for c in counts))
        for check in self.checks:
            line = '  [{mark}] {label}'.format(mark='x' if check.passed else ' ', label=check.label)
            if check.counterexample is not None:
                line += ' counterexample {p}'.format(p=to_text(check.counterexample))
            if check.detail:
                line += ' ({detail})'.format(detail=check.detail)
            lines.append(line)
        return '\n'.join(lines)

    def to_records(self):
        """One dict per checked length and per sub-check, for JSON-lines output."""
        records = [{'suite': self.suite, 'n': row.n, 'lhs': row.lhs, 'rhs': row.rhs, 'pass': row.ok,
                    'counterexample': to_text(row.counterexample) if row.counterexample is not None else None}
                   for row in self.rows]
        for check in self.checks:
            records.append({'suite': self.suite, 'check': check.label, 'pass': check.passed,
                            'counterexample': to_text(check.counterexample) if check.counterexample is not None else None,
                            'detail': check.detail})
        if self.table:
            for n, counts in sorted(self.table.items()):
                records.append({'suite': self.suite, 'n': n, 'counts': counts})
        records.append({'suite': self.suite, 'pass': self.passed, 'n_max': self.n_max,
                        'duration': round(self.duration, 3), 'error': self.error})
        return records

def compare_lengths(report, lhs, rhs, n_values, mode='equal', workers=DEFAULT_WORKERS):
    """
    Appends one row per length to the report, stopping at the first length
    with a counterexample so the reported counterexample is minimal.
    """
    for n in n_values:
        row = compare_on_length(n, lhs, rhs, mode=mode, workers=workers, n_max=HARD_N_MAX)
        report.rows.append(row)
        logging.info('++ {suite}: n={n} {lhs} / {rhs}'.format(suite=report.suite, n=n, lhs=row.lhs, rhs=row.rhs))
        if not row.ok:
            logging.warning('++ {suite}: counterexample {p}'.format(suite=report.suite, p=to_text(row.counterexample)))
            break
    return report

class Timer:
    """Context manager that stores elapsed wall-clock time on a report."""
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t1 = time.time()
        return self.report

    def __exit__(self, *exc):
        self.report.duration = time.time() - self.t1
        return False
