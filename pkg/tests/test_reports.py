import json
import functools

from perms import Permutation
from sorting import SortOperator, sorted_after
from reports import Timer, VerificationReport, compare_lengths
from enumeration import LengthComparison

def test_compare_lengths_stops_at_first_failure():
    report = VerificationReport('demo', 6, lhs_label='stack', rhs_label='bubble')
    compare_lengths(report, functools.partial(sorted_after, SortOperator.STACK, 1),
                    functools.partial(sorted_after, SortOperator.BUBBLE, 1), range(7))
    assert [row.n for row in report.rows] == [0, 1, 2, 3]
    assert report.counterexample == Permutation((3, 2, 1))
    assert not report.passed
    assert report.lhs_counts() == [1, 1, 2, 5]
    assert report.rhs_counts() == [1, 1, 2, 4]

def test_checks_and_errors_fail_the_report():
    report = VerificationReport('demo', 3)
    report.rows.append(LengthComparison(3, 6, 6))
    assert report.passed
    report.add_check('spot check', True)
    assert report.passed
    report.add_check('another', False, Permutation((2, 1)))
    assert not report.passed
    assert report.counterexample == Permutation((2, 1))
    assert not VerificationReport('crashed', 3, error='boom').passed

def test_to_text():
    report = VerificationReport('demo', 1, lhs_label='left', rhs_label='right')
    report.rows.append(LengthComparison(1, 1, 1))
    report.add_check('ok check', True, detail='extra')
    lines = report.to_text().splitlines()
    assert lines[0].startswith('demo: PASS (n <= 1,')
    assert lines[1].split() == ['n', 'left', 'right', 'ok']
    assert lines[2].split() == ['1', '1', '1', 'yes']
    assert lines[3] == '  [x] ok check (extra)'

def test_to_records_are_json_lines():
    report = VerificationReport('demo', 2)
    report.rows.append(LengthComparison(2, 2, 1, Permutation((2, 1))))
    report.table = {2: [1, 2]}
    records = report.to_records()
    assert records[0] == {'suite': 'demo', 'n': 2, 'lhs': 2, 'rhs': 1, 'pass': False, 'counterexample': '21'}
    assert records[1] == {'suite': 'demo', 'n': 2, 'counts': [1, 2]}
    assert records[-1]['pass'] is False
    for record in records:
        json.loads(json.dumps(record))

def test_timer_sets_duration():
    report = VerificationReport('demo', 0)
    with Timer(report):
        pass
    assert report.duration >= 0.0
