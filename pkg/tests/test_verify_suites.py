import collections

import pytest

from perms import Permutation
from pattern_dsl import parse
from sorting import SortOperator
import verify_suites as vs

CATALAN = [1, 1, 2, 5, 14, 42, 132]

def test_formulas():
    assert [vs.west2_formula(n) for n in range(1, 9)] == [1, 2, 6, 22, 91, 408, 1938, 9614]
    assert [vs.catalan(n) for n in range(7)] == CATALAN
    assert vs.bubble_formula(4, 2) == 18

def test_knuth():
    report = vs.verify_knuth(6)
    assert report.passed
    assert report.lhs_counts() == CATALAN
    assert report.rhs_counts() == CATALAN

def test_knuth_vacuous_and_wrong_basis():
    assert vs.verify_knuth(0).passed
    report = vs.verify_knuth(6, basis=[parse('321')])
    assert not report.passed
    assert report.counterexample == Permutation((2, 3, 1))
    assert report.rows[-1].n == 3

def test_west2():
    report = vs.verify_west2(6)
    assert report.passed, report.to_text()
    assert report.lhs_counts() == [1, 1, 2, 6, 22, 91, 408]
    assert len(report.checks) == 3

def test_west3_counts():
    report = vs.verify_west3(6)
    assert report.passed, report.to_text()
    assert report.lhs_counts() == [1, 1, 2, 6, 24, 114, 606]

def test_w3_stages():
    report = vs.verify_w3_stages(6)
    assert report.passed, report.to_text()
    assert len(report.checks) == 6 + 3 + 6 + 3 + 1 + 2 + 1

def test_lemma_i():
    report = vs.verify_lemma_I(6)
    assert report.passed, report.to_text()

def test_pullback_of_23451():
    p = Permutation((2, 3, 4, 5, 1))
    i_set = vs.fx.fixture('i_set')
    assert vs.pullback_matches(p, (2, 3, 4, 1), i_set) == [0]

def test_lemma_j3():
    report = vs.verify_lemma_j3(6)
    assert report.passed, report.to_text()
    assert report.rows[4].lhs == 0

def test_simple():
    report = vs.verify_simple(6)
    assert report.passed, report.to_text()
    assert report.lhs_counts() == [1, 1, 2, 0, 2, 6, 46]

def test_bubble():
    report = vs.verify_bubble(6)
    assert report.passed, report.to_text()
    assert report.lhs_counts() == [1, 1, 2, 4, 8, 16, 32]

@pytest.mark.parametrize('op', list(SortOperator))
def test_count_table(op):
    report = vs.count_table(op, k_max=3, n_max=6)
    assert report.passed, report.to_text()
    assert report.table[6][0] == 1
    assert report.table[4][3] == 24
    if op is SortOperator.STACK:
        assert [report.table[n][2] for n in range(1, 7)] == [1, 2, 6, 22, 91, 408]

def test_depth_histogram_sums_to_n_factorial():
    assert sum(vs.depth_histogram(5)) == 120
    assert vs.depth_histogram(3) == [1, 4, 1]

def test_preimage_suite():
    report = vs.verify_preimage(5)
    assert report.passed, report.to_text()
    assert len(report.checks) == 2 * 9 + 2
    # Known-basis recovery always reaches at least length 8
    assert [check.detail for check in report.checks[-2:]] == ['n <= 8', 'n <= 8']

def test_run_suite_rejects_unknown_names():
    with pytest.raises(KeyError):
        vs.run_suite('nope')

def _boom(n_max, workers):
    raise RuntimeError('broken suite')

def test_verify_all_survives_a_crashing_suite(monkeypatch):
    monkeypatch.setattr(vs, 'SUITES', collections.OrderedDict([('knuth', vs.verify_knuth), ('boom', _boom)]))
    reports = vs.verify_all(n_max=4)
    assert [r.suite for r in reports] == ['knuth', 'boom']
    assert reports[0].passed
    assert not reports[1].passed
    assert reports[1].error is not None
