import os

import pytest

from perms import Symmetry
from patterns import Pattern, apply_symmetry_pattern
from pattern_dsl import parse
import fixture_sets as fx

FIXTURE_SIZES = {'knuth': 1, 'west2': 2, 'west2_variant': 2, 'w1': 1, 'w2': 1, 'i_set': 5,
                 'j_small': 3, 'j3': 1, 'j3_mesh': 1, 'j2_set': 12, 'j1_set': 11, 'w3_basis': 10,
                 'simplify_extra': 2, 'bubble_id': 1, 'bubble_id_classical': 2, 'bubble_1243': 4,
                 'simple': 8}

@pytest.mark.parametrize('name', fx.FIXTURE_NAMES)
def test_every_fixture_loads(name):
    pats = fx.fixture(name)
    assert len(pats) == FIXTURE_SIZES[name]
    assert all(isinstance(pat, Pattern) for pat in pats)

def test_named_members():
    assert fx.i_pattern(1) == parse('23451')
    assert fx.w3_pattern('I4') == fx.i_pattern(4)
    assert fx.w3_pattern('J2,12') == fx.j2(12)
    assert fx.fixture('j3')[0] == fx.fixture('j_small')[2]
    assert len(fx.stage_patterns()) == 29

def test_w3_basis_lengths():
    assert [len(pat) for pat in fx.fixture('w3_basis')] == [5, 5, 5, 5, 5, 5, 6, 6, 7, 7]

def test_simple_basis_is_closed():
    basis = fx.simple_basis()
    assert len(basis) == 40
    assert len(basis) == len(set(basis))
    for pat in fx.fixture('simple'):
        assert pat in basis
    for pat in basis:
        for s in Symmetry:
            assert apply_symmetry_pattern(s, pat) in basis

def test_load_list_skips_comments(tmp_path):
    path = tmp_path / 'set.txt'
    path.write_text('# comment\n\n231\n  \n132|sh{(0,0)}\n')
    assert fx.load_list(str(path)) == [(3, '231'), (5, '132|sh{(0,0)}')]

def test_bad_line_names_file_and_line(tmp_path):
    path = tmp_path / 'broken.txt'
    path.write_text('231\n12|sh{(5,5)}\n')
    with pytest.raises(fx.FixtureError) as err:
        fx.load_patterns(str(path))
    assert 'line 2' in str(err.value)
    assert 'broken.txt' in str(err.value)

def test_missing_file():
    with pytest.raises(IOError):
        fx.check_for_file('no_such_fixture_file.txt')
    assert fx.check_for_file(os.path.join('fixtures', 'knuth.txt')).endswith('knuth.txt')

def test_fixture_dir_override(tmp_path, monkeypatch):
    (tmp_path / 'knuth.txt').write_text('321\n')
    fx.set_fixture_dir(str(tmp_path))
    assert fx.fixture('knuth') == (parse('321'),)
    fx.set_fixture_dir(None)
    assert fx.fixture('knuth') == (parse('231'),)
    monkeypatch.setenv(fx.FIXTURE_ENV_VAR, str(tmp_path))
    assert fx.fixture_dir() == str(tmp_path)
