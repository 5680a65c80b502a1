import pytest

from perms import Permutation, Symmetry, apply_symmetry, permutations_of_length
from patterns import (AtLeast, Avoids, BarredPattern, Pattern, PatternError, Shaded,
                      UnsupportedPatternError, apply_symmetry_pattern, as_pattern, barred_block,
                      barred_to_decorated, barred_to_mesh, insert_point, make_pattern, map_box,
                      symmetry_closure)
from pattern_dsl import parse
from matcher import contains
from fixture_sets import fixture
import oracles

def test_pattern_validation():
    with pytest.raises(PatternError):
        Pattern(())
    with pytest.raises(PatternError):
        make_pattern((2, 1), [Shaded({(3, 0)})])
    with pytest.raises(PatternError):
        Shaded(set())
    with pytest.raises(PatternError):
        AtLeast({(0, 0)}, 0)
    with pytest.raises(PatternError):
        Avoids({(0, 0)}, (1, 2))

def test_pattern_views():
    pat = parse('43251|sh{(1,4),(1,5),(2,4),(2,5)}|mark{(2,3)}>=1')
    assert not pat.is_classical
    assert pat.shaded_boxes == {(1, 4), (1, 5), (2, 4), (2, 5)}
    assert pat.marks == (AtLeast({(2, 3)}),)
    assert pat.classical() == Pattern((4, 3, 2, 5, 1))
    assert pat.classical().is_classical

def test_map_box():
    assert map_box(Symmetry.REVERSE, (1, 2), 3) == (2, 2)
    assert map_box(Symmetry.COMPLEMENT, (1, 2), 3) == (1, 1)
    assert map_box(Symmetry.INVERSE, (1, 2), 3) == (2, 1)

def test_symmetry_moves_word_and_boxes():
    pat = parse('132|sh{(0,2),(1,2),(2,2)}')
    assert apply_symmetry_pattern(Symmetry.REVERSE, pat) == parse('231|sh{(3,2),(2,2),(1,2)}')
    assert apply_symmetry_pattern(Symmetry.IDENTITY, pat) == pat

def test_symmetry_transforms_decorations():
    pat = parse('21|dec{(1,1)}avoids(12)')
    assert apply_symmetry_pattern(Symmetry.REVERSE, pat) == parse('12|dec{(1,1)}avoids(21)')

def test_symmetry_closure_of_simple_generator():
    closure = symmetry_closure([parse('312|sh{(1,0),(1,1),(1,2),(1,3)}')])
    assert len(closure) == len(set(closure))
    for pat in closure:
        for s in Symmetry:
            assert apply_symmetry_pattern(s, pat) in closure

@pytest.mark.parametrize('text', ['132|sh{(0,2),(1,2),(2,2)}', '21|mark{(0,2),(1,2)}>=1',
                                  '21|dec{(1,1)}avoids(12)', '3241|sh{(1,4)}'])
def test_symmetry_equivariance(text):
    pat = parse(text)
    for s in Symmetry:
        image = apply_symmetry_pattern(s, pat)
        for n in range(0, 6):
            for p in permutations_of_length(n):
                assert contains(pat, p) == contains(image, apply_symmetry(s, p))

@pytest.mark.parametrize('name', ['west2', 'west2_variant', 'i_set', 'w3_basis', 'j_small', 'bubble_1243',
                                  'bubble_id', 'simple'])
def test_symmetry_equivariance_on_fixtures(name):
    for pat in fixture(name):
        for s in Symmetry:
            image = apply_symmetry_pattern(s, pat)
            for n in range(0, 7):
                for p in permutations_of_length(n):
                    assert contains(pat, p) == contains(image, apply_symmetry(s, p)), (str(pat), s, p)

def test_barred_patterns():
    b = parse("35'241")
    assert b.unbarred_word() == Permutation((3, 2, 4, 1))
    assert barred_block(b) == (1, 4)
    assert barred_to_mesh(b) == parse('3241|sh{(1,4)}')
    assert as_pattern(b) == barred_to_decorated(b)

def test_adjacent_bars_become_a_decoration():
    b = parse("12'3'4")
    assert barred_to_decorated(b) == parse('12|dec{(1,1)}avoids(12)')
    with pytest.raises(PatternError):
        barred_to_mesh(b)

def test_non_interval_bars_are_unsupported():
    b = parse("1'32'")
    assert barred_block(b) is None
    with pytest.raises(UnsupportedPatternError):
        as_pattern(b)

def test_barred_pattern_validation():
    with pytest.raises(PatternError):
        BarredPattern((1, 2), {1, 2})
    with pytest.raises(PatternError):
        BarredPattern((1, 2), {3})

@pytest.mark.parametrize('text', ["35'241", "12'3'4", "2'1", "13'2", "41'2'3"])
def test_barred_translation_matches_direct_semantics(text):
    b = parse(text)
    translated = as_pattern(b)
    for n in range(0, 7):
        for p in permutations_of_length(n):
            assert contains(translated, p) == oracles.barred_contains(b, p), (text, p)

def test_insert_point_splits_the_grid():
    pat = parse('21|mark{(1,2)}>=1')
    assert insert_point(pat, (1, 2)) == Pattern((2, 3, 1))
    shaded = parse('21|sh{(1,2)}')
    assert insert_point(shaded, (0, 0)) == parse('132|sh{(2,3)}')
    assert insert_point(shaded, (1, 1)) == parse('321|sh{(1,3),(2,3)}')

def test_insert_point_keeps_marks_elsewhere():
    pat = parse('1|mark{(0,0)}>=1|mark{(1,1)}>=1')
    assert insert_point(pat, (0, 0)) == parse('12|mark{(2,2)}>=1')
    assert insert_point(pat, (0, 0), drop_marks_at=False) == parse('12|mark{(0,0),(0,1),(1,0),(1,1)}>=1|mark{(2,2)}>=1')
