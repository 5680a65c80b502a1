#!/usr/bin/env python
"""
Named pattern sets, stored as text files in fixtures/ with one pattern per
line. Lines starting with '#' are comments.

The directory can be moved with the MESHKIT_FIXTURES environment variable or,
from the command line, with --fixtures.
"""
import os
import logging
import functools

from patterns import PatternError, symmetry_closure
from pattern_dsl import parse

DEFAULT_FIXTURE_DIR = os.path.realpath(os.path.join(os.path.dirname(os.path.realpath(__file__)), '..', 'fixtures'))
FIXTURE_ENV_VAR = 'MESHKIT_FIXTURES'

# Names of every fixture file shipped with the repository
FIXTURE_NAMES = ('knuth', 'west2', 'west2_variant', 'w1', 'w2', 'i_set',
                 'j_small', 'j3', 'j3_mesh', 'j2_set', 'j1_set', 'w3_basis',
                 'simplify_extra', 'bubble_id', 'bubble_id_classical',
                 'bubble_1243', 'simple')

class FixtureError(ValueError):
    pass

_fixture_dir = None

def set_fixture_dir(path):
    """Overrides the fixture directory for the rest of the process."""
    global _fixture_dir
    _fixture_dir = path
    fixture.cache_clear()

def fixture_dir():
    if _fixture_dir is not None:
        return _fixture_dir
    return os.environ.get(FIXTURE_ENV_VAR, DEFAULT_FIXTURE_DIR)

def load_list(fname):
    """
    Loads the non-empty, non-comment lines of a text file.

    Parameters
    ----------
    fname : str
        relative or full path to file to be loaded

    Returns
    -------
    list of (int, str) : line number and stripped line text
    """
    with open(fname, 'r') as f:
        txt = f.read()
    loaded_list = [(number, el.strip()) for number, el in enumerate(txt.split('\n'), start=1)]
    return [(number, el) for number, el in loaded_list if len(el) > 0 and not el.startswith('#')]

def check_for_file(fname):
    """
    Checks to see if a file exists as specified, in pwd, or relative to the
    repository.

    Parameters
    ----------
    fname : str
        relative or full path to file

    Returns
    -------
    str : relative or full path to file

    Raises
    ------
    IOError : the file is in none of those places
    """
    if fname is not None and not os.path.exists(fname):
        try_path = os.path.join(os.getcwd(), fname)
        if os.path.exists(try_path):
            return try_path
        repo_path = os.path.realpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))
        try_path = os.path.join(repo_path, fname)
        if os.path.exists(try_path):
            return try_path
        raise IOError('Cannot find {0}. '.format(fname) +
                      'Please make sure the file exists.')
    return fname

def load_patterns(fname):
    """
    Parses every pattern in a fixture file.

    Parameters
    ----------
    fname : str

    Returns
    -------
    tuple of Pattern or BarredPattern : in file order

    Raises
    ------
    IOError : missing file
    FixtureError : a line that does not parse, named by file and line number
    """
    fname = check_for_file(fname)
    pats = []
    for number, line in load_list(fname):
        try:
            pats.append(parse(line))
        except PatternError as err:
            raise FixtureError('{fname}, line {number}: {err}'.format(fname=fname, number=number, err=err)) from err
    logging.debug('+++ Loaded {n} patterns from {fname}'.format(n=len(pats), fname=fname))
    return tuple(pats)

@functools.lru_cache(maxsize=None)
def fixture(name):
    """
    Loads a named pattern set, e.g. fixture('w3_basis').

    Parameters
    ----------
    name : str
        One of FIXTURE_NAMES, or the stem of any other .txt file in the
        fixture directory.

    Returns
    -------
    tuple of Pattern : in file order, so callers can pick out members by index
    """
    return load_patterns(os.path.join(fixture_dir(), name.lower() + '.txt'))

def simple_basis():
    """The displayed interval-detecting mesh patterns, closed under the eight symmetries."""
    return symmetry_closure(fixture('simple'))

# Positions of named members inside the ordered fixture files
W3_INDEX = {'I1': 0, 'I2': 1, 'I3': 2, 'I4': 3, 'I5': 4, 'J2,12': 5,
            'J1,10': 6, 'J2,10': 7, 'J1,11': 8, 'J2,11': 9}

def j2(index):
    """J_{2,index}, 1-based as in the fixture comments."""
    return fixture('j2_set')[index - 1]

def j1(index):
    """J_{1,index}, 1-based."""
    return fixture('j1_set')[index - 1]

def i_pattern(index):
    return fixture('i_set')[index - 1]

def w3_pattern(label):
    return fixture('w3_basis')[W3_INDEX[label]]

def stage_patterns():
    """The 29 patterns the three lemmas produce before simplification."""
    return fixture('i_set') + fixture('j3') + fixture('j2_set') + fixture('j1_set')
