import os
import sys

import pytest

# The modules under source/ are scripts imported by name.
SOURCE_DIR = os.path.realpath(os.path.join(os.path.dirname(os.path.realpath(__file__)), '..', 'source'))
if SOURCE_DIR not in sys.path:
    sys.path.insert(0, SOURCE_DIR)

import fixture_sets

@pytest.fixture(autouse=True)
def default_fixture_dir():
    fixture_sets.set_fixture_dir(None)
    yield
    fixture_sets.set_fixture_dir(None)

@pytest.fixture
def perm():
    from perms import parse_permutation
    return parse_permutation

@pytest.fixture
def pat():
    from pattern_dsl import parse_pattern
    return parse_pattern
