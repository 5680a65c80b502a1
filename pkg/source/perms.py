#!/usr/bin/env python
"""
Permutations in one-line notation, and the basic operations every other
module builds on: standardization, the diagram G(p), inversions, the eight
symmetries of the square, intervals and simplicity.

Positions and values are 1-based throughout. A Permutation is immutable, so it
can be shared freely between enumeration workers.
"""
import enum
import itertools
import re
from dataclasses import dataclass

class InvalidPermutationError(ValueError):
    pass

@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n} written as the word p(1) p(2) ... p(n).

    Parameters
    ----------
    word : sequence of int
        The one-line notation. The empty word is the permutation of length 0.
    """
    word: tuple = ()

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidPermutationError(
                '{word} is not a permutation of 1..{n}'.format(word=list(word), n=len(word)))
        object.__setattr__(self, 'word', word)

    @classmethod
    def trusted(cls, word):
        # Enumeration hot paths build millions of these from itertools output.
        perm = object.__new__(cls)
        object.__setattr__(perm, 'word', tuple(word))
        return perm

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, index):
        return self.word[index]

    def __call__(self, position):
        """Value at a 1-based position."""
        return self.word[position - 1]

    def __str__(self):
        return to_text(self)

    def is_identity(self):
        return all(v == i for i, v in enumerate(self.word, start=1))

class PointSet(frozenset):
    """A finite set of lattice points with distinct x and distinct y coordinates."""

    def __new__(cls, points=()):
        points = frozenset((int(x), int(y)) for x, y in points)
        if len({x for x, _ in points}) != len(points) or len({y for _, y in points}) != len(points):
            raise InvalidPermutationError('Points must have distinct x and distinct y coordinates.')
        return super().__new__(cls, points)

    def standardize(self):
        """The permutation order-isomorphic to the point set (read left to right)."""
        return standardize([y for _, y in sorted(self)])

def identity(n):
    return Permutation.trusted(range(1, n + 1))

def to_text(p):
    """Digits for length at most 9, otherwise a bracketed comma-separated list."""
    word = tuple(p)
    if len(word) <= 9:
        return ''.join(str(v) for v in word)
    return '[' + ','.join(str(v) for v in word) + ']'

def parse_permutation(text):
    """
    Parses a permutation written as "526413", "[10,2,1,...]" or "5,2,6".

    Parameters
    ----------
    text : str

    Returns
    -------
    Permutation
    """
    text = text.strip()
    if text.startswith('[') and text.endswith(']'):
        text = text[1:-1]
    if ',' in text:
        entries = [el.strip() for el in text.split(',') if len(el.strip()) > 0]
    else:
        entries = list(text)
    if not all(re.fullmatch(r'[0-9]+', el) for el in entries):
        raise InvalidPermutationError('Cannot read {text!r} as a permutation.'.format(text=text))
    return Permutation([int(el) for el in entries])

def standardize(seq):
    """
    Relabels a sequence of distinct integers by 1..k, keeping relative order.

    Parameters
    ----------
    seq : sequence of int
        Distinct entries.

    Returns
    -------
    Permutation : e.g. 5371 -> 3241
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise InvalidPermutationError('Cannot standardize {seq}: entries repeat.'.format(seq=seq))
    ranks = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return Permutation.trusted(ranks[v] for v in seq)

def graph(p):
    """The diagram G(p) = {(i, p(i))}."""
    return PointSet((i, v) for i, v in enumerate(p, start=1))

def inversions(p):
    """Position pairs (i, j), i < j, with p(i) > p(j)."""
    word = tuple(p)
    return frozenset((i + 1, j + 1)
                     for i, j in itertools.combinations(range(len(word)), 2)
                     if word[i] > word[j])

def inverted_values(p):
    """Value pairs (a, b), a > b, where a appears before b in p."""
    word = tuple(p)
    return frozenset((word[i], word[j])
                     for i, j in itertools.combinations(range(len(word)), 2)
                     if word[i] > word[j])

def _inverse_word(word):
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[v - 1] = i
    return tuple(inv)

# Word whose images under the eight symmetries are pairwise distinct, so a
#   symmetry is identified by where it sends this word.
_WITNESS = (1, 3, 4, 2)

class Symmetry(enum.Enum):
    """
    The dihedral group of the square acting on permutation diagrams.

    Each member is (inverse, reverse, complement): the inverse is applied
    first, then reverse, then complement.
    """
    IDENTITY = (False, False, False)
    REVERSE = (False, True, False)
    COMPLEMENT = (False, False, True)
    REVERSE_COMPLEMENT = (False, True, True)
    INVERSE = (True, False, False)
    INVERSE_REVERSE = (True, True, False)
    INVERSE_COMPLEMENT = (True, False, True)
    INVERSE_REVERSE_COMPLEMENT = (True, True, True)

    @property
    def label(self):
        return self.name.lower().replace('_', '-')

    @classmethod
    def from_label(cls, label):
        try:
            return cls[label.strip().upper().replace('-', '_')]
        except KeyError:
            raise ValueError('Unknown symmetry {label!r}. Choose from: {names}'.format(
                label=label, names=', '.join(s.label for s in cls)))

    def apply_word(self, word):
        inv, rev, comp = self.value
        word = tuple(word)
        n = len(word)
        if inv:
            word = _inverse_word(word)
        if rev:
            word = word[::-1]
        if comp:
            word = tuple(n + 1 - v for v in word)
        return word

    def compose(self, other):
        """The symmetry equal to applying `other` first, then self."""
        target = self.apply_word(other.apply_word(_WITNESS))
        return _BY_WITNESS_IMAGE[target]

    def inverse(self):
        return _BY_WITNESS_IMAGE[_inverse_image(self)]

def _inverse_image(s):
    for t in Symmetry:
        if t.apply_word(s.apply_word(_WITNESS)) == _WITNESS:
            return t.apply_word(_WITNESS)
    raise AssertionError('Symmetry group is not closed.')

_BY_WITNESS_IMAGE = {s.apply_word(_WITNESS): s for s in Symmetry}

def apply_symmetry(s, p):
    """
    Applies one of the eight symmetries of the square to a permutation.

    Parameters
    ----------
    s : Symmetry
    p : Permutation

    Returns
    -------
    Permutation : e.g. reverse(231) = 132, complement(231) = 213,
        inverse(231) = 312
    """
    return Permutation.trusted(s.apply_word(p))

def nontrivial_intervals(p):
    """
    Finds every nontrivial interval of p: a block of at least two entries,
    smaller than the whole permutation, consecutive in positions and values.

    Parameters
    ----------
    p : Permutation

    Returns
    -------
    list of ((int, int), (int, int)) : (first position, last position) and
        (smallest value, largest value), ordered by position range.
    """
    word = tuple(p)
    n = len(word)
    found = []
    for start in range(n):
        low = high = word[start]
        for end in range(start + 1, n):
            low = min(low, word[end])
            high = max(high, word[end])
            if end - start == n - 1:
                break
            if high - low == end - start:
                found.append(((start + 1, end + 1), (low, high)))
    return found

def is_simple(p):
    """True if p has no nontrivial interval; lengths 0, 1 and 2 are simple."""
    return len(nontrivial_intervals(p)) == 0

def permutations_of_length(n):
    """Yields S_n in lexicographic order."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation.trusted(word)
