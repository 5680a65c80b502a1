#!/usr/bin/env python
"""
One pattern type for the whole hierarchy: a classical word plus an ordered
list of region constraints.

    Shaded(boxes)            the region holds no entries (mesh shading)
    AtLeast(boxes, m)        the region holds at least m entries (marking)
    Avoids(boxes, q)         the entries in the region avoid q (decoration)

A box (i, j) is the grid cell whose lower-left corner is (i, j); (0, 0) is the
bottom-left cell and a pattern of length k has boxes 0..k in each direction.

Barred patterns are kept as their own type and translated into this one.
"""
import logging
from dataclasses import dataclass

from perms import Permutation, Symmetry, standardize

class PatternError(ValueError):
    pass

class UnsupportedPatternError(PatternError):
    pass

def _normalize_boxes(boxes):
    boxes = frozenset((int(i), int(j)) for i, j in boxes)
    if len(boxes) == 0:
        raise PatternError('A region constraint needs at least one box.')
    return boxes

@dataclass(frozen=True)
class RegionConstraint:
    boxes: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'boxes', _normalize_boxes(self.boxes))

    def sorted_boxes(self):
        return tuple(sorted(self.boxes))

    def with_boxes(self, boxes):
        raise NotImplementedError

@dataclass(frozen=True)
class Shaded(RegionConstraint):
    RANK = 0

    def sort_key(self):
        return (self.RANK, self.sorted_boxes())

    def with_boxes(self, boxes):
        return Shaded(boxes)

@dataclass(frozen=True)
class AtLeast(RegionConstraint):
    count: int = 1
    RANK = 1

    def __post_init__(self):
        super().__post_init__()
        if int(self.count) < 1:
            raise PatternError('Mark count must be at least 1, got {m}.'.format(m=self.count))
        object.__setattr__(self, 'count', int(self.count))

    def sort_key(self):
        return (self.RANK, self.sorted_boxes(), self.count)

    def with_boxes(self, boxes):
        return AtLeast(boxes, self.count)

@dataclass(frozen=True)
class Avoids(RegionConstraint):
    pattern: 'Pattern' = None
    RANK = 2

    def __post_init__(self):
        super().__post_init__()
        if not isinstance(self.pattern, Pattern):
            raise PatternError('A decorated region needs a Pattern to avoid.')

    def sort_key(self):
        return (self.RANK, self.sorted_boxes(), self.pattern.sort_key())

    def with_boxes(self, boxes):
        return Avoids(boxes, self.pattern)

def _canonical_constraints(constraints):
    # Shadings merge into one region; everything else keeps its own region
    #   and is ordered by sort key, so equal patterns compare equal.
    shaded = set()
    rest = set()
    for c in constraints:
        if isinstance(c, Shaded):
            shaded |= c.boxes
        elif isinstance(c, (AtLeast, Avoids)):
            rest.add(c)
        else:
            raise PatternError('Unknown region constraint {c!r}.'.format(c=c))
    merged = [Shaded(shaded)] if shaded else []
    return tuple(merged + sorted(rest, key=lambda c: c.sort_key()))

@dataclass(frozen=True)
class Pattern:
    """
    A classical, mesh, marked-mesh or decorated pattern.

    Parameters
    ----------
    word : Permutation or sequence of int
        The underlying classical pattern, of length k >= 1.
    constraints : sequence of RegionConstraint
        Regions over boxes (i, j) with 0 <= i, j <= k. Empty for a classical
        pattern.
    """
    word: Permutation
    constraints: tuple = ()

    def __post_init__(self):
        word = self.word if isinstance(self.word, Permutation) else Permutation(self.word)
        if len(word) == 0:
            raise PatternError('A pattern needs at least one entry.')
        k = len(word)
        for c in self.constraints:
            for (i, j) in c.boxes:
                if not (0 <= i <= k and 0 <= j <= k):
                    raise PatternError('Box ({i},{j}) lies outside the grid of a length-{k} pattern.'.format(i=i, j=j, k=k))
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, 'constraints', _canonical_constraints(self.constraints))

    def __len__(self):
        return len(self.word)

    def __str__(self):
        # Imported late: the DSL module depends on this one.
        from pattern_dsl import to_text
        return to_text(self)

    @property
    def is_classical(self):
        return len(self.constraints) == 0

    @property
    def shaded_boxes(self):
        return frozenset().union(*[c.boxes for c in self.constraints if isinstance(c, Shaded)])

    @property
    def marks(self):
        return tuple(c for c in self.constraints if isinstance(c, AtLeast))

    @property
    def decorations(self):
        return tuple(c for c in self.constraints if isinstance(c, Avoids))

    def sort_key(self):
        return (len(self.word), self.word.word, tuple(c.sort_key() for c in self.constraints))

    def classical(self):
        return Pattern(self.word)

@dataclass(frozen=True)
class BarredPattern:
    """A classical word with bars over some of its (1-based) positions."""
    word: Permutation
    barred: frozenset = frozenset()

    def __post_init__(self):
        word = self.word if isinstance(self.word, Permutation) else Permutation(self.word)
        barred = frozenset(int(b) for b in self.barred)
        if not all(1 <= b <= len(word) for b in barred):
            raise PatternError('Bar positions {barred} lie outside a word of length {k}.'.format(barred=sorted(barred), k=len(word)))
        if len(barred) == len(word):
            raise PatternError('At least one entry of a barred pattern must stay unbarred.')
        if len(word) > 9:
            # Bars are written as quotes after single-digit letters.
            raise PatternError('Barred patterns are limited to length 9, got {k}.'.format(k=len(word)))
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, 'barred', barred)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        from pattern_dsl import to_text
        return to_text(self)

    def unbarred_word(self):
        return standardize([v for i, v in enumerate(self.word, start=1) if i not in self.barred])

def make_pattern(word, constraints=()):
    """
    Builds a validated Pattern.

    Parameters
    ----------
    word : Permutation or sequence of int
    constraints : list of RegionConstraint

    Returns
    -------
    Pattern

    Raises
    ------
    PatternError : a box outside the grid, or an empty box set
    """
    return Pattern(word, tuple(constraints))

def map_box(s, box, k):
    """Where the symmetry s sends box (i, j) of a length-k pattern."""
    inv, rev, comp = s.value
    i, j = box
    if inv:
        i, j = j, i
    if rev:
        i = k - i
    if comp:
        j = k - j
    return (i, j)

def apply_symmetry_pattern(s, pat):
    """
    Applies a symmetry of the square to a pattern: the word moves as in
    perms.apply_symmetry, every box moves with map_box, and decorations
    transform their payload with the same symmetry.

    Parameters
    ----------
    s : Symmetry
    pat : Pattern

    Returns
    -------
    Pattern
    """
    k = len(pat)
    constraints = []
    for c in pat.constraints:
        boxes = [map_box(s, b, k) for b in c.boxes]
        if isinstance(c, Avoids):
            constraints.append(Avoids(boxes, apply_symmetry_pattern(s, c.pattern)))
        else:
            constraints.append(c.with_boxes(boxes))
    return Pattern(Permutation.trusted(s.apply_word(pat.word)), tuple(constraints))

def symmetry_closure(pats):
    """All images of the patterns under the eight symmetries, without duplicates."""
    closed = {}
    for pat in pats:
        for s in Symmetry:
            image = apply_symmetry_pattern(s, pat)
            closed.setdefault(image, None)
    return tuple(sorted(closed, key=lambda p: p.sort_key()))

def barred_block(b):
    """
    Checks that the barred entries of b form an interval of the word, and
    returns the box they all fall into after removing them.

    Returns
    -------
    (int, int) or None : the box, or None if the bars are not an interval.
    """
    positions = sorted(b.barred)
    values = sorted(b.word(i) for i in positions)
    if len(positions) == 0:
        return None
    if positions[-1] - positions[0] != len(positions) - 1:
        return None
    if values[-1] - values[0] != len(values) - 1:
        return None
    return (positions[0] - 1, values[0] - 1)

def barred_to_decorated(b):
    """
    Translates a barred pattern whose barred entries form an interval into a
    decorated pattern: the unbarred standardization, with the single box that
    held the barred entries required to avoid their standardization.

    Parameters
    ----------
    b : BarredPattern

    Returns
    -------
    Pattern : e.g. 1 2' 3' 4 -> 12|dec{(1,1)}avoids(12)

    Raises
    ------
    UnsupportedPatternError : the bars are missing or not an interval
    """
    box = barred_block(b)
    if box is None:
        raise UnsupportedPatternError(
            'Barred pattern {b} has bars that do not form an interval; it has no '.format(b=b) +
            'decorated form and cannot be matched.')
    inner = standardize([b.word(i) for i in sorted(b.barred)])
    if len(inner) == 1:
        return Pattern(b.unbarred_word(), (Shaded([box]),))
    return Pattern(b.unbarred_word(), (Avoids([box], Pattern(inner)),))

def barred_to_mesh(b):
    """
    Translates a barred pattern with exactly one bar into a mesh pattern with
    one shaded box, e.g. 3 5' 2 4 1 -> 3241|sh{(1,4)}.

    Raises
    ------
    PatternError : b does not carry exactly one bar
    """
    if len(b.barred) != 1:
        raise PatternError('barred_to_mesh needs exactly one bar, {b} has {m}.'.format(b=b, m=len(b.barred)))
    return barred_to_decorated(b)

def as_pattern(pat):
    """Accepts a Pattern or a translatable BarredPattern and returns a Pattern."""
    if isinstance(pat, Pattern):
        return pat
    if isinstance(pat, BarredPattern):
        logging.debug('++ Translating barred pattern {b} for matching'.format(b=pat))
        return barred_to_decorated(pat)
    raise PatternError('Expected a pattern, got {pat!r}.'.format(pat=pat))

def _split(index, at):
    # Grid lines shift by one past the inserted point; the cell holding it
    #   becomes two cells.
    if index < at:
        return (index,)
    if index == at:
        return (at, at + 1)
    return (index + 1,)

def insert_point(pat, box, drop_marks_at=True):
    """
    Inserts a new entry into box (i, j) of the pattern's grid.

    Every constraint is carried onto the refined grid: a box in the same
    column or row as the new entry is replaced by the two halves it splits
    into. With drop_marks_at, markings whose region contains the chosen box are
    taken as satisfied by the new entry and dropped.

    Parameters
    ----------
    pat : Pattern
    box : (int, int)

    Returns
    -------
    Pattern : of length k + 1
    """
    i, j = box
    word = list(pat.word)
    k = len(word)
    if not (0 <= i <= k and 0 <= j <= k):
        raise PatternError('Box ({i},{j}) lies outside the grid of a length-{k} pattern.'.format(i=i, j=j, k=k))
    new_word = [v + 1 if v > j else v for v in word]
    new_word.insert(i, j + 1)
    constraints = []
    for c in pat.constraints:
        if drop_marks_at and isinstance(c, AtLeast) and (i, j) in c.boxes:
            continue
        boxes = [(t2, u2) for (t, u) in c.boxes for t2 in _split(t, i) for u2 in _split(u, j)]
        constraints.append(c.with_boxes(boxes))
    return Pattern(Permutation(new_word), tuple(constraints))
