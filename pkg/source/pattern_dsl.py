#!/usr/bin/env python
"""
Reading and writing the textual pattern notation shared by fixture files,
command-line arguments and reports, plus ASCII pictures of pattern grids.

The grammar lives in grammar/pattern_grammar.lark at the top of the
repository.
"""
import os
import functools
from dataclasses import dataclass

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from perms import InvalidPermutationError, Permutation, to_text as perm_text
from patterns import (AtLeast, Avoids, BarredPattern, Pattern, PatternError,
                      Shaded, as_pattern)

# Largest pattern render_ascii will draw
MAX_RENDER_LENGTH = 20

@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

class PatternSyntaxError(PatternError):
    """A pattern text that does not parse, with the offending span."""
    def __init__(self, message, span, text):
        self.message = message
        self.span = span
        self.text = text
        super().__init__(self._describe())

    def _describe(self):
        width = max(1, self.span.end - self.span.start)
        return '{message}\n  {text}\n  {pointer}'.format(
            message=self.message, text=self.text,
            pointer=' ' * self.span.start + '^' * width)

def read_grammar():
    script_dir = os.path.dirname(os.path.realpath(__file__))
    grammar_dir = os.path.realpath(os.path.join(script_dir, '..', 'grammar'))
    with open(os.path.join(grammar_dir, 'pattern_grammar.lark'), 'r') as grammar_file:
        grammar = grammar_file.read()
    return grammar

@functools.lru_cache(maxsize=None)
def get_parser():
    return Lark(read_grammar(), parser='lalr', propagate_positions=True)

def _meta_span(meta, fallback):
    if getattr(meta, 'empty', True):
        return fallback
    return SourceSpan(meta.start_pos, meta.end_pos)

class PatternBuilder(Transformer):
    """Turns a parse tree into Pattern / BarredPattern values."""
    def __init__(self, text):
        super().__init__()
        self.text = text

    def _fail(self, message, span):
        raise PatternSyntaxError(message, span, self.text)

    def _word(self, entries, span):
        try:
            return (Permutation(entries), span)
        except InvalidPermutationError as err:
            self._fail(str(err), span)

    def digit_word(self, children):
        token, = children
        return self._word([int(c) for c in token], SourceSpan(token.start_pos, token.end_pos))

    @v_args(meta=True)
    def list_word(self, meta, children):
        fallback = SourceSpan(children[0].start_pos, children[-1].end_pos)
        return self._word([int(t) for t in children], _meta_span(meta, fallback))

    def box(self, children):
        i, j = children
        return ((int(i), int(j)), SourceSpan(i.start_pos, j.end_pos))

    def boxset(self, children):
        return list(children)

    def shaded(self, children):
        boxset, = children
        return (Shaded, boxset, None)

    def marked(self, children):
        boxset, count = children
        if int(count) < 1:
            self._fail('Mark count must be at least 1, got {m}.'.format(m=int(count)),
                       SourceSpan(count.start_pos, count.end_pos))
        return (AtLeast, boxset, int(count))

    def decorated(self, children):
        boxset, inner = children
        return (Avoids, boxset, inner)

    @v_args(meta=True)
    def pattern(self, meta, children):
        (word, word_span), clauses = children[0], children[1:]
        k = len(word)
        constraints = []
        for kind, boxset, payload in clauses:
            for (i, j), span in boxset:
                if not (0 <= i <= k and 0 <= j <= k):
                    self._fail('Box ({i},{j}) lies outside the grid of a length-{k} pattern.'.format(i=i, j=j, k=k), span)
            boxes = [box for box, _ in boxset]
            if kind is Shaded:
                constraints.append(Shaded(boxes))
            else:
                constraints.append(kind(boxes, payload))
        try:
            return Pattern(word, tuple(constraints))
        except PatternError as err:
            self._fail(str(err), _meta_span(meta, word_span))

    def barred(self, children):
        token, = children
        span = SourceSpan(token.start_pos, token.end_pos)
        entries = []
        bars = set()
        for c in str(token):
            if c == "'":
                if len(entries) in bars:
                    self._fail('Letter {i} is barred twice.'.format(i=len(entries)), span)
                bars.add(len(entries))
            else:
                entries.append(int(c))
        word, _ = self._word(entries, span)
        try:
            return BarredPattern(word, frozenset(bars))
        except PatternError as err:
            self._fail(str(err), span)

    def start(self, children):
        return children[0]

def parse(text):
    """
    Parses a pattern in the textual notation.

    Parameters
    ----------
    text : str
        e.g. "132|sh{(0,2),(1,2),(2,2)}", "21|dec{(1,1)}avoids(12)" or "35'241"

    Returns
    -------
    Pattern or BarredPattern

    Raises
    ------
    PatternSyntaxError : text is not a valid pattern; the error carries a
        SourceSpan into text.
    """
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as err:
        pos = getattr(err, 'pos_in_stream', None)
        if pos is None or pos < 0:
            pos = len(text)
        raise PatternSyntaxError('Cannot parse pattern {text!r}: unexpected input at offset {pos}.'.format(text=text, pos=pos),
                                 SourceSpan(pos, min(pos + 1, len(text))), text) from None
    try:
        return PatternBuilder(text).transform(tree)
    except VisitError as err:
        raise err.orig_exc from None

def parse_pattern(text):
    """Like parse, but barred patterns come back translated into a Pattern."""
    return as_pattern(parse(text))

def _boxes_text(boxes):
    return '{' + ','.join('({i},{j})'.format(i=i, j=j) for i, j in sorted(boxes)) + '}'

def to_text(pat):
    """
    Canonical text of a pattern: clauses in the order sh, mark, dec with boxes
    sorted, so parse(to_text(x)) == x.

    Parameters
    ----------
    pat : Pattern or BarredPattern

    Returns
    -------
    str
    """
    if isinstance(pat, BarredPattern):
        return ''.join(str(v) + ("'" if i in pat.barred else '')
                       for i, v in enumerate(pat.word, start=1))
    text = perm_text(pat.word)
    for c in pat.constraints:
        if isinstance(c, Shaded):
            text += '|sh' + _boxes_text(c.boxes)
        elif isinstance(c, AtLeast):
            text += '|mark' + _boxes_text(c.boxes) + '>={m}'.format(m=c.count)
        else:
            text += '|dec' + _boxes_text(c.boxes) + 'avoids(' + to_text(c.pattern) + ')'
    return text

def render_ascii(pat):
    """
    Draws the grid of a pattern, top row first, one text line per box row and
    per point row.

    Points are drawn as "●", shaded boxes as "▒", marked boxes as their count
    (or "+" for counts of 10 or more) and decorated boxes as a letter that is
    explained in a legend below the grid.

    Parameters
    ----------
    pat : Pattern or BarredPattern

    Returns
    -------
    str : 2k+1 grid lines, then one legend line per decoration.
    """
    pat = as_pattern(pat)
    k = len(pat)
    if k > MAX_RENDER_LENGTH:
        raise PatternError('Cannot render a pattern of length {k}; the limit is {m}.'.format(k=k, m=MAX_RENDER_LENGTH))
    cells = {}
    legend = []
    for c in reversed(pat.constraints):
        if isinstance(c, Shaded):
            mark = '▒'
        elif isinstance(c, AtLeast):
            mark = str(c.count) if c.count < 10 else '+'
        else:
            mark = chr(ord('a') + pat.decorations.index(c))
        for box in c.boxes:
            cells[box] = mark
    for index, c in enumerate(pat.decorations):
        legend.append('{letter}: avoids {q}'.format(letter=chr(ord('a') + index), q=to_text(c.pattern)))

    lines = []
    for line in range(2 * k + 1):
        if line % 2 == 0:
            u = k - line // 2
            row = ''.join(cells.get((col // 2, u), ' ') if col % 2 == 0 else '│'
                          for col in range(2 * k + 1))
        else:
            v = k - (line - 1) // 2
            row = ''.join('─' if col % 2 == 0 else ('●' if pat.word((col + 1) // 2) == v else '┼')
                          for col in range(2 * k + 1))
        lines.append(row)
    return '\n'.join(lines + legend)
