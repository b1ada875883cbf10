"""Word-level diff and the comparison statistics.

Two versions of a text are aligned on their longest common subsequence of
tokens. Each maximal run of unmatched tokens is a hunk; a hunk with tokens
on the A side counts as a removal, one with tokens on the B side as an
addition.
"""
import collections
import fractions
import logging
import math

import numpy as np

from . import exceptions
from . import tokens as _tokens

default_logger = logging.getLogger('pucci.diffalign')

Span = collections.namedtuple('Span', ['start', 'end'])
Hunk = collections.namedtuple('Hunk', ['a', 'b'])
EffectSize = collections.namedtuple(
    'EffectSize', ['eta_squared', 'cohens_f', 'group_means'])

# published (removals, additions) of the fifteen comparisons, by group
PUBLISHED_COUNTS = [
    [(23, 20), (21, 19), (22, 23)],
    [(30, 25), (27, 23), (25, 21), (20, 22), (20, 19), (24, 28)],
    [(20, 20), (24, 23), (24, 24), (25, 27), (25, 26), (24, 22)],
]


class DiffReport(object):
    """Hunk counts of a word diff.

    :param hunks: ``Hunk(a, b)`` pairs of token ``Span`` ranges, in order.
    :param a_tokens: Tokens of version A.
    :param b_tokens: Tokens of version B.
    """
    def __init__(self, hunks, a_tokens=None, b_tokens=None):
        self.hunks = list(hunks)
        self.a_tokens = a_tokens or []
        self.b_tokens = b_tokens or []
        self.removals = sum(1 for h in self.hunks if h.a.end > h.a.start)
        self.additions = sum(1 for h in self.hunks if h.b.end > h.b.start)

    @property
    def total(self):
        return self.removals + self.additions

    def render(self):
        return 'removals={} additions={}'.format(self.removals,
                                                self.additions)

    def hunk_listing(self, a_tokens=None, b_tokens=None):
        """Return the hunks as ``- removed`` / ``+ added`` lines."""
        a_tokens = a_tokens if a_tokens is not None else self.a_tokens
        b_tokens = b_tokens if b_tokens is not None else self.b_tokens
        lines = []
        for number, hunk in enumerate(self.hunks, 1):
            lines.append('@@ {} a[{}:{}] b[{}:{}]'.format(
                number, hunk.a.start, hunk.a.end, hunk.b.start, hunk.b.end))
            if hunk.a.end > hunk.a.start:
                lines.append('- ' + ' '.join(
                    a_tokens[hunk.a.start:hunk.a.end]))
            if hunk.b.end > hunk.b.start:
                lines.append('+ ' + ' '.join(
                    b_tokens[hunk.b.start:hunk.b.end]))
        return '\n'.join(lines)

    def __repr__(self):
        return '<DiffReport {}>'.format(self.render())


def lcs_table(a, b):
    """Return the LCS length table of two token lists.

    Row ``i`` is the running maximum of the row above and of the diagonal
    plus one where ``a[i - 1]`` matches.
    """
    table = np.zeros((len(a) + 1, len(b) + 1), dtype=np.int32)
    b_tokens = np.array(b, dtype=object)
    for i in range(1, len(a) + 1):
        match = (b_tokens == a[i - 1]).astype(np.int32)
        candidates = np.maximum(table[i - 1, 1:], table[i - 1, :-1] + match)
        table[i, 1:] = np.maximum.accumulate(candidates)
    return table


def common_subsequence(a, b):
    """Return the matched ``(i, j)`` index pairs of an LCS, in order."""
    table = lcs_table(a, b)
    pairs = []
    i, j = len(a), len(b)
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            pairs.append((i - 1, j - 1))
            i -= 1
            j -= 1
        elif table[i, j - 1] > table[i - 1, j]:
            j -= 1
        else:
            i -= 1
    pairs.reverse()
    return pairs


def _hunks(a, b):
    hunks = []
    i = j = 0
    for next_i, next_j in common_subsequence(a, b) + [(len(a), len(b))]:
        if next_i > i or next_j > j:
            hunks.append(Hunk(Span(i, next_i), Span(j, next_j)))
        i, j = next_i + 1, next_j + 1
    return hunks


def word_diff(a, b):
    """Diff two texts word by word.

    Tokens are compared case sensitively and punctuation marks are tokens
    of their own. The alignment is computed on the pair in a fixed order so
    that swapping the texts swaps removals and additions exactly.
    """
    a_tokens = _tokens.tokenize(a)
    b_tokens = _tokens.tokenize(b)
    if (len(a_tokens), a_tokens) <= (len(b_tokens), b_tokens):
        hunks = _hunks(a_tokens, b_tokens)
    else:
        hunks = [Hunk(h.b, h.a) for h in _hunks(b_tokens, a_tokens)]
    report = DiffReport(hunks, a_tokens, b_tokens)
    default_logger.debug('diff of %d and %d tokens: %s', len(a_tokens),
                         len(b_tokens), report.render())
    return report


def group_stats(groups):
    """Mean of the removal and addition values of each group.

    ``groups`` is a sequence of groups of ``(removals, additions)`` pairs.
    Means are exact fractions.
    """
    means = []
    for group in groups:
        values = [v for pair in group for v in pair]
        if not values:
            raise exceptions.StatisticsError('Empty comparison group.')
        means.append(fractions.Fraction(sum(values), len(values)))
    return means


def cohens_f(eta_squared):
    """Cohen's f from eta squared; infinite when eta squared is 1."""
    if eta_squared >= 1:
        return float('inf')
    return math.sqrt(eta_squared / (1 - eta_squared))


def effect_size(groups):
    """One-way ANOVA effect size of value groups.

    Eta squared is the between-group share of the total sum of squares,
    0 when the values do not vary at all.
    """
    groups = [np.asarray(g, dtype=float) for g in groups]
    if len(groups) < 2:
        raise exceptions.StatisticsError('At least two groups are needed.')
    if any(g.size == 0 for g in groups):
        raise exceptions.StatisticsError('Empty group.')
    values = np.concatenate(groups)
    grand_mean = values.mean()
    ss_total = float(((values - grand_mean) ** 2).sum())
    ss_between = float(sum(g.size * (g.mean() - grand_mean) ** 2
                           for g in groups))
    eta_squared = ss_between / ss_total if ss_total > 0 else 0.0
    return EffectSize(eta_squared, cohens_f(eta_squared),
                      [float(g.mean()) for g in groups])


def published_counts():
    """The fifteen published comparison counts, as three groups."""
    return [list(group) for group in PUBLISHED_COUNTS]


def arrangement(groups, group_count=3):
    """Flatten comparison groups into value groups for ``effect_size``.

    With ``group_count=2`` the second and third groups are pooled.
    """
    if group_count not in (2, 3):
        raise ValueError('Group count must be 2 or 3.')
    values = [[v for pair in group for v in pair] for group in groups]
    if group_count == 2:
        values = [values[0], [v for group in values[1:] for v in group]]
    return values
