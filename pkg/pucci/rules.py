"""Token rewrite engine for the correction stages.

A correction rule matches a sequence of draft tokens with literal and
feature predicates and rewrites it. Rules of a stage are tried in priority
order; the first rule that matches anywhere, scanning from the left, is
applied and the scan restarts, until no rule matches.
"""
import collections
import io
import logging
import re

import six

from . import exceptions
from . import tokens as _tokens

default_logger = logging.getLogger('pucci.rules')

SYNTACTIC, MORPHOLOGICAL, DIFFERENTIAL = \
    ('syntactic', 'morphological', 'differential')
stage_names = [SYNTACTIC, MORPHOLOGICAL, DIFFERENTIAL]

ELEMENT_RE = re.compile(r'^(?P<negated>!)?(?P<literal>[^{}]*)'
                        r'(?:\{(?P<features>[^{}]*)\})?$')
REFERENCE_RE = re.compile(r'^\$(\d+)$')


class DraftToken(object):
    """A target-language token with the features the corrections test.

    :param surface: The text of the token.
    :param features: Mapping of feature name to string value, such as
                     ``pos``, ``gender``, ``number``, ``cat`` or ``clitic``.
    """
    def __init__(self, surface, features=None):
        self.surface = surface
        self.features = dict(features or {})

    def feature(self, name):
        if name == 'vowel':
            return 'yes' if _tokens.starts_with_vowel(self.surface) else 'no'
        value = self.features.get(name)
        return None if value is None else str(value)

    def copy(self, surface=None, **features):
        token = DraftToken(self.surface if surface is None else surface,
                           self.features)
        token.features.update(features)
        return token

    def __eq__(self, other):
        return isinstance(other, DraftToken) and \
            self.surface == other.surface and self.features == other.features

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'DraftToken({!r})'.format(self.surface)


def surfaces(tokens):
    return [t.surface for t in tokens]


def _parse_features(text):
    features = collections.OrderedDict()
    if not text:
        return features
    for item in text.split(','):
        name, equals, value = item.partition('=')
        if not equals or not name.strip() or not value.strip():
            raise ValueError('malformed feature "{}"'.format(item))
        features[name.strip()] = value.strip()
    return features


class PatternElement(object):
    """One position of a rule pattern.

    ``literal`` is compared case insensitively with the surface, each
    feature predicate must hold, and a negated element only checks that
    the next token does not match, without consuming it.
    """
    def __init__(self, text):
        match = ELEMENT_RE.match(text)
        if match is None or not (match.group('literal') or
                                 match.group('features') is not None):
            raise ValueError('malformed pattern element "{}"'.format(text))
        self.text = text
        self.negated = bool(match.group('negated'))
        self.literal = match.group('literal').lower() or None
        self.features = _parse_features(match.group('features'))

    def matches(self, token):
        if self.literal is not None and \
                token.surface.lower() != self.literal:
            return False
        return all(token.feature(name) == value
                   for name, value in six.iteritems(self.features))

    def same_as(self, other):
        return self.literal == other.literal and \
            self.features == other.features and \
            self.negated == other.negated

    def compatible(self, other):
        """Whether a token described by ``other`` could match this one."""
        if self.literal is None and other.literal is None:
            return self.same_as(other)
        if self.literal is not None and other.literal is not None and \
                self.literal != other.literal:
            return False
        return all(other.features.get(k, v) == v
                   for k, v in six.iteritems(self.features))

    def __repr__(self):
        return self.text


class CorrectionRule(object):
    """A rewrite of one correction stage.

    :param stage: One of ``stage_names``.
    :param priority: Rules with a lower priority are tried first.
    :param pattern: Pattern elements, as strings.
    :param rewrite: Rewrite elements: ``$n`` copies the n-th matched token,
                    any other text is a new token that takes the features of
                    the matched token at the same position. A rewrite
                    element may carry ``{feature=value}`` overrides.
    """
    def __init__(self, stage, priority, pattern, rewrite, line_number=None):
        if stage not in stage_names:
            raise ValueError('Unknown correction stage.')
        self.stage = stage
        self.priority = int(priority)
        self.pattern = [PatternElement(p) for p in pattern]
        self.rewrite = list(rewrite)
        self.line_number = line_number
        self.consumed = [p for p in self.pattern if not p.negated]
        if not self.consumed:
            raise ValueError('Pattern consumes no token.')
        for element in self.rewrite:
            reference = REFERENCE_RE.match(element)
            if reference and not \
                    1 <= int(reference.group(1)) <= len(self.consumed):
                raise ValueError('Rewrite refers to an unmatched token.')

    def match(self, tokens, position):
        """Return the number of tokens matched at a position, or 0."""
        offset = position
        for element in self.pattern:
            if element.negated:
                if offset < len(tokens) and element.matches(tokens[offset]):
                    return 0
                continue
            if offset >= len(tokens) or not element.matches(tokens[offset]):
                return 0
            offset += 1
        return offset - position

    def apply(self, tokens, position, length):
        matched = tokens[position:position + length]
        result = []
        for index, element in enumerate(self.rewrite):
            reference = REFERENCE_RE.match(element)
            if reference:
                result.append(matched[int(reference.group(1)) - 1].copy())
                continue
            parsed = ELEMENT_RE.match(element)
            source = matched[min(index, len(matched) - 1)]
            token = source.copy(parsed.group('literal'))
            token.features.update(_parse_features(parsed.group('features')))
            result.append(token)
        return tokens[:position] + result + tokens[position + length:]

    def _rewrite_elements(self):
        elements = []
        for element in self.rewrite:
            reference = REFERENCE_RE.match(element)
            if reference:
                elements.append(self.consumed[int(reference.group(1)) - 1])
            else:
                literal = PatternElement(element)
                elements.append(literal)
        return elements

    def reintroduces_match(self):
        """Whether the rewrite can contain the rule's own match."""
        produced = self._rewrite_elements()
        for start in range(len(produced)):
            offset = start
            matched = True
            for element in self.pattern:
                if element.negated:
                    if offset < len(produced) and \
                            produced[offset].literal is not None and \
                            element.compatible(produced[offset]):
                        matched = False
                        break
                    continue
                if offset >= len(produced) or \
                        not element.compatible(produced[offset]):
                    matched = False
                    break
                offset += 1
            if matched:
                return True
        return False

    def __repr__(self):
        return '<CorrectionRule {}:{} {} -> {}>'.format(
            self.stage, self.priority, ' '.join(map(repr, self.pattern)),
            ' '.join(self.rewrite))


def rewrite(tokens, rules, logger=None):
    """Apply rules to a token list until none matches.

    The number of rewrites is bounded by the token count times the rule
    count; going over raises ``CorrectionBudgetError``.
    """
    logger = logger or default_logger
    rules = sorted(rules, key=lambda r: r.priority)
    tokens = list(tokens)
    budget = max(len(tokens), 1) * max(len(rules), 1)
    steps = 0
    while True:
        for rule in rules:
            position = _find(rule, tokens)
            if position is not None:
                break
        else:
            return tokens
        length = rule.match(tokens, position)
        logger.debug('%s rule %d at %d: %s -> %s', rule.stage,
                     rule.priority, position,
                     ' '.join(surfaces(tokens[position:position + length])),
                     ' '.join(rule.rewrite))
        tokens = rule.apply(tokens, position, length)
        steps += 1
        if steps > budget:
            raise exceptions.CorrectionBudgetError(
                'More than {} rewrites in the {} stage'.format(
                    budget, rule.stage))


def _find(rule, tokens):
    for position in range(len(tokens)):
        if rule.match(tokens, position):
            return position


def load_correction_rules(path):
    """Load correction rules grouped by stage.

    The file is tab separated: stage, priority, pattern and rewrite, the
    last two as space separated elements. Returns a mapping of stage name
    to its rules in priority order.
    """
    stages = collections.OrderedDict((name, []) for name in stage_names)
    with io.open(path, encoding='utf-8') as f:
        for line_number, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            fields = line.split('\t')
            if len(fields) != 4:
                raise exceptions.RuleLoadError(
                    path, line_number,
                    'expected 4 fields, got {}'.format(len(fields)))
            try:
                rule = CorrectionRule(fields[0], fields[1],
                                      fields[2].split(), fields[3].split(),
                                      line_number)
            except ValueError as exc:
                six.raise_from(exceptions.RuleLoadError(
                    path, line_number, str(exc)), exc)
            if rule.reintroduces_match():
                raise exceptions.RuleLoadError(
                    path, line_number, 'rewrite reintroduces its own match')
            stages[rule.stage].append(rule)
    for name in stages:
        stages[name].sort(key=lambda r: r.priority)
    default_logger.debug('loaded correction rules from %s: %s', path,
                         ', '.join('{} {}'.format(len(v), k)
                                   for k, v in six.iteritems(stages)))
    return stages
