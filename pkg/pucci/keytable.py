"""International key tables.

Chart A keys (articles, demonstratives, personal pronouns, possessives,
relatives, the conjunction and the plural/gender markers), their canonical
notation and their per-language surface realizations.
"""
import collections
import io
import logging
import re

import six

from . import exceptions

default_logger = logging.getLogger('pucci.keytable')

# tense ideograms of Chart B
(ID1, ID2, ID3, ID4, ID5, ID6, ID7, ID8, ID9, ID10, ID11) = range(1, 12)
tense_names = ['infinitive', 'present indicative', 'imperfect',
               'remote past', 'future', 'present subjunctive',
               'past subjunctive', 'present participle', 'past participle',
               'imperative', 'conditional']
FINITE_TENSES = frozenset([ID2, ID3, ID4, ID5, ID6, ID7, ID10, ID11])
TENSE_RE = re.compile(r'^ID(\d+)$')


def parse_tense(notation):
    """Return the tense ideogram denoted by ``ID1`` to ``ID11``."""
    match = TENSE_RE.match(notation)
    if match is None or not ID1 <= int(match.group(1)) <= ID11:
        raise exceptions.KeyNotationError(notation, 'not a tense ideogram')
    return int(match.group(1))


def print_tense(tense):
    if not ID1 <= tense <= ID11:
        raise ValueError('Unknown tense ideogram.')
    return 'ID{}'.format(tense)


def tense_name(tense):
    return tense_names[tense - 1]

(ARTICLE, DEMONSTRATIVE_NEAR, DEMONSTRATIVE_FAR, PERSONAL_PRONOUN,
 POSSESSIVE, RELATIVE, CONJUNCTION, PLURAL_MARKER, GENDER_MARKER,
 PERSONAL_RELATIVE_INDICATOR) = \
    ('Article', 'DemonstrativeNear', 'DemonstrativeFar', 'PersonalPronoun',
     'Possessive', 'Relative', 'Conjunction', 'PluralMarker', 'GenderMarker',
     'PersonalRelativeIndicator')
category_names = [ARTICLE, DEMONSTRATIVE_NEAR, DEMONSTRATIVE_FAR,
                  PERSONAL_PRONOUN, POSSESSIVE, RELATIVE, CONJUNCTION,
                  PLURAL_MARKER, GENDER_MARKER, PERSONAL_RELATIVE_INDICATOR]

# categories whose keys carry a case index
CASED = frozenset([ARTICLE, DEMONSTRATIVE_NEAR, DEMONSTRATIVE_FAR,
                   PERSONAL_PRONOUN, POSSESSIVE, RELATIVE])
# categories that agree with the noun they determine
DETERMINERS = frozenset([ARTICLE, DEMONSTRATIVE_NEAR, DEMONSTRATIVE_FAR,
                         POSSESSIVE])
# markers only carry agreement and never realize
MARKERS = frozenset([PLURAL_MARKER, GENDER_MARKER])

BASE, GENITIVE, DATIVE, OBJECT = ('base', 'genitive', 'dative', 'object')
CASE_LAYOUT = {BASE: 1, GENITIVE: 2, DATIVE: 3, OBJECT: 4}
# the first person possessive row prints genitive and dative first
POSSESSIVE_M_LAYOUT = {GENITIVE: 1, DATIVE: 2, BASE: 3, OBJECT: 4}

SIMPLE_LETTERS = {
    'a': ARTICLE,
    'D': DEMONSTRATIVE_NEAR,
    'd': DEMONSTRATIVE_FAR,
    'R': RELATIVE,
}
PRONOUN_LETTERS = collections.OrderedDict([
    ('I', (1, None)),
    ('II', (2, None)),
    ('III', (3, 'm')),
    ('IIIf', (3, 'f')),
    ('IIIn', (3, 'n')),
])
POSSESSIVE_LETTERS = collections.OrderedDict([
    ('M', (1, 'sg')),
    ('T', (2, 'sg')),
    ('S', (3, 'sg')),
    ('N', (1, 'pl')),
    ('V', (2, 'pl')),
    ('L', (3, 'pl')),
])

NOTATION_RE = re.compile(r'^(IIIf|IIIn|III|II|I|a|D|d|M|T|S|N|V|R|L)'
                         r'(\.|\d+)?$')


class GrammaticalKey(collections.namedtuple(
        'GrammaticalKey',
        ['category', 'person', 'number', 'gender', 'case_index'])):
    """A grammatical key of Chart A.

    ``number`` is the number of the pronoun, or the number of the owner for
    possessives. ``case_index`` is the printed row index, 1 to 4; plural
    pronouns keep 1 to 4 here and print with an offset of 10.
    """
    __slots__ = ()

    def __new__(cls, category, person=None, number=None, gender=None,
                case_index=None):
        return super(GrammaticalKey, cls).__new__(
            cls, category, person, number, gender, case_index)

    @property
    def case(self):
        """Grammatical case of the key, per the layout of its family."""
        if self.case_index is None:
            return None
        for name, index in six.iteritems(_layout(self)):
            if index == self.case_index:
                return name

    def with_case(self, case):
        """Return the key of the same family for another grammatical case."""
        return self._replace(case_index=_layout(self)[case])

    @property
    def is_determiner(self):
        return self.category in DETERMINERS

    @property
    def is_marker(self):
        return self.category in MARKERS

    def __str__(self):
        return print_key(self)


AgreementContext = collections.namedtuple('AgreementContext',
                                          ['gender', 'number', 'elided'])
AgreementContext.__new__.__defaults__ = (None, None, False)

KeyMatch = collections.namedtuple('KeyMatch', ['key', 'gender', 'number'])


def _layout(key):
    if key.category == POSSESSIVE and key.person == 1 and \
            key.number == 'sg':
        return POSSESSIVE_M_LAYOUT
    return CASE_LAYOUT


def parse_key_notation(notation):
    """Parse a key in canonical or Chart A notation.

    Example usage::

        parse_key_notation('M2')   # first person possessive, row 2
        parse_key_notation('a.')   # article, case index 1
        parse_key_notation('III14')  # third person plural, object
    """
    token = notation.strip()
    if token == '&':
        return GrammaticalKey(CONJUNCTION)
    if token == '+':
        return GrammaticalKey(PLURAL_MARKER)
    if token in ('m', 'f'):
        return GrammaticalKey(GENDER_MARKER, gender=token)
    if token == 'I.':
        return GrammaticalKey(PERSONAL_RELATIVE_INDICATOR)
    match = NOTATION_RE.match(token)
    if match is None:
        raise exceptions.KeyNotationError(notation, 'unknown key letter')
    letter, suffix = match.groups()
    if suffix is None or suffix == '.':
        index = 1
    else:
        index = int(suffix)
    if letter in PRONOUN_LETTERS:
        person, gender = PRONOUN_LETTERS[letter]
        if 1 <= index <= 4:
            number = 'sg'
        elif 11 <= index <= 14:
            number = 'pl'
            index -= 10
        else:
            raise exceptions.KeyNotationError(
                notation, 'case index outside 1-4 and 11-14')
        return GrammaticalKey(PERSONAL_PRONOUN, person, number, gender, index)
    if 11 <= index <= 14:
        raise exceptions.KeyNotationError(
            notation, 'plural index on a non-pronoun key')
    if not 1 <= index <= 4:
        raise exceptions.KeyNotationError(notation,
                                          'case index outside 1-4')
    if letter in POSSESSIVE_LETTERS:
        person, number = POSSESSIVE_LETTERS[letter]
        return GrammaticalKey(POSSESSIVE, person, number, None, index)
    return GrammaticalKey(SIMPLE_LETTERS[letter], case_index=index)


def print_key(key):
    """Return the canonical notation of a key."""
    if key.category == CONJUNCTION:
        return '&'
    if key.category == PLURAL_MARKER:
        return '+'
    if key.category == GENDER_MARKER:
        return key.gender
    if key.category == PERSONAL_RELATIVE_INDICATOR:
        return 'I.'
    if key.category == PERSONAL_PRONOUN:
        for letter, (person, gender) in six.iteritems(PRONOUN_LETTERS):
            if person == key.person and gender == key.gender:
                offset = 10 if key.number == 'pl' else 0
                return '{}{}'.format(letter, key.case_index + offset)
    elif key.category == POSSESSIVE:
        for letter, owner in six.iteritems(POSSESSIVE_LETTERS):
            if owner == (key.person, key.number):
                return '{}{}'.format(letter, key.case_index)
    else:
        for letter, category in six.iteritems(SIMPLE_LETTERS):
            if category == key.category:
                return '{}{}'.format(letter, key.case_index)
    raise ValueError('Key outside the canonical inventory.')


def canonical_inventory():
    """Return every key of the canonical scheme, in table order."""
    keys = []
    for letter in ('a', 'D', 'd'):
        keys.extend(GrammaticalKey(SIMPLE_LETTERS[letter], case_index=i)
                    for i in range(1, 5))
    for person, gender in PRONOUN_LETTERS.values():
        for number in ('sg', 'pl'):
            keys.extend(GrammaticalKey(PERSONAL_PRONOUN, person, number,
                                       gender, i) for i in range(1, 5))
    for person, number in POSSESSIVE_LETTERS.values():
        keys.extend(GrammaticalKey(POSSESSIVE, person, number, None, i)
                    for i in range(1, 5))
    keys.extend(GrammaticalKey(RELATIVE, case_index=i) for i in range(1, 5))
    keys.append(GrammaticalKey(CONJUNCTION))
    keys.append(GrammaticalKey(PLURAL_MARKER))
    keys.append(GrammaticalKey(GENDER_MARKER, gender='m'))
    keys.append(GrammaticalKey(GENDER_MARKER, gender='f'))
    keys.append(GrammaticalKey(PERSONAL_RELATIVE_INDICATOR))
    return keys


def realizable_inventory():
    """Keys the encoder can emit and a realization table must cover."""
    return [key for key in canonical_inventory()
            if not key.is_marker and
            key.category != PERSONAL_RELATIVE_INDICATOR]


class KeyRealizationTable(object):
    """Surface realizations of the keys for one language.

    Each cell maps a key and an agreement (gender, number) to one or more
    surface variants; the first variant is the realization, the others are
    only recognized. ``None`` in a cell's gender or number matches any
    context.

    :param language: Language code of the table, such as ``'it'``.
    """
    def __init__(self, language):
        self.language = language
        self.cells = collections.OrderedDict()
        self._reverse = None

    def add(self, key, gender, number, surfaces):
        self.cells.setdefault(key, []).append((gender, number,
                                               list(surfaces)))
        self._reverse = None

    def __contains__(self, key):
        return key in self.cells

    def __len__(self):
        return len(self.cells)

    def lookup(self, key, context=None):
        """Return the surface for a key in an agreement context."""
        context = context or AgreementContext()
        rows = self.cells.get(key, [])
        for want_gender, want_number in (
                (context.gender, context.number), (context.gender, None),
                (None, context.number), (None, None)):
            for gender, number, surfaces in rows:
                if gender == want_gender and number == want_number:
                    return self._pick(surfaces, context.elided)
        raise exceptions.CoverageError(self.language, print_key(key),
                                       context)

    @staticmethod
    def _pick(surfaces, elided):
        for surface in surfaces:
            if surface.endswith("'") == bool(elided):
                return surface
        return surfaces[0]

    def surfaces(self, key):
        """Return every surface variant recorded for a key."""
        result = []
        for _, _, surfaces in self.cells.get(key, []):
            result.extend(s for s in surfaces if s not in result)
        return result

    def reverse(self, surface):
        """Return the keys a surface can realize, in table order."""
        if self._reverse is None:
            self._reverse = {}
            for key, rows in six.iteritems(self.cells):
                for gender, number, surfaces in rows:
                    for s in surfaces:
                        self._reverse.setdefault(s.lower(), []).append(
                            KeyMatch(key, gender, number))
        return list(self._reverse.get(surface.lower(), []))

    def longest_surface(self):
        """Number of words of the longest recorded surface."""
        return max([len(s.split()) for key in self.cells
                    for s in self.surfaces(key)] or [0])

    def missing(self, inventory=None):
        """Return the keys of an inventory that have no cell."""
        if inventory is None:
            inventory = realizable_inventory()
        return [key for key in inventory if key not in self.cells]


def lookup_key(table, key, context=None):
    return table.lookup(key, context)


def _column(value, allowed, path, line_number):
    if value == '-':
        return None
    if value not in allowed:
        raise exceptions.KeyTableLoadError(
            path, line_number, 'unexpected value "{}"'.format(value))
    return value


def load_key_table(path, language):
    """Load the realizations of one language from a key table file.

    The file is tab separated: key notation, language, gender, number and
    surface, with ``-`` for any gender or number. Surface variants are
    separated by ``/``. Lines starting with ``#`` are comments.
    """
    table = KeyRealizationTable(language)
    with io.open(path, encoding='utf-8') as f:
        for line_number, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            fields = line.split('\t')
            if len(fields) != 5:
                raise exceptions.KeyTableLoadError(
                    path, line_number,
                    'expected 5 fields, got {}'.format(len(fields)))
            notation, lang, gender, number, surface = fields
            if lang != language:
                continue
            try:
                key = parse_key_notation(notation)
            except exceptions.KeyNotationError as exc:
                six.raise_from(exceptions.KeyTableLoadError(
                    path, line_number, str(exc)), exc)
            table.add(key,
                      _column(gender, ('m', 'f', 'n'), path, line_number),
                      _column(number, ('sg', 'pl'), path, line_number),
                      [s.strip() for s in surface.split('/')])
    default_logger.debug('loaded %d %s keys from %s', len(table), language,
                         path)
    return table
