"""Bilingual stem dictionary and simplification rules.

The lexicon is the mobile vocabulary of the book-machine: one entry per
(source lemma, part of speech) with its target lemma and genders, plus the
irregular cells of either side. It analyzes Italian surface forms into
lemmas and features, and realizes lemmas on either side.
"""
import collections
import io
import logging

import six

from . import exceptions
from . import keytable
from . import morphology
from . import tokens as _tokens

default_logger = logging.getLogger('pucci.lexicon')

(NOUN, VERB, ADJECTIVE, ADVERB, PREPOSITION, PROPER_NOUN, NUMERAL,
 OTHER) = ('noun', 'verb', 'adjective', 'adverb', 'preposition',
           'properNoun', 'numeral', 'other')
pos_names = [NOUN, VERB, ADJECTIVE, ADVERB, PREPOSITION, PROPER_NOUN,
             NUMERAL, OTHER]
# parts of speech that agree in gender and number with a noun
AGREEING = frozenset([ADJECTIVE, NUMERAL])
GENDERED = frozenset([NOUN, ADJECTIVE, NUMERAL])

SOURCE, TARGET = ('it', 'fr')
SIDES = (SOURCE, TARGET)
ADJECTIVE_CELLS = ('msg', 'fsg', 'mpl', 'fpl')
CELL_ALIASES = {'f': 'fsg', 'm': 'msg'}

SUPERLATIVE, RARE_EXPRESSION, DIRECT_CONSTRUCTION, ELLIPSIS_FILL = \
    ('superlative', 'rareExpression', 'directConstruction', 'ellipsisFill')
rule_classes = [SUPERLATIVE, RARE_EXPRESSION, DIRECT_CONSTRUCTION,
                ELLIPSIS_FILL]
WILDCARD = '*'
ANCHOR = '^'

MorphParadigm = morphology.MorphParadigm


class Analysis(collections.namedtuple(
        'Analysis',
        ['lemma', 'pos', 'gender', 'number', 'tense', 'person'])):
    """One reading of a surface form."""
    __slots__ = ()

    def __new__(cls, lemma, pos, gender=None, number=None, tense=None,
                person=None):
        return super(Analysis, cls).__new__(cls, lemma, pos, gender, number,
                                            tense, person)

    @property
    def features(self):
        return dict((k, v) for k, v in six.iteritems(self._asdict())
                    if k not in ('lemma', 'pos') and v is not None)


class LexiconEntry(object):
    """A bilingual dictionary entry.

    :param source_lemma: Italian citation form.
    :param pos: Part of speech, one of ``pos_names``.
    :param source_gender: ``'m'``, ``'f'`` or ``None``.
    :param target_lemma: French citation form. A multiword target such as
                         ``'beaucoup de'`` is invariable.
    :param target_gender: ``'m'``, ``'f'`` or ``None``.
    :param irregular: Mapping of side (``'it'`` or ``'fr'``) to a mapping of
                      cell name to surface. Cell names are ``IDn`` or
                      ``IDn.<person>`` for verbs, ``pl`` for nouns and
                      ``msg``/``fsg``/``mpl``/``fpl`` for adjectives. The
                      ``paradigm`` cell set to ``irregular`` restricts a verb
                      to its listed cells, set to ``invariable`` it freezes an
                      adjective; ``place=after`` marks a post-nominal target
                      adjective and ``it:valency=intransitive`` a verb that
                      takes no direct object.
    """
    def __init__(self, source_lemma, pos, source_gender, target_lemma,
                 target_gender, irregular=None, index=0):
        self.source_lemma = source_lemma
        self.pos = pos
        self.source_gender = source_gender
        self.target_lemma = target_lemma
        self.target_gender = target_gender
        self.irregular = irregular or {SOURCE: {}, TARGET: {}}
        self.index = index

    @property
    def key(self):
        return (self.source_lemma, self.pos)

    def mapping(self):
        return (self.target_lemma, self.target_gender, self.source_gender,
                self.irregular)

    def lemma(self, side):
        return self.source_lemma if side == SOURCE else self.target_lemma

    def gender(self, side):
        return self.source_gender if side == SOURCE else self.target_gender

    def cells(self, side):
        return self.irregular.get(side, {})

    def restricted(self, side):
        return self.cells(side).get('paradigm') == 'irregular'

    def invariable(self, side):
        return self.cells(side).get('paradigm') == 'invariable' or \
            ' ' in self.lemma(side)

    @property
    def place(self):
        return self.cells(TARGET).get('place', 'before')

    @property
    def transitive(self):
        return self.pos == VERB and \
            self.cells(SOURCE).get('valency') != 'intransitive'

    def __repr__(self):
        return '<LexiconEntry {}/{} -> {}>'.format(
            self.source_lemma, self.pos, self.target_lemma)


def _common_prefix(a, b):
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


class Lexicon(object):
    """In-memory bilingual lexicon.

    Entries are keyed by ``(source_lemma, pos)``. ``add`` indexes every
    source form of a new entry, so lookups never modify the lexicon.
    """
    def __init__(self, entries=None):
        self.entries = collections.OrderedDict()
        self._index = {}
        for entry in entries or []:
            self.add(entry)

    def add(self, entry):
        """Add an entry; return ``False`` when an identical one exists.

        A conflicting mapping for an existing ``(lemma, pos)`` raises
        ``ValueError``.
        """
        existing = self.entries.get(entry.key)
        if existing is not None:
            if existing.mapping() != entry.mapping():
                raise ValueError('Conflicting mapping for {}/{}.'.format(
                    *entry.key))
            return False
        entry.index = len(self.entries)
        self.entries[entry.key] = entry
        self._index_entry(entry)
        return True

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        return key in self.entries

    def __iter__(self):
        return iter(self.entries.values())

    def get(self, lemma, pos):
        try:
            return self.entries[(lemma, pos)]
        except KeyError:
            six.raise_from(exceptions.LexiconLookupError(lemma, pos), None)

    def entries_for(self, lemma):
        return [e for e in self.entries.values() if e.source_lemma == lemma]

    def proper_noun(self, word):
        return self.entries.get((word, PROPER_NOUN))

    def translate_lemma(self, lemma, pos):
        entry = self.get(lemma, pos)
        return entry.target_lemma, entry.target_gender

    def realize(self, lemma, pos, features=None, side=TARGET):
        """Generate a surface form of an entry.

        :param lemma: Source lemma of the entry.
        :param pos: Part of speech of the entry.
        :param features: Mapping with any of ``gender``, ``number``,
                         ``tense`` and ``person``.
        :param side: ``'it'`` to generate the Italian form, ``'fr'`` for the
                     French one.
        """
        entry = self.get(lemma, pos)
        features = features or {}
        if pos == VERB:
            return self._realize_verb(entry, features, side)
        base = entry.lemma(side)
        cells = entry.cells(side)
        gender = features.get('gender')
        number = features.get('number')
        if pos in (NOUN, PROPER_NOUN):
            if number != 'pl' or entry.invariable(side):
                return base
            if 'pl' in cells:
                return cells['pl']
            if side == SOURCE:
                return morphology.italian_noun_plural(base,
                                                      entry.gender(side))
            return morphology.french_plural(base)
        if pos in AGREEING:
            if entry.invariable(side):
                return base
            cell = (gender or 'm') + (number or 'sg')
            if cell in cells:
                return cells[cell]
            if side == SOURCE:
                return morphology.italian_adjective(base, gender, number)
            return morphology.french_adjective(
                base, gender, number,
                {'f': cells.get('fsg'), 'mpl': cells.get('mpl'),
                 'fpl': cells.get('fpl')})
        return base

    def _realize_verb(self, entry, features, side):
        base = entry.lemma(side)
        cells = entry.cells(side)
        tense = features.get('tense') or keytable.ID1
        person = features.get('person')
        if tense in keytable.FINITE_TENSES and person is None:
            person = '3sg'
        if tense not in keytable.FINITE_TENSES:
            person = None
        if tense == keytable.ID1:
            return base
        name = keytable.print_tense(tense)
        if person is not None:
            name += '.' + person
        form = cells.get(name)
        if form is None and not entry.restricted(side):
            paradigm = morphology.verb_paradigm(base, side)
            if paradigm is not None:
                form = paradigm.inflect(base, tense, person)
        if form is None:
            raise exceptions.LexiconError(
                'No {} form of "{}" for {}'.format(side, base, name))
        if tense == keytable.ID9:
            return morphology.participle(form, features.get('gender'),
                                         features.get('number'), side)
        if tense == keytable.ID8:
            return morphology.gerund(form, side)
        return form

    def forms(self, entry, side=SOURCE):
        """Yield ``(surface, Analysis)`` for every form of an entry."""
        lemma = entry.source_lemma
        if entry.pos == VERB:
            for form, analysis in self._verb_forms(entry, side):
                yield form, analysis
        elif entry.pos in AGREEING:
            if entry.invariable(side):
                yield entry.lemma(side), Analysis(lemma, entry.pos)
                return
            for cell in ADJECTIVE_CELLS:
                gender, number = cell[0], cell[1:]
                features = {'gender': gender, 'number': number}
                yield (self.realize(lemma, entry.pos, features, side),
                       Analysis(lemma, entry.pos, gender, number))
        elif entry.pos == NOUN:
            gender = entry.gender(side)
            for number in morphology.NUMBERS:
                yield (self.realize(lemma, NOUN, {'number': number}, side),
                       Analysis(lemma, NOUN, gender, number))
        else:
            yield entry.lemma(side), Analysis(lemma, entry.pos,
                                              entry.gender(side))

    def _verb_forms(self, entry, side):
        lemma = entry.source_lemma
        base = entry.lemma(side)
        yield base, Analysis(lemma, VERB, tense=keytable.ID1)
        cells = []
        paradigm = morphology.verb_paradigm(base, side)
        if not entry.restricted(side) and paradigm is not None:
            cells.extend(paradigm.cells)
        for name in entry.cells(side):
            if name.startswith('ID'):
                tense, _, person = name.partition('.')
                cell = morphology.Cell(keytable.parse_tense(tense),
                                       person or None)
                if cell not in cells:
                    cells.append(cell)
        for tense, person in cells:
            if tense == keytable.ID1:
                continue
            features = {'tense': tense, 'person': person}
            if tense == keytable.ID9:
                for gender in morphology.GENDERS:
                    for number in morphology.NUMBERS:
                        features.update(gender=gender, number=number)
                        yield (self.realize(lemma, VERB, features, side),
                               Analysis(lemma, VERB, gender, number,
                                        tense))
                continue
            yield (self.realize(lemma, VERB, features, side),
                   Analysis(lemma, VERB, tense=tense, person=person))

    def _index_entry(self, entry):
        for order, (form, analysis) in enumerate(self.forms(entry)):
            rank = (-_common_prefix(form, entry.source_lemma), entry.index,
                    order)
            candidates = self._index.setdefault(form, [])
            if all(a != analysis for _, a in candidates):
                candidates.append((rank, analysis))
                candidates.sort(key=lambda c: c[0])

    def indexed_forms(self):
        return len(self._index)

    def analyze(self, word):
        """Return the analyses of a surface form, best first.

        Candidates are ordered by the length of the stem shared with the
        lemma, then by lexicon order. Unknown words have no analysis.
        """
        word = word.replace(u'’', "'")
        candidates = list(self._index.get(word, []))
        if word != word.lower():
            candidates.extend(self._index.get(word.lower(), []))
        candidates.sort(key=lambda c: c[0])
        result = []
        for _, analysis in candidates:
            if analysis not in result:
                result.append(analysis)
        return result


def analyze(word, lexicon):
    return lexicon.analyze(word)


def translate_lemma(lemma, pos, lexicon):
    return lexicon.translate_lemma(lemma, pos)


def _parse_irregular(field):
    irregular = {SOURCE: {}, TARGET: {}}
    if field.strip() in ('', '-'):
        return irregular
    for item in field.split(';'):
        item = item.strip()
        if not item:
            continue
        side, _, cell = item.partition(':')
        name, equals, form = cell.partition('=')
        if side not in SIDES or not equals or not name or not form:
            raise ValueError('malformed irregular form "{}"'.format(item))
        name = CELL_ALIASES.get(name, name)
        if name.startswith('ID'):
            tense, _, person = name.partition('.')
            keytable.parse_tense(tense)
            if person and person not in morphology.PERSONS:
                raise ValueError('unknown person "{}"'.format(person))
        irregular[side][name] = form
    return irregular


def _gender(value):
    if value == '-':
        return None
    if value not in morphology.GENDERS:
        raise ValueError('unknown gender "{}"'.format(value))
    return value


def load_lexicon(path):
    """Load a lexicon file.

    The file is tab separated: source lemma, part of speech, source gender,
    target lemma, target gender and irregular forms (``;`` separated
    ``side:cell=form`` items, ``-`` when there are none).
    """
    lexicon = Lexicon()
    with io.open(path, encoding='utf-8') as f:
        for line_number, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            fields = line.split('\t')
            try:
                if len(fields) != 6:
                    raise ValueError('expected 6 fields, got {}'.format(
                        len(fields)))
                lemma, pos, src_gender, target, tgt_gender, irregular = \
                    fields
                if pos not in pos_names:
                    raise ValueError('unknown part of speech "{}"'.format(
                        pos))
                entry = LexiconEntry(lemma, pos, _gender(src_gender),
                                     target, _gender(tgt_gender),
                                     _parse_irregular(irregular))
                if pos == NOUN and entry.source_gender is None:
                    raise ValueError('noun without a source gender')
                if pos == VERB and entry.source_gender is not None:
                    raise ValueError('verb with a source gender')
                lexicon.add(entry)
            except (ValueError, exceptions.KeyNotationError,
                    exceptions.LexiconError) as exc:
                six.raise_from(exceptions.LexiconLoadError(
                    path, line_number, str(exc)), exc)
    default_logger.debug('loaded %d lexicon entries (%d surface forms) '
                         'from %s', len(lexicon), lexicon.indexed_forms(),
                         path)
    return lexicon


class SimplificationRule(object):
    """A source-side rewrite of the plain-language pass.

    :param rule_class: One of ``rule_classes``.
    :param pattern: Source tokens to match, case insensitive. A token ending
                    in ``*`` matches any word with that prefix; a leading
                    ``^`` anchors the pattern at a sentence start.
    :param replacement: Tokens to substitute. Each ``*`` in a replacement
                        token receives the next captured suffix.
    """
    def __init__(self, rule_class, pattern, replacement):
        if rule_class not in rule_classes:
            raise ValueError('Unknown simplification rule class.')
        pattern = list(pattern)
        self.anchored = bool(pattern) and pattern[0] == ANCHOR
        if self.anchored:
            pattern = pattern[1:]
        if not pattern:
            raise ValueError('Empty simplification pattern.')
        self.rule_class = rule_class
        self.pattern = [p.lower() for p in pattern]
        self.replacement = list(replacement)
        wildcards = sum(1 for p in self.pattern if p.endswith(WILDCARD))
        if sum(r.count(WILDCARD) for r in self.replacement) > wildcards:
            raise ValueError('Replacement uses more captures than the '
                             'pattern provides.')

    def __len__(self):
        return len(self.pattern)

    def match(self, words, position, sentence_starts=()):
        """Return the captured suffixes if the rule matches at a position."""
        if self.anchored and position not in sentence_starts:
            return None
        if position + len(self.pattern) > len(words):
            return None
        captures = []
        for offset, expected in enumerate(self.pattern):
            word = words[position + offset].lower().replace(u'’', "'")
            if expected.endswith(WILDCARD) and len(expected) > 1:
                prefix = expected[:-1]
                if not word.startswith(prefix):
                    return None
                captures.append(word[len(prefix):])
            elif word != expected:
                return None
        return captures

    def rewrite(self, words, position, captures):
        """Return the replacement tokens for a match at a position."""
        captures = list(captures)
        result = []
        for token in self.replacement:
            while WILDCARD in token and captures:
                token = token.replace(WILDCARD, captures.pop(0), 1)
            result.append(token)
        if result and words[position][:1].isupper():
            result[0] = _tokens.capitalize(result[0])
        return result

    def reintroduces_pattern(self):
        """Whether the replacement contains the pattern again.

        An anchored pattern only matches at a sentence start, so only a
        replacement that begins with it can match again.
        """
        replacement = [r.lower() for r in self.replacement]
        n = len(self.pattern)
        last = 0 if self.anchored else len(replacement) - n
        for start in range(min(last, len(replacement) - n) + 1):
            if replacement[start:start + n] == self.pattern:
                return True
        return False

    def __repr__(self):
        return '<SimplificationRule {} "{}" -> "{}">'.format(
            self.rule_class, ' '.join(self.pattern),
            ' '.join(self.replacement))


def load_simplification_rules(path):
    """Load simplification rules from a ``class<TAB>pattern<TAB>replacement``
    file, in file order."""
    rules = []
    with io.open(path, encoding='utf-8') as f:
        for line_number, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            fields = line.split('\t')
            if len(fields) != 3:
                raise exceptions.RuleLoadError(
                    path, line_number,
                    'expected 3 fields, got {}'.format(len(fields)))
            try:
                rule = SimplificationRule(fields[0], fields[1].split(),
                                          fields[2].split())
            except ValueError as exc:
                six.raise_from(exceptions.RuleLoadError(
                    path, line_number, str(exc)), exc)
            if rule.reintroduces_pattern():
                raise exceptions.RuleLoadError(
                    path, line_number, 'replacement contains the pattern')
            rules.append(rule)
    default_logger.debug('loaded %d simplification rules from %s',
                         len(rules), path)
    return rules


def unknown_replacement_words(rules, lexicon, keys):
    """Return the replacement words that neither the lexicon nor the key
    table recognizes, in rule order."""
    unknown = []
    for rule in rules:
        for word in rule.replacement:
            if WILDCARD in word or _tokens.is_punctuation(word):
                continue
            if keys.reverse(word) or lexicon.analyze(word) or \
                    lexicon.proper_noun(word):
                continue
            if word.lower() not in unknown:
                unknown.append(word.lower())
    return unknown
