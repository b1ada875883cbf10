"""Source text to ideogram stream.

The plain-language pass rewrites rare expressions and fills ellipses, then
each sentence is reduced to grammatical keys, stems with their tense,
gender and plural marks, and literals.
"""
import collections
import logging
import re

import six

from . import config as _config
from . import exceptions
from . import keytable
from . import lexicon as lex
from . import tokens as _tokens

default_logger = logging.getLogger('pucci.encoder')

# articulated prepositions that do not fold into a key case
ARTICULATED_PREFIXES = collections.OrderedDict([
    ('da', 'da'), ('ne', 'in'), ('su', 'su'), ('co', 'con'), ('pe', 'per'),
])
ARTICULATED_ENDINGS = collections.OrderedDict([
    ('llo', 'lo'), ('lla', 'la'), ("ll'", "l'"), ('lle', 'le'),
    ('gli', 'gli'), ('l', 'il'), ('i', 'i'),
])
FOLDING_PREPOSITIONS = {'di': keytable.GENITIVE, 'a': keytable.DATIVE}

STREAM_TOKEN_RE = re.compile(r'"(?:[^"\\]|\\.)*"|\S+')
STREAM_KEY_RE = re.compile(r'^(IIIf|IIIn|III|II|I|a|D|d|M|T|S|N|V|R|L)'
                           r'(\.|\d+)$')
STREAM_STEM_RE = re.compile(
    r'^(?P<lemma>[^\s:+"]+?)(?:-(?P<gender>[mf]))?(?P<plural>\+)?'
    r'(?::(?P<tense>ID\d+)(?::(?P<person>[^\s:]+))?)?$')
STREAM_MARKERS = ('&', '+', 'm', 'f', 'I.')


class Key(collections.namedtuple('Key', ['key'])):
    """A grammatical key in the stream."""
    __slots__ = ()


class Stem(collections.namedtuple(
        'Stem', ['lemma', 'pos', 'gender', 'plural', 'tense', 'person'])):
    """A lexical stem with its marks.

    ``gender`` is the gender mark of adjectives, numerals and participles,
    ``plural`` the plural mark, ``tense`` the tense ideogram of verbs and
    ``person`` the person of finite verbs (``'1sg'`` to ``'3pl'``).
    """
    __slots__ = ()

    def __new__(cls, lemma, pos=lex.NOUN, gender=None, plural=False,
                tense=None, person=None):
        return super(Stem, cls).__new__(cls, lemma, pos, gender, plural,
                                        tense, person)


class Literal(collections.namedtuple('Literal', ['text'])):
    """Punctuation or an unknown proper name, carried verbatim."""
    __slots__ = ()


class EncodedStream(object):
    """Sentences of encoded tokens."""
    def __init__(self, sentences=None):
        self.sentences = [list(s) for s in sentences or [] if s]

    def tokens(self):
        return [token for sentence in self.sentences for token in sentence]

    def __iter__(self):
        return iter(self.sentences)

    def __len__(self):
        return len(self.sentences)

    def __eq__(self, other):
        return isinstance(other, EncodedStream) and \
            self.sentences == other.sentences

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<EncodedStream {} sentences>'.format(len(self.sentences))


def simplify(text, rules):
    """Apply the simplification rules to a source text.

    Rules are tried at each position from left to right, the longest
    pattern winning, and passes repeat until nothing matches. Paragraphs are
    simplified separately and joined with a blank line.
    """
    result = []
    for paragraph in _tokens.paragraphs(text):
        words = _tokens.tokenize(paragraph)
        for _ in range(len(words) * max(len(rules), 1) + 1):
            if not _simplify_pass(words, rules):
                break
        else:
            default_logger.warning('simplification did not settle')
        result.append(_tokens.detokenize(words))
    return '\n\n'.join(result)


def _simplify_pass(words, rules):
    changed = False
    position = 0
    starts = _tokens.sentence_starts(words)
    while position < len(words):
        best = None
        for rule in rules:
            if best is not None and len(rule) <= len(best[0]):
                continue
            captures = rule.match(words, position, starts)
            if captures is not None:
                best = (rule, captures)
        if best is None:
            position += 1
            continue
        rule, captures = best
        replacement = rule.rewrite(words, position, captures)
        default_logger.debug('simplify %s: %s -> %s', rule.rule_class,
                             ' '.join(words[position:position + len(rule)]),
                             ' '.join(replacement))
        words[position:position + len(rule)] = replacement
        position += max(len(replacement), 1)
        starts = _tokens.sentence_starts(words)
        changed = True
    return changed


class _Unit(object):
    """A source token, or a run of tokens, during encoding."""
    def __init__(self, word, kind, matches=None, analyses=None, span=1):
        self.word = word
        self.kind = kind
        self.matches = matches or []
        self.analyses = analyses or []
        self.span = span
        self.match = self.matches[0] if self.matches else None
        self.analysis = self.analyses[0] if self.analyses else None
        self.markers = []

    def has_pos(self, *pos):
        return self.kind == 'content' and any(a.pos in pos
                                              for a in self.analyses)

    @property
    def is_noun(self):
        return self.kind == 'content' and self.analysis is not None and \
            self.analysis.pos == lex.NOUN

    @property
    def is_determiner(self):
        return self.kind == 'key' and self.match.key.is_determiner


class Encoder(object):
    """Reduces simplified Italian text to an ideogram stream.

    :param lexicon: The bilingual ``Lexicon``.
    :param keys: The Italian ``KeyRealizationTable``.
    :param logger: Logger for warnings about unknown capitalized words.
    """
    def __init__(self, lexicon, keys, logger=None):
        self.lexicon = lexicon
        self.keys = keys
        self.logger = logger or default_logger
        self._longest = max(keys.longest_surface(), 1)

    def encode(self, text):
        sentences = []
        words = [w.replace(u'’', "'") for w in _tokens.tokenize(text)]
        for index, sentence in enumerate(_tokens.split_sentences(words), 1):
            encoded = self.encode_sentence(sentence, index)
            if encoded:
                sentences.append(encoded)
        return EncodedStream(sentences)

    def encode_sentence(self, words, index=1):
        units = self._units(self._split_articulated(words), index)
        self._choose_keys(units)
        units = self._fold(units)
        self._choose_analyses(units)
        self._mark_objects(units)
        self._mark_determiners(units)
        result = []
        for i, unit in enumerate(units):
            result.extend(self._emit(units, i))
        self.logger.debug('encoded sentence %d: %d tokens', index,
                          len(result))
        return result

    def _known(self, word):
        return bool(self.keys.reverse(word) or self.lexicon.analyze(word) or
                    self.lexicon.proper_noun(word))

    def _split_articulated(self, words):
        result = []
        for word in words:
            lower = word.lower()
            split = None
            if not self._known(word):
                for prefix, preposition in six.iteritems(
                        ARTICULATED_PREFIXES):
                    ending = lower[len(prefix):]
                    if lower.startswith(prefix) and \
                            ending in ARTICULATED_ENDINGS:
                        split = [preposition, ARTICULATED_ENDINGS[ending]]
                        break
            if split is None:
                result.append(word)
                continue
            if word[:1].isupper():
                split[0] = _tokens.capitalize(split[0])
            result.extend(split)
        return result

    def _units(self, words, index):
        units = []
        i = 0
        while i < len(words):
            word = words[i]
            unit = self._multiword(words, i)
            if unit is None:
                unit = self._single(word, index)
            units.append(unit)
            i += unit.span
        return units

    def _multiword(self, words, i):
        for span in range(min(self._longest, len(words) - i), 1, -1):
            phrase = ' '.join(w.lower() for w in words[i:i + span])
            matches = [m for m in self.keys.reverse(phrase)
                       if m.key.category != keytable.PERSONAL_PRONOUN]
            if matches:
                return _Unit(' '.join(words[i:i + span]), 'key', matches,
                             span=span)

    def _single(self, word, index):
        if _tokens.is_punctuation(word):
            return _Unit(word, 'literal')
        matches = self.keys.reverse(word)
        if matches:
            return _Unit(word, 'key', matches)
        entry = self.lexicon.proper_noun(word)
        if entry is not None:
            return _Unit(word, 'content', analyses=[
                lex.Analysis(entry.source_lemma, lex.PROPER_NOUN,
                             entry.source_gender)])
        analyses = [a for a in self.lexicon.analyze(word)
                    if a.pos != lex.PROPER_NOUN]
        if analyses:
            return _Unit(word, 'content', analyses=analyses)
        if word[:1].isupper() or any(c.isdigit() for c in word):
            self.logger.warning('carrying unknown word "%s" as a literal',
                                word)
            return _Unit(word, 'literal')
        raise exceptions.EncodingError(word, index)

    def _choose_keys(self, units):
        for i, unit in enumerate(units):
            if unit.kind != 'key' or len(unit.matches) == 1:
                continue
            pronouns = [m for m in unit.matches
                        if m.key.category == keytable.PERSONAL_PRONOUN]
            others = [m for m in unit.matches if m not in pronouns]
            if not pronouns or not others:
                continue
            following = units[i + 1] if i + 1 < len(units) else None
            if following is not None and following.has_pos(lex.VERB) and \
                    not following.has_pos(lex.NOUN, lex.ADJECTIVE):
                unit.match = pronouns[0]
            else:
                unit.match = others[0]

    def _fold(self, units):
        result = []
        for unit in units:
            previous = result[-1] if result else None
            if previous is not None and unit.is_determiner and \
                    unit.match.key.case == keytable.BASE:
                case = None
                if previous.kind == 'content' and \
                        previous.analysis.pos == lex.PREPOSITION:
                    case = FOLDING_PREPOSITIONS.get(previous.analysis.lemma)
                elif previous.kind == 'key' and \
                        previous.match.key.category == keytable.ARTICLE and \
                        unit.match.key.category == keytable.POSSESSIVE:
                    case = previous.match.key.case
                    if case == keytable.OBJECT:
                        case = keytable.BASE
                if case is not None:
                    unit.match = unit.match._replace(
                        key=unit.match.key.with_case(case))
                    unit.word = previous.word + ' ' + unit.word
                    result[-1] = unit
                    continue
            result.append(unit)
        return result

    def _choose_analyses(self, units):
        for i, unit in enumerate(units):
            if unit.kind != 'content':
                continue
            following = units[i + 1] if i + 1 < len(units) else None
            if unit.has_pos(lex.ADJECTIVE) and unit.has_pos(lex.ADVERB):
                want = lex.ADJECTIVE if following is not None and \
                    following.has_pos(lex.NOUN) else lex.ADVERB
                unit.analysis = [a for a in unit.analyses
                                 if a.pos == want][0]
            elif unit.analysis.pos == lex.VERB:
                unit.analysis = self._realizable_verb(unit.analyses)

    def _takes_object(self, unit):
        if unit.kind != 'content' or unit.analysis.pos != lex.VERB or \
                unit.analysis.tense not in keytable.FINITE_TENSES:
            return False
        return self.lexicon.get(unit.analysis.lemma, lex.VERB).transitive

    def _mark_objects(self, units):
        """Give the object case to a determiner right after a finite
        transitive verb."""
        for previous, unit in zip(units, units[1:]):
            if unit.is_determiner and \
                    unit.match.key.case == keytable.BASE and \
                    self._takes_object(previous):
                unit.match = unit.match._replace(
                    key=unit.match.key.with_case(keytable.OBJECT))

    def _realizable_verb(self, analyses):
        verbs = [a for a in analyses if a.pos == lex.VERB]
        for analysis in verbs:
            try:
                self.lexicon.realize(analysis.lemma, lex.VERB,
                                     analysis.features, side=lex.TARGET)
            except exceptions.LexiconError:
                continue
            return analysis
        return verbs[0]

    def _agreeing_noun(self, units, i):
        for j in range(i + 1, len(units)):
            unit = units[j]
            if unit.is_noun:
                return unit
            if unit.kind == 'content' and unit.analysis.pos in (
                    lex.ADJECTIVE, lex.NUMERAL, lex.ADVERB):
                continue
            if unit.kind == 'key' and (
                    unit.is_determiner or
                    unit.match.key.category == keytable.CONJUNCTION):
                continue
            break
        for j in range(i - 1, -1, -1):
            unit = units[j]
            if unit.is_noun:
                return unit
            if unit.kind == 'content' and unit.analysis.pos == lex.ADVERB:
                continue
            break

    def _governed_noun(self, units, i):
        for j in range(i + 1, len(units)):
            unit = units[j]
            if unit.is_noun or (unit.kind == 'content' and
                                unit.analysis.pos == lex.PROPER_NOUN):
                return unit
            if unit.kind == 'content' and unit.analysis.pos in (
                    lex.ADJECTIVE, lex.NUMERAL, lex.ADVERB):
                continue
            return None

    def _mark_determiners(self, units):
        for i, unit in enumerate(units):
            if not unit.is_determiner or \
                    self._governed_noun(units, i) is not None:
                continue
            if unit.match.gender == 'f':
                unit.markers.append(keytable.GrammaticalKey(
                    keytable.GENDER_MARKER, gender='f'))
            if unit.match.number == 'pl':
                unit.markers.append(keytable.GrammaticalKey(
                    keytable.PLURAL_MARKER))

    def _emit(self, units, i):
        unit = units[i]
        if unit.kind == 'literal':
            return [Literal(unit.word)]
        if unit.kind == 'key':
            return [Key(unit.match.key)] + [Key(m) for m in unit.markers]
        analysis = unit.analysis
        if analysis.pos in lex.AGREEING:
            noun = self._agreeing_noun(units, i)
            if noun is not None:
                gender = noun.analysis.gender
                number = noun.analysis.number
            else:
                gender = analysis.gender
                number = analysis.number
            return [Stem(analysis.lemma, analysis.pos, gender or 'm',
                         number == 'pl')]
        if analysis.pos == lex.VERB:
            if analysis.tense == keytable.ID9:
                return [Stem(analysis.lemma, lex.VERB, analysis.gender,
                             analysis.number == 'pl', analysis.tense)]
            return [Stem(analysis.lemma, lex.VERB, tense=analysis.tense,
                         person=analysis.person)]
        if analysis.pos == lex.NOUN:
            return [Stem(analysis.lemma, lex.NOUN,
                         plural=analysis.number == 'pl')]
        return [Stem(analysis.lemma, analysis.pos)]


def encode(text, lexicon, keys):
    """Encode simplified source text into an ``EncodedStream``."""
    return Encoder(lexicon, keys).encode(text)


def render_token(token):
    """Print one stream token in canonical notation."""
    if isinstance(token, Key):
        return keytable.print_key(token.key)
    if isinstance(token, Literal):
        return '"{}"'.format(token.text.replace('\\', '\\\\')
                             .replace('"', '\\"'))
    text = token.lemma
    if token.gender:
        text += '-' + token.gender
    if token.plural:
        text += '+'
    if token.tense:
        text += ':' + keytable.print_tense(token.tense)
        if token.person:
            text += ':' + token.person
    return text


def render_stream(stream):
    """Print a stream in canonical notation, one sentence per line."""
    return '\n'.join(' '.join(render_token(t) for t in sentence)
                     for sentence in stream.sentences)


def _stem_pos(lemma, gender, tense, lexicon):
    if tense is not None:
        return lex.VERB
    entries = lexicon.entries_for(lemma)
    if gender is not None:
        wanted = [e for e in entries if e.pos in lex.AGREEING]
    elif lemma[:1].isupper():
        wanted = [e for e in entries if e.pos == lex.PROPER_NOUN]
    else:
        wanted = [e for e in entries if e.pos not in lex.AGREEING and
                  e.pos not in (lex.VERB, lex.PROPER_NOUN)]
    if wanted:
        return wanted[0].pos
    if gender is not None:
        return lex.ADJECTIVE
    if lemma[:1].isupper():
        return lex.PROPER_NOUN
    return lex.NOUN


def _parse_token(text, lexicon, line_number):
    if text.startswith('"'):
        if len(text) < 2 or not text.endswith('"'):
            raise exceptions.StreamParseError(text, line_number)
        return Literal(re.sub(r'\\(.)', r'\1', text[1:-1]))
    if text in STREAM_MARKERS or STREAM_KEY_RE.match(text):
        return Key(keytable.parse_key_notation(text))
    match = STREAM_STEM_RE.match(text)
    if match is None:
        raise exceptions.StreamParseError(text, line_number)
    tense = match.group('tense')
    person = match.group('person')
    try:
        tense = keytable.parse_tense(tense) if tense else None
    except exceptions.KeyNotationError as exc:
        six.raise_from(exceptions.StreamParseError(text, line_number), exc)
    if person is not None and person not in ('1sg', '2sg', '3sg', '1pl',
                                             '2pl', '3pl'):
        raise exceptions.StreamParseError(text, line_number)
    lemma = match.group('lemma')
    gender = match.group('gender')
    return Stem(lemma, _stem_pos(lemma, gender, tense, lexicon), gender,
                bool(match.group('plural')), tense, person)


def parse_stream(text, lexicon=None):
    """Parse canonical stream notation.

    Parts of speech not implied by the notation are resolved from
    ``lexicon``, by default the lexicon shipped with the package.
    """
    if lexicon is None:
        lexicon = lex.load_lexicon(_config.Config().lexicon_path)
    sentences = []
    for line_number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        sentences.append([_parse_token(token, lexicon, line_number)
                          for token in STREAM_TOKEN_RE.findall(line)])
    return EncodedStream(sentences)
