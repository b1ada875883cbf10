"""Ideogram stream to target text.

Keys are looked up in the target realization table and stems are inflected
from the lexicon, giving a word-by-word draft. The draft then goes through
the syntactic corrector, the morphological corrector and the differential
tables, each a stage of rewrite rules loaded from the correction file.
"""
import collections
import logging

import six

from . import config as _config
from . import encoder as _encoder
from . import exceptions
from . import keytable
from . import lexicon as lex
from . import rules as _rules
from . import tokens as _tokens

default_logger = logging.getLogger('pucci.decoder')

# draft token category of each key family
KEY_CATEGORIES = {
    keytable.ARTICLE: 'art',
    keytable.DEMONSTRATIVE_NEAR: 'dem',
    keytable.DEMONSTRATIVE_FAR: 'dem',
    keytable.PERSONAL_PRONOUN: 'pron',
    keytable.POSSESSIVE: 'poss',
    keytable.RELATIVE: 'rel',
    keytable.CONJUNCTION: 'conj',
}
# determiners and conjunctions an adjective looks through to find its noun
TRANSPARENT_CATEGORIES = frozenset(['art', 'dem', 'poss', 'conj'])

(SIMPLIFY, ENCODE, REALIZE) = ('simplify', 'encode', 'realize')
stage_names = [SIMPLIFY, ENCODE, REALIZE, _rules.SYNTACTIC,
               _rules.MORPHOLOGICAL, _rules.DIFFERENTIAL]


def _number(plural):
    return 'pl' if plural else 'sg'


def _is_clitic(key):
    if key.category != keytable.PERSONAL_PRONOUN:
        return False
    if key.person == 3:
        return key.case in (keytable.DATIVE, keytable.OBJECT)
    return key.case == keytable.DATIVE


def _noun_agreement(stem, lexicon):
    entry = lexicon.get(stem.lemma, stem.pos)
    return entry.target_gender, _number(stem.plural)


def _determiner_context(sentence, i, lexicon):
    """Agreement of the determiner key at ``i``.

    Marker keys right after the determiner win; otherwise the next noun
    decides, looking past adjectives, numerals and adverbs.
    """
    gender = number = None
    j = i + 1
    while j < len(sentence) and isinstance(sentence[j], _encoder.Key) and \
            sentence[j].key.is_marker:
        marker = sentence[j].key
        if marker.category == keytable.GENDER_MARKER:
            gender = marker.gender
        else:
            number = 'pl'
        j += 1
    if j > i + 1:
        return keytable.AgreementContext(gender or 'm', number or 'sg')
    for token in sentence[i + 1:]:
        if not isinstance(token, _encoder.Stem):
            break
        if token.pos in (lex.NOUN, lex.PROPER_NOUN):
            gender, number = _noun_agreement(token, lexicon)
            return keytable.AgreementContext(gender or 'm', number)
        if token.pos not in (lex.ADJECTIVE, lex.NUMERAL, lex.ADVERB):
            break
    return keytable.AgreementContext('m', 'sg')


def _key_tokens(surface, key, context):
    features = {'pos': 'key', 'cat': KEY_CATEGORIES[key.category]}
    if key.case is not None:
        features['case'] = key.case
    if key.category == keytable.PERSONAL_PRONOUN:
        features.update(gender=key.gender, number=key.number,
                        person=key.person)
        if _is_clitic(key):
            features['clitic'] = 'yes'
    elif context is not None:
        features.update(gender=context.gender, number=context.number)
    features = dict((k, v) for k, v in six.iteritems(features)
                    if v is not None)
    return [_rules.DraftToken(word, features) for word in surface.split()]


def _stem_token(stem, lexicon):
    entry = lexicon.get(stem.lemma, stem.pos)
    number = _number(stem.plural)
    features = {'pos': stem.pos, 'lemma': stem.lemma, 'number': number}
    if stem.pos == lex.VERB:
        cells = {'tense': stem.tense, 'person': stem.person,
                 'gender': stem.gender, 'number': number}
        surface = lexicon.realize(stem.lemma, lex.VERB,
                                  dict((k, v) for k, v in six.iteritems(cells)
                                       if v is not None))
        features.update(
            tense=keytable.print_tense(stem.tense or keytable.ID1),
            finite='yes' if stem.tense in keytable.FINITE_TENSES else 'no')
        if stem.person:
            features['person'] = stem.person
        if stem.gender:
            features['gender'] = stem.gender
    elif stem.pos in lex.AGREEING:
        gender = stem.gender or 'm'
        surface = lexicon.realize(stem.lemma, stem.pos,
                                  {'gender': gender, 'number': number})
        features.update(gender=gender, place=entry.place)
    elif stem.pos in (lex.NOUN, lex.PROPER_NOUN):
        surface = lexicon.realize(stem.lemma, stem.pos, {'number': number})
        if entry.target_gender:
            features['gender'] = entry.target_gender
    else:
        surface = entry.target_lemma
        del features['number']
    return _rules.DraftToken(surface, features)


def _realize_sentence(sentence, keys, lexicon):
    draft = []
    last_noun = None
    for i, token in enumerate(sentence):
        try:
            if isinstance(token, _encoder.Literal):
                pos = 'punct' if _tokens.is_punctuation(token.text) \
                    else 'literal'
                draft.append(_rules.DraftToken(token.text, {'pos': pos}))
                continue
            if isinstance(token, _encoder.Stem):
                if token.pos in (lex.NOUN, lex.PROPER_NOUN):
                    last_noun = keytable.AgreementContext(
                        *_noun_agreement(token, lexicon))
                draft.append(_stem_token(token, lexicon))
                continue
            key = token.key
            if key.is_marker:
                continue
            if key.category == keytable.PERSONAL_RELATIVE_INDICATOR:
                raise exceptions.RealizationError(
                    _encoder.render_token(token),
                    'the personal relative indicator has no realization')
            context = None
            if key.is_determiner:
                context = _determiner_context(sentence, i, lexicon)
            elif key.category == keytable.RELATIVE:
                context = last_noun or keytable.AgreementContext('m', 'sg')
            surface = keys.lookup(key, context)
            draft.extend(_key_tokens(surface, key, context))
        except (exceptions.CoverageError, exceptions.LexiconError) as exc:
            six.raise_from(exceptions.RealizationError(
                _encoder.render_token(token), str(exc)), exc)
    return draft


def realize(stream, keys, lexicon):
    """Realize an ``EncodedStream`` as a list of draft tokens.

    Keys become the target surface for their agreement, stems the target
    lemma inflected for their marks, and literals pass through. Token order
    is that of the stream.
    """
    draft = []
    for sentence in stream:
        draft.extend(_realize_sentence(sentence, keys, lexicon))
    return draft


def correct_syntax(draft, rules, logger=None):
    """Run the syntactic corrector over a draft."""
    return _rules.rewrite(draft, rules, logger)


def _agreeing_noun(tokens, i):
    for token in tokens[i + 1:]:
        pos = token.feature('pos')
        if pos == lex.NOUN:
            return token
        if pos in (lex.ADVERB, lex.ADJECTIVE, lex.NUMERAL) or (
                pos == 'key' and
                token.feature('cat') in TRANSPARENT_CATEGORIES):
            continue
        break
    for token in reversed(tokens[:i]):
        pos = token.feature('pos')
        if pos == lex.NOUN:
            return token
        if pos != lex.ADVERB:
            break


def _agree(tokens, lexicon):
    result = []
    for i, token in enumerate(tokens):
        pos = token.feature('pos')
        lemma = token.feature('lemma')
        if lemma is None or pos not in (lex.NOUN, lex.ADJECTIVE,
                                        lex.NUMERAL):
            result.append(token)
            continue
        if pos == lex.NOUN:
            surface = lexicon.realize(lemma, pos,
                                      {'number': token.feature('number')})
            result.append(token.copy(surface))
            continue
        if lexicon.get(lemma, pos).invariable(lex.TARGET):
            result.append(token)
            continue
        noun = _agreeing_noun(tokens, i)
        if noun is None:
            result.append(token)
            continue
        gender = noun.feature('gender') or 'm'
        number = noun.feature('number') or 'sg'
        surface = lexicon.realize(lemma, pos,
                                  {'gender': gender, 'number': number})
        result.append(token.copy(surface, gender=gender, number=number))
    return result


def correct_morphology(tokens, rules, lexicon, logger=None):
    """Run the morphological corrector.

    Adjectives and numerals first agree with the target gender and number
    of their noun and nouns take their irregular plurals from the lexicon,
    then the morphological rules apply.
    """
    return _rules.rewrite(_agree(tokens, lexicon), rules, logger)


def apply_differential(tokens, rules, logger=None):
    """Apply the differential tables and join the tokens into text."""
    words = _rules.surfaces(_rules.rewrite(tokens, rules, logger))
    for i in _tokens.sentence_starts(words):
        words[i] = _tokens.capitalize(words[i])
    return _tokens.detokenize(words)


class Translator(object):
    """The book-machine: simplification, encoding and decoding.

    :param config: A ``Config`` with the data file locations. The default
                   configuration reads the package data directory, or the
                   ``PUCCI_DATA_DIR`` directory when the variable is set.
    :param logger: To enable logging set to ``True`` or pass a logger object
                   to use. To disable logging set to ``False``. The default is
                   ``False``. Note that fatal errors are logged even when
                   ``logger`` is ``False``.
    """
    def __init__(self, config=None, logger=False):
        self.config = config or _config.Config()
        self.logger = _config.resolve_logger(logger, default_logger)

        cfg = self.config
        self.source_keys = keytable.load_key_table(cfg.keys_path,
                                                   cfg.source_language)
        self.target_keys = keytable.load_key_table(cfg.keys_path,
                                                   cfg.target_language)
        self.lexicon = lex.load_lexicon(cfg.lexicon_path)
        self.simplification_rules = lex.load_simplification_rules(
            cfg.simplify_path)
        self.correction_rules = _rules.load_correction_rules(
            cfg.corrections_path)
        self.encoder = _encoder.Encoder(self.lexicon, self.source_keys,
                                        logger=self.logger)
        self.logger.info('loaded %d lexicon entries, %d simplification '
                         'rules and %d correction rules', len(self.lexicon),
                         len(self.simplification_rules),
                         sum(len(r) for r in self.correction_rules.values()))

    def _run(self, stage, func, *args):
        try:
            return func(*args)
        except exceptions.PucciError as exc:
            self.logger.error('%s stage failed: %s', stage, exc)
            six.raise_from(exceptions.StageError(stage, exc), exc)

    def simplify(self, text):
        return self._run(SIMPLIFY, _encoder.simplify, text,
                         self.simplification_rules)

    def encode(self, text):
        """Encode simplified source text."""
        return self._run(ENCODE, self.encoder.encode, text)

    def _stages(self, stream):
        rules = self.correction_rules
        draft = self._run(REALIZE, realize, stream, self.target_keys,
                          self.lexicon)
        yield REALIZE, draft
        draft = self._run(_rules.SYNTACTIC, correct_syntax, draft,
                          rules[_rules.SYNTACTIC], self.logger)
        yield _rules.SYNTACTIC, draft
        draft = self._run(_rules.MORPHOLOGICAL, correct_morphology, draft,
                          rules[_rules.MORPHOLOGICAL], self.lexicon,
                          self.logger)
        yield _rules.MORPHOLOGICAL, draft
        yield _rules.DIFFERENTIAL, self._run(
            _rules.DIFFERENTIAL, apply_differential, draft,
            rules[_rules.DIFFERENTIAL], self.logger)

    def decode(self, stream):
        """Decode an ``EncodedStream`` into target text."""
        for _, output in self._stages(stream):
            pass
        return output

    def _translate_paragraph(self, paragraph):
        stream = self.encode(self.simplify(paragraph))
        self.logger.info('encoded %d sentences, %d tokens', len(stream),
                         len(stream.tokens()))
        return self.decode(stream)

    def translate(self, text):
        """Translate source text, paragraph by paragraph."""
        return '\n\n'.join(self._translate_paragraph(p)
                           for p in _tokens.paragraphs(text))

    def trace(self, text):
        """Return the output of every stage for each paragraph.

        The result is a list with one ``OrderedDict`` of stage name to
        printable output per paragraph.
        """
        result = []
        for paragraph in _tokens.paragraphs(text):
            stages = collections.OrderedDict()
            stages[SIMPLIFY] = self.simplify(paragraph)
            stream = self.encode(stages[SIMPLIFY])
            stages[ENCODE] = _encoder.render_stream(stream)
            for stage, output in self._stages(stream):
                if not isinstance(output, six.string_types):
                    output = ' '.join(_rules.surfaces(output))
                stages[stage] = output
            result.append(stages)
        return result


def translate(text, config=None):
    """Translate Italian text into French with a fresh ``Translator``."""
    return Translator(config).translate(text)
