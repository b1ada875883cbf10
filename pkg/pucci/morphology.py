"""Inflection tables for Italian analysis and French realization.

Verbs are conjugated from suffix paradigms keyed by tense ideogram and
person; nouns and adjectives inflect through ordered suffix rules.
"""
import collections
import re

import six

from . import keytable

PERSONS = ('1sg', '2sg', '3sg', '1pl', '2pl', '3pl')
IMPERATIVE_PERSONS = ('2sg', '1pl', '2pl')
GENDERS = ('m', 'f')
NUMBERS = ('sg', 'pl')
ACCENTED = u'àèéìíòóù'

Cell = collections.namedtuple('Cell', ['tense', 'person'])


def _cells(table):
    """Expand ``{tense: 'suffix suffix ...'}`` into paradigm cells.

    One suffix is a non-finite form, three suffixes are the imperative
    persons and six are the six persons.
    """
    cells = collections.OrderedDict()
    for tense in sorted(table):
        suffixes = table[tense].split()
        if len(suffixes) == 1:
            cells[Cell(tense, None)] = suffixes[0]
            continue
        persons = IMPERATIVE_PERSONS if len(suffixes) == 3 else PERSONS
        if len(suffixes) != len(persons):
            raise ValueError('Paradigm row has the wrong number of cells.')
        for person, suffix in zip(persons, suffixes):
            cells[Cell(tense, person)] = '' if suffix == '-' else suffix
    return cells


class MorphParadigm(object):
    """A verb conjugation class.

    :param language: Language code of the paradigm.
    :param paradigm_id: Name of the class, such as ``'are'``.
    :param ending: Infinitive ending stripped from the lemma to get the stem.
    :param cells: Mapping of ``Cell(tense, person)`` to suffix.
    """
    def __init__(self, language, paradigm_id, ending, cells):
        self.language = language
        self.paradigm_id = paradigm_id
        self.ending = ending
        self.cells = cells

    def matches(self, lemma):
        return lemma.endswith(self.ending) and len(lemma) > len(self.ending)

    def stem(self, lemma):
        if not self.matches(lemma):
            raise ValueError('Lemma does not belong to this paradigm.')
        return lemma[:-len(self.ending)]

    def inflect(self, lemma, tense, person=None):
        """Return the form of a cell, or ``None`` when the cell is empty."""
        suffix = self.cells.get(Cell(tense, person))
        if suffix is None:
            return None
        return self.stem(lemma) + suffix

    def forms(self, lemma):
        """Yield ``(form, cell)`` pairs in cell order."""
        stem = self.stem(lemma)
        for cell, suffix in six.iteritems(self.cells):
            yield stem + suffix, cell

    def __repr__(self):
        return '<MorphParadigm {}:{}>'.format(self.language,
                                              self.paradigm_id)


ITALIAN_VERBS = [
    MorphParadigm('it', 'are', 'are', _cells({
        keytable.ID1: 'are',
        keytable.ID2: 'o i a iamo ate ano',
        keytable.ID3: 'avo avi ava avamo avate avano',
        keytable.ID4: u'ai asti ò ammo aste arono',
        keytable.ID5: u'erò erai erà eremo erete eranno',
        keytable.ID6: 'i i i iamo iate ino',
        keytable.ID7: 'assi assi asse assimo aste assero',
        keytable.ID8: 'ando',
        keytable.ID9: 'ato',
        keytable.ID10: 'a iamo ate',
        keytable.ID11: 'erei eresti erebbe eremmo ereste erebbero',
    })),
    MorphParadigm('it', 'ere', 'ere', _cells({
        keytable.ID1: 'ere',
        keytable.ID2: 'o i e iamo ete ono',
        keytable.ID3: 'evo evi eva evamo evate evano',
        keytable.ID4: u'ei esti é emmo este erono',
        keytable.ID5: u'erò erai erà eremo erete eranno',
        keytable.ID6: 'a a a iamo iate ano',
        keytable.ID7: 'essi essi esse essimo este essero',
        keytable.ID8: 'endo',
        keytable.ID9: 'uto',
        keytable.ID10: 'i iamo ete',
        keytable.ID11: 'erei eresti erebbe eremmo ereste erebbero',
    })),
    MorphParadigm('it', 'ire', 'ire', _cells({
        keytable.ID1: 'ire',
        keytable.ID2: 'o i e iamo ite ono',
        keytable.ID3: 'ivo ivi iva ivamo ivate ivano',
        keytable.ID4: u'ii isti ì immo iste irono',
        keytable.ID5: u'irò irai irà iremo irete iranno',
        keytable.ID6: 'a a a iamo iate ano',
        keytable.ID7: 'issi issi isse issimo iste issero',
        keytable.ID8: 'endo',
        keytable.ID9: 'ito',
        keytable.ID10: 'i iamo ite',
        keytable.ID11: 'irei iresti irebbe iremmo ireste irebbero',
    })),
]

FRENCH_VERBS = [
    MorphParadigm('fr', 'er', 'er', _cells({
        keytable.ID1: 'er',
        keytable.ID2: 'e es e ons ez ent',
        keytable.ID3: 'ais ais ait ions iez aient',
        keytable.ID4: u'ai as a âmes âtes èrent',
        keytable.ID5: 'erai eras era erons erez eront',
        keytable.ID6: 'e es e ions iez ent',
        keytable.ID7: u'asse asses ât assions assiez assent',
        keytable.ID8: 'ant',
        keytable.ID9: u'é',
        keytable.ID10: 'e ons ez',
        keytable.ID11: 'erais erais erait erions eriez eraient',
    })),
    MorphParadigm('fr', 'ir', 'ir', _cells({
        keytable.ID1: 'ir',
        keytable.ID2: 'is is it issons issez issent',
        keytable.ID3: 'issais issais issait issions issiez issaient',
        keytable.ID4: u'is is it îmes îtes irent',
        keytable.ID5: 'irai iras ira irons irez iront',
        keytable.ID6: 'isse isses isse issions issiez issent',
        keytable.ID7: u'isse isses ît issions issiez issent',
        keytable.ID8: 'issant',
        keytable.ID9: 'i',
        keytable.ID10: 'is issons issez',
        keytable.ID11: 'irais irais irait irions iriez iraient',
    })),
    MorphParadigm('fr', 're', 're', _cells({
        keytable.ID1: 're',
        keytable.ID2: 's s - ons ez ent',
        keytable.ID3: 'ais ais ait ions iez aient',
        keytable.ID4: u'is is it îmes îtes irent',
        keytable.ID5: 'rai ras ra rons rez ront',
        keytable.ID6: 'e es e ions iez ent',
        keytable.ID7: u'isse isses ît issions issiez issent',
        keytable.ID8: 'ant',
        keytable.ID9: 'u',
        keytable.ID10: 's ons ez',
        keytable.ID11: 'rais rais rait rions riez raient',
    })),
]

VERB_PARADIGMS = {'it': ITALIAN_VERBS, 'fr': FRENCH_VERBS}


def verb_paradigm(lemma, language):
    """Return the conjugation class of a lemma, or ``None``."""
    for paradigm in VERB_PARADIGMS[language]:
        if paradigm.matches(lemma):
            return paradigm


def participle(base, gender, number, language):
    """Agree a masculine singular past participle."""
    if language == 'it':
        if not base.endswith('o'):
            return base
        return base[:-1] + {('m', 'sg'): 'o', ('f', 'sg'): 'a',
                            ('m', 'pl'): 'i',
                            ('f', 'pl'): 'e'}[(gender or 'm',
                                               number or 'sg')]
    form = base
    if gender == 'f':
        form += 'e'
    if number == 'pl' and not form.endswith('s'):
        form += 's'
    return form


def gerund(form, language):
    if language == 'fr':
        return 'en ' + form
    return form


# ordered (pattern, replacement) rules, first match wins
ITALIAN_NOUN_PLURAL = [
    (re.compile(u'[{}]$'.format(ACCENTED)), None),
    (re.compile(r'io$'), 'i'),
    (re.compile(r'([cg])a$'), r'\1he', 'f'),
    (re.compile(r'a$'), 'e', 'f'),
    (re.compile(r'a$'), 'i', 'm'),
    (re.compile(r'[oe]$'), 'i'),
]
FRENCH_PLURAL = [
    (re.compile(r'[sxz]$'), None),
    (re.compile(r'(eau|eu)$'), r'\1x'),
    (re.compile(r'al$'), 'aux'),
    (re.compile(r'$'), 's'),
]
FRENCH_FEMININE = [
    (re.compile(r'eux$'), 'euse'),
    (re.compile(r'e$'), None),
    (re.compile(r'er$'), u'ère'),
    (re.compile(r'el$'), 'elle'),
    (re.compile(r'on$'), 'onne'),
    (re.compile(r'en$'), 'enne'),
    (re.compile(r'if$'), 'ive'),
    (re.compile(r'$'), 'e'),
]


def _apply(rules, word, gender=None):
    for rule in rules:
        pattern, replacement = rule[:2]
        if len(rule) > 2 and rule[2] != gender:
            continue
        if pattern.search(word) is not None:
            if replacement is None:
                return word
            return pattern.sub(replacement, word, count=1)
    return word


def italian_noun_plural(word, gender):
    """Plural of an Italian noun: donna => donne, occhio => occhi."""
    return _apply(ITALIAN_NOUN_PLURAL, word, gender)


def french_plural(word):
    """Plural of a French noun or adjective: pouls => pouls, al => aux."""
    return _apply(FRENCH_PLURAL, word)


def french_feminine(word):
    """Feminine of a French adjective: glorieux => glorieuse."""
    return _apply(FRENCH_FEMININE, word)


def italian_adjective(lemma, gender, number):
    """Inflect an Italian adjective given in the masculine singular."""
    gender = gender or 'm'
    number = number or 'sg'
    if lemma.endswith('o'):
        stem = lemma[:-1]
        if number == 'sg':
            return lemma if gender == 'm' else stem + 'a'
        if stem.endswith(('c', 'g')):
            stem += 'h'
        if gender == 'm':
            return stem if stem.endswith('i') else stem + 'i'
        return stem + 'e'
    if lemma.endswith('e'):
        return lemma if number == 'sg' else lemma[:-1] + 'i'
    return lemma


def french_adjective(lemma, gender, number, irregular=None):
    """Inflect a French adjective; ``irregular`` maps cells to forms.

    Cells are ``f`` (feminine singular), ``mpl`` and ``fpl``.
    """
    irregular = irregular or {}
    gender = gender or 'm'
    number = number or 'sg'
    if gender == 'f':
        singular = irregular.get('f') or french_feminine(lemma)
    else:
        singular = lemma
    if number == 'sg':
        return singular
    return irregular.get(gender + 'pl') or french_plural(singular)
