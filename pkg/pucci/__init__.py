__version__ = '0.1.0'

from .config import Config
from .keytable import GrammaticalKey, KeyRealizationTable, load_key_table, \
    parse_key_notation, print_key
from .lexicon import Lexicon, LexiconEntry, load_lexicon, \
    load_simplification_rules
from .encoder import EncodedStream, Encoder, Key, Literal, Stem, \
    parse_stream, render_stream
from .rules import CorrectionRule, load_correction_rules
from .decoder import Translator, translate
from .diffalign import DiffReport, word_diff
from .evalmetrics import MetricScores, bleu, chrf, meteor, score_all
from .corpus import Fixture, list_fixtures, load_fixture

__all__ = ['__version__', 'Config', 'GrammaticalKey', 'KeyRealizationTable',
           'load_key_table', 'parse_key_notation', 'print_key', 'Lexicon',
           'LexiconEntry', 'load_lexicon', 'load_simplification_rules',
           'EncodedStream', 'Encoder', 'Key', 'Literal', 'Stem',
           'parse_stream', 'render_stream', 'CorrectionRule',
           'load_correction_rules', 'Translator', 'translate', 'DiffReport',
           'word_diff', 'MetricScores', 'bleu', 'chrf', 'meteor',
           'score_all', 'Fixture', 'list_fixtures', 'load_fixture']
