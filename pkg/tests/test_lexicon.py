import io
import os
import shutil
import tempfile
import unittest

from pucci import config
from pucci import exceptions
from pucci import keytable
from pucci import lexicon as lex


class TestLexicon(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cfg = config.Config()
        cls.lexicon = lex.load_lexicon(cfg.lexicon_path)
        cls.keys = keytable.load_key_table(cfg.keys_path, 'it')
        cls.rules = lex.load_simplification_rules(cfg.simplify_path)

    def test_translate_lemma(self):
        self.assertEqual(self.lexicon.translate_lemma('donna', lex.NOUN),
                         ('femme', 'f'))
        self.assertEqual(lex.translate_lemma('occhio', lex.NOUN,
                                             self.lexicon), (u'œil', 'm'))

    def test_lookup_error(self):
        with self.assertRaises(exceptions.LexiconLookupError) as cm:
            self.lexicon.get('gatto', lex.NOUN)
        self.assertIsInstance(cm.exception, KeyError)

    def test_realize_nouns(self):
        self.assertEqual(self.lexicon.realize('occhio', lex.NOUN,
                                              {'number': 'pl'}), 'yeux')
        self.assertEqual(self.lexicon.realize('donna', lex.NOUN,
                                              {'number': 'pl'}), 'femmes')
        self.assertEqual(self.lexicon.realize('occhio', lex.NOUN,
                                              {'number': 'pl'},
                                              side=lex.SOURCE), 'occhi')
        self.assertEqual(self.lexicon.realize('uomo', lex.NOUN,
                                              {'number': 'pl'},
                                              side=lex.SOURCE), 'uomini')

    def test_realize_verbs(self):
        features = {'tense': keytable.ID4, 'person': '3sg'}
        self.assertEqual(self.lexicon.realize('apparire', lex.VERB,
                                              features), 'apparut')
        self.assertEqual(self.lexicon.realize('apparire', lex.VERB, features,
                                              side=lex.SOURCE), 'apparve')
        self.assertEqual(
            self.lexicon.realize('chiamare', lex.VERB,
                                 {'tense': keytable.ID9, 'gender': 'f'}),
            u'appelée')
        self.assertEqual(self.lexicon.realize('passare', lex.VERB,
                                              {'tense': keytable.ID8}),
                         'en passant')
        self.assertEqual(self.lexicon.realize('passare', lex.VERB),
                         'passer')

    def test_realize_missing_cell(self):
        with self.assertRaises(exceptions.LexiconError):
            self.lexicon.realize('vedere', lex.VERB,
                                 {'tense': keytable.ID5, 'person': '1sg'})

    def test_realize_adjectives(self):
        self.assertEqual(self.lexicon.realize('bianco', lex.ADJECTIVE,
                                              {'gender': 'f',
                                               'number': 'sg'}), 'blanche')
        self.assertEqual(self.lexicon.realize('tutto', lex.ADJECTIVE,
                                              {'gender': 'm',
                                               'number': 'pl'}), 'tous')
        self.assertEqual(self.lexicon.realize('molto', lex.ADJECTIVE,
                                              {'gender': 'f',
                                               'number': 'pl'}),
                         'beaucoup de')

    def test_analyze(self):
        analyses = self.lexicon.analyze('occhi')
        self.assertEqual(analyses[0].lemma, 'occhio')
        self.assertEqual(analyses[0].number, 'pl')
        verb = self.lexicon.analyze('apparve')[0]
        self.assertEqual((verb.lemma, verb.tense, verb.person),
                         ('apparire', keytable.ID4, '3sg'))
        participle = self.lexicon.analyze('chiamata')[0]
        self.assertEqual((participle.tense, participle.gender),
                         (keytable.ID9, 'f'))
        self.assertEqual(self.lexicon.analyze('gatto'), [])

    def test_analyze_capitalized(self):
        self.assertEqual(self.lexicon.analyze('Occhi')[0].lemma, 'occhio')

    def test_replacements_are_known(self):
        self.assertEqual(
            lex.unknown_replacement_words(self.rules, self.lexicon,
                                          self.keys), [])

    def test_simplification_rule_match(self):
        rule = lex.SimplificationRule(lex.SUPERLATIVE, ['bianchissim*'],
                                      ['molto', 'bianc*'])
        words = ['Ella', 'apparve', 'bianchissima']
        captures = rule.match(words, 2)
        self.assertEqual(captures, ['a'])
        self.assertEqual(rule.rewrite(words, 2, captures),
                         ['molto', 'bianca'])
        self.assertIsNone(rule.match(words, 1))

    def test_anchored_rule(self):
        rule = lex.SimplificationRule(lex.ELLIPSIS_FILL,
                                      ['^', 'apparve'], ['Ella', 'apparve'])
        self.assertTrue(rule.anchored)
        self.assertEqual(rule.match(['Apparve'], 0, sentence_starts=[0]), [])
        self.assertIsNone(rule.match(['e', 'apparve'], 1,
                                     sentence_starts=[0]))

    def test_anchored_rule_may_repeat_its_pattern(self):
        rule = lex.SimplificationRule(lex.ELLIPSIS_FILL,
                                      ['^', 'apparve', 'vestita'],
                                      ['ella', 'apparve', 'vestita'])
        self.assertFalse(rule.reintroduces_pattern())
        rule = lex.SimplificationRule(lex.ELLIPSIS_FILL, ['^', 'apparve'],
                                      ['apparve', 'ella'])
        self.assertTrue(rule.reintroduces_pattern())
        rule = lex.SimplificationRule(lex.ELLIPSIS_FILL, ['apparve'],
                                      ['ella', 'apparve'])
        self.assertTrue(rule.reintroduces_pattern())

    def test_bad_rule(self):
        with self.assertRaises(ValueError):
            lex.SimplificationRule('poetic', ['a'], ['b'])
        with self.assertRaises(ValueError):
            lex.SimplificationRule(lex.SUPERLATIVE, ['a'], ['b*'])

    def test_paradigm_round_trip(self):
        for entry in self.lexicon:
            for form, analysis in self.lexicon.forms(entry):
                self.assertIn(analysis, self.lexicon.analyze(form), form)

    def test_index_follows_add(self):
        lexicon = lex.Lexicon()
        self.assertEqual(lexicon.analyze('gatti'), [])
        lexicon.add(lex.LexiconEntry('gatto', lex.NOUN, 'm', 'chat', 'm'))
        self.assertEqual(lexicon.analyze('gatti'),
                         [lex.Analysis('gatto', lex.NOUN, 'm', 'pl')])
        forms = lexicon.indexed_forms()
        lexicon.analyze('cani')
        self.assertEqual(lexicon.indexed_forms(), forms)

    def test_load_is_repeatable(self):
        again = lex.load_lexicon(config.Config().lexicon_path)
        self.assertEqual([e.key for e in again],
                         [e.key for e in self.lexicon])


class TestLoadLexicon(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_duplicates(self):
        path = self.write('lexicon.tsv',
                          u'donna\tnoun\tf\tfemme\tf\t-\n'
                          u'donna\tnoun\tf\tfemme\tf\t-\n')
        self.assertEqual(len(lex.load_lexicon(path)), 1)

    def test_conflict(self):
        path = self.write('lexicon.tsv',
                          u'donna\tnoun\tf\tfemme\tf\t-\n'
                          u'donna\tnoun\tf\tdame\tf\t-\n')
        with self.assertRaises(exceptions.LexiconLoadError) as cm:
            lex.load_lexicon(path)
        self.assertEqual(cm.exception.line_number, 2)

    def test_malformed_irregular(self):
        path = self.write('lexicon.tsv',
                          u'occhio\tnoun\tm\tœil\tm\tfr:pl\n')
        with self.assertRaises(exceptions.LexiconLoadError):
            lex.load_lexicon(path)

    def test_unknown_pos(self):
        path = self.write('lexicon.tsv', u'bello\tadj\tm\tbeau\tm\t-\n')
        with self.assertRaises(exceptions.LexiconLoadError):
            lex.load_lexicon(path)

    def test_rule_reintroducing_pattern(self):
        path = self.write('simplify.tsv',
                          u'rareExpression\tsì\tsì sì\n')
        with self.assertRaises(exceptions.RuleLoadError):
            lex.load_simplification_rules(path)
