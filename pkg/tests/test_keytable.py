import io
import os
import shutil
import tempfile
import unittest

from pucci import config
from pucci import exceptions
from pucci import keytable


class TestKeyNotation(unittest.TestCase):
    def test_possessive(self):
        key = keytable.parse_key_notation('M2')
        self.assertEqual(key.category, keytable.POSSESSIVE)
        self.assertEqual(key.person, 1)
        self.assertEqual(key.number, 'sg')
        self.assertEqual(key.case_index, 2)
        self.assertEqual(key.case, keytable.DATIVE)

    def test_first_person_possessive_layout(self):
        self.assertEqual(keytable.parse_key_notation('M1').case,
                         keytable.GENITIVE)
        self.assertEqual(keytable.parse_key_notation('M3').case,
                         keytable.BASE)
        self.assertEqual(keytable.parse_key_notation('T1').case,
                         keytable.BASE)
        self.assertEqual(keytable.parse_key_notation('S3').case,
                         keytable.DATIVE)

    def test_with_case(self):
        self.assertEqual(
            keytable.parse_key_notation('M3').with_case(keytable.DATIVE),
            keytable.parse_key_notation('M2'))
        self.assertEqual(
            keytable.parse_key_notation('a1').with_case(keytable.GENITIVE),
            keytable.parse_key_notation('a2'))

    def test_dotted_article(self):
        key = keytable.parse_key_notation('a.')
        self.assertEqual(key.category, keytable.ARTICLE)
        self.assertEqual(key.case_index, 1)
        self.assertEqual(keytable.print_key(key), 'a1')

    def test_plural_pronoun(self):
        key = keytable.parse_key_notation('III14')
        self.assertEqual(key.category, keytable.PERSONAL_PRONOUN)
        self.assertEqual(key.person, 3)
        self.assertEqual(key.number, 'pl')
        self.assertEqual(key.gender, 'm')
        self.assertEqual(key.case, keytable.OBJECT)
        self.assertEqual(str(key), 'III14')

    def test_feminine_pronoun(self):
        key = keytable.parse_key_notation('IIIf4')
        self.assertEqual(key.gender, 'f')
        self.assertEqual(key.number, 'sg')

    def test_special_keys(self):
        self.assertEqual(keytable.parse_key_notation('&').category,
                         keytable.CONJUNCTION)
        self.assertEqual(keytable.parse_key_notation('+').category,
                         keytable.PLURAL_MARKER)
        self.assertEqual(keytable.parse_key_notation('f').gender, 'f')
        self.assertEqual(keytable.parse_key_notation('I.').category,
                         keytable.PERSONAL_RELATIVE_INDICATOR)
        self.assertTrue(keytable.parse_key_notation('+').is_marker)
        self.assertTrue(keytable.parse_key_notation('d3').is_determiner)

    def test_invalid_notation(self):
        for notation in ('X1', 'a5', 'a12', 'I5', 'M0', ''):
            with self.assertRaises(exceptions.KeyNotationError):
                keytable.parse_key_notation(notation)

    def test_print_parse_inventory(self):
        for key in keytable.canonical_inventory():
            self.assertEqual(
                keytable.parse_key_notation(keytable.print_key(key)), key)

    def test_inventory_size(self):
        self.assertEqual(len(keytable.canonical_inventory()), 85)
        self.assertEqual(len(keytable.realizable_inventory()), 81)

    def test_tense(self):
        self.assertEqual(keytable.parse_tense('ID4'), keytable.ID4)
        self.assertEqual(keytable.print_tense(keytable.ID11), 'ID11')
        with self.assertRaises(exceptions.KeyNotationError):
            keytable.parse_tense('ID12')
        with self.assertRaises(exceptions.KeyNotationError):
            keytable.parse_tense('4')


class TestKeyRealizationTable(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        path = config.Config().keys_path
        cls.italian = keytable.load_key_table(path, 'it')
        cls.french = keytable.load_key_table(path, 'fr')

    def key(self, notation):
        return keytable.parse_key_notation(notation)

    def test_complete(self):
        self.assertEqual(self.italian.missing(), [])
        self.assertEqual(self.french.missing(), [])

    def test_lookup_agreement(self):
        ctx = keytable.AgreementContext
        self.assertEqual(self.french.lookup(self.key('M2'), ctx('m', 'pl')),
                         'aux mes')
        self.assertEqual(self.french.lookup(self.key('a1'), ctx('f', 'sg')),
                         'la')
        self.assertEqual(self.french.lookup(self.key('R1'), ctx('f', 'pl')),
                         'lesquelles')
        self.assertEqual(self.french.lookup(self.key('D2'), ctx('m', 'pl')),
                         'de ces')

    def test_lookup_pronoun_without_context(self):
        self.assertEqual(self.french.lookup(self.key('I3')), 'me')
        self.assertEqual(keytable.lookup_key(self.french, self.key('IIIf4')),
                         'la')

    def test_lookup_elided(self):
        ctx = keytable.AgreementContext('m', 'sg', elided=True)
        self.assertEqual(self.italian.lookup(self.key('a1'), ctx), "l'")
        ctx = keytable.AgreementContext('m', 'sg')
        self.assertEqual(self.italian.lookup(self.key('a1'), ctx), 'il')

    def test_coverage_error(self):
        table = keytable.KeyRealizationTable('fr')
        with self.assertRaises(exceptions.CoverageError) as cm:
            table.lookup(self.key('a1'))
        self.assertEqual(cm.exception.key, 'a1')

    def test_reverse(self):
        keys = [m.key for m in self.italian.reverse('la')]
        self.assertIn(self.key('a1'), keys)
        self.assertIn(self.key('IIIf4'), keys)
        matches = self.italian.reverse('ai miei')
        self.assertEqual(matches[0].key, self.key('M2'))
        self.assertEqual(matches[0].number, 'pl')
        self.assertEqual(self.italian.reverse('gatto'), [])

    def test_surfaces(self):
        self.assertEqual(self.italian.surfaces(self.key('a1'))[:3],
                         ['il', 'lo', "l'"])


class TestLoadKeyTable(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, text):
        path = os.path.join(self.tmp, 'keys.tsv')
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_language_filter(self):
        path = self.write(u'# comment\na1\tit\tm\tsg\til/lo\n'
                          u'a1\tfr\tm\tsg\tle\n')
        table = keytable.load_key_table(path, 'fr')
        self.assertEqual(len(table), 1)
        self.assertEqual(table.surfaces(keytable.parse_key_notation('a1')),
                         ['le'])

    def test_bad_field_count(self):
        path = self.write(u'a1\tfr\tm\tle\n')
        with self.assertRaises(exceptions.KeyTableLoadError) as cm:
            keytable.load_key_table(path, 'fr')
        self.assertEqual(cm.exception.line_number, 1)

    def test_bad_gender(self):
        path = self.write(u'a1\tfr\tx\tsg\tle\n')
        with self.assertRaises(exceptions.KeyTableLoadError) as cm:
            keytable.load_key_table(path, 'fr')
        self.assertIsInstance(cm.exception, ValueError)

    def test_bad_notation(self):
        path = self.write(u'a1\tfr\tm\tsg\tle\nX9\tfr\t-\t-\tzz\n')
        with self.assertRaises(exceptions.KeyTableLoadError) as cm:
            keytable.load_key_table(path, 'fr')
        self.assertEqual(cm.exception.line_number, 2)
        self.assertIsInstance(cm.exception.__cause__,
                              exceptions.KeyNotationError)
