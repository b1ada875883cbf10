import unittest

from pucci import keytable
from pucci import morphology


class TestVerbParadigms(unittest.TestCase):
    def test_italian(self):
        paradigm = morphology.verb_paradigm('amare', 'it')
        self.assertEqual(paradigm.paradigm_id, 'are')
        self.assertEqual(paradigm.inflect('amare', keytable.ID4, '3sg'),
                         u'amò')
        self.assertEqual(paradigm.inflect('amare', keytable.ID9), 'amato')

    def test_french(self):
        self.assertEqual(
            morphology.verb_paradigm('aimer', 'fr').inflect(
                'aimer', keytable.ID3, '3sg'), 'aimait')
        self.assertEqual(
            morphology.verb_paradigm('finir', 'fr').inflect(
                'finir', keytable.ID2, '3pl'), 'finissent')
        self.assertEqual(
            morphology.verb_paradigm('rendre', 'fr').inflect(
                'rendre', keytable.ID2, '3sg'), 'rend')

    def test_empty_cell(self):
        paradigm = morphology.verb_paradigm('aimer', 'fr')
        self.assertIsNone(paradigm.inflect('aimer', keytable.ID10, '3sg'))

    def test_unknown_class(self):
        self.assertIsNone(morphology.verb_paradigm('xyz', 'it'))
        with self.assertRaises(ValueError):
            morphology.verb_paradigm('amare', 'it').stem('aimer')

    def test_participle(self):
        self.assertEqual(morphology.participle('chiamato', 'f', 'sg', 'it'),
                         'chiamata')
        self.assertEqual(morphology.participle(u'appelé', 'f', 'sg', 'fr'),
                         u'appelée')
        self.assertEqual(morphology.participle(u'passé', 'm', 'pl', 'fr'),
                         u'passés')

    def test_gerund(self):
        self.assertEqual(morphology.gerund('passant', 'fr'), 'en passant')
        self.assertEqual(morphology.gerund('passando', 'it'), 'passando')


class TestNominal(unittest.TestCase):
    def test_italian_noun_plural(self):
        self.assertEqual(morphology.italian_noun_plural('donna', 'f'),
                         'donne')
        self.assertEqual(morphology.italian_noun_plural('occhio', 'm'),
                         'occhi')
        self.assertEqual(morphology.italian_noun_plural('amica', 'f'),
                         'amiche')
        self.assertEqual(morphology.italian_noun_plural(u'città', 'f'),
                         u'città')

    def test_french_plural(self):
        self.assertEqual(morphology.french_plural('pouls'), 'pouls')
        self.assertEqual(morphology.french_plural('cheval'), 'chevaux')
        self.assertEqual(morphology.french_plural('jeu'), 'jeux')
        self.assertEqual(morphology.french_plural('femme'), 'femmes')

    def test_french_feminine(self):
        self.assertEqual(morphology.french_feminine('glorieux'), 'glorieuse')
        self.assertEqual(morphology.french_feminine('dernier'), u'dernière')
        self.assertEqual(morphology.french_feminine('mortel'), 'mortelle')
        self.assertEqual(morphology.french_feminine('noble'), 'noble')

    def test_italian_adjective(self):
        self.assertEqual(morphology.italian_adjective('bianco', 'm', 'pl'),
                         'bianchi')
        self.assertEqual(morphology.italian_adjective('bianco', 'f', 'pl'),
                         'bianche')
        self.assertEqual(morphology.italian_adjective('nobile', 'f', 'pl'),
                         'nobili')
        self.assertEqual(morphology.italian_adjective('glorioso', 'f', 'sg'),
                         'gloriosa')

    def test_french_adjective_irregular(self):
        self.assertEqual(
            morphology.french_adjective('blanc', 'f', 'pl',
                                        {'f': 'blanche'}), 'blanches')
        self.assertEqual(
            morphology.french_adjective('tout', 'm', 'pl', {'mpl': 'tous'}),
            'tous')
