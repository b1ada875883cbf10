import io
import os
import shutil
import tempfile
import unittest

from pucci import config
from pucci import corpus
from pucci import exceptions


class TestFixtures(unittest.TestCase):
    def test_required_fixtures(self):
        ids = corpus.list_fixtures()
        for fixture_id in ('dante_it', 'pucci_fr_1931', 'chatgpt_pucci',
                           'claude_pucci', 'grok_pucci', 'fardel_1898',
                           'godefroy_1901', 'cochin_1905', 'gpt5_nmt',
                           'pucci_encoding_1931'):
            self.assertIn(fixture_id, ids)

    def test_roles(self):
        self.assertEqual(corpus.list_fixtures(corpus.REFERENCE),
                         ['pucci_fr_1931'])
        self.assertIn('pucci_encoding_1931',
                      corpus.list_fixtures(role=corpus.ENCODING))
        self.assertNotIn('dante_it', corpus.list_fixtures(corpus.CANDIDATE))

    def test_load(self):
        source = corpus.load_fixture('dante_it')
        self.assertEqual(source.language, 'it')
        self.assertEqual(source.role, corpus.SOURCE)
        self.assertTrue(source.text.startswith(
            'Ai miei occhi apparve la gloriosa donna'))
        self.assertFalse(source.text.endswith('\n'))
        reference = corpus.load_fixture('pucci_fr_1931')
        self.assertTrue(reference.text.startswith(
            u'À mes yeux apparut la glorieuse femme'))

    def test_provenance(self):
        for fixture_id in corpus.list_fixtures():
            self.assertTrue(corpus.load_fixture(fixture_id).provenance)

    def test_unknown(self):
        with self.assertRaises(exceptions.FixtureNotFoundError) as cm:
            corpus.load_fixture('dante_fr')
        self.assertIsInstance(cm.exception, KeyError)
        self.assertIn('dante_it', cm.exception.available)
        self.assertIn('dante_it', str(cm.exception))


class TestManifest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.config = config.Config(data_dir=self.tmp)
        os.mkdir(self.config.fixtures_dir)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name, text):
        path = os.path.join(self.config.fixtures_dir, name)
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_custom_directory(self):
        self.write('manifest.tsv', u'x\tfr\tcandidate\tx.txt\tmade up\n')
        self.write('x.txt', u'Bonjour.\n')
        fixture = corpus.load_fixture('x', self.config)
        self.assertEqual(fixture.text, 'Bonjour.')
        self.assertEqual(corpus.list_fixtures(config=self.config), ['x'])

    def test_duplicate_id(self):
        self.write('manifest.tsv', u'x\tfr\tcandidate\tx.txt\ta\n'
                                   u'x\tfr\tcandidate\ty.txt\tb\n')
        with self.assertRaises(exceptions.ManifestError) as cm:
            corpus.list_fixtures(config=self.config)
        self.assertEqual(cm.exception.line_number, 2)
        self.assertIsInstance(cm.exception, ValueError)

    def test_unknown_role(self):
        self.write('manifest.tsv', u'x\tfr\tsystem\tx.txt\ta\n')
        with self.assertRaises(exceptions.ManifestError):
            corpus.list_fixtures(config=self.config)

    def test_missing_provenance(self):
        self.write('manifest.tsv', u'x\tfr\tcandidate\tx.txt\t \n')
        with self.assertRaises(exceptions.ManifestError):
            corpus.list_fixtures(config=self.config)

    def test_resolve_path(self):
        path = self.write('free.txt', u'Testo.\n')
        self.assertEqual(corpus.resolve_text(path), 'Testo.')

    def test_field_count(self):
        self.write('manifest.tsv', u'# id\tlanguage\trole\tfile\tprovenance\n'
                                   u'x\tfr\tcandidate\tx.txt\n')
        with self.assertRaises(exceptions.ManifestError) as cm:
            corpus.list_fixtures(config=self.config)
        self.assertEqual(cm.exception.line_number, 2)
        self.assertIn('manifest.tsv:2:', str(cm.exception))
