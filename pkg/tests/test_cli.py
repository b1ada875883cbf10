import io
import os
import shutil
import tempfile
import unittest

from pucci import cli


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, text):
        path = os.path.join(self.tmp, 'input.txt')
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def run_cli(self, *argv):
        out = io.StringIO()
        status = cli.main(list(argv), out=out)
        return status, out.getvalue()

    def test_translate(self):
        status, output = self.run_cli('translate', '--in',
                                      self.write(u'Io la vidi.\n'))
        self.assertEqual(status, 0)
        self.assertEqual(output, 'Je la vis.\n')

    def test_trace(self):
        status, output = self.run_cli('translate', '--trace', '--in',
                                      self.write(u'Io la vidi.'))
        self.assertEqual(status, 0)
        self.assertIn('== paragraph 1 encode\nI1 IIIf4 vedere:ID4:1sg "."\n',
                      output)
        self.assertTrue(output.endswith('Je la vis.\n'))

    def test_encode(self):
        status, output = self.run_cli('encode', '--in',
                                      self.write(u'Io la vidi.'))
        self.assertEqual((status, output), (0, 'I1 IIIf4 vedere:ID4:1sg "."\n'))

    def test_decode(self):
        status, output = self.run_cli(
            'decode', '--in', self.write(u'I1 IIIf4 vedere:ID4:1sg "."\n'))
        self.assertEqual((status, output), (0, 'Je la vis.\n'))

    def test_diff(self):
        status, output = self.run_cli('diff', '--a', 'pucci_fr_1931',
                                      '--b', 'pucci_fr_1931')
        self.assertEqual((status, output), (0, 'removals=0 additions=0\n'))

    def test_score(self):
        status, output = self.run_cli('score', '--metric', 'bleu',
                                      '--candidate', 'pucci_fr_1931',
                                      '--reference', 'pucci_fr_1931')
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith('metric=bleu score=100.00 bp=1.0000'))

    def test_score_all(self):
        status, output = self.run_cli('score', '--candidate', 'cochin_1905',
                                      '--reference', 'pucci_fr_1931')
        self.assertEqual(status, 0)
        self.assertEqual([line.split()[0] for line in output.splitlines()],
                         ['metric=bleu', 'metric=chrf', 'metric=meteor'])

    def test_stats(self):
        status, output = self.run_cli('stats')
        self.assertEqual(status, 0)
        lines = output.splitlines()
        self.assertEqual(lines[:2], ['group=1 mean=21.33',
                                     'group=2 mean=23.67'])
        self.assertTrue(lines[2].startswith('groups=2 eta_squared=0.1173 '))

    def test_stats_three_groups(self):
        status, output = self.run_cli('stats', '--groups', '3')
        self.assertEqual(len(output.splitlines()), 4)

    def test_unknown_fixture(self):
        status, output = self.run_cli('diff', '--a', 'no_such_text',
                                      '--b', 'pucci_fr_1931')
        self.assertEqual((status, output), (2, ''))

    def test_engine_error(self):
        status, _ = self.run_cli('translate', '--in', self.write(u'Io zzzq.'))
        self.assertEqual(status, 1)

    def test_bad_arguments(self):
        with self.assertRaises(SystemExit) as cm:
            cli.main(['score', '--metric', 'ter'], out=io.StringIO())
        self.assertEqual(cm.exception.code, 2)

    def test_reproduce(self):
        status, output = self.run_cli('reproduce')
        self.assertEqual(status, 0)
        self.assertIn('check=engine_chrf status=pass', output)
        self.assertIn('check=bleu_separation status=pass', output)
        self.assertIn('check=diff_5 status=info value=43/33', output)

    def test_missing_lexicon(self):
        status, output = self.run_cli(
            '--lexicon', os.path.join(self.tmp, 'missing.tsv'),
            'translate', '--in', self.write(u'Io la vidi.'))
        self.assertEqual((status, output), (2, ''))

    def test_missing_data_dir(self):
        status, output = self.run_cli(
            '--data-dir', os.path.join(self.tmp, 'missing'),
            'diff', '--a', 'pucci_fr_1931', '--b', 'pucci_fr_1931')
        self.assertEqual((status, output), (2, ''))
