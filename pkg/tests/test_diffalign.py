import fractions
import math
import unittest

from pucci import corpus
from pucci import diffalign
from pucci import exceptions


class TestWordDiff(unittest.TestCase):
    def test_identical(self):
        report = diffalign.word_diff('a b c', 'a b c')
        self.assertEqual((report.removals, report.additions), (0, 0))
        self.assertEqual(report.hunks, [])

    def test_substitution(self):
        report = diffalign.word_diff('a b c', 'a x c')
        self.assertEqual(report.render(), 'removals=1 additions=1')
        self.assertEqual(report.hunks, [diffalign.Hunk(diffalign.Span(1, 2),
                                                       diffalign.Span(1, 2))])
        self.assertEqual(report.hunk_listing(),
                         '@@ 1 a[1:2] b[1:2]\n- b\n+ x')

    def test_addition(self):
        report = diffalign.word_diff('a b', 'a b c')
        self.assertEqual((report.removals, report.additions), (0, 1))
        self.assertEqual(report.total, 1)

    def test_punctuation_and_case(self):
        report = diffalign.word_diff('Elle vit.', 'elle vit,')
        self.assertEqual((report.removals, report.additions), (2, 2))

    def test_empty(self):
        report = diffalign.word_diff('', 'a b')
        self.assertEqual((report.removals, report.additions), (0, 1))

    def test_symmetry(self):
        texts = [(i, corpus.load_fixture(i).text)
                 for i in corpus.list_fixtures()]
        for a_id, a in texts:
            for b_id, b in texts:
                if a_id >= b_id:
                    continue
                forward = diffalign.word_diff(a, b)
                backward = diffalign.word_diff(b, a)
                self.assertEqual((forward.removals, forward.additions),
                                 (backward.additions, backward.removals),
                                 (a_id, b_id))

    def test_table_matches_recurrence(self):
        a, b = list('abcbdab'), list('bdcaba')
        table = diffalign.lcs_table(a, b)
        for i in range(1, len(a) + 1):
            for j in range(1, len(b) + 1):
                if a[i - 1] == b[j - 1]:
                    expected = table[i - 1, j - 1] + 1
                else:
                    expected = max(table[i, j - 1], table[i - 1, j])
                self.assertEqual(table[i, j], expected)
        self.assertEqual(diffalign.lcs_table([], b).shape, (1, 7))

    def test_common_subsequence(self):
        pairs = diffalign.common_subsequence(list('abcbdab'),
                                             list('bdcaba'))
        self.assertEqual(len(pairs), 4)
        self.assertEqual(int(diffalign.lcs_table(list('abcbdab'),
                                                 list('bdcaba'))[-1, -1]), 4)


class TestStatistics(unittest.TestCase):
    def setUp(self):
        self.groups = diffalign.published_counts()

    def test_group_means(self):
        means = diffalign.group_stats(
            [self.groups[0], self.groups[1] + self.groups[2]])
        self.assertEqual(means, [fractions.Fraction(64, 3),
                                 fractions.Fraction(71, 3)])
        self.assertEqual([round(float(m), 2) for m in means], [21.33, 23.67])

    def test_single_pair(self):
        self.assertEqual(diffalign.group_stats([[(5, 5)]]),
                         [fractions.Fraction(5)])

    def test_empty_group(self):
        with self.assertRaises(exceptions.StatisticsError):
            diffalign.group_stats([[(1, 2)], []])

    def test_published_effect_size(self):
        for count in (2, 3):
            effect = diffalign.effect_size(
                diffalign.arrangement(self.groups, count))
            self.assertAlmostEqual(effect.eta_squared, 0.1173, places=4)
            self.assertAlmostEqual(effect.cohens_f,
                                   diffalign.cohens_f(effect.eta_squared))

    def test_cohens_f(self):
        self.assertAlmostEqual(diffalign.cohens_f(0.077), 0.2888, places=4)
        self.assertEqual(diffalign.cohens_f(0), 0)
        self.assertTrue(math.isinf(diffalign.cohens_f(1)))

    def test_perfect_separation(self):
        effect = diffalign.effect_size([[0, 0], [1, 1]])
        self.assertEqual(effect.eta_squared, 1)
        self.assertTrue(math.isinf(effect.cohens_f))

    def test_equal_means(self):
        self.assertEqual(diffalign.effect_size([[1, 3], [2, 2]]).eta_squared,
                         0)
        self.assertEqual(diffalign.effect_size([[5, 5], [5, 5]]).eta_squared,
                         0)

    def test_shift_invariance(self):
        groups = [[1, 4, 2], [6, 5, 9]]
        shifted = [[v + 10 for v in g] for g in groups]
        self.assertAlmostEqual(diffalign.effect_size(groups).eta_squared,
                               diffalign.effect_size(shifted).eta_squared)

    def test_bad_groups(self):
        with self.assertRaises(exceptions.StatisticsError):
            diffalign.effect_size([[1, 2, 3]])
        with self.assertRaises(exceptions.StatisticsError):
            diffalign.effect_size([[1, 2], []])
        with self.assertRaises(ValueError):
            diffalign.arrangement(self.groups, 4)
