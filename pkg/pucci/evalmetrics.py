"""BLEU, chrF and METEOR against a single reference.

BLEU and METEOR compare lowercased word tokens with punctuation split off;
chrF compares character n-grams of the text with whitespace removed.
"""
import collections
import logging
import math
import re

from nltk.stem.snowball import FrenchStemmer

from . import tokens as _tokens

default_logger = logging.getLogger('pucci.evalmetrics')

NGRAM_ORDER = 4
CHRF_ORDER = 6
CHRF_BETA = 2
METEOR_ALPHA = 0.9
METEOR_GAMMA = 0.5
METEOR_BETA = 3

BleuScore = collections.namedtuple(
    'BleuScore', ['score', 'brevity_penalty', 'precisions', 'sys_len',
                  'ref_len', 'empty'])
ChrfScore = collections.namedtuple(
    'ChrfScore', ['score', 'precisions', 'recalls'])
MeteorScore = collections.namedtuple(
    'MeteorScore', ['score', 'precision', 'recall', 'fragmentation_penalty',
                    'matches', 'chunks'])
MetricScores = collections.namedtuple(
    'MetricScores', ['bleu', 'brevity_penalty', 'ngram_precisions', 'chrf',
                     'chrf_precisions', 'meteor', 'meteor_precision',
                     'meteor_recall', 'fragmentation_penalty'])

_stemmer = None


def _stem(word):
    global _stemmer
    if _stemmer is None:
        _stemmer = FrenchStemmer()
    return _stemmer.stem(word)


def extract_ngrams(tokens, n):
    return collections.Counter(tuple(tokens[i:i + n])
                               for i in range(len(tokens) - n + 1))


def extract_char_ngrams(s, n):
    return collections.Counter(s[i:i + n] for i in range(len(s) - n + 1))


def delete_whitespace(text):
    return re.sub(r'\s+', '', text)


def bleu(candidate, reference):
    """Sentence BLEU with clipped 1- to 4-gram precisions.

    No smoothing is applied: a zero precision gives a zero score. An empty
    candidate scores 0 with ``empty`` set.
    """
    sys_tokens = _tokens.metric_tokenize(candidate)
    ref_tokens = _tokens.metric_tokenize(reference)
    sys_len, ref_len = len(sys_tokens), len(ref_tokens)
    if not sys_tokens:
        return BleuScore(0.0, 0.0, [0.0] * NGRAM_ORDER, 0, ref_len, True)
    precisions = []
    for n in range(1, NGRAM_ORDER + 1):
        sys_ngrams = extract_ngrams(sys_tokens, n)
        total = sum(sys_ngrams.values())
        correct = sum((sys_ngrams & extract_ngrams(ref_tokens, n)).values())
        precisions.append(float(correct) / total if total else 0.0)
    brevity_penalty = 1.0
    if sys_len < ref_len:
        brevity_penalty = math.exp(1 - float(ref_len) / sys_len)
    if min(precisions) == 0:
        score = 0.0
    else:
        score = 100 * brevity_penalty * math.exp(
            sum(math.log(p) for p in precisions) / NGRAM_ORDER)
    return BleuScore(score, brevity_penalty, precisions, sys_len, ref_len,
                     False)


def chrf(candidate, reference, order=CHRF_ORDER, beta=CHRF_BETA):
    """Character n-gram F-score, recall weighted by ``beta``.

    Precision and recall are averaged over the orders both texts have
    n-grams of, then combined; the score is on a 0-100 scale.
    """
    hypothesis = delete_whitespace(candidate)
    ref = delete_whitespace(reference)
    precisions = []
    recalls = []
    avg_precision = avg_recall = 0.0
    effective_order = 0
    for n in range(1, order + 1):
        hyp_ngrams = extract_char_ngrams(hypothesis, n)
        ref_ngrams = extract_char_ngrams(ref, n)
        common = sum((hyp_ngrams & ref_ngrams).values())
        hyp_total = sum(hyp_ngrams.values())
        ref_total = sum(ref_ngrams.values())
        precisions.append(float(common) / hyp_total if hyp_total else 0.0)
        recalls.append(float(common) / ref_total if ref_total else 0.0)
        if hyp_total and ref_total:
            avg_precision += precisions[-1]
            avg_recall += recalls[-1]
            effective_order += 1
    if effective_order == 0:
        return ChrfScore(0.0, precisions, recalls)
    avg_precision /= effective_order
    avg_recall /= effective_order
    if avg_precision + avg_recall == 0:
        return ChrfScore(0.0, precisions, recalls)
    beta_square = beta ** 2
    score = (1 + beta_square) * avg_precision * avg_recall / \
        (beta_square * avg_precision + avg_recall)
    return ChrfScore(100 * score, precisions, recalls)


def _align(sys_tokens, ref_tokens, key, alignment):
    """Extend ``alignment`` (candidate index to reference index) greedily.

    Each candidate token takes the reference token right after the one its
    predecessor matched when it can, else the first free one.
    """
    used = set(alignment.values())
    free = collections.defaultdict(list)
    for j, token in enumerate(ref_tokens):
        if j not in used:
            free[key(token)].append(j)
    for i, token in enumerate(sys_tokens):
        if i in alignment:
            continue
        candidates = [j for j in free.get(key(token), []) if j not in used]
        if not candidates:
            continue
        previous = alignment.get(i - 1)
        j = candidates[0]
        if previous is not None and previous + 1 in candidates:
            j = previous + 1
        alignment[i] = j
        used.add(j)


def _chunks(alignment):
    chunks = 0
    previous = None
    for i in sorted(alignment):
        j = alignment[i]
        if previous is None or previous != (i - 1, j - 1):
            chunks += 1
        previous = (i, j)
    return chunks


def meteor(candidate, reference):
    """Unigram METEOR with exact and stem matching.

    The harmonic mean weights recall nine times precision, and the
    fragmentation penalty is ``0.5 * (chunks / matches) ** 3``.
    """
    sys_tokens = _tokens.metric_tokenize(candidate)
    ref_tokens = _tokens.metric_tokenize(reference)
    alignment = {}
    _align(sys_tokens, ref_tokens, lambda t: t, alignment)
    _align(sys_tokens, ref_tokens, _stem, alignment)
    matches = len(alignment)
    if not matches:
        return MeteorScore(0.0, 0.0, 0.0, 0.0, 0, 0)
    precision = float(matches) / len(sys_tokens)
    recall = float(matches) / len(ref_tokens)
    fmean = precision * recall / \
        (METEOR_ALPHA * precision + (1 - METEOR_ALPHA) * recall)
    chunks = _chunks(alignment)
    penalty = METEOR_GAMMA * (float(chunks) / matches) ** METEOR_BETA
    return MeteorScore(100 * fmean * (1 - penalty), precision, recall,
                       penalty, matches, chunks)


def score_all(candidate, reference):
    """Return every metric and its components as ``MetricScores``."""
    b = bleu(candidate, reference)
    c = chrf(candidate, reference)
    m = meteor(candidate, reference)
    default_logger.debug('bleu=%.2f chrf=%.2f meteor=%.2f', b.score,
                         c.score, m.score)
    return MetricScores(b.score, b.brevity_penalty, b.precisions, c.score,
                        c.precisions, m.score, m.precision, m.recall,
                        m.fragmentation_penalty)


def corpus_table(candidates, reference):
    """Score candidates against one reference.

    :param candidates: Sequence of ``(name, text)`` pairs, or a mapping.
    :return: ``(name, MetricScores)`` rows in candidate order.
    """
    if hasattr(candidates, 'items'):
        candidates = list(candidates.items())
    return [(name, score_all(text, reference)) for name, text in candidates]
