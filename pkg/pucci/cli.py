"""Command line front end.

Texts are given as a fixture id, a file path or ``-`` for standard input.
Exit status is 0 on success, 1 when a reproduction check fails and 2 on
usage errors.
"""
import argparse
import logging
import os
import sys

from . import __version__
from . import config as _config
from . import corpus
from . import decoder
from . import diffalign
from . import encoder
from . import evalmetrics
from . import exceptions
from . import reproduce

default_logger = logging.getLogger('pucci.cli')

METRICS = ['bleu', 'chrf', 'meteor']


def _read(name, config):
    if name == '-':
        return sys.stdin.read().rstrip('\n')
    try:
        return corpus.resolve_text(name, config)
    except exceptions.FixtureNotFoundError as exc:
        raise exceptions.UsageError(
            '"{}" is neither a file nor a fixture id; available: {}'.format(
                name, ', '.join(exc.available)))


def _config_from(args):
    try:
        config = _config.Config.from_env(
            data_dir=args.data_dir, pair=args.pair, rules=args.rules,
            lexicon=args.lexicon)
    except ValueError as exc:
        raise exceptions.UsageError(str(exc))
    if not os.path.isdir(config.data_dir):
        raise exceptions.UsageError(
            'data directory "{}" does not exist'.format(config.data_dir))
    overrides = [('--lexicon', args.lexicon, config.lexicon_path),
                 ('--rules', args.rules, config.corrections_path)]
    for flag, given, path in overrides:
        if given is not None and not os.path.isfile(path):
            raise exceptions.UsageError(
                '{} file "{}" does not exist'.format(flag, path))
    return config


def _translator(args, config):
    return decoder.Translator(config, logger=args.verbose)


def encode_command(args, config, out):
    translator = _translator(args, config)
    text = _read(args.input, config)
    if not args.no_simplify:
        text = translator.simplify(text)
    out.write(encoder.render_stream(translator.encode(text)) + '\n')
    return 0


def decode_command(args, config, out):
    translator = _translator(args, config)
    stream = encoder.parse_stream(_read(args.input, config),
                                  translator.lexicon)
    out.write(translator.decode(stream) + '\n')
    return 0


def translate_command(args, config, out):
    translator = _translator(args, config)
    text = _read(args.input, config)
    if not args.trace:
        out.write(translator.translate(text) + '\n')
        return 0
    for number, stages in enumerate(translator.trace(text), 1):
        for stage, output in stages.items():
            out.write('== paragraph {} {}\n{}\n'.format(number, stage,
                                                       output))
    return 0


def diff_command(args, config, out):
    report = diffalign.word_diff(_read(args.a, config), _read(args.b, config))
    out.write(report.render() + '\n')
    if args.hunks and report.hunks:
        out.write(report.hunk_listing() + '\n')
    return 0


def _metric_lines(metrics, candidate, reference):
    lines = []
    if 'bleu' in metrics:
        b = evalmetrics.bleu(candidate, reference)
        lines.append('metric=bleu score={:.2f} bp={:.4f} {}{}'.format(
            b.score, b.brevity_penalty,
            ' '.join('p{}={:.4f}'.format(n, p)
                     for n, p in enumerate(b.precisions, 1)),
            ' empty=yes' if b.empty else ''))
    if 'chrf' in metrics:
        c = evalmetrics.chrf(candidate, reference)
        lines.append('metric=chrf score={:.2f} {}'.format(
            c.score, ' '.join('p{}={:.4f}'.format(n, p)
                              for n, p in enumerate(c.precisions, 1))))
    if 'meteor' in metrics:
        m = evalmetrics.meteor(candidate, reference)
        lines.append('metric=meteor score={:.2f} precision={:.4f} '
                     'recall={:.4f} penalty={:.4f}'.format(
                         m.score, m.precision, m.recall,
                         m.fragmentation_penalty))
    return lines


def score_command(args, config, out):
    metrics = METRICS if args.metric == 'all' else [args.metric]
    lines = _metric_lines(metrics, _read(args.candidate, config),
                          _read(args.reference, config))
    out.write('\n'.join(lines) + '\n')
    return 0


def stats_command(args, config, out):
    groups = diffalign.published_counts()
    if args.groups == 2:
        comparison_groups = [groups[0], groups[1] + groups[2]]
    else:
        comparison_groups = groups
    for number, mean in enumerate(diffalign.group_stats(comparison_groups),
                                  1):
        out.write('group={} mean={:.2f}\n'.format(number, float(mean)))
    effect = diffalign.effect_size(diffalign.arrangement(groups,
                                                         args.groups))
    out.write('groups={} eta_squared={:.4f} cohens_f={:.4f}\n'.format(
        args.groups, effect.eta_squared, effect.cohens_f))
    return 0


def reproduce_command(args, config, out):
    reproducer = reproduce.Reproducer(config, logger=args.verbose)
    passed = reproducer.run()
    if reproducer.translation is not None:
        out.write(reproducer.translation + '\n\n')
    out.write(reproducer.render_table() + '\n\n')
    out.write(reproducer.render_lines() + '\n')
    return 0 if passed else 1


def _parser():
    parser = argparse.ArgumentParser(
        prog='pucci',
        description='Italian to French translation through ideogram keys, '
                    'and the evaluation of its output.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('--pair', default=None,
                        help='language pair (default: it-fr)')
    parser.add_argument('--data-dir', default=None,
                        help='data directory (default: $PUCCI_DATA_DIR or '
                             'the packaged data)')
    parser.add_argument('--rules', default=None,
                        help='correction rule file')
    parser.add_argument('--lexicon', default=None, help='lexicon file')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='log stage progress')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    p = subparsers.add_parser('encode', help='print the ideogram stream')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--no-simplify', action='store_true',
                   help='encode the text as given')
    p.set_defaults(func=encode_command)

    p = subparsers.add_parser('decode', help='decode an ideogram stream')
    p.add_argument('--in', dest='input', required=True)
    p.set_defaults(func=decode_command)

    p = subparsers.add_parser('translate', help='translate Italian text')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--trace', action='store_true',
                   help='print the output of every stage')
    p.set_defaults(func=translate_command)

    p = subparsers.add_parser('diff', help='count removals and additions')
    p.add_argument('--a', required=True)
    p.add_argument('--b', required=True)
    p.add_argument('--hunks', action='store_true',
                   help='list the hunks')
    p.set_defaults(func=diff_command)

    p = subparsers.add_parser('score', help='score a candidate')
    p.add_argument('--metric', choices=METRICS + ['all'], default='all')
    p.add_argument('--candidate', required=True)
    p.add_argument('--reference', required=True)
    p.set_defaults(func=score_command)

    p = subparsers.add_parser('stats',
                              help='group means and effect size of the '
                                   'published comparison counts')
    p.add_argument('--groups', type=int, choices=[2, 3], default=2)
    p.set_defaults(func=stats_command)

    p = subparsers.add_parser('reproduce', help='run the reproduction checks')
    p.set_defaults(func=reproduce_command)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    try:
        config = _config_from(args)
        return args.func(args, config, out)
    except exceptions.UsageError as exc:
        sys.stderr.write('pucci: error: {}\n'.format(exc))
        return 2
    except exceptions.PucciError as exc:
        default_logger.error('%s', exc)
        sys.stderr.write('pucci: {}\n'.format(exc))
        return 1
    except EnvironmentError as exc:
        sys.stderr.write('pucci: error: {}\n'.format(exc))
        return 2
