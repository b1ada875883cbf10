import logging
import os

DATA_DIR_ENV = 'PUCCI_DATA_DIR'
PACKAGE_DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                'data')
SUPPORTED_PAIRS = ('it-fr',)


class Config(object):
    """Locations of the data files used by the translation engine.

    :param data_dir: Directory holding the key table, lexicon, rule files and
                     fixtures. The default is the ``PUCCI_DATA_DIR``
                     environment variable when set, else the data directory
                     shipped with the package.
    :param pair: Language pair, as ``source-target``. Only ``'it-fr'`` is
                 supported.
    :param keys: Path of the key realization table. Relative paths are
                 resolved against ``data_dir``.
    :param lexicon: Path of the bilingual lexicon.
    :param simplify: Path of the simplification rules.
    :param rules: Path of the correction rules (syntactic, morphological and
                  differential stages).
    :param fixtures: Directory holding the fixture manifest and texts.
    """
    def __init__(self, data_dir=None, pair='it-fr', keys='keys.tsv',
                 lexicon='lexicon.tsv', simplify='simplify.tsv',
                 rules='corrections.tsv', fixtures='fixtures'):
        if pair not in SUPPORTED_PAIRS:
            raise ValueError('Unsupported language pair.')
        self.data_dir = data_dir or os.environ.get(DATA_DIR_ENV) or \
            PACKAGE_DATA_DIR
        self.pair = pair
        self.source_language, self.target_language = pair.split('-')
        self.keys_path = self._resolve(keys)
        self.lexicon_path = self._resolve(lexicon)
        self.simplify_path = self._resolve(simplify)
        self.corrections_path = self._resolve(rules)
        self.fixtures_dir = self._resolve(fixtures)

    @classmethod
    def from_env(cls, **overrides):
        """Build a configuration, dropping overrides that are ``None``."""
        return cls(**dict((k, v) for k, v in overrides.items()
                          if v is not None))

    def _resolve(self, path):
        if os.path.isabs(path):
            return path
        return os.path.join(self.data_dir, path)

    def __repr__(self):
        return '<Config pair={} data_dir={}>'.format(self.pair, self.data_dir)


def resolve_logger(logger, default):
    """Return the logger a ``logger=`` argument selects.

    A logger object is used as given. ``True`` and ``False`` select
    ``default``, which logs at INFO or ERROR to stderr unless logging is
    already configured.
    """
    if not isinstance(logger, bool):
        return logger
    if not logging.root.handlers and default.level == logging.NOTSET:
        default.setLevel(logging.INFO if logger else logging.ERROR)
        default.addHandler(logging.StreamHandler())
    return default
