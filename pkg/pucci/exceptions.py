class PucciError(Exception):
    pass


class KeyNotationError(PucciError):
    """Key notation that does not denote a key of the canonical inventory."""
    def __init__(self, token, reason=None):
        self.token = token
        message = 'Invalid key notation "{}"'.format(token)
        if reason:
            message += ': ' + reason
        super(KeyNotationError, self).__init__(message)


class CoverageError(PucciError):
    """A realization table has no cell for the requested key and context."""
    def __init__(self, language, key, context):
        self.language = language
        self.key = key
        self.context = context
        super(CoverageError, self).__init__(
            'No {} realization for {} in context {}'.format(
                language, key, context))


class DataFileError(PucciError, ValueError):
    """A malformed line in one of the tab separated data files."""
    def __init__(self, path, line_number, reason):
        self.path = path
        self.line_number = line_number
        self.reason = reason
        super(DataFileError, self).__init__(
            '{}:{}: {}'.format(path, line_number, reason))


class KeyTableLoadError(DataFileError):
    pass


class ManifestError(DataFileError):
    pass


class LexiconError(PucciError):
    pass


class LexiconLookupError(LexiconError, KeyError):
    def __init__(self, lemma, pos):
        self.lemma = lemma
        self.pos = pos
        super(LexiconLookupError, self).__init__(
            'No lexicon entry for "{}" ({})'.format(lemma, pos))

    def __str__(self):
        return self.args[0]


class LexiconLoadError(DataFileError, LexiconError):
    pass


class RuleLoadError(DataFileError):
    pass


class EncodingError(PucciError):
    """Source token that is neither analyzable nor a literal."""
    def __init__(self, token, sentence_index):
        self.token = token
        self.sentence_index = sentence_index
        super(EncodingError, self).__init__(
            'Cannot encode "{}" in sentence {}'.format(token, sentence_index))


class StreamParseError(PucciError):
    def __init__(self, token, line_number=None):
        self.token = token
        self.line_number = line_number
        message = 'Malformed stream token "{}"'.format(token)
        if line_number is not None:
            message += ' on line {}'.format(line_number)
        super(StreamParseError, self).__init__(message)


class RealizationError(PucciError):
    def __init__(self, token, reason):
        self.token = token
        super(RealizationError, self).__init__(
            'Cannot realize {}: {}'.format(token, reason))


class StageError(PucciError):
    """A translation pipeline stage failed.

    The ``stage`` attribute names the failing stage; the original error is
    available as ``__cause__``.
    """
    def __init__(self, stage, error):
        self.stage = stage
        self.error = error
        super(StageError, self).__init__('[{}] {}'.format(stage, error))


class CorrectionBudgetError(PucciError):
    pass


class FixtureNotFoundError(PucciError, KeyError):
    def __init__(self, fixture_id, available):
        self.fixture_id = fixture_id
        self.available = sorted(available)
        super(FixtureNotFoundError, self).__init__(
            'Unknown fixture "{}"; available: {}'.format(
                fixture_id, ', '.join(self.available)))

    def __str__(self):
        return self.args[0]


class StatisticsError(PucciError, ValueError):
    pass


class UsageError(PucciError):
    pass
