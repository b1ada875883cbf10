"""Registry of the stored texts: source, reference, encodings, candidates.

The fixture directory holds one UTF-8 file per text and a ``manifest.tsv``
with the id, language, role, file name and provenance of each.
"""
import collections
import io
import logging
import os

from . import config as _config
from . import exceptions

default_logger = logging.getLogger('pucci.corpus')

MANIFEST = 'manifest.tsv'
(SOURCE, REFERENCE, ENCODING, CANDIDATE) = ('source', 'reference',
                                            'encoding', 'candidate')
role_names = [SOURCE, REFERENCE, ENCODING, CANDIDATE]

Fixture = collections.namedtuple(
    'Fixture', ['id', 'language', 'role', 'text', 'provenance'])
ManifestEntry = collections.namedtuple(
    'ManifestEntry', ['id', 'language', 'role', 'path', 'provenance'])


def _fixtures_dir(config):
    return (config or _config.Config()).fixtures_dir


def load_manifest(fixtures_dir):
    """Read the manifest into an ordered mapping of id to entry."""
    path = os.path.join(fixtures_dir, MANIFEST)
    entries = collections.OrderedDict()
    with io.open(path, encoding='utf-8') as f:
        for line_number, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            fields = line.split('\t')
            if len(fields) != 5:
                raise exceptions.ManifestError(
                    path, line_number,
                    'expected 5 fields, got {}'.format(len(fields)))
            fixture_id, language, role, name, provenance = fields
            if role not in role_names:
                raise exceptions.ManifestError(
                    path, line_number, 'unknown role "{}"'.format(role))
            if fixture_id in entries:
                raise exceptions.ManifestError(
                    path, line_number,
                    'duplicate id "{}"'.format(fixture_id))
            if not provenance.strip():
                raise exceptions.ManifestError(path, line_number,
                                               'missing provenance')
            entries[fixture_id] = ManifestEntry(
                fixture_id, language, role, os.path.join(fixtures_dir, name),
                provenance)
    return entries


def list_fixtures(role=None, config=None):
    """Return the registered fixture ids, optionally of one role."""
    entries = load_manifest(_fixtures_dir(config))
    return [e.id for e in entries.values() if role is None or e.role == role]


def load_fixture(fixture_id, config=None):
    """Return a ``Fixture`` by id.

    Unknown ids raise ``FixtureNotFoundError`` listing the registered ids.
    """
    entries = load_manifest(_fixtures_dir(config))
    entry = entries.get(fixture_id)
    if entry is None:
        raise exceptions.FixtureNotFoundError(fixture_id, entries.keys())
    with io.open(entry.path, encoding='utf-8') as f:
        text = f.read().rstrip('\n')
    default_logger.debug('loaded fixture %s (%d characters)', fixture_id,
                         len(text))
    return Fixture(entry.id, entry.language, entry.role, text,
                   entry.provenance)


def resolve_text(name, config=None):
    """Return the text of a fixture id, or of a file when ``name`` is a
    path to an existing file."""
    if os.path.isfile(name):
        with io.open(name, encoding='utf-8') as f:
            return f.read().rstrip('\n')
    return load_fixture(name, config).text
