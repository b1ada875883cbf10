import re

# words, elided words ("d'", "nell'"), hyphenated compounds ("ceux-ci"),
# the ellipsis, and any other non-space character as a token of its own
TOKEN_RE = re.compile(r"\.\.\.|…|\w+['’]|\w+(?:-\w+)*|[^\w\s]",
                      re.UNICODE)
PARAGRAPH_RE = re.compile(r'\n\s*\n')

SENTENCE_END = frozenset(['.', '!', '?'])
PUNCTUATION = frozenset([',', '.', ';', ':', '!', '?', '...', '…', '(',
                         ')', '[', ']', '«', '»', '"', '-', '¶'])
NO_SPACE_BEFORE = frozenset([',', '.', ';', ':', '!', '?', ')', ']'])
NO_SPACE_AFTER = frozenset(['(', '['])
VOWELS = frozenset('aeiouyhàâäéèêëîïôöùûüœæ')


def tokenize(text):
    """Split text into word and punctuation tokens."""
    return TOKEN_RE.findall(text)


def metric_tokenize(text):
    """Lowercase and tokenize, with punctuation as separate tokens."""
    return TOKEN_RE.findall(text.lower())


def paragraphs(text):
    """Return the non-empty paragraphs of a text."""
    return [p.strip() for p in PARAGRAPH_RE.split(text) if p.strip()]


def is_punctuation(token):
    return token in PUNCTUATION or not any(c.isalnum() for c in token)


def is_elided(token):
    return token.endswith("'") or token.endswith('’')


def starts_with_vowel(token):
    return bool(token) and token[0].lower() in VOWELS


def split_sentences(tokens):
    """Group a token list into sentences ending at ``.``, ``!`` or ``?``."""
    sentences = []
    current = []
    for token in tokens:
        current.append(token)
        if token in SENTENCE_END:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def sentence_starts(tokens):
    """Return the indexes of the tokens that open a sentence."""
    starts = set()
    at_start = True
    for i, token in enumerate(tokens):
        if at_start and not is_punctuation(token):
            starts.add(i)
            at_start = False
        if token in SENTENCE_END:
            at_start = True
    return starts


def detokenize(tokens):
    """Join tokens with the typographic conventions of the printed texts.

    Elided words close up with the next word and no space is left before
    ``, . ; : ! ?``.
    """
    text = ''
    previous = None
    for token in tokens:
        if not token:
            continue
        if previous is not None and token not in NO_SPACE_BEFORE and \
                not is_elided(previous) and previous not in NO_SPACE_AFTER:
            text += ' '
        text += token
        previous = token
    return text


def capitalize(text):
    if not text:
        return text
    return text[0].upper() + text[1:]
