"""
Raw text to network-resolvable word sets: segmentation, tokenization,
entity normalization, stopword removal and word -> node resolution.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from nltk.tokenize import RegexpTokenizer

from util.errors import InputError, ParseError, ValidationError
from util.output import Printer
from .network import NodeId, SemanticNetwork

# terminal punctuation followed by whitespace ends a sentence
SENTENCE_SPLITTER = RegexpTokenizer(r"(?<=[.!?])\s+", gaps=True)
WORD_TOKENIZER = RegexpTokenizer(r"\w+")

NLTK_PREFIX = "nltk:"

@dataclass(frozen=True)
class Sentence:
    id: int
    raw: str
    tokens: Tuple[str, ...]

@dataclass(frozen=True)
class StopList:
    words: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(w.casefold() for w in self.words))

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and word.casefold() in self.words

    def __len__(self) -> int:
        return len(self.words)

@dataclass(frozen=True)
class NormalizationMap:
    """Surface token -> replacement token; domain and range must not overlap."""
    replacements: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        folded = {k.casefold(): v.casefold() for k, v in self.replacements.items()}
        overlap = sorted(set(folded) & set(folded.values()))
        if overlap:
            raise ValidationError(f"Normalization map token '{overlap[0]}' is both replaced and a replacement")
        object.__setattr__(self, "replacements", folded)

    def get(self, token: str) -> Optional[str]:
        return self.replacements.get(token.casefold())

    def __len__(self) -> int:
        return len(self.replacements)

@dataclass(frozen=True)
class Resolution:
    resolved: FrozenSet[NodeId]
    unresolved: FrozenSet[str]

def tokenize(text: str) -> Tuple[str, ...]:
    """Split on whitespace and punctuation, case-folded."""
    return tuple(t.casefold() for t in WORD_TOKENIZER.tokenize(text))

def segment(text: str, line_sentences: bool = False) -> List[Sentence]:
    """
    Split text into sentences with dense 0-based ids.

    In line mode every line is a sentence (blank lines included, so ids are
    line numbers); otherwise sentences end at . ! ? followed by whitespace.
    """
    if line_sentences:
        raws = text.splitlines()
    else:
        raws = [" ".join(chunk.split()) for chunk in SENTENCE_SPLITTER.tokenize(text)]
        raws = [r for r in raws if r]
    return [Sentence(i, raw, tokenize(raw)) for i, raw in enumerate(raws)]

def content_words(sentence: Sentence, stop: StopList) -> FrozenSet[str]:
    """Distinct tokens of the sentence that are not stopwords."""
    return frozenset(t for t in sentence.tokens if t not in stop)

def normalize(tokens: Sequence[str], norm: Optional[NormalizationMap]) -> Tuple[str, ...]:
    """Replace mapped tokens, keep order; identity without a map."""
    if not norm:
        return tuple(tokens)
    return tuple(norm.get(t) or t for t in tokens)

def prepare(sentence: Sentence, stop: StopList, norm: Optional[NormalizationMap] = None) -> FrozenSet[str]:
    """Content words of a sentence after normalization."""
    normalized = Sentence(sentence.id, sentence.raw, normalize(sentence.tokens, norm))
    return content_words(normalized, stop)

def document_words(text: str, stop: StopList, norm: Optional[NormalizationMap] = None) -> FrozenSet[str]:
    """Content words of a whole document."""
    return frozenset().union(*(prepare(s, stop, norm) for s in segment(text)))

def resolve(words: Iterable[str], network: SemanticNetwork, lang: Optional[str] = None) -> Resolution:
    """
    Map words to word nodes, keeping every sense of a polysemous word.

    Misses are returned in `unresolved`, never dropped.
    """
    resolved = set()
    unresolved = set()
    for word in words:
        ids = network.lookup_word(word, lang)
        if ids:
            resolved |= ids
        else:
            unresolved.add(word)
    return Resolution(frozenset(resolved), frozenset(unresolved))

def load_stoplist(source: Optional[str]) -> StopList:
    """
    Load a stoplist: a one-word-per-line file, or `nltk:<language>` for nltk's
    stopword corpus. None gives an empty stoplist.
    """
    if not source:
        return StopList()

    if source.startswith(NLTK_PREFIX):
        language = source[len(NLTK_PREFIX):]
        from nltk.corpus import stopwords
        try:
            return StopList(frozenset(stopwords.words(language)))
        except (LookupError, OSError) as e:
            raise InputError(f"nltk stopwords for '{language}' unavailable "
                             f"(run nltk.download('stopwords')): {e}") from None

    path = Path(source)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"Cannot read stoplist {path}: {e}") from None
    words = frozenset(w.strip() for w in lines if w.strip() and not w.startswith("#"))
    Printer.debug(f"Loaded {len(words)} stopwords from {path}")
    return StopList(words)

def load_normalization(source: Optional[str]) -> Optional[NormalizationMap]:
    """Load a two-column tab-separated normalization map (surface TAB replacement)."""
    if not source:
        return None

    path = Path(source)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"Cannot read normalization map {path}: {e}") from None

    replacements: Dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        if not line.strip() or line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 2 or not columns[0].strip() or not columns[1].strip():
            raise ParseError(f"{path}:{number}: expected 'surface<TAB>replacement'")
        replacements[columns[0].strip()] = columns[1].strip()
    return NormalizationMap(replacements)
