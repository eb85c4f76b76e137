"""
Sentence-level filtering: rank corpus sentences by their distance to a
profile and keep the closest fraction.
"""
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, TextIO

from util.errors import InputError, ParseError, UnresolvableError
from util.output import Printer
from ..ancestry import subject_for
from ..measures import measure
from ..network import LinkWeightConfig, SemanticNetwork
from ..textproc import NormalizationMap, Sentence, StopList, prepare, resolve
from .pool import map_concurrently
from .profiles import Profile, profile_subject

UNRESOLVABLE = math.inf

@dataclass(frozen=True)
class ScoredSentence:
    sentence_id: int
    score: float
    kept: bool = False

    @property
    def resolvable(self) -> bool:
        return self.score != UNRESOLVABLE

def keep_count(keep_fraction: float, total: int) -> int:
    """ceil(keep_fraction * total), immune to float noise such as 0.3 * 10."""
    return math.ceil(round(keep_fraction * total, 9))

def _check_fraction(keep_fraction: float):
    if not 0 < keep_fraction <= 1:
        raise InputError(f"Keep fraction must be in (0, 1], got {keep_fraction}")

def rank(scored: Iterable[ScoredSentence]) -> List[ScoredSentence]:
    """Ascending score, ties by sentence id; unresolvable sentences last."""
    return sorted(scored, key=lambda s: (s.score, s.sentence_id))

def apply_keep_fraction(scored: Iterable[ScoredSentence], keep_fraction: float,
                        max_score: Optional[float] = None) -> List[ScoredSentence]:
    """
    Re-derive kept flags for a keep fraction from an existing ranking.

    The first ceil(keep_fraction * N) resolvable sentences are kept; with
    `max_score`, sentences scoring above it are dropped as well.
    """
    _check_fraction(keep_fraction)
    ranked = rank(scored)
    budget = keep_count(keep_fraction, len(ranked))

    result = []
    for position, item in enumerate(ranked):
        kept = position < budget and item.resolvable
        if kept and max_score is not None and item.score > max_score:
            kept = False
        result.append(replace(item, kept=kept))
    return result

def filter_sentences(network: SemanticNetwork, config: LinkWeightConfig, profile: Profile,
                     corpus: Sequence[Sentence], keep_fraction: float, stop: StopList,
                     norm: Optional[NormalizationMap] = None, *, lang: Optional[str] = None,
                     max_score: Optional[float] = None, measure_name: str = "activation",
                     workers: Optional[int] = None) -> List[ScoredSentence]:
    """
    Score every sentence against the profile and keep the lowest-scoring fraction.

    Returns:
        List[ScoredSentence]: in ranking order (ascending score, then id).

    Raises:
        UnresolvableError: no profile word resolves.
        InputError: empty corpus or keep fraction outside (0, 1].
    """
    _check_fraction(keep_fraction)
    if not corpus:
        raise InputError("Corpus has no sentences")

    target = profile_subject(network, profile, lang)
    if target is None:
        raise UnresolvableError(f"Profile '{profile.id}' resolves to no node of the network")
    score_fn = measure(measure_name)

    def score(sentence: Sentence) -> ScoredSentence:
        resolution = resolve(prepare(sentence, stop, norm), network, lang)
        if not resolution.resolved:
            return ScoredSentence(sentence.id, UNRESOLVABLE)
        candidate = subject_for(network, resolution.resolved)
        return ScoredSentence(sentence.id, score_fn(network, candidate, target, config).score)

    scored = map_concurrently(score, list(corpus), workers)
    unresolvable = sum(1 for s in scored if not s.resolvable)
    if unresolvable:
        Printer.warning(f"{unresolvable} of {len(scored)} sentences have no resolvable content word")

    result = apply_keep_fraction(scored, keep_fraction, max_score)
    Printer.action("FILTER", f"Kept {sum(s.kept for s in result)} of {len(result)} sentences")
    return result

def format_score(score: float) -> str:
    return "inf" if score == UNRESOLVABLE else repr(score)

def write_scored(scored: Iterable[ScoredSentence], stream: TextIO):
    """`sentence_id TAB score TAB kept(0/1)` per line, in ranking order."""
    for item in scored:
        stream.write(f"{item.sentence_id}\t{format_score(item.score)}\t{int(item.kept)}\n")

def read_scored(source: str) -> List[ScoredSentence]:
    """Parse a scored-sentences file written by `write_scored`."""
    path = Path(source)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"Cannot read scored file {path}: {e}") from None

    scored = []
    seen = set()
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        columns = line.split("\t")
        try:
            sentence_id, score, kept = int(columns[0]), float(columns[1]), columns[2]
        except (IndexError, ValueError):
            raise ParseError(f"{path}:{number}: expected 'sentence_id<TAB>score<TAB>kept'") from None
        if kept not in ("0", "1") or len(columns) != 3 or score < 0 or math.isnan(score):
            raise ParseError(f"{path}:{number}: expected 'sentence_id<TAB>score<TAB>kept'")
        if sentence_id in seen:
            raise ParseError(f"{path}:{number}: duplicate sentence id {sentence_id}")
        seen.add(sentence_id)
        scored.append(ScoredSentence(sentence_id, score, kept == "1"))
    if not scored:
        raise InputError(f"{path}: no scored sentences")
    return scored
