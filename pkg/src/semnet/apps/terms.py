"""
Term spotting: the words of a text closest to the rest of the text are its
best descriptors. Each word is scored leave-one-out against the aggregate of
the other resolved words.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from util.errors import InputError, UnresolvableError
from ..ancestry import subject_for
from ..measures import proximity
from ..network import LinkWeightConfig, NodeId, SemanticNetwork
from ..textproc import NormalizationMap, StopList, document_words
from .filtering import UNRESOLVABLE
from .pool import map_concurrently

@dataclass(frozen=True)
class KeywordCheck:
    keyword: str
    score: float
    rank: Optional[int]

def _resolved_words(network: SemanticNetwork, document: str, stop: StopList,
                    norm: Optional[NormalizationMap], lang: Optional[str]) -> Dict[str, FrozenSet[NodeId]]:
    senses = {}
    for word in sorted(document_words(document, stop, norm)):
        ids = network.lookup_word(word, lang)
        if ids:
            senses[word] = ids
    return senses

def _leave_one_out(network: SemanticNetwork, config: LinkWeightConfig, nodes: FrozenSet[NodeId],
                   others: FrozenSet[NodeId]) -> float:
    return proximity(network, subject_for(network, nodes), subject_for(network, others), config).score

def _score_words(network: SemanticNetwork, config: LinkWeightConfig,
                 senses: Dict[str, FrozenSet[NodeId]], workers: Optional[int]) -> List[Tuple[str, float]]:
    def score(word: str) -> Tuple[str, float]:
        others = frozenset().union(*(ids for other, ids in senses.items() if other != word))
        return word, _leave_one_out(network, config, senses[word], others)

    scored = map_concurrently(score, list(senses), workers)
    return sorted(scored, key=lambda item: (item[1], item[0]))

def spot_terms(network: SemanticNetwork, config: LinkWeightConfig, document: str, k: int,
               stop: StopList, norm: Optional[NormalizationMap] = None, *,
               lang: Optional[str] = None, workers: Optional[int] = None) -> List[Tuple[str, float]]:
    """
    Top-k content words by leave-one-out proximity, lowest first; ties alphabetical.

    Raises:
        InputError: k is not positive.
        UnresolvableError: fewer than 2 distinct resolvable words.
    """
    if k < 1:
        raise InputError(f"Number of terms must be positive, got {k}")
    senses = _resolved_words(network, document, stop, norm, lang)
    if len(senses) < 2:
        raise UnresolvableError(f"Term spotting needs at least 2 resolvable words, found {len(senses)}")
    return _score_words(network, config, senses, workers)[:k]

def check_keywords(network: SemanticNetwork, config: LinkWeightConfig, document: str,
                   keywords: Sequence[str], stop: StopList, norm: Optional[NormalizationMap] = None, *,
                   lang: Optional[str] = None, workers: Optional[int] = None) -> List[KeywordCheck]:
    """
    Score writer-supplied keywords against the text they describe.

    Each keyword gets its leave-one-out proximity to the document and the rank
    it would take among the document's own words (1 = best descriptor).
    Keywords that resolve to nothing score UNRESOLVABLE with no rank.
    """
    senses = _resolved_words(network, document, stop, norm, lang)
    if not senses:
        raise UnresolvableError("Document has no content word known to the network")
    ranking = _score_words(network, config, senses, workers) if len(senses) > 1 else []
    ranked_words = [word for word, _ in ranking]

    checks = []
    for keyword in keywords:
        word = keyword.casefold()
        nodes = network.lookup_word(word, lang)
        others = frozenset().union(*(ids for other, ids in senses.items() if other != word))
        if not nodes or not others:
            checks.append(KeywordCheck(keyword, UNRESOLVABLE, None))
            continue
        if word in ranked_words:
            position = ranked_words.index(word)
            checks.append(KeywordCheck(keyword, ranking[position][1], position + 1))
            continue
        score = _leave_one_out(network, config, nodes, others)
        better = sum(1 for other_word, s in ranking if (s, other_word) < (score, word))
        checks.append(KeywordCheck(keyword, score, better + 1))
    return checks
