"""Profile classification without a learning phase: the closest profile wins."""
from typing import List, Optional, Sequence, Tuple

from util.errors import InputError, UnresolvableError
from util.output import Printer
from ..ancestry import subject_for
from ..measures import proximity
from ..network import LinkWeightConfig, SemanticNetwork
from ..textproc import NormalizationMap, StopList, document_words, resolve
from .filtering import UNRESOLVABLE
from .pool import map_concurrently
from .profiles import Profile, profile_subject

Ranking = List[Tuple[str, float]]

def classify(network: SemanticNetwork, config: LinkWeightConfig, document: str,
             profiles: Sequence[Profile], stop: StopList,
             norm: Optional[NormalizationMap] = None, *, lang: Optional[str] = None,
             workers: Optional[int] = None) -> Ranking:
    """
    Rank profiles by proximity(document, profile), lowest first; ties by profile id.

    A profile whose words all miss the network scores UNRESOLVABLE and ranks last.

    Raises:
        InputError: no profiles.
        UnresolvableError: the document has no resolvable content word.
    """
    if not profiles:
        raise InputError("No profiles to classify against")

    resolution = resolve(document_words(document, stop, norm), network, lang)
    if not resolution.resolved:
        raise UnresolvableError("Document has no content word known to the network")
    source = subject_for(network, resolution.resolved)

    def score(profile: Profile) -> Tuple[str, float]:
        target = profile_subject(network, profile, lang)
        if target is None:
            return profile.id, UNRESOLVABLE
        return profile.id, proximity(network, source, target, config).score

    ranking = sorted(map_concurrently(score, list(profiles), workers), key=lambda item: (item[1], item[0]))
    Printer.debug(f"Best profile '{ranking[0][0]}' ({ranking[0][1]})")
    return ranking

def classify_many(network: SemanticNetwork, config: LinkWeightConfig, documents: Sequence[str],
                  profiles: Sequence[Profile], stop: StopList,
                  norm: Optional[NormalizationMap] = None, *, lang: Optional[str] = None,
                  workers: Optional[int] = None) -> List[Ranking]:
    """Classify a flow of documents; rankings come back in document order."""
    return map_concurrently(
        lambda text: classify(network, config, text, profiles, stop, norm, lang=lang, workers=1),
        list(documents), workers)
