"""
Query expansion as typed-link traversal around every sense of a word.

A "sense node" is a parent reached over a `sense` or `synonym` edge; words
sharing one are synonyms (same language) or translations (target language).
Lexical mechanisms (alias, inflected, derived, geographic) follow edges of
their own link type in both directions. Mechanisms whose link types the
network lacks yield an empty set.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Set, Tuple

from util.errors import InputError, UnresolvableError
from ..network import NodeId, NodeKind, SemanticNetwork

SENSE_LINK_TYPES = frozenset({"sense", "synonym"})

Expansion = FrozenSet[Tuple[str, Optional[str]]]

class Mechanism(str, Enum):
    ALIAS = "alias"
    SYNONYMS = "synonyms"
    HYPERNYMS = "hypernyms"
    HYPONYMS = "hyponyms"
    INFLECTED = "inflected"
    DERIVED = "derived"
    GEOGRAPHIC = "geographic"
    TRANSLATION = "translation"

# mechanism -> link type, overridable from Semnet.toml [expand.link_types]
DEFAULT_LINK_TYPES: Dict[Mechanism, str] = {
    Mechanism.ALIAS: "alias",
    Mechanism.INFLECTED: "inflected",
    Mechanism.DERIVED: "derived",
    Mechanism.GEOGRAPHIC: "geographic",
}

@dataclass(frozen=True)
class ExpansionRequest:
    word: str
    mechanisms: FrozenSet[Mechanism]
    lang: Optional[str] = None

    def __post_init__(self):
        mechanisms = frozenset(Mechanism(m) for m in self.mechanisms)
        if not mechanisms:
            raise InputError("Expansion request needs at least one mechanism")
        if Mechanism.TRANSLATION in mechanisms and not self.lang:
            raise InputError("Translation needs a target language")
        object.__setattr__(self, "mechanisms", mechanisms)

def parse_mechanisms(text: str) -> FrozenSet[Mechanism]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return frozenset(Mechanism(name) for name in names)
    except ValueError as e:
        choices = ", ".join(m.value for m in Mechanism)
        raise InputError(f"{e}; expected some of: {choices}") from None

def resolve_link_types(overrides: Optional[Mapping[str, str]] = None) -> Dict[Mechanism, str]:
    link_types = dict(DEFAULT_LINK_TYPES)
    for name, link_type in (overrides or {}).items():
        try:
            mechanism = Mechanism(name)
        except ValueError:
            raise InputError(f"Unknown expansion mechanism '{name}' in link type overrides") from None
        if mechanism not in DEFAULT_LINK_TYPES:
            raise InputError(f"Mechanism '{name}' is not bound to a single link type")
        link_types[mechanism] = link_type
    return link_types

class _Traversal:
    def __init__(self, network: SemanticNetwork, senses: FrozenSet[NodeId], link_types: Dict[Mechanism, str]):
        self.network = network
        self.senses = senses
        self.lexical = frozenset(link_types.values())
        self.link_types = link_types

    def _labels(self, nodes: Iterable[NodeId]) -> Expansion:
        return frozenset(
            (self.network.node(n).label, self.network.node(n).lang)
            for n in nodes if n not in self.senses
        )

    def _has_type(self, child: NodeId, parent: NodeId, types: FrozenSet[str], exclude: bool = False) -> bool:
        found = self.network.link_types_between(child, parent)
        return bool(found - types) if exclude else bool(found & types)

    def hypernyms(self) -> Expansion:
        return self._labels(
            p for s in self.senses for p in self.network.parents(s)
            if self._has_type(s, p, self.lexical, exclude=True))

    def hyponyms(self) -> Expansion:
        return self._labels(
            c for s in self.senses for c in self.network.children(s)
            if self._has_type(c, s, self.lexical, exclude=True))

    def _sense_siblings(self, sense: NodeId) -> Set[NodeId]:
        siblings = set()
        for parent in self.network.parents(sense):
            if not self._has_type(sense, parent, SENSE_LINK_TYPES):
                continue
            for sibling in self.network.children(parent):
                node = self.network.node(sibling)
                if node.kind == NodeKind.WORD and self._has_type(sibling, parent, SENSE_LINK_TYPES):
                    siblings.add(sibling)
        return siblings

    def synonyms(self) -> Expansion:
        found = set()
        for sense in self.senses:
            lang = self.network.node(sense).lang
            found |= {n for n in self._sense_siblings(sense)
                      if lang is None or self.network.node(n).lang in (None, lang)}
        return self._labels(found)

    def translation(self, target: str) -> Expansion:
        found = set()
        for sense in self.senses:
            found |= {n for n in self._sense_siblings(sense) if self.network.node(n).lang == target}
        return self._labels(found)

    def neighbors(self, mechanism: Mechanism) -> Expansion:
        link_type = frozenset((self.link_types[mechanism],))
        found = set()
        for s in self.senses:
            found |= {p for p in self.network.parents(s) if self._has_type(s, p, link_type)}
            found |= {c for c in self.network.children(s) if self._has_type(c, s, link_type)}
        return self._labels(found)

def expand(network: SemanticNetwork, request: ExpansionRequest,
           link_types: Optional[Mapping[str, str]] = None) -> Dict[Mechanism, Expansion]:
    """
    Expansion per requested mechanism: a set of (label, lang) pairs.

    Raises:
        UnresolvableError: the word matches no word node.
    """
    senses = network.lookup_word(request.word)
    if not senses:
        raise UnresolvableError(f"Unknown word '{request.word}'")

    traversal = _Traversal(network, senses, resolve_link_types(link_types))
    result: Dict[Mechanism, Expansion] = {}
    for mechanism in sorted(request.mechanisms, key=lambda m: m.value):
        match mechanism:
            case Mechanism.HYPERNYMS:
                result[mechanism] = traversal.hypernyms()
            case Mechanism.HYPONYMS:
                result[mechanism] = traversal.hyponyms()
            case Mechanism.SYNONYMS:
                result[mechanism] = traversal.synonyms()
            case Mechanism.TRANSLATION:
                result[mechanism] = traversal.translation(request.lang)
            case _:
                result[mechanism] = traversal.neighbors(mechanism)
    return result

def format_expansion(result: Mapping[Mechanism, Expansion]) -> list:
    """`mechanism TAB label TAB lang` lines, sorted; lang '-' when absent."""
    lines = []
    for mechanism in sorted(result, key=lambda m: m.value):
        for label, lang in sorted(result[mechanism], key=lambda item: (item[0], item[1] or "")):
            lines.append(f"{mechanism.value}\t{label}\t{lang or '-'}")
    return lines
