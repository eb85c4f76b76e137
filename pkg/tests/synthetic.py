"""
Generated test data: random single-rooted DAGs for the property suites and a
small newswire-like network and corpus with planted relevant sentences.
"""
import os
import random
import sys
from typing import Dict, List, Sequence, Tuple

from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from semnet.network import Edge, LinkWeightConfig, Node, NodeKind, SemanticNetwork

LINK_TYPES = ("hypernym", "sense", "part")
WEIGHT_VALUES = (0.5, 1.0, 2.0)

RawDag = Tuple[List[str], List[Tuple[str, str, str]], Dict[str, float], float]

@st.composite
def random_dags(draw, min_nodes: int = 3, max_nodes: int = 12) -> RawDag:
    """
    Node n0 is the root; every later node gets 1-2 parents among earlier
    nodes, over 1-2 link types each, so the graph is acyclic and reaches n0.
    """
    count = draw(st.integers(min_nodes, max_nodes))
    ids = [f"n{i}" for i in range(count)]
    edges = set()
    for i in range(1, count):
        parents = draw(st.lists(st.integers(0, i - 1), min_size=1, max_size=min(2, i), unique=True))
        for p in parents:
            types = draw(st.lists(st.sampled_from(LINK_TYPES), min_size=1, max_size=2, unique=True))
            for link_type in types:
                edges.add((ids[i], ids[p], link_type))
    weights = {t: draw(st.sampled_from(WEIGHT_VALUES)) for t in LINK_TYPES}
    default = draw(st.sampled_from(WEIGHT_VALUES))
    return ids, sorted(edges), weights, default

def build(raw: RawDag) -> Tuple[SemanticNetwork, LinkWeightConfig]:
    ids, edges, weights, default = raw
    nodes = [Node(n, n, NodeKind.CONCEPT) for n in ids]
    network = SemanticNetwork(nodes, [Edge(c, p, t) for c, p, t in edges])
    return network, LinkWeightConfig(weights, default)

# topic concept -> words; every word is a direct "sense" child of its concept
TOPICS: Dict[str, Sequence[str]] = {
    "\\Weather": ("rain", "sun", "cloud", "storm", "wind", "snow"),
    "\\Sport": ("match", "goal", "team", "ball", "player", "coach"),
    "\\Food": ("bread", "cheese", "wine", "apple", "soup", "cake"),
    "\\Travel": ("train", "plane", "hotel", "trip", "ticket", "beach"),
}
BUY_WORDS = ("buy", "purchase", "acquire")
SELL_WORDS = ("sell", "sale", "market")
COMPANY_WORDS = ("company", "firm", "business")
PERSON_WORDS = ("buyer", "clerk", "manager", "seller")
ENTITIES = ("acme", "initech", "globex", "umbrella", "hooli")

PROFILE_WORDS = ("buy", "company")
STOP_WORDS = frozenset({"the", "a", "will", "and", "of", "in", "at", "on", "with", "for", "was"})

def forked_chain() -> SemanticNetwork:
    """root <- x <- y, and below y a long branch p <- q <- r next to a leaf s."""
    ids = ("root", "x", "y", "p", "q", "r", "s")
    links = (("x", "root"), ("y", "x"), ("p", "y"), ("q", "p"), ("r", "q"), ("s", "y"))
    return SemanticNetwork([Node(n, n, NodeKind.CONCEPT) for n in ids],
                           [Edge(child, parent, "hypernym") for child, parent in links])

def newswire_network() -> SemanticNetwork:
    """About 50 nodes: a commerce domain next to four unrelated topics."""
    concepts = ["\\Universe", "\\Commerce", "\\Buy", "\\Sell", "\\Organization", "\\Company", "\\Person"]
    concepts += list(TOPICS)
    edges = [
        Edge("\\Commerce", "\\Universe", "hypernym"),
        Edge("\\Buy", "\\Commerce", "hypernym"),
        Edge("\\Sell", "\\Commerce", "hypernym"),
        Edge("\\Organization", "\\Universe", "hypernym"),
        Edge("\\Company", "\\Organization", "hypernym"),
        Edge("\\Person", "\\Universe", "hypernym"),
    ]
    edges += [Edge(topic, "\\Universe", "hypernym") for topic in TOPICS]

    words = []
    for concept, group in [("\\Buy", BUY_WORDS), ("\\Sell", SELL_WORDS), ("\\Company", COMPANY_WORDS),
                           ("\\Person", PERSON_WORDS)] + list(TOPICS.items()):
        for word in group:
            words.append(word)
            edges.append(Edge(word, concept, "sense"))
    edges.append(Edge("seller", "\\Sell", "hypernym"))

    nodes = [Node(c, c, NodeKind.CONCEPT) for c in concepts]
    nodes += [Node(w, w, NodeKind.WORD, "en") for w in words]
    return SemanticNetwork(nodes, edges)

def newswire_corpus(seed: int = 7) -> Tuple[str, frozenset]:
    """
    100 sentences, 20 of them relevant to the buy/company profile.

    Relevant sentences come in three shapes: plain commerce wording (10),
    entity buys entity (5) and entity-only mergers (5). Entities only ever
    appear in relevant sentences. Returns the text and the relevant ids.
    """
    rng = random.Random(seed)
    relevant = []
    for _ in range(10):
        relevant.append(f"The {rng.choice(COMPANY_WORDS)} will {rng.choice(BUY_WORDS)} a rival.")
    for _ in range(5):
        first, second = rng.sample(ENTITIES, 2)
        relevant.append(f"{first.capitalize()} will acquire {second.capitalize()}.")
    for _ in range(5):
        first, second = rng.sample(ENTITIES, 2)
        relevant.append(f"{first.capitalize()} and {second.capitalize()} merged.")

    other = []
    food = TOPICS["\\Food"]
    for _ in range(10):
        other.append(f"They {rng.choice(SELL_WORDS)} {rng.choice(food)} at dawn.")
    topic_words = [w for group in TOPICS.values() for w in group]
    for _ in range(70):
        chosen = rng.sample(topic_words, 2)
        other.append(f"A {chosen[0]} and the {chosen[1]} were seen.")

    tagged = [(s, True) for s in relevant] + [(s, False) for s in other]
    rng.shuffle(tagged)
    text = " ".join(s for s, _ in tagged)
    reference = frozenset(i for i, (_, is_relevant) in enumerate(tagged) if is_relevant)
    return text, reference

ENTITY_MAP = {entity: "company" for entity in ENTITIES}
