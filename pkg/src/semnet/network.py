"""
Typed, weighted concept DAG: loading, validation, indexes and word lookup.

Edges point from a child to its parent (word -> concept -> more general
concept), so in the underlying networkx graph the *descendants* of a node
are its ancestors in the semantic hierarchy.
"""
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from types import MappingProxyType
from typing import BinaryIO, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx

from util.errors import ParseError, UnknownNodeError, ValidationError
from util.output import Printer

NodeId = str

CLOSURE_CACHE_SIZE = 1 << 16

class NodeKind(str, Enum):
    CONCEPT = "concept"
    WORD = "word"

@dataclass(frozen=True)
class Node:
    id: NodeId
    label: str
    kind: NodeKind
    lang: Optional[str] = None

@dataclass(frozen=True)
class Edge:
    child: NodeId
    parent: NodeId
    link_type: str

@dataclass(frozen=True)
class LinkWeightConfig:
    """Per-link-type weights; unmapped types weigh `default_weight`."""
    weights: Mapping[str, float] = field(default_factory=dict)
    default_weight: float = 1.0

    def __post_init__(self):
        if not _is_nonnegative(self.default_weight):
            raise ValidationError(f"Default weight must be a nonnegative number, got {self.default_weight!r}")
        for link_type, weight in self.weights.items():
            if not _is_nonnegative(weight):
                raise ValidationError(f"Weight of link type '{link_type}' must be a nonnegative number, got {weight!r}")
        object.__setattr__(self, "weights", MappingProxyType({k: float(v) for k, v in self.weights.items()}))
        object.__setattr__(self, "default_weight", float(self.default_weight))

    def weight_of(self, link_type: str) -> float:
        return self.weights.get(link_type, self.default_weight)

    def scaled(self, k: float) -> "LinkWeightConfig":
        """Every weight, default included, multiplied by k."""
        return LinkWeightConfig({t: w * k for t, w in self.weights.items()}, self.default_weight * k)

    @classmethod
    def unit(cls) -> "LinkWeightConfig":
        return cls({}, 1.0)

    def __reduce__(self):
        return (LinkWeightConfig, (dict(self.weights), self.default_weight))

def _is_nonnegative(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and value >= 0

def edge_weight(edge: Edge, config: LinkWeightConfig) -> float:
    """Weight of an edge under a link-type weight configuration."""
    return config.weight_of(edge.link_type)

class SemanticNetwork:
    """
    Immutable, validated, single-rooted DAG of concept and word nodes.

    Construction validates every structural invariant and raises
    ValidationError naming the offending element. After construction the
    object is only read, so it can be shared between threads; the ancestor
    closure memo is an lru_cache, which is thread-safe.
    """

    def __init__(self, nodes: Iterable[Node], edges: Iterable[Edge]):
        self._nodes: Dict[NodeId, Node] = {}
        for node in nodes:
            if not node.id:
                raise ValidationError("Node with empty id")
            if node.id in self._nodes:
                raise ValidationError(f"Duplicate node id '{node.id}'")
            if node.kind == NodeKind.CONCEPT and node.lang is not None:
                raise ValidationError(f"Concept node '{node.id}' must not carry a language")
            self._nodes[node.id] = node

        if not self._nodes:
            raise ValidationError("Network has no nodes")

        self._graph = nx.MultiDiGraph()
        self._graph.add_nodes_from(self._nodes)
        self._edges: List[Edge] = []
        for edge in edges:
            self._add_edge(edge)

        self._root = self._validate_structure()
        self._word_index = self._build_word_index()
        self._closure_of = lru_cache(maxsize=CLOSURE_CACHE_SIZE)(self._upward_closure)
        Printer.debug(f"Indexed network: {len(self._nodes)} nodes, {len(self._edges)} edges, root '{self._root}'")

    def _add_edge(self, edge: Edge):
        for endpoint in (edge.child, edge.parent):
            if endpoint not in self._nodes:
                raise ValidationError(
                    f"Edge ({edge.child} -> {edge.parent}, {edge.link_type}) references unknown node '{endpoint}'")
        if edge.child == edge.parent:
            raise ValidationError(f"Cycle: self-loop on '{edge.child}' ({edge.link_type})")
        if self._graph.has_edge(edge.child, edge.parent, key=edge.link_type):
            raise ValidationError(f"Duplicate edge ({edge.child} -> {edge.parent}, {edge.link_type})")
        self._graph.add_edge(edge.child, edge.parent, key=edge.link_type)
        self._edges.append(edge)

    def _validate_structure(self) -> NodeId:
        try:
            cycle = nx.find_cycle(self._graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            path = " -> ".join([u for u, *_ in cycle] + [cycle[0][0]])
            raise ValidationError(f"Cycle: {path}")

        roots = sorted(n for n in self._graph if self._graph.out_degree(n) == 0)
        if not roots:
            raise ValidationError("Network has no root")
        if len(roots) > 1:
            raise ValidationError(f"Network must have exactly one root, found multiple roots: {', '.join(roots)}")
        root = roots[0]

        # nodes that can walk up to the root
        reaching = nx.ancestors(self._graph, root) | {root}
        unreachable = sorted(set(self._nodes) - reaching)
        if unreachable:
            raise ValidationError(f"Node '{unreachable[0]}' does not reach the root '{root}'")
        return root

    def _build_word_index(self) -> Dict[str, Tuple[NodeId, ...]]:
        index: Dict[str, List[NodeId]] = {}
        for node in self._nodes.values():
            if node.kind == NodeKind.WORD:
                index.setdefault(node.label.casefold(), []).append(node.id)
        return {label: tuple(sorted(ids)) for label, ids in index.items()}

    def _upward_closure(self, n: NodeId) -> FrozenSet[NodeId]:
        return frozenset(nx.descendants(self._graph, n))

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_closure_of"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._closure_of = lru_cache(maxsize=CLOSURE_CACHE_SIZE)(self._upward_closure)

    @property
    def root(self) -> NodeId:
        return self._root

    @property
    def graph(self) -> nx.MultiDiGraph:
        """Read-only view of the child -> parent multigraph, keyed by link type."""
        return self._graph.copy(as_view=True)

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return tuple(self._nodes[n] for n in sorted(self._nodes))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self._edges, key=lambda e: (e.child, e.parent, e.link_type)))

    @property
    def link_types(self) -> FrozenSet[str]:
        return frozenset(e.link_type for e in self._edges)

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, n: object) -> bool:
        return n in self._nodes

    def node(self, n: NodeId) -> Node:
        try:
            return self._nodes[n]
        except KeyError:
            raise UnknownNodeError(f"Unknown node '{n}'") from None

    def require(self, n: NodeId):
        if n not in self._nodes:
            raise UnknownNodeError(f"Unknown node '{n}'")

    def parents(self, n: NodeId) -> FrozenSet[NodeId]:
        self.require(n)
        return frozenset(self._graph.successors(n))

    def children(self, n: NodeId) -> FrozenSet[NodeId]:
        self.require(n)
        return frozenset(self._graph.predecessors(n))

    def link_types_between(self, child: NodeId, parent: NodeId) -> FrozenSet[str]:
        """Link types of every edge child -> parent (empty if none)."""
        if not self._graph.has_edge(child, parent):
            return frozenset()
        return frozenset(self._graph[child][parent])

    def ancestors_of(self, n: NodeId) -> FrozenSet[NodeId]:
        """h(n) for a single node, memoized."""
        self.require(n)
        return self._closure_of(n)

    def lookup_word(self, label: str, lang: Optional[str] = None) -> FrozenSet[NodeId]:
        ids = self._word_index.get(label.casefold(), ())
        if lang is not None:
            ids = tuple(n for n in ids if self._nodes[n].lang == lang)
        return frozenset(ids)

def _parse_node(raw, position: int) -> Node:
    if not isinstance(raw, dict):
        raise ParseError(f"nodes[{position}] must be an object")
    try:
        node_id, label, kind = raw["id"], raw["label"], raw["kind"]
    except KeyError as e:
        raise ParseError(f"nodes[{position}] missing required key {e}") from None
    if not isinstance(node_id, str) or not isinstance(label, str):
        raise ParseError(f"nodes[{position}] 'id' and 'label' must be strings")
    try:
        kind = NodeKind(kind)
    except ValueError:
        raise ParseError(f"nodes[{position}] ('{node_id}') has invalid kind {kind!r}") from None
    lang = raw.get("lang")
    if lang is not None and not isinstance(lang, str):
        raise ParseError(f"nodes[{position}] ('{node_id}') 'lang' must be a string")
    return Node(node_id, label, kind, lang)

def _parse_edge(raw, position: int) -> Edge:
    if not isinstance(raw, dict):
        raise ParseError(f"edges[{position}] must be an object")
    try:
        child, parent, link_type = raw["child"], raw["parent"], raw["type"]
    except KeyError as e:
        raise ParseError(f"edges[{position}] missing required key {e}") from None
    if not all(isinstance(v, str) for v in (child, parent, link_type)):
        raise ParseError(f"edges[{position}] 'child', 'parent' and 'type' must be strings")
    return Edge(child, parent, link_type)

def _read_json(source: Union[bytes, str, BinaryIO], what: str):
    if isinstance(source, (bytes, str)):
        source = io.BytesIO(source.encode("utf-8") if isinstance(source, str) else source)
    try:
        return json.load(source)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"Malformed {what}: {e}") from None

def load_network(source: Union[bytes, str, BinaryIO]) -> SemanticNetwork:
    """
    Parse and validate network-file content.

    Args:
        source: UTF-8 JSON with `nodes` and `edges` arrays (bytes, text or a binary stream).

    Returns:
        SemanticNetwork: fully indexed network.

    Raises:
        ParseError: malformed content.
        ValidationError: cycle, zero or multiple roots, unreachable node, dangling edge endpoint.
    """
    document = _read_json(source, "network file")
    if not isinstance(document, dict) or not isinstance(document.get("nodes"), list) \
            or not isinstance(document.get("edges"), list):
        raise ParseError("Network file must be an object with 'nodes' and 'edges' arrays")

    nodes = [_parse_node(raw, i) for i, raw in enumerate(document["nodes"])]
    edges = [_parse_edge(raw, i) for i, raw in enumerate(document["edges"])]
    return SemanticNetwork(nodes, edges)

def serialize(network: SemanticNetwork) -> str:
    """Network-file JSON for `network`; load_network(serialize(n)) reproduces it."""
    nodes = []
    for node in network.nodes:
        entry = {"id": node.id, "label": node.label, "kind": node.kind.value}
        if node.lang is not None:
            entry["lang"] = node.lang
        nodes.append(entry)
    edges = [{"child": e.child, "parent": e.parent, "type": e.link_type} for e in network.edges]
    return json.dumps({"nodes": nodes, "edges": edges}, ensure_ascii=False, indent=2)

def load_weights(source: Union[bytes, str, BinaryIO]) -> LinkWeightConfig:
    """Parse a weight config file: {"default": number, "weights": {type: number}}."""
    document = _read_json(source, "weight file")
    if not isinstance(document, dict):
        raise ParseError("Weight file must be a JSON object")
    weights = document.get("weights", {})
    if not isinstance(weights, dict):
        raise ParseError("Weight file 'weights' must be an object")
    return LinkWeightConfig(weights, document.get("default", 1.0))

def lookup_word(network: SemanticNetwork, label: str, lang: Optional[str] = None) -> FrozenSet[NodeId]:
    """Word nodes whose label matches `label` case-insensitively (restricted to `lang` if given)."""
    return network.lookup_word(label, lang)

def parents(network: SemanticNetwork, n: NodeId) -> FrozenSet[NodeId]:
    return network.parents(n)

def children(network: SemanticNetwork, n: NodeId) -> FrozenSet[NodeId]:
    return network.children(n)
