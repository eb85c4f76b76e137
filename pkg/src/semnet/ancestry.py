"""
Ancestor closures h(f), arc sets c(f), weighted upward distance d, and the
symmetric (NCA) and asymmetric (ANCA) nearest common ancestor sets.

Every operation accepts a single node id or an AggregateNode; an aggregate
M has h(M) = union of h(m) and c(M) = union of c(m) over its members.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Tuple, Union

import networkx as nx

from util.errors import NotRelatedError, ValidationError
from .network import LinkWeightConfig, NodeId, SemanticNetwork

Arc = Tuple[NodeId, NodeId]

@dataclass(frozen=True)
class AggregateNode:
    """Virtual node standing for a set of word or concept nodes."""
    members: FrozenSet[NodeId]

    def __post_init__(self):
        members = frozenset(self.members)
        if not members:
            raise ValidationError("Aggregate node needs at least one member")
        object.__setattr__(self, "members", members)

AncestrySubject = Union[NodeId, AggregateNode]

@dataclass(frozen=True)
class ArcSet:
    """Set of (child, parent) arcs, link types erased."""
    arcs: FrozenSet[Arc] = field(default_factory=frozenset)

    def __and__(self, other: "ArcSet") -> "ArcSet":
        return ArcSet(self.arcs & other.arcs)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc: object) -> bool:
        return arc in self.arcs

    def daughter_nodes(self) -> FrozenSet[NodeId]:
        return frozenset(u for u, _ in self.arcs)

    def ancestor_nodes(self) -> FrozenSet[NodeId]:
        return frozenset(v for _, v in self.arcs)

def members_of(network: SemanticNetwork, subject: AncestrySubject) -> FrozenSet[NodeId]:
    """Member node ids of a subject; raises UnknownNodeError for a missing one."""
    members = subject.members if isinstance(subject, AggregateNode) else frozenset((subject,))
    for m in members:
        network.require(m)
    return members

def same_subject(network: SemanticNetwork, a: AncestrySubject, b: AncestrySubject) -> bool:
    """True when both subjects denote the same member set (a singleton aggregate equals its node)."""
    return members_of(network, a) == members_of(network, b)

def ancestors(network: SemanticNetwork, f: AncestrySubject) -> FrozenSet[NodeId]:
    """h(f): every node reachable upward from f; for an aggregate, the union of its members' h."""
    return frozenset().union(*(network.ancestors_of(m) for m in members_of(network, f)))

def _subject_span(network: SemanticNetwork, f: AncestrySubject) -> FrozenSet[NodeId]:
    """{f} union h(f): the nodes whose outgoing arcs make up c(f)."""
    members = members_of(network, f)
    return members | frozenset().union(*(network.ancestors_of(m) for m in members))

def ancestor_arcs(network: SemanticNetwork, f: AncestrySubject) -> ArcSet:
    """c(f): all arcs on upward paths from f's members to the root."""
    return ArcSet(frozenset(
        (u, v) for u in _subject_span(network, f) for v in network.parents(u)
    ))

def _weight_function(config: LinkWeightConfig):
    # MultiDiGraph: the third argument is the {link_type: attrs} dict of parallel edges
    def weight(u, v, keyed) -> float:
        return min(config.weight_of(link_type) for link_type in keyed)
    return weight

def upward_distances(network: SemanticNetwork, f: AncestrySubject,
                     config: LinkWeightConfig) -> Dict[NodeId, float]:
    """
    Shortest weighted upward distance from f to every node of {f} union h(f).

    For an aggregate the distance to a node is the minimum over the members
    that reach it; members themselves are at distance 0.
    """
    members = members_of(network, f)
    return nx.multi_source_dijkstra_path_length(
        network.graph, set(members), weight=_weight_function(config))

def distances_to(network: SemanticNetwork, a: AncestrySubject, targets: Iterable[NodeId],
                 config: LinkWeightConfig) -> Dict[NodeId, float]:
    """
    d(A, N) for every target N: the minimum over A's members m of the
    upward distance from m to N or from N to m, whichever relates them.
    Unrelated targets map to inf.
    """
    members = members_of(network, a)
    from_a = upward_distances(network, a, config)
    result = {}
    for n in targets:
        best = from_a.get(n, math.inf)
        above = members & network.ancestors_of(n)
        if above:
            from_n = upward_distances(network, n, config)
            best = min(best, min(from_n[m] for m in above))
        result[n] = best
    return result

def distance(network: SemanticNetwork, a: AncestrySubject, b: NodeId,
             config: LinkWeightConfig) -> float:
    """
    d(A, B): minimum total edge weight of an upward path joining A and B, in either direction.

    Raises:
        NotRelatedError: neither is an ancestor of the other.
    """
    network.require(b)
    found = distances_to(network, a, (b,), config)[b]
    if found != math.inf:
        return found
    raise NotRelatedError(f"'{b}' and {_describe(a)} are not in an ancestor relation")

def _describe(subject: AncestrySubject) -> str:
    if isinstance(subject, AggregateNode):
        return "{" + ", ".join(sorted(subject.members)) + "}"
    return f"'{subject}'"

def nca_detail(network: SemanticNetwork, a: AncestrySubject,
               b: AncestrySubject) -> Tuple[FrozenSet[NodeId], bool]:
    """
    NCA(A, B) and whether the empty-intersection root fallback fired.

    NCA = DaughterNodes(E) minus AncestorNodes(E) with E = c(A) & c(B).
    Identical subjects are their own NCA; an empty E falls back to {root}.
    """
    if same_subject(network, a, b):
        members = members_of(network, a)
        return members - ancestors(network, a), False

    common = ancestor_arcs(network, a) & ancestor_arcs(network, b)
    if not common:
        return frozenset((network.root,)), True
    return common.daughter_nodes() - common.ancestor_nodes(), False

def nca(network: SemanticNetwork, a: AncestrySubject, b: AncestrySubject) -> FrozenSet[NodeId]:
    """Symmetric nearest common ancestors of A and B."""
    return nca_detail(network, a, b)[0]

def anca(network: SemanticNetwork, a: AncestrySubject, b: AncestrySubject) -> FrozenSet[NodeId]:
    """
    Asymmetric nearest common ancestors from A to B.

    Ancestor nodes of c(A) & c(B) that are not NCA and have a direct daughter
    in {A} union h(A) but not in {B} union h(B). Directional.
    """
    common = ancestor_arcs(network, a) & ancestor_arcs(network, b)
    candidates = common.ancestor_nodes() - nca(network, a, b)
    if not candidates:
        return frozenset()

    span_a = _subject_span(network, a)
    span_b = _subject_span(network, b)
    return frozenset(
        n for n in candidates
        if any(d in span_a and d not in span_b for d in network.children(n))
    )

def subject_for(network: SemanticNetwork, ids: Iterable[NodeId]) -> AncestrySubject:
    """A bare node for one id, an aggregate for several."""
    ids = frozenset(ids)
    if len(ids) == 1:
        (only,) = ids
        network.require(only)
        return only
    return AggregateNode(ids)
