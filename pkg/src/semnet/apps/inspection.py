"""Debug view of the ancestry machinery for one pair of nodes."""
from dataclasses import dataclass
from typing import FrozenSet, List

from ..ancestry import AncestrySubject, ArcSet, anca, ancestor_arcs, ancestors, members_of
from ..measures import MeasureResult, activation, proximity
from ..network import LinkWeightConfig, NodeId, SemanticNetwork

@dataclass(frozen=True)
class Inspection:
    a: AncestrySubject
    b: AncestrySubject
    h_a: FrozenSet[NodeId]
    h_b: FrozenSet[NodeId]
    c_a: ArcSet
    c_b: ArcSet
    anca_ab: FrozenSet[NodeId]
    anca_ba: FrozenSet[NodeId]
    activation_ab: MeasureResult
    activation_ba: MeasureResult
    proximity_ab: MeasureResult
    proximity_ba: MeasureResult

def inspect_pair(network: SemanticNetwork, a: AncestrySubject, b: AncestrySubject,
                 config: LinkWeightConfig) -> Inspection:
    return Inspection(
        a, b,
        ancestors(network, a), ancestors(network, b),
        ancestor_arcs(network, a), ancestor_arcs(network, b),
        anca(network, a, b), anca(network, b, a),
        activation(network, a, b, config), activation(network, b, a, config),
        proximity(network, a, b, config), proximity(network, b, a, config),
    )

def _nodes(nodes) -> str:
    return "{" + ", ".join(sorted(nodes)) + "}"

def _arcs(arcs: ArcSet) -> str:
    return "{" + ", ".join(f"({u}, {v})" for u, v in sorted(arcs)) + "}"

def format_inspection(network: SemanticNetwork, report: Inspection) -> List[str]:
    a = _nodes(members_of(network, report.a))
    b = _nodes(members_of(network, report.b))
    fallback = " (root fallback)" if report.activation_ab.fallback_root else ""
    return [
        f"h({a})\t{_nodes(report.h_a)}",
        f"h({b})\t{_nodes(report.h_b)}",
        f"c({a})\t{_arcs(report.c_a)}",
        f"c({b})\t{_arcs(report.c_b)}",
        f"NCA({a}, {b})\t{_nodes(report.activation_ab.nca_used)}{fallback}",
        f"ANCA({a}, {b})\t{_nodes(report.anca_ab)}",
        f"ANCA({b}, {a})\t{_nodes(report.anca_ba)}",
        f"activation({a}, {b})\t{report.activation_ab.score!r}",
        f"activation({b}, {a})\t{report.activation_ba.score!r}",
        f"proximity({a}, {b})\t{report.proximity_ab.score!r}",
        f"proximity({b}, {a})\t{report.proximity_ba.score!r}",
    ]
