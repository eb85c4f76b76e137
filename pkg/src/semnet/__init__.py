from .ancestry import AggregateNode, ArcSet, anca, ancestor_arcs, ancestors, distance, nca
from .measures import MeasureResult, activation, aggregate, proximity
from .network import (Edge, LinkWeightConfig, Node, NodeKind, SemanticNetwork, edge_weight,
                      load_network, load_weights, lookup_word, serialize)

__all__ = [
    "AggregateNode", "ArcSet", "anca", "ancestor_arcs", "ancestors", "distance", "nca",
    "MeasureResult", "activation", "aggregate", "proximity",
    "Edge", "LinkWeightConfig", "Node", "NodeKind", "SemanticNetwork", "edge_weight",
    "load_network", "load_weights", "lookup_word", "serialize",
]
