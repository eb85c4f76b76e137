"""
Activation (shared features only) and proximity (shared features plus
differences) between nodes or aggregates.

Scores are distances: 0 for identical subjects, lower is closer.
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

from util.errors import ValidationError
from util.output import Printer
from .ancestry import AggregateNode, AncestrySubject, anca, distances_to, members_of, nca_detail
from .network import LinkWeightConfig, NodeId, SemanticNetwork

@dataclass(frozen=True)
class MeasureResult:
    score: float
    nca_used: FrozenSet[NodeId] = field(default_factory=frozenset)
    anca_used: FrozenSet[NodeId] = field(default_factory=frozenset)
    fallback_root: bool = False
    measure: str = "activation"

def aggregate(network: SemanticNetwork, words: Iterable[NodeId]) -> AggregateNode:
    """
    Wrap a nonempty set of node ids as one virtual node.

    Raises:
        ValidationError: empty set.
        UnknownNodeError: an id is not in the network.
    """
    node = AggregateNode(frozenset(words))
    members_of(network, node)
    return node

def _paired_distances(network: SemanticNetwork, targets: FrozenSet[NodeId], a: AncestrySubject,
                       b: AncestrySubject, config: LinkWeightConfig) -> Tuple[Dict[NodeId, float], Dict[NodeId, float]]:
    return distances_to(network, a, targets, config), distances_to(network, b, targets, config)

def _paired_mean(targets: FrozenSet[NodeId], from_a: Dict[NodeId, float],
                 from_b: Dict[NodeId, float]) -> float:
    if not targets:
        return 0.0
    return math.fsum(from_a[n] + from_b[n] for n in targets) / len(targets)

def activation(network: SemanticNetwork, a: AncestrySubject, b: AncestrySubject,
               config: LinkWeightConfig) -> MeasureResult:
    """d_lambda(A, B): mean over NCA_i of d(A, NCA_i) + d(B, NCA_i). Symmetric."""
    common, fallback = nca_detail(network, a, b)
    if fallback:
        Printer.debug(f"No shared arcs, NCA falls back to root '{network.root}'")
    from_a, from_b = _paired_distances(network, common, a, b, config)
    return MeasureResult(_paired_mean(common, from_a, from_b), common, frozenset(), fallback, "activation")

def proximity(network: SemanticNetwork, a: AncestrySubject, b: AncestrySubject,
              config: LinkWeightConfig) -> MeasureResult:
    """
    d_perp(A, B) = d_lambda(A, B) + mean over ANCA_i of d(A, ANCA_i) + d(B, ANCA_i).

    The second term is 0 when ANCA(A, B) is empty. Directional.
    """
    common, fallback = nca_detail(network, a, b)
    asymmetric = anca(network, a, b)
    from_a, from_b = _paired_distances(network, common | asymmetric, a, b, config)
    score = _paired_mean(common, from_a, from_b) + _paired_mean(asymmetric, from_a, from_b)
    return MeasureResult(score, common, asymmetric, fallback, "proximity")

Measure = Callable[[SemanticNetwork, AncestrySubject, AncestrySubject, LinkWeightConfig], MeasureResult]

MEASURES: Dict[str, Measure] = {
    "activation": activation,
    "proximity": proximity,
}

def measure(name: str) -> Measure:
    try:
        return MEASURES[name]
    except KeyError:
        raise ValidationError(f"Unknown measure '{name}', expected one of: {', '.join(sorted(MEASURES))}") from None

def triangle_violations(network: SemanticNetwork, candidates: Sequence[AncestrySubject],
                        config: LinkWeightConfig, measure_fn: Measure = activation,
                        rel_tol: float = 1e-9) -> List[Tuple[AncestrySubject, AncestrySubject, AncestrySubject]]:
    """
    Ordered triples (A, B, C) with m(A, B) + m(B, C) < m(A, C).

    The triangle inequality is not guaranteed on arbitrary graphs; this
    reports where it fails instead of asserting it.
    """
    scores: Dict[Tuple[int, int], float] = {}
    for i, j in itertools.permutations(range(len(candidates)), 2):
        scores[i, j] = measure_fn(network, candidates[i], candidates[j], config).score
    for i in range(len(candidates)):
        scores[i, i] = 0.0

    violations = []
    for i, j, k in itertools.product(range(len(candidates)), repeat=3):
        lhs = scores[i, j] + scores[j, k]
        rhs = scores[i, k]
        if lhs < rhs and not math.isclose(lhs, rhs, rel_tol=rel_tol, abs_tol=1e-12):
            violations.append((candidates[i], candidates[j], candidates[k]))
    return violations
