"""Precision / recall of filtering runs against a reference set of relevant sentences."""
from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from util.config import DEFAULT_GRID
from util.errors import InputError, ParseError, ValidationError
from .filtering import ScoredSentence, apply_keep_fraction

HEADER = ("keep", "precision", "recall", "tp", "kept", "relevant")

@dataclass(frozen=True)
class EvalRow:
    keep_fraction: float
    precision: float
    recall: float
    true_positives: int
    kept_count: int
    relevant_count: int
    vacuous_precision: bool = False
    vacuous_recall: bool = False

@dataclass(frozen=True)
class EvalReport:
    rows: Tuple[EvalRow, ...]

    def to_table(self) -> List[str]:
        """Tab-separated table, one row per keep fraction, plus a comment per vacuous row."""
        lines = ["\t".join(HEADER)]
        notes = []
        for row in self.rows:
            lines.append(f"{row.keep_fraction:.2f}\t{row.precision:.4f}\t{row.recall:.4f}\t"
                         f"{row.true_positives}\t{row.kept_count}\t{row.relevant_count}")
            if row.vacuous_precision:
                notes.append(f"# vacuous precision at keep {row.keep_fraction:.2f}: nothing kept")
            if row.vacuous_recall:
                notes.append(f"# vacuous recall at keep {row.keep_fraction:.2f}: empty reference")
        return lines + notes

def evaluate_run(keep_fraction: float, scored: Sequence[ScoredSentence],
                 reference: FrozenSet[int]) -> EvalRow:
    kept = {s.sentence_id for s in scored if s.kept}
    true_positives = len(kept & reference)
    precision = true_positives / len(kept) if kept else 1.0
    recall = true_positives / len(reference) if reference else 1.0
    return EvalRow(keep_fraction, precision, recall, true_positives, len(kept), len(reference),
                   vacuous_precision=not kept, vacuous_recall=not reference)

def evaluate(runs: Mapping[float, Sequence[ScoredSentence]], reference: Iterable[int]) -> EvalReport:
    """
    One row per keep fraction: precision = TP / kept, recall = TP / relevant.

    Raises:
        ValidationError: a reference id is not a sentence of the runs.
    """
    reference = frozenset(reference)
    rows = []
    for keep_fraction in sorted(runs):
        scored = runs[keep_fraction]
        ids = {s.sentence_id for s in scored}
        missing = sorted(reference - ids)
        if missing:
            raise ValidationError(f"Reference sentence id {missing[0]} is out of range")
        rows.append(evaluate_run(keep_fraction, scored, reference))
    return EvalReport(tuple(rows))

def evaluate_ranking(scored: Sequence[ScoredSentence], reference: Iterable[int],
                     grid: Optional[Sequence[float]] = None,
                     max_score: Optional[float] = None) -> EvalReport:
    """Evaluate one ranking at every keep fraction of the grid (default 10% .. 50%)."""
    grid = list(grid) if grid else DEFAULT_GRID
    runs = {f: apply_keep_fraction(scored, f, max_score) for f in grid}
    return evaluate(runs, reference)

def load_reference(source: str) -> FrozenSet[int]:
    """One relevant sentence id per line."""
    path = Path(source)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"Cannot read reference {path}: {e}") from None

    ids = set()
    for number, line in enumerate(lines, start=1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            ids.add(int(line.strip()))
        except ValueError:
            raise ParseError(f"{path}:{number}: expected a sentence id") from None
    return frozenset(ids)

def parse_grid(text: str) -> List[float]:
    try:
        grid = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"Invalid grid '{text}', expected comma separated fractions") from None
    if not grid or not all(0 < g <= 1 for g in grid):
        raise InputError(f"Grid fractions must lie in (0, 1], got '{text}'")
    return grid
