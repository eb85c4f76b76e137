from .classification import classify, classify_many
from .evaluation import EvalReport, EvalRow, evaluate, evaluate_ranking
from .expansion import ExpansionRequest, Mechanism, expand
from .filtering import UNRESOLVABLE, ScoredSentence, apply_keep_fraction, filter_sentences
from .inspection import inspect_pair
from .profiles import Profile, load_profiles
from .terms import KeywordCheck, check_keywords, spot_terms

__all__ = [
    "classify", "classify_many",
    "EvalReport", "EvalRow", "evaluate", "evaluate_ranking",
    "ExpansionRequest", "Mechanism", "expand",
    "UNRESOLVABLE", "ScoredSentence", "apply_keep_fraction", "filter_sentences",
    "inspect_pair",
    "Profile", "load_profiles",
    "KeywordCheck", "check_keywords", "spot_terms",
]
