"""Profiles: a named set of words describing a domain of interest."""
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from util.errors import InputError, ParseError, ValidationError
from util.output import Printer
from ..ancestry import AncestrySubject, subject_for
from ..network import SemanticNetwork
from ..textproc import resolve, tokenize

# "[identifier] definition words" form used for hand-written profile lists
TEXT_PROFILE = re.compile(r"^\s*\[(?P<id>[^\]]+)\]\s*(?P<definition>.*)$")

@dataclass(frozen=True)
class Profile:
    id: str
    definition: Tuple[str, ...]

    def __post_init__(self):
        if not self.id:
            raise ValidationError("Profile with empty id")
        if not self.definition:
            raise ValidationError(f"Profile '{self.id}' has an empty definition")
        object.__setattr__(self, "definition", tuple(self.definition))

def profile_from_words(words: str, profile_id: str = "profile") -> Profile:
    """Profile from a comma separated word list (the `--profile` flag)."""
    definition = tuple(w.strip() for w in words.split(",") if w.strip())
    return Profile(profile_id, definition)

def _check_unique(profiles: Sequence[Profile], path: Path):
    seen = set()
    for profile in profiles:
        if profile.id in seen:
            raise ValidationError(f"{path}: duplicate profile id '{profile.id}'")
        seen.add(profile.id)

def load_profiles(source: str) -> List[Profile]:
    """
    Load profiles from a JSON array of {"id", "definition": [words]}, or from a
    text file with one `[id] definition` line per profile.
    """
    path = Path(source)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read profiles {path}: {e}") from None

    if path.suffix == ".txt":
        profiles = []
        for number, line in enumerate(content.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            match = TEXT_PROFILE.match(line)
            if not match:
                raise ParseError(f"{path}:{number}: expected '[id] definition'")
            profiles.append(Profile(match["id"].strip(), tokenize(match["definition"])))
    else:
        try:
            document = json.loads(content)
        except json.JSONDecodeError as e:
            raise ParseError(f"Malformed profiles file {path}: {e}") from None
        if not isinstance(document, list):
            raise ParseError(f"{path}: profiles file must be a JSON array")
        profiles = []
        for i, entry in enumerate(document):
            if not isinstance(entry, dict) or not isinstance(entry.get("id"), str) \
                    or not isinstance(entry.get("definition"), list) \
                    or not all(isinstance(w, str) for w in entry["definition"]):
                raise ParseError(f"{path}: entry {i} must be {{\"id\": str, \"definition\": [str, ...]}}")
            profiles.append(Profile(entry["id"], tuple(entry["definition"])))

    if not profiles:
        raise InputError(f"{path}: no profiles defined")
    _check_unique(profiles, path)
    return profiles

def profile_subject(network: SemanticNetwork, profile: Profile,
                    lang: Optional[str] = None) -> Optional[AncestrySubject]:
    """The node or aggregate a profile resolves to, None if no word resolves."""
    resolution = resolve(profile.definition, network, lang)
    if resolution.unresolved:
        Printer.warning(f"Profile '{profile.id}': unresolved words {', '.join(sorted(resolution.unresolved))}")
    if not resolution.resolved:
        return None
    return subject_for(network, resolution.resolved)
