"""Language profiles: the per-target-language tag sets, pronoun groups, and weights.

A profile is a flat key=value text file. Lists are comma-separated; pronoun
groups separate their member forms with slashes:

    name = english
    tense_tags = MD, VBD, VBN, VBP, VBZ, VBG, VB
    tense_weights = 0.2, 0.2, 0.05, 0.2, 0.15, 0.05, 0.15
    pronoun_groups = he/him/his, she/her/hers, it/its, they/them/their/theirs
    pronoun_weights = 0.45, 0.45, 0.05, 0.05
    entity_person_tags = PERSON
    entity_non_person_tags = NORP, GPE, FAC, ORG, WORK_OF_ART
    entity_ignore_tags = DATE, TIME
    component_weights = 1g:1, 2g:1, 3g:1, 4g:1, E:1, V:1, P:1, A:1
    alpha = 2
    smoothing_epsilon = 1e-9

English and German profiles ship with the package; `builtin_profile("english")`
loads them without touching the filesystem layout.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from blond.corpus import IGNORE, NON_PERSON, PERSON
from blond.errors import ProfileError

DEFAULT_NGRAM_ORDERS = (1, 2, 3, 4)
PROFILE_DIR_ENV = "BLOND_PROFILE_DIR"

_KNOWN_KEYS = {
    "name",
    "tense_tags",
    "tense_weights",
    "pronoun_groups",
    "pronoun_weights",
    "entity_person_tags",
    "entity_non_person_tags",
    "entity_ignore_tags",
    "entity_weight_person",
    "entity_weight_non_person",
    "ngram_orders",
    "component_weights",
    "alpha",
    "smoothing_epsilon",
}


@dataclass(frozen=True)
class LanguageProfile:
    """Declarative configuration of one target language.

    Checkpoint axes and all weight vectors come from here: the tense tag set
    with its weights, the pronoun groups (case-insensitive surface forms)
    with theirs, the fine-to-coarse entity merge map, per-coarse-category
    entity weights, the n-gram orders, the per-component weights used when
    combining scores, the distance norm exponent, and the smoothing epsilon.
    """

    name: str
    tense_tags: tuple[str, ...]
    tense_weights: tuple[float, ...]
    pronoun_group_ids: tuple[str, ...]
    pronoun_groups: tuple[frozenset[str], ...]
    pronoun_weights: tuple[float, ...]
    entity_coarse_map: dict
    entity_weights: dict
    ngram_orders: tuple[int, ...] = DEFAULT_NGRAM_ORDERS
    component_weights: dict | None = None
    alpha: float = 2.0
    smoothing_epsilon: float = 1e-9

    def __post_init__(self):
        if len(self.tense_weights) != len(self.tense_tags):
            raise ProfileError(
                f"{len(self.tense_tags)} tense tags but {len(self.tense_weights)} weights"
            )
        if len(self.pronoun_weights) != len(self.pronoun_groups):
            raise ProfileError(
                f"{len(self.pronoun_groups)} pronoun groups but "
                f"{len(self.pronoun_weights)} weights"
            )
        if len(self.pronoun_group_ids) != len(self.pronoun_groups):
            raise ProfileError("pronoun group ids do not match the groups")
        if len(set(self.tense_tags)) != len(self.tense_tags):
            raise ProfileError("duplicate tense tags")
        if len(set(self.pronoun_group_ids)) != len(self.pronoun_group_ids):
            raise ProfileError("duplicate pronoun group ids")
        for vec, what in ((self.tense_weights, "tense"), (self.pronoun_weights, "pronoun")):
            if any(w < 0 for w in vec):
                raise ProfileError(f"negative {what} weight")
            if vec and not any(w > 0 for w in vec):
                raise ProfileError(f"all {what} weights are zero")
        for cat, w in self.entity_weights.items():
            if cat not in (PERSON, NON_PERSON):
                raise ProfileError(f"entity weight for unknown category {cat!r}")
            if w < 0:
                raise ProfileError("negative entity weight")
        for tag, coarse in self.entity_coarse_map.items():
            if coarse not in (PERSON, NON_PERSON, IGNORE):
                raise ProfileError(f"fine tag {tag!r} maps to unknown category {coarse!r}")
        if not self.ngram_orders or any(n < 1 for n in self.ngram_orders):
            raise ProfileError("ngram orders must be positive")
        if len(set(self.ngram_orders)) != len(self.ngram_orders):
            raise ProfileError("duplicate ngram orders")
        if self.component_weights is not None:
            if any(w < 0 for w in self.component_weights.values()):
                raise ProfileError("negative component weight")
        if not self.alpha > 0:
            raise ProfileError(f"alpha must be positive, got {self.alpha}")
        if not self.smoothing_epsilon > 0:
            raise ProfileError(
                f"smoothing epsilon must be positive, got {self.smoothing_epsilon}"
            )

    def coarse_of(self, fine_tag: str) -> str | None:
        """Map a fine NER tag to PERSON / NON_PERSON / IGNORE, None if unknown.

        The coarse names themselves are always accepted, so serialized
        corpora that carry coarse tags reload under any profile.
        """
        if fine_tag in self.entity_coarse_map:
            return self.entity_coarse_map[fine_tag]
        if fine_tag in (PERSON, NON_PERSON):
            return fine_tag
        return None

    def entity_weight(self, coarse: str) -> float:
        return self.entity_weights.get(coarse, 1.0)

    def component_weight(self, component: str) -> float:
        """Weight of one score component; defaults to uniform 1.0."""
        if self.component_weights is None:
            return 1.0
        return self.component_weights.get(component, 1.0)

    def with_overrides(self, *, alpha=None, smoothing_epsilon=None) -> "LanguageProfile":
        """Return a copy with alpha and/or epsilon replaced (CLI overrides)."""
        out = self
        if alpha is not None:
            out = replace(out, alpha=alpha)
        if smoothing_epsilon is not None:
            out = replace(out, smoothing_epsilon=smoothing_epsilon)
        return out


def _split_list(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_floats(value: str, key: str) -> tuple[float, ...]:
    try:
        return tuple(float(item) for item in _split_list(value))
    except ValueError:
        raise ProfileError(f"bad number in {key}: {value!r}") from None


def parse_profile(text: str, *, source="<string>") -> LanguageProfile:
    """Parse the key=value profile format; see the module docstring."""
    entries = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ProfileError(f"{source} line {line_no}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _KNOWN_KEYS:
            raise ProfileError(f"{source} line {line_no}: unknown key {key!r}")
        if key in entries:
            raise ProfileError(f"{source} line {line_no}: duplicate key {key!r}")
        entries[key] = value.strip()

    for required in ("tense_tags", "tense_weights", "pronoun_groups", "pronoun_weights"):
        if required not in entries:
            raise ProfileError(f"{source}: missing required key {required!r}")

    group_ids = []
    groups = []
    for group in _split_list(entries["pronoun_groups"]):
        forms = [f.strip().lower() for f in group.split("/") if f.strip()]
        if not forms:
            raise ProfileError(f"{source}: empty pronoun group")
        group_ids.append(forms[0])
        groups.append(frozenset(forms))

    coarse_map = {}
    for key, coarse in (
        ("entity_person_tags", PERSON),
        ("entity_non_person_tags", NON_PERSON),
        ("entity_ignore_tags", IGNORE),
    ):
        for tag in _split_list(entries.get(key, "")):
            if tag in coarse_map:
                raise ProfileError(f"{source}: fine tag {tag!r} listed twice")
            coarse_map[tag] = coarse

    entity_weights = {
        PERSON: float(entries.get("entity_weight_person", "1.0")),
        NON_PERSON: float(entries.get("entity_weight_non_person", "1.0")),
    }

    if "ngram_orders" in entries:
        try:
            ngram_orders = tuple(int(v) for v in _split_list(entries["ngram_orders"]))
        except ValueError:
            raise ProfileError(f"{source}: bad ngram_orders") from None
    else:
        ngram_orders = DEFAULT_NGRAM_ORDERS

    component_weights = None
    if "component_weights" in entries:
        component_weights = {}
        for pair in _split_list(entries["component_weights"]):
            if ":" not in pair:
                raise ProfileError(f"{source}: component weight {pair!r} is not name:value")
            comp, _, w = pair.partition(":")
            try:
                component_weights[comp.strip()] = float(w)
            except ValueError:
                raise ProfileError(f"{source}: bad component weight {pair!r}") from None

    try:
        alpha = float(entries.get("alpha", "2"))
        epsilon = float(entries.get("smoothing_epsilon", "1e-9"))
    except ValueError:
        raise ProfileError(f"{source}: alpha and smoothing_epsilon must be numbers") from None

    return LanguageProfile(
        name=entries.get("name", Path(str(source)).stem),
        tense_tags=tuple(_split_list(entries["tense_tags"])),
        tense_weights=_parse_floats(entries["tense_weights"], "tense_weights"),
        pronoun_group_ids=tuple(group_ids),
        pronoun_groups=tuple(groups),
        pronoun_weights=_parse_floats(entries["pronoun_weights"], "pronoun_weights"),
        entity_coarse_map=coarse_map,
        entity_weights=entity_weights,
        ngram_orders=ngram_orders,
        component_weights=component_weights,
        alpha=alpha,
        smoothing_epsilon=epsilon,
    )


def load_profile(path) -> LanguageProfile:
    """Load and validate a profile file."""
    path = Path(path)
    return parse_profile(path.read_text(encoding="utf-8"), source=path)


def builtin_profile(name: str) -> LanguageProfile:
    """Load one of the shipped profiles ('english', 'german') by name."""
    ref = resources.files("blond").joinpath(f"data/{name}.profile")
    if not ref.is_file():
        raise ProfileError(f"no builtin profile named {name!r}")
    return parse_profile(ref.read_text(encoding="utf-8"), source=f"builtin:{name}")


def resolve_profile(spec: str) -> LanguageProfile:
    """Resolve a CLI profile argument: a path, a file in $BLOND_PROFILE_DIR, or a builtin."""
    candidate = Path(spec)
    if candidate.suffix == ".profile" or candidate.exists():
        return load_profile(candidate)
    env_dir = os.environ.get(PROFILE_DIR_ENV)
    if env_dir:
        env_path = Path(env_dir) / f"{spec}.profile"
        if env_path.exists():
            return load_profile(env_path)
    return builtin_profile(spec)
