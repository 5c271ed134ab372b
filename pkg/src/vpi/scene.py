"""Core domain types: objects, scenes, moves, relations, and preference labels.

Coordinates live in the unit square with x pointing right and y pointing away
from the viewer, so larger y means "behind" and renders nearer the image top.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from enum import Enum

from .errors import InvalidResult, UnknownObject, UnknownPreference

# Minimum pairwise object separation; keeps relations well-defined and
# renders readable.
EPS_SEP = 0.02


class TaskTag(str, Enum):
    BLOCK = "block"
    POLYGON = "polygon"
    HOUSEHOLD = "household"


class GeometricRelation(str, Enum):
    LEFT_OF = "left_of"
    RIGHT_OF = "right_of"
    IN_FRONT_OF = "in_front_of"
    BEHIND_OF = "behind_of"

    @property
    def phrase(self) -> str:
        """Serialized relation phrase, e.g. "to the left of"."""
        return _RELATION_PHRASE[self]

    @property
    def description_phrase(self) -> str:
        """Phrase used inside move descriptions ("behind", not "behind of")."""
        if self is GeometricRelation.BEHIND_OF:
            return "behind"
        return _RELATION_PHRASE[self]


_RELATION_PHRASE = {
    GeometricRelation.LEFT_OF: "to the left of",
    GeometricRelation.RIGHT_OF: "to the right of",
    GeometricRelation.IN_FRONT_OF: "in front of",
    GeometricRelation.BEHIND_OF: "behind of",
}

# Accepted spellings on parse: the phrase forms, snake_case, and common
# shortenings.
_RELATION_ALIASES = {
    "to the left of": GeometricRelation.LEFT_OF,
    "left of": GeometricRelation.LEFT_OF,
    "left_of": GeometricRelation.LEFT_OF,
    "to the right of": GeometricRelation.RIGHT_OF,
    "right of": GeometricRelation.RIGHT_OF,
    "right_of": GeometricRelation.RIGHT_OF,
    "in front of": GeometricRelation.IN_FRONT_OF,
    "in_front_of": GeometricRelation.IN_FRONT_OF,
    "front of": GeometricRelation.IN_FRONT_OF,
    "behind of": GeometricRelation.BEHIND_OF,
    "behind_of": GeometricRelation.BEHIND_OF,
    "behind": GeometricRelation.BEHIND_OF,
}


def parse_relation(text: str) -> GeometricRelation | None:
    """Map a relation spelling to its enum value; None when unmappable."""
    key = re.sub(r"\s+", " ", text.strip().lower().replace("-", " "))
    direct = _RELATION_ALIASES.get(key)
    if direct is not None:
        return direct
    key = key.replace("_", " ")
    return _RELATION_ALIASES.get(key)


class PreferenceLabel(str, Enum):
    GROUP_BY_COLOR = "group_by_color"
    GROUP_BY_SHAPE = "group_by_shape"
    GROUP_BY_CATEGORY = "group_by_category"
    ALIGN_HORIZONTAL = "align_horizontal"
    ALIGN_VERTICAL = "align_vertical"
    CLUSTER_QUADRANT_1 = "cluster_quadrant_1"
    CLUSTER_QUADRANT_2 = "cluster_quadrant_2"
    CLUSTER_QUADRANT_3 = "cluster_quadrant_3"
    CLUSTER_QUADRANT_4 = "cluster_quadrant_4"


_PREFERENCE_SENTENCE = {
    PreferenceLabel.GROUP_BY_COLOR: "Rearrange objects with the same color.",
    PreferenceLabel.GROUP_BY_SHAPE: "Group objects by the same shape.",
    PreferenceLabel.GROUP_BY_CATEGORY: "Group objects by the same category.",
    PreferenceLabel.ALIGN_HORIZONTAL: "Make objects into a horizontal line.",
    PreferenceLabel.ALIGN_VERTICAL: "Sort objects vertically.",
    PreferenceLabel.CLUSTER_QUADRANT_1: "Gather objects in the top-right quadrant.",
    PreferenceLabel.CLUSTER_QUADRANT_2: "Gather objects in the top-left quadrant.",
    PreferenceLabel.CLUSTER_QUADRANT_3: "Gather objects in the bottom-left quadrant.",
    PreferenceLabel.CLUSTER_QUADRANT_4: "Gather objects in the bottom-right quadrant.",
}


def preference_sentence(label: PreferenceLabel) -> str:
    """Canonical sentence for a preference label."""
    return _PREFERENCE_SENTENCE[label]


def _normalize_sentence(text: str) -> str:
    text = text.lower()
    text = re.sub(r"[^a-z0-9]+", " ", text)
    return text.strip()


_NORMALIZED_SENTENCES = {
    _normalize_sentence(sentence): label
    for label, sentence in _PREFERENCE_SENTENCE.items()
}


def parse_preference(text: str) -> PreferenceLabel:
    """Parse free text into a preference label.

    Exact (case/punctuation-insensitive) canonical matches win; otherwise the
    first canonical sentence contained in the text is used. Raises
    UnknownPreference when nothing matches.
    """
    normalized = _normalize_sentence(text)
    if not normalized:
        raise UnknownPreference("empty preference text")
    exact = _NORMALIZED_SENTENCES.get(normalized)
    if exact is not None:
        return exact
    best: tuple[int, int, PreferenceLabel] | None = None
    padded = f" {normalized} "
    for key, label in _NORMALIZED_SENTENCES.items():
        pos = padded.find(f" {key} ")
        if pos < 0:
            continue
        candidate = (pos, -len(key), label)
        if best is None or candidate < best:
            best = candidate
    if best is None:
        raise UnknownPreference(f"no preference matches: {text!r}")
    return best[2]


Position = tuple[float, float]


@dataclass(frozen=True)
class ObjectInstance:
    """One tabletop object: identity, semantic attributes, and 2D position."""

    id: int
    name: str
    color: str
    shape: str
    category: str
    position: Position

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "color": self.color,
            "shape": self.shape,
            "category": self.category,
            "position": list(self.position),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ObjectInstance":
        x, y = data["position"]
        return cls(
            id=int(data["id"]),
            name=data["name"],
            color=data["color"],
            shape=data["shape"],
            category=data["category"],
            position=(float(x), float(y)),
        )


@dataclass(frozen=True)
class Scene:
    """A single timestep configuration of all objects on the table."""

    objects: tuple[ObjectInstance, ...]
    task: TaskTag

    def object_by_id(self, object_id: int) -> ObjectInstance:
        for obj in self.objects:
            if obj.id == object_id:
                return obj
        raise UnknownObject(f"no object with id {object_id}")

    def ids(self) -> tuple[int, ...]:
        return tuple(obj.id for obj in self.objects)

    def to_dict(self) -> dict:
        return {
            "task": self.task.value,
            "objects": [obj.to_dict() for obj in self.objects],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Scene":
        return cls(
            objects=tuple(ObjectInstance.from_dict(o) for o in data["objects"]),
            task=TaskTag(data["task"]),
        )


@dataclass(frozen=True)
class Move:
    """Relocation of one object to a target position."""

    object_id: int
    target_position: Position

    def to_dict(self) -> dict:
        return {
            "object_id": self.object_id,
            "target_position": list(self.target_position),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Move":
        x, y = data["target_position"]
        return cls(object_id=int(data["object_id"]), target_position=(float(x), float(y)))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_scene: ok iff no violations."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def distance(a: Position, b: Position) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def validate_scene(scene: Scene) -> ValidationReport:
    """Check every scene invariant and report all violations found."""
    from .catalog import catalog_for  # deferred: catalog builds on these types

    violations: list[str] = []
    seen_ids: set[int] = set()
    catalog = catalog_for(scene.task)
    entries_by_name = {entry.name: entry for entry in catalog.entries}

    for obj in scene.objects:
        if obj.id in seen_ids:
            violations.append(f"duplicate object id {obj.id}")
        seen_ids.add(obj.id)
        x, y = obj.position
        if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
            violations.append(f"position out of bounds for id {obj.id}: ({x}, {y})")
        entry = entries_by_name.get(obj.name)
        if entry is None:
            violations.append(f"name not in {scene.task.value} catalog: {obj.name!r}")
        elif (obj.color, obj.shape, obj.category) != (entry.color, entry.shape, entry.category):
            violations.append(f"attributes of {obj.name!r} do not match the catalog")

    if len(scene.objects) != len(catalog.entries):
        violations.append(
            f"object count {len(scene.objects)} != catalog size {len(catalog.entries)}"
        )

    for i, a in enumerate(scene.objects):
        for b in scene.objects[i + 1:]:
            if distance(a.position, b.position) < EPS_SEP:
                violations.append(
                    f"separation < {EPS_SEP} between ids {a.id} and {b.id}"
                )

    return ValidationReport(violations=tuple(violations))


def apply_move(scene: Scene, move: Move) -> Scene:
    """Return a copy of the scene with one object relocated.

    Raises UnknownObject for a missing id and InvalidResult when the moved
    scene fails validation. The input scene is never modified.
    """
    if move.object_id not in scene.ids():
        raise UnknownObject(f"no object with id {move.object_id}")
    moved = tuple(
        replace(obj, position=move.target_position) if obj.id == move.object_id else obj
        for obj in scene.objects
    )
    result = Scene(objects=moved, task=scene.task)
    report = validate_scene(result)
    if not report.ok:
        raise InvalidResult("; ".join(report.violations))
    return result
