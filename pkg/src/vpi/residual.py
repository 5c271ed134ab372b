"""Ground-truth visual residuals computed from symbolic scene pairs.

A residual captures what changed between two consecutive scenes: which object
moved (source), which object it ended up next to (target), their resulting
spatial relation, and a one-sentence description.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentPositions, MultipleMoves, NoMove
from .scene import GeometricRelation, Position, Scene, distance

# Displacement below this is treated as noise, not movement.
EPS_MOVE = 0.01


@dataclass(frozen=True)
class ObjectSemantics:
    """The (name, color, shape) triple reported for one object."""

    name: str
    color: str
    shape: str

    def to_dict(self) -> dict:
        return {"name": self.name, "color": self.color, "shape": self.shape}

    @classmethod
    def from_dict(cls, data: dict) -> "ObjectSemantics":
        return cls(name=data["name"], color=data["color"], shape=data["shape"])


@dataclass(frozen=True)
class VisualResidual:
    """Structured difference between two consecutive scenes.

    geometric is None only for the parse-failure sentinel, which scores zero
    against any ground truth.
    """

    source: ObjectSemantics
    target: ObjectSemantics
    geometric: GeometricRelation | None
    description: str

    @property
    def unparsed(self) -> bool:
        return self.geometric is None and not self.description

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "geometric": self.geometric.value if self.geometric else None,
            "description": self.description,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VisualResidual":
        geometric = data.get("geometric")
        return cls(
            source=ObjectSemantics.from_dict(data["source"]),
            target=ObjectSemantics.from_dict(data["target"]),
            geometric=GeometricRelation(geometric) if geometric else None,
            description=data.get("description", ""),
        )


UNPARSED_RESIDUAL = VisualResidual(
    source=ObjectSemantics("", "", ""),
    target=ObjectSemantics("", "", ""),
    geometric=None,
    description="",
)


def detect_moved_object(before: Scene, after: Scene) -> int:
    """Identify the single object whose position changed between two scenes.

    Raises NoMove when no displacement exceeds EPS_MOVE and MultipleMoves when
    more than one does; either way the pair is unusable for a residual.
    """
    if set(before.ids()) != set(after.ids()):
        raise ValueError("scenes do not share an id set")
    moved = [
        obj.id
        for obj in before.objects
        if distance(obj.position, after.object_by_id(obj.id).position) > EPS_MOVE
    ]
    if not moved:
        raise NoMove("no object displaced beyond threshold")
    if len(moved) > 1:
        raise MultipleMoves(f"objects {moved} all moved")
    return moved[0]


def select_target_object(after: Scene, source_id: int) -> int:
    """Nearest neighbor of the moved object in the final layout; ties pick the
    smallest id."""
    source = after.object_by_id(source_id)
    candidates = [obj for obj in after.objects if obj.id != source_id]
    if not candidates:
        raise ValueError("scene has no candidate target objects")
    return min(
        candidates, key=lambda obj: (distance(source.position, obj.position), obj.id)
    ).id


def classify_relation(source_pos: Position, target_pos: Position) -> GeometricRelation:
    """Dominant-axis relation of source relative to target.

    Exact |dx| == |dy| ties resolve to the horizontal axis.
    """
    dx = source_pos[0] - target_pos[0]
    dy = source_pos[1] - target_pos[1]
    if dx == 0.0 and dy == 0.0:
        raise CoincidentPositions("positions coincide")
    if math.fabs(dx) >= math.fabs(dy):
        return GeometricRelation.RIGHT_OF if dx > 0 else GeometricRelation.LEFT_OF
    return GeometricRelation.BEHIND_OF if dy > 0 else GeometricRelation.IN_FRONT_OF


def canonical_description(
    source: ObjectSemantics, target: ObjectSemantics, relation: GeometricRelation
) -> str:
    """The one-sentence move summary, e.g. "Move the apple in front of the
    orange drink."."""
    return f"Move the {source.name} {relation.description_phrase} the {target.name}."


def ground_truth_residual(before: Scene, after: Scene) -> VisualResidual:
    """Compute the reference residual for a consecutive scene pair."""
    source_id = detect_moved_object(before, after)
    target_id = select_target_object(after, source_id)
    source_obj = after.object_by_id(source_id)
    target_obj = after.object_by_id(target_id)
    relation = classify_relation(source_obj.position, target_obj.position)
    source = ObjectSemantics(source_obj.name, source_obj.color, source_obj.shape)
    target = ObjectSemantics(target_obj.name, target_obj.color, target_obj.shape)
    return VisualResidual(
        source=source,
        target=target,
        geometric=relation,
        description=canonical_description(source, target, relation),
    )


def format_vrd_response(residual: VisualResidual) -> str:
    """Render a residual in the canonical three-field response layout."""
    relation = residual.geometric.value if residual.geometric else "unknown"
    return (
        f"geometric property: {relation}\n"
        f"semantic property: source object: {residual.source.name}, "
        f"{residual.source.color}, {residual.source.shape},\n"
        f"target object: {residual.target.name}, {residual.target.color}, "
        f"{residual.target.shape}\n"
        f"description: {residual.description}"
    )
