"""Episode records: a labeled scene sequence with moves and residuals.

Episodes serialize to the versioned "episode/v1" JSON document, scenes
embedded inline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .residual import VisualResidual, ground_truth_residual
from .scene import Move, PreferenceLabel, Scene, TaskTag, apply_move

SCHEMA_ID = "episode/v1"


@dataclass(frozen=True)
class EpisodeRecord:
    """A full demonstration: scenes, the moves between them, ground-truth
    residuals per pair, and the preference that generated it."""

    scenes: tuple[Scene, ...]
    moves: tuple[Move, ...]
    ground_truth_residuals: tuple[VisualResidual, ...]
    label: PreferenceLabel
    seed: int
    image_paths: tuple[str, ...] | None = None

    @property
    def task(self) -> TaskTag:
        return self.scenes[0].task

    @property
    def n_images(self) -> int:
        return len(self.scenes)

    def to_dict(self) -> dict:
        doc = {
            "schema": SCHEMA_ID,
            "task": self.task.value,
            "label": self.label.value,
            "seed": self.seed,
            "scenes": [scene.to_dict() for scene in self.scenes],
            "moves": [move.to_dict() for move in self.moves],
            "ground_truth_residuals": [r.to_dict() for r in self.ground_truth_residuals],
        }
        if self.image_paths is not None:
            doc["image_paths"] = list(self.image_paths)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "EpisodeRecord":
        if data.get("schema") != SCHEMA_ID:
            raise ValueError(f"unsupported episode schema: {data.get('schema')!r}")
        image_paths = data.get("image_paths")
        return cls(
            scenes=tuple(Scene.from_dict(s) for s in data["scenes"]),
            moves=tuple(Move.from_dict(m) for m in data["moves"]),
            ground_truth_residuals=tuple(
                VisualResidual.from_dict(r) for r in data["ground_truth_residuals"]
            ),
            label=PreferenceLabel(data["label"]),
            seed=int(data["seed"]),
            image_paths=tuple(image_paths) if image_paths is not None else None,
        )

    @classmethod
    def from_json(cls, text: str) -> "EpisodeRecord":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ReplayReport:
    """Result of replaying an episode's moves from its first scene."""

    violations: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def replay_episode(episode: EpisodeRecord) -> ReplayReport:
    """Verify the episode's structural invariants by replaying its moves."""
    violations: list[str] = []
    if len(episode.scenes) < 2:
        violations.append("fewer than two scenes")
    if len(episode.moves) != len(episode.scenes) - 1:
        violations.append("move count != scene count - 1")
    if len(episode.ground_truth_residuals) != len(episode.scenes) - 1:
        violations.append("residual count != scene count - 1")

    current = episode.scenes[0]
    for k, move in enumerate(episode.moves):
        try:
            current = apply_move(current, move)
        except Exception as exc:
            violations.append(f"move {k} failed to apply: {exc}")
            return ReplayReport(tuple(violations))
        if k + 1 < len(episode.scenes) and current != episode.scenes[k + 1]:
            violations.append(f"replayed scene {k + 1} differs from the record")

    for k in range(min(len(episode.moves), len(episode.ground_truth_residuals))):
        expected = ground_truth_residual(episode.scenes[k], episode.scenes[k + 1])
        if expected != episode.ground_truth_residuals[k]:
            violations.append(f"residual {k} inconsistent with the scene pair")

    return ReplayReport(tuple(violations))
