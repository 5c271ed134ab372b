"""Visual preference inference lab: scenes, residual chains, baselines,
metrics, and the session service."""

from .scene import (
    GeometricRelation,
    Move,
    ObjectInstance,
    PreferenceLabel,
    Scene,
    TaskTag,
    apply_move,
    parse_preference,
    preference_sentence,
    validate_scene,
)
from .episode import EpisodeRecord
from .residual import VisualResidual, ground_truth_residual
from .scenegen import GenerationConfig, generate_episode

__all__ = [
    "EpisodeRecord",
    "GenerationConfig",
    "GeometricRelation",
    "Move",
    "ObjectInstance",
    "PreferenceLabel",
    "Scene",
    "TaskTag",
    "VisualResidual",
    "apply_move",
    "generate_episode",
    "ground_truth_residual",
    "parse_preference",
    "preference_sentence",
    "validate_scene",
]
