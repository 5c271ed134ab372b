"""Seeded generation of scenes, goal layouts, move plans, and episodes.

Everything here is a pure function of its (task, preference, seed) inputs, so
episode corpora are reproducible byte-for-byte.
"""

from __future__ import annotations

import math
import random
import statistics
from dataclasses import dataclass, replace

from .catalog import Catalog, catalog_for
from .episode import EpisodeRecord
from .errors import GenerationFailure, PlanningFailure, UnknownObject
from .residual import ground_truth_residual
from .scene import (
    EPS_SEP,
    Move,
    ObjectInstance,
    Position,
    PreferenceLabel,
    Scene,
    TaskTag,
    apply_move,
    distance,
    validate_scene,
)

# Default tolerance for the alignment predicates; well above EPS_SEP, well
# below workspace scale.
TAU_GOAL = 0.05

# Sampling keeps object centers away from the workspace edge.
_SAMPLE_LO, _SAMPLE_HI = 0.05, 0.95
_MAX_REJECTIONS = 10_000
# Cluster anchors per group count; every set is pairwise >= 0.4 apart.
_GROUP_ANCHORS: dict[int, tuple[Position, ...]] = {
    1: ((0.5, 0.5),),
    2: ((0.25, 0.25), (0.75, 0.75)),
    3: ((0.2, 0.2), (0.8, 0.2), (0.5, 0.8)),
    4: ((0.2, 0.2), (0.8, 0.2), (0.2, 0.8), (0.8, 0.8)),
    5: ((0.2, 0.2), (0.8, 0.2), (0.2, 0.8), (0.8, 0.8), (0.5, 0.5)),
}
_GROUP_RADIUS = 0.07
# Quadrant interiors with a margin so membership is strict.
_QUADRANT_BOX = {
    PreferenceLabel.CLUSTER_QUADRANT_1: ((0.55, 0.95), (0.55, 0.95)),
    PreferenceLabel.CLUSTER_QUADRANT_2: ((0.05, 0.45), (0.55, 0.95)),
    PreferenceLabel.CLUSTER_QUADRANT_3: ((0.05, 0.45), (0.05, 0.45)),
    PreferenceLabel.CLUSTER_QUADRANT_4: ((0.55, 0.95), (0.05, 0.45)),
}
# A demonstrated move must be visibly larger than the movement threshold.
_MIN_DISPLACEMENT = 0.05

_GROUP_ATTRIBUTE = {
    PreferenceLabel.GROUP_BY_COLOR: "color",
    PreferenceLabel.GROUP_BY_SHAPE: "shape",
    PreferenceLabel.GROUP_BY_CATEGORY: "category",
}


@dataclass(frozen=True)
class GenerationConfig:
    """Inputs for one episode: what to demonstrate and how long."""

    task: TaskTag
    preference: PreferenceLabel
    seed: int
    n_images: int | None = None  # None: every object moves once
    tau_goal: float = TAU_GOAL

    def __post_init__(self) -> None:
        if self.n_images is not None and self.n_images < 2:
            raise ValueError("n_images must be >= 2")
        limit = len(catalog_for(self.task).entries)
        if self.n_images is not None and self.n_images - 1 > limit:
            raise ValueError(f"n_images - 1 exceeds object count {limit}")


def quadrant_of(position: Position) -> int | None:
    """Mathematical quadrant (1..4) of a position, None on a boundary."""
    x, y = position
    if x == 0.5 or y == 0.5:
        return None
    if x > 0.5:
        return 1 if y > 0.5 else 4
    return 2 if y > 0.5 else 3


def satisfies_preference(
    scene: Scene, label: PreferenceLabel, tau_goal: float = TAU_GOAL
) -> bool:
    """Whether a scene layout realizes the given preference."""
    positions = [obj.position for obj in scene.objects]
    if label in _GROUP_ATTRIBUTE:
        attribute = _GROUP_ATTRIBUTE[label]
        groups: dict[str, list[Position]] = {}
        for obj in scene.objects:
            groups.setdefault(getattr(obj, attribute), []).append(obj.position)
        intra: list[float] = []
        inter: list[float] = []
        values = list(groups.items())
        for gi, (_, members) in enumerate(values):
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    intra.append(distance(a, b))
            for _, others in values[gi + 1:]:
                for a in members:
                    for b in others:
                        inter.append(distance(a, b))
        if not intra or not inter:
            return False
        return max(intra) < min(inter)
    if label is PreferenceLabel.ALIGN_HORIZONTAL:
        return statistics.pstdev(y for _, y in positions) < tau_goal
    if label is PreferenceLabel.ALIGN_VERTICAL:
        return statistics.pstdev(x for x, _ in positions) < tau_goal
    quadrant = int(label.value.rsplit("_", 1)[1])
    return all(quadrant_of(p) == quadrant for p in positions)


def applicable_preferences(task: TaskTag) -> tuple[PreferenceLabel, ...]:
    """Preferences that can be demonstrated with the task's catalog.

    Grouping needs at least two distinct attribute values and one group of
    two or more; spatial preferences apply everywhere.
    """
    catalog = catalog_for(task)
    labels: list[PreferenceLabel] = []
    for label in PreferenceLabel:
        attribute = _GROUP_ATTRIBUTE.get(label)
        if attribute is None:
            labels.append(label)
            continue
        values = [getattr(entry, attribute) for entry in catalog.entries]
        if len(set(values)) >= 2 and max(values.count(v) for v in set(values)) >= 2:
            labels.append(label)
    return tuple(labels)


def _scene_from_positions(catalog: Catalog, positions: list[Position]) -> Scene:
    objects = tuple(
        ObjectInstance(
            id=index,
            name=entry.name,
            color=entry.color,
            shape=entry.shape,
            category=entry.category,
            position=positions[index],
        )
        for index, entry in enumerate(catalog.entries)
    )
    return Scene(objects=objects, task=catalog.task)


def _sample_clear(
    rng: random.Random,
    box: tuple[tuple[float, float], tuple[float, float]],
    occupied: list[Position],
) -> Position:
    (x_lo, x_hi), (y_lo, y_hi) = box
    for _ in range(_MAX_REJECTIONS):
        candidate = (rng.uniform(x_lo, x_hi), rng.uniform(y_lo, y_hi))
        if all(distance(candidate, other) >= EPS_SEP for other in occupied):
            return candidate
    raise GenerationFailure("could not place an object with the required separation")


def sample_scene(task: TaskTag, seed: int) -> Scene:
    """Uniform random valid scene for a task, deterministic in the seed."""
    catalog = catalog_for(task)
    rng = random.Random(f"sample_scene|{task.value}|{seed}")
    box = ((_SAMPLE_LO, _SAMPLE_HI), (_SAMPLE_LO, _SAMPLE_HI))
    positions: list[Position] = []
    for _ in catalog.entries:
        positions.append(_sample_clear(rng, box, positions))
    scene = _scene_from_positions(catalog, positions)
    report = validate_scene(scene)
    if not report.ok:
        raise GenerationFailure("; ".join(report.violations))
    return scene


def _grouping_goal(
    scene: Scene, label: PreferenceLabel, rng: random.Random
) -> dict[int, Position]:
    attribute = _GROUP_ATTRIBUTE[label]
    groups: dict[str, list[int]] = {}
    for obj in scene.objects:
        groups.setdefault(getattr(obj, attribute), []).append(obj.id)
    if len(groups) < 2 or max(len(ids) for ids in groups.values()) < 2:
        raise GenerationFailure(
            f"grouping by {attribute} is degenerate for task {scene.task.value}"
        )
    anchors = list(_GROUP_ANCHORS[len(groups)])
    rng.shuffle(anchors)
    ordered = sorted(groups.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    goal: dict[int, Position] = {}
    placed: list[Position] = []
    for (_, member_ids), anchor in zip(ordered, anchors):
        for object_id in member_ids:
            for _ in range(_MAX_REJECTIONS):
                radius = _GROUP_RADIUS * math.sqrt(rng.random())
                angle = rng.uniform(0.0, 2.0 * math.pi)
                candidate = (
                    anchor[0] + radius * math.cos(angle),
                    anchor[1] + radius * math.sin(angle),
                )
                if all(distance(candidate, p) >= EPS_SEP for p in placed):
                    break
            else:
                raise GenerationFailure("cluster too crowded")
            goal[object_id] = candidate
            placed.append(candidate)
    return goal


def _alignment_goal(
    scene: Scene, label: PreferenceLabel, rng: random.Random, tau_goal: float
) -> dict[int, Position]:
    ids = list(scene.ids())
    rng.shuffle(ids)
    count = len(ids)
    spread = [0.1 + 0.8 * i / (count - 1) for i in range(count)]
    # Cross-axis scatter with an exact, episode-specific standard deviation so
    # alignment tightness varies across episodes but stays inside tau_goal.
    sigma_target = rng.uniform(0.3 * tau_goal, 0.96 * tau_goal)
    raw = [rng.uniform(-1.0, 1.0) for _ in range(count)]
    mean = sum(raw) / count
    centered = [u - mean for u in raw]
    sigma_raw = math.sqrt(sum(u * u for u in centered) / count)
    if sigma_raw < 1e-9:
        centered = [(-1.0) ** i for i in range(count)]
        sigma_raw = 1.0
    jitter = [u * sigma_target / sigma_raw for u in centered]
    goal: dict[int, Position] = {}
    for i, object_id in enumerate(ids):
        cross = min(max(0.5 + jitter[i], 0.02), 0.98)
        if label is PreferenceLabel.ALIGN_HORIZONTAL:
            goal[object_id] = (spread[i], cross)
        else:
            goal[object_id] = (cross, spread[i])
    return goal


def goal_configuration(
    scene: Scene, preference: PreferenceLabel, seed: int
) -> dict[int, Position]:
    """A target position per object realizing the preference.

    The layout satisfies the preference predicate, keeps EPS_SEP, and is
    deterministic in (task, preference, seed).
    """
    rng = random.Random(f"goal|{scene.task.value}|{preference.value}|{seed}")
    tau_goal = TAU_GOAL
    for _ in range(20):
        if preference in _GROUP_ATTRIBUTE:
            goal = _grouping_goal(scene, preference, rng)
        elif preference in (PreferenceLabel.ALIGN_HORIZONTAL, PreferenceLabel.ALIGN_VERTICAL):
            goal = _alignment_goal(scene, preference, rng, tau_goal)
        else:
            box = _QUADRANT_BOX[preference]
            placed: list[Position] = []
            goal = {}
            for object_id in scene.ids():
                goal[object_id] = _sample_clear(rng, box, placed)
                placed.append(goal[object_id])
        candidate = Scene(
            objects=tuple(
                replace(obj, position=goal[obj.id]) for obj in scene.objects
            ),
            task=scene.task,
        )
        if validate_scene(candidate).ok and satisfies_preference(
            candidate, preference, tau_goal
        ):
            return goal
    raise GenerationFailure(f"no valid goal layout found for {preference.value}")


def plan_moves(scene: Scene, goal: dict[int, Position]) -> list[Move]:
    """One move per displaced object, ascending id, every intermediate valid.

    When the greedy order collides, the goal is perturbed and replanned, up
    to 10 attempts, then PlanningFailure.
    """
    unknown = set(goal) - set(scene.ids())
    if unknown:
        raise UnknownObject(f"goal references unknown ids {sorted(unknown)}")
    for attempt in range(10):
        if attempt == 0:
            adjusted = dict(goal)
        else:
            jitter_rng = random.Random(f"plan|{attempt}")
            adjusted = {
                object_id: (
                    min(max(x + jitter_rng.uniform(-0.02, 0.02), 0.0), 1.0),
                    min(max(y + jitter_rng.uniform(-0.02, 0.02), 0.0), 1.0),
                )
                for object_id, (x, y) in goal.items()
            }
        moves: list[Move] = []
        current = scene
        ok = True
        for object_id in sorted(adjusted):
            target = adjusted[object_id]
            if distance(current.object_by_id(object_id).position, target) < 1e-12:
                continue
            move = Move(object_id=object_id, target_position=target)
            try:
                current = apply_move(current, move)
            except Exception:
                ok = False
                break
            moves.append(move)
        if ok:
            return moves
    raise PlanningFailure("no separation-respecting move order found")


def generate_episode(config: GenerationConfig) -> EpisodeRecord:
    """Produce a labeled episode whose final scene realizes the preference.

    The goal layout is sampled first; all but the demonstrated objects start
    in place, so the episode has exactly n_images - 1 moves.
    """
    catalog = catalog_for(config.task)
    rng = random.Random(
        f"episode|{config.task.value}|{config.preference.value}|{config.seed}"
    )
    base = sample_scene(config.task, config.seed)
    goal = goal_configuration(base, config.preference, config.seed)
    move_count = (
        len(catalog.entries) if config.n_images is None else config.n_images - 1
    )
    moved_ids = sorted(rng.sample(sorted(goal), move_count))

    goal_positions = list(goal.values())
    start_positions: dict[int, Position] = {}
    box = ((_SAMPLE_LO, _SAMPLE_HI), (_SAMPLE_LO, _SAMPLE_HI))
    for object_id in moved_ids:
        for _ in range(_MAX_REJECTIONS):
            candidate = _sample_clear(
                rng, box, goal_positions + list(start_positions.values())
            )
            if distance(candidate, goal[object_id]) >= _MIN_DISPLACEMENT:
                start_positions[object_id] = candidate
                break
        else:
            raise GenerationFailure("could not place a start position")

    starts = {
        object_id: start_positions.get(object_id, goal[object_id])
        for object_id in goal
    }
    start_scene = _scene_from_positions(catalog, [starts[i] for i in sorted(starts)])
    report = validate_scene(start_scene)
    if not report.ok:
        raise GenerationFailure("; ".join(report.violations))

    moves = plan_moves(start_scene, goal)
    scenes = [start_scene]
    for move in moves:
        scenes.append(apply_move(scenes[-1], move))
    if not satisfies_preference(scenes[-1], config.preference, config.tau_goal):
        raise GenerationFailure("final scene does not satisfy the preference")

    residuals = tuple(
        ground_truth_residual(scenes[k], scenes[k + 1]) for k in range(len(moves))
    )
    return EpisodeRecord(
        scenes=tuple(scenes),
        moves=tuple(moves),
        ground_truth_residuals=residuals,
        label=config.preference,
        seed=config.seed,
    )
