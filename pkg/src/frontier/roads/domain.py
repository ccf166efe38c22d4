"""Road domain contract: ties the spline geometry to the lane keeper."""

from __future__ import annotations

import logging

import numpy as np

from frontier import _kernels
from frontier.driver import (
    DEFAULT_DT,
    DEFAULT_MAX_STEPS,
    ControllerParams,
    lane_eval,
    quality_preset,
    right_lane_center,
)
from frontier.roads.distance import DEFAULT_RESAMPLE_STEP, road_tokens
from frontier.roads.generate import (
    DEFAULT_CONTROL_STEP,
    DEFAULT_NUM_CONTROL_POINTS,
    generate_seed_road,
    mutate_road,
)
from frontier.roads.geometry import (
    DEFAULT_SAMPLES_PER_SEGMENT,
    catmull_rom_interpolate,
)
from frontier.roads.model import DEFAULT_BBOX_SIDE, DEFAULT_LANE_WIDTH, RoadModel
from frontier.roads.validity import validate_road
from frontier.search.types import DomainContract

log = logging.getLogger(__name__)


class RoadDomain(DomainContract):
    """Roads driven by the pure-pursuit lane keeper.

    evaluate returns the lane keeper's worst boundary clearance; a
    timed-out drive that never left the lane evaluates to 0 so it can
    never enter the frontier archive (logged when it happens).
    """

    name = "road"

    def __init__(self, params: ControllerParams | str = "hq",
                 lane_width: float = DEFAULT_LANE_WIDTH,
                 bbox_side: float = DEFAULT_BBOX_SIDE,
                 samples_per_segment: int = DEFAULT_SAMPLES_PER_SEGMENT,
                 resample_step: float = DEFAULT_RESAMPLE_STEP,
                 num_control_points: int = DEFAULT_NUM_CONTROL_POINTS,
                 control_step: float = DEFAULT_CONTROL_STEP,
                 dt: float = DEFAULT_DT,
                 max_steps: int = DEFAULT_MAX_STEPS,
                 seed_attempt_factor: int = 200):
        if isinstance(params, str):
            params = quality_preset(params)
        self.params = params
        self.lane_width = lane_width
        self.bbox_side = bbox_side
        self.samples_per_segment = samples_per_segment
        self.resample_step = resample_step
        self.num_control_points = num_control_points
        self.control_step = control_step
        self.dt = dt
        self.max_steps = max_steps
        self.seed_attempt_factor = seed_attempt_factor
        self._dist_memo: dict[tuple[int, int], float] = {}

    # --- derived representations, cached on the model ---

    def geometry(self, model: RoadModel):
        if model._geometry is None:
            model._geometry = catmull_rom_interpolate(model, self.samples_per_segment)
        return model._geometry

    def tokens(self, model: RoadModel) -> np.ndarray:
        if model._tokens is None:
            model._tokens = road_tokens(self.geometry(model), self.resample_step)
        return model._tokens

    # --- the domain contract ---

    def generate_seeds(self, count: int, rng: np.random.Generator) -> list[RoadModel]:
        budget = self.seed_attempt_factor * count
        seeds = []
        for _ in range(budget):
            if len(seeds) == count:
                break
            model = generate_seed_road(
                rng, self.num_control_points, self.control_step,
                self.lane_width, self.bbox_side, self.samples_per_segment)
            if self.evaluate(model) > 0:
                seeds.append(model)
        if len(seeds) < count:
            raise RuntimeError(
                f"only {len(seeds)}/{count} well-behaved seed roads in {budget} attempts")
        return seeds

    def mutate(self, model: RoadModel, rng: np.random.Generator,
               lb: float, ub: float) -> RoadModel:
        return mutate_road(model, rng, lb, ub)

    def distance(self, a: RoadModel, b: RoadModel) -> float:
        if a.uid == b.uid:
            return 0.0
        key = (a.uid, b.uid) if a.uid < b.uid else (b.uid, a.uid)
        d = self._dist_memo.get(key)
        if d is None:
            d = float(_kernels.angle_edit_distance(self.tokens(a), self.tokens(b)))
            self._dist_memo[key] = d
        return d

    def evaluate(self, model: RoadModel) -> float:
        geometry = self.geometry(model)
        path, cum = right_lane_center(geometry, self.lane_width)
        states, outcome = _kernels.drive(
            path, cum, self.params.lookahead, self.params.speed,
            self.params.max_steer_rate, self.params.steering_lag,
            self.params.wheelbase, self.lane_width / 2.0, self.dt, self.max_steps)
        value = float(self.lane_width / 2.0 - states[:, 4].max())
        if outcome == 2 and value > 0:
            log.warning("drive timed out inside the lane on road uid=%d; eval forced to 0",
                        model.uid)
            return 0.0
        return value

    def is_valid(self, model: RoadModel) -> bool:
        try:
            geometry = self.geometry(model)
        except ValueError:
            return False
        return validate_road(model, geometry)

    # --- plumbing ---

    def concretely_equal(self, a: RoadModel, b: RoadModel) -> bool:
        ga, gb = self.geometry(a), self.geometry(b)
        return ga.spine.shape == gb.spine.shape and bool(np.array_equal(ga.spine, gb.spine))

    def model_to_obj(self, model: RoadModel) -> dict:
        return model.to_obj()

    def model_from_obj(self, obj: dict) -> RoadModel:
        return RoadModel.from_obj(obj)

    def reference_model(self) -> RoadModel:
        """A straight road with the standard control-point layout."""
        xs = np.arange(self.num_control_points) * self.control_step
        pts = np.stack([xs, np.zeros_like(xs)], axis=1)
        return RoadModel(pts, self.lane_width, self.bbox_side)
