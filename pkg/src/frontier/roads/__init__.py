from frontier.roads.distance import road_distance, road_tokens
from frontier.roads.domain import RoadDomain
from frontier.roads.generate import generate_seed_road, mutate_road
from frontier.roads.geometry import (
    RoadGeometry,
    barry_goldman,
    catmull_rom_interpolate,
    min_curvature_radius,
    resample_polyline,
    turning_angles,
)
from frontier.roads.model import RoadModel
from frontier.roads.validity import polyline_self_intersects, validate_road

__all__ = [
    "RoadDomain",
    "RoadGeometry",
    "RoadModel",
    "barry_goldman",
    "catmull_rom_interpolate",
    "generate_seed_road",
    "min_curvature_radius",
    "mutate_road",
    "polyline_self_intersects",
    "resample_polyline",
    "road_distance",
    "road_tokens",
    "turning_angles",
    "validate_road",
]
