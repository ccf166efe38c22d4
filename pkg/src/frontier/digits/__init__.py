from frontier.digits.classifier import (
    CentroidClassifier,
    build_classifier,
    classifier_preset,
    classify_margin,
)
from frontier.digits.domain import DigitDomain
from frontier.digits.model import CANVAS, DigitModel, cubic_from_quadratic
from frontier.digits.mutate import mutate_digit
from frontier.digits.raster import outline_edges, pixel_distance, rasterize
from frontier.digits.seeds import builtin_data_path, load_models, load_seeds

__all__ = [
    "CANVAS",
    "CentroidClassifier",
    "DigitDomain",
    "DigitModel",
    "build_classifier",
    "builtin_data_path",
    "classifier_preset",
    "classify_margin",
    "cubic_from_quadratic",
    "load_models",
    "load_seeds",
    "mutate_digit",
    "outline_edges",
    "pixel_distance",
    "rasterize",
]
