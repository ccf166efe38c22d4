"""Run configuration files: JSON documents selecting a domain, a quality
preset, and every search parameter (with per-domain defaults)."""

from __future__ import annotations

import json
from pathlib import Path

from frontier.search.types import SearchConfig

# Default search settings per domain; threshold units differ because the
# two domains use different distance scales.
ROAD_SEARCH_DEFAULTS = {
    "popsize": 12,
    "g_max": 100,
    "k": 0.01,
    "threshold_ta": 35.0,
    "mutation_lb": 1.0,
    "mutation_ub": 6.0,
    "repop_ub": 2,
    "mutation_retry_cap": 50,
    "rng_seed": 0,
    "eval_workers": 1,
}
DIGIT_SEARCH_DEFAULTS = {
    "popsize": 100,
    "g_max": 4000,
    "k": 0.1,
    "threshold_ta": 4.0,
    "mutation_lb": 0.01,
    "mutation_ub": 0.6,
    "repop_ub": 10,
    "mutation_retry_cap": 50,
    "rng_seed": 0,
    "eval_workers": 1,
}

ROAD_DOMAIN_DEFAULTS = {
    "lane_width": 4.0,
    "bbox_side": 250.0,
    "samples_per_segment": 20,
    "resample_step": 2.0,
    "num_control_points": 10,
    "control_step": 25.0,
    "dt": 0.05,
    "max_steps": 20000,
}
DIGIT_DOMAIN_DEFAULTS = {
    "digit_class": 5,
    "temperature": 200.0,
}


class ConfigError(ValueError):
    pass


def default_config(domain_kind: str) -> dict:
    if domain_kind == "road":
        return {"domain": "road", "preset": "hq",
                "search": dict(ROAD_SEARCH_DEFAULTS),
                "road": dict(ROAD_DOMAIN_DEFAULTS)}
    if domain_kind == "digit":
        return {"domain": "digit", "preset": "hq",
                "search": dict(DIGIT_SEARCH_DEFAULTS),
                "digit": dict(DIGIT_DOMAIN_DEFAULTS)}
    raise ConfigError(f"unknown domain {domain_kind!r}; expected 'road' or 'digit'")


def load_config(path) -> dict:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON: {exc}") from exc
    return normalize_config(doc, source=str(path))


def normalize_config(doc: dict, source: str = "config") -> dict:
    if not isinstance(doc, dict) or "domain" not in doc:
        raise ConfigError(f"{source}: config must be an object with a 'domain' key")
    kind = doc["domain"]
    base = default_config(kind)
    base["preset"] = doc.get("preset", base["preset"])
    if base["preset"] not in ("hq", "lq"):
        raise ConfigError(f"{source}: preset must be 'hq' or 'lq'")
    for section in ("search", kind):
        overrides = doc.get(section, {})
        if not isinstance(overrides, dict):
            raise ConfigError(f"{source}: section {section!r} must be an object")
        unknown = set(overrides) - set(base[section])
        if unknown:
            raise ConfigError(f"{source}: unknown {section} keys: {sorted(unknown)}")
        base[section].update(overrides)
    return base


def search_config(doc: dict) -> SearchConfig:
    try:
        return SearchConfig(**doc["search"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad search settings: {exc}") from exc


def build_domain(doc: dict, preset: str | None = None):
    """Domain instance described by a normalized config document."""
    kind = doc["domain"]
    preset = preset or doc["preset"]
    if kind == "road":
        from frontier.roads.domain import RoadDomain

        return RoadDomain(params=preset, **doc["road"])
    if kind == "digit":
        from frontier.digits.domain import DigitDomain

        return DigitDomain.from_corpus(preset=preset, **doc["digit"])
    raise ConfigError(f"unknown domain {kind!r}")
