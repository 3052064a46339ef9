"""Per-target crosscheck policy loaded from ``resources/targets.yaml``."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

import yaml

from edds.config import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TargetPolicy:
    title: Optional[str] = None
    max_n: int = 4
    original_bound_check: bool = False


def _coerce_int(value: Any, fallback: int) -> int:
    if value is None:
        return fallback
    try:
        return int(value)
    except (TypeError, ValueError):
        logger.warning("Ignoring non-integer max_n %r", value)
        return fallback


def _load_policy_file(path: Path) -> dict[str, Any]:
    if not path.exists():
        logger.warning("Target policy file %s not found; using defaults", path)
        return {}
    with path.open("r", encoding="utf-8") as stream:
        data = yaml.safe_load(stream) or {}
    if not isinstance(data, dict):
        logger.warning("Unexpected target policy structure in %s; using defaults", path)
        return {}
    return data


@lru_cache(maxsize=None)
def _policies_by_target(policy_file: str) -> dict[str, TargetPolicy]:
    data = _load_policy_file(Path(policy_file))
    defaults = data.get("defaults", {}) if isinstance(data.get("defaults"), dict) else {}
    targets = data.get("targets", {}) if isinstance(data.get("targets"), dict) else {}

    default_policy = TargetPolicy(
        title=defaults.get("title"),
        max_n=_coerce_int(defaults.get("max_n"), TargetPolicy.max_n),
        original_bound_check=bool(defaults.get("original_bound_check", False)),
    )

    resolved: dict[str, TargetPolicy] = {}
    for name, overrides in targets.items():
        if not isinstance(overrides, dict):
            continue
        resolved[str(name)] = TargetPolicy(
            title=overrides.get("title", default_policy.title),
            max_n=_coerce_int(overrides.get("max_n"), default_policy.max_n),
            original_bound_check=bool(overrides.get("original_bound_check", default_policy.original_bound_check)),
        )
    resolved["_default"] = default_policy
    return resolved


def get_target_policy(target_name: str, policy_file: str | None = None) -> TargetPolicy:
    policies = _policies_by_target(policy_file or get_settings().targets_file)
    return policies.get(target_name, policies["_default"])


__all__ = ["TargetPolicy", "get_target_policy"]
