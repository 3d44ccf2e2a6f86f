"""
Реестр наборов проверок — какие законы гонять и на каких сетках.

Загружается из suites.yaml в корне проекта; отсутствующие в файле наборы
берутся со встроенными сетками.
"""
from __future__ import annotations

import copy
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Optional

import yaml

logger = logging.getLogger("core.suites")

# имя → (группа, сетка по умолчанию)
DEFAULT_SUITES: dict[str, tuple[str, dict]] = {
    # законы полугруппы
    "associativity": ("core", {"N": 6}),
    "identity": ("core", {"N": 6, "families": [[0], [0, 1], [0, 1, 2], [0, 1, 2, 3]]}),
    "inverse": ("core", {"N": 8, "unique_N": 4}),
    "nat_leq": ("core", {"N": 8}),
    "partial_order": ("core", {"N": 6}),
    "order_chains": ("core", {}),
    "d_classes": ("core", {"N": 4, "n_max": 5, "search_N": 2, "witness_N": 4}),
    "shift_isomorphism": ("core", {"N": 6, "intervals": [[1, 2], [0, 1], [1, 1]]}),
    "corner": ("core", {"N": 12, "m_max": 4}),
    "ray_inductive": ("core", {"start_max": 8, "x_max": 64}),
    "idempotent_order": ("core", {"N": 8}),
    "bicyclic": ("core", {"N": 8}),
    # алгебра эндоморфизмов
    "closed_forms": ("endo", {"K": 4, "M": 4, "N": 6}),
    "compose_soundness": ("endo", {"K": 4, "M": 4, "N": 6}),
    "compose_associativity": ("endo", {"K": 4, "M": 4}),
    "identity_law": ("endo", {"K": 4, "M": 4}),
    "endomorphism": ("endo", {"K": 3, "M": 2, "N": 6}),
    "injectivity": ("endo", {"K": 4, "M": 4, "N": 10}),
    "generator_laws": ("endo", {"n": [2, 3, 4, 5], "N": 8, "law_N": 12}),
    "commutation": ("endo", {"k_max": 5, "N": 10}),
    "composition_errata": ("endo", {"K": 4, "M": 4}),
    "semidirect": ("endo", {"K": 6, "M": 6}),
    "uniqueness": ("endo", {"K": 8, "M": 8}),
    # оракулы
    "round_trip": ("oracle", {"K": 5, "M": 5, "N": 16}),
    "right_cancellation": ("oracle", {"k_max": 5, "N": 10}),
    "corner_equality": ("core", {"N": 12, "m": [1, 2, 3]}),
    "scan_exclusions": ("oracle", {"K": 5, "M": 5}),
}

GROUPS = ("core", "endo", "oracle")


@dataclass
class SuiteSpec:
    """Описание одного набора проверок."""
    name: str
    group: str                          # "core" | "endo" | "oracle"
    grid: dict = field(default_factory=dict)
    enabled: bool = True
    description: str = ""


@dataclass
class SuitesConfig:
    suites: dict[str, SuiteSpec] = field(default_factory=dict)

    @property
    def names(self) -> list[str]:
        return list(self.suites.keys())

    def get(self, name: str) -> Optional[SuiteSpec]:
        return self.suites.get(name)

    def group(self, *groups: str, include: Iterable[str] = ()) -> list[SuiteSpec]:
        """Включённые наборы групп groups и наборы include, в порядке реестра."""
        include = set(include)
        return [s for s in self.suites.values()
                if (s.group in groups or s.name in include) and s.enabled]

    def with_overrides(self, **overrides) -> "SuitesConfig":
        """Подменить K/M/N в сетках, где такие ключи есть. None — не трогать."""
        updates = {k: v for k, v in overrides.items() if v is not None}
        suites = {}
        for name, spec in self.suites.items():
            grid = dict(spec.grid)
            for key, value in updates.items():
                if key in grid:
                    grid[key] = value
            suites[name] = replace(spec, grid=grid)
        return SuitesConfig(suites)


def default_suites_config() -> SuitesConfig:
    return SuitesConfig({
        name: SuiteSpec(name=name, group=group, grid=copy.deepcopy(grid))
        for name, (group, grid) in DEFAULT_SUITES.items()
    })


def load_suites_config(path: str | Path | None = None) -> SuitesConfig:
    """
    Загрузить suites.yaml. Файл группирует наборы по core/endo/oracle:

      core:
        associativity:
          description: ...
          grid: {N: 6}
    """
    config = default_suites_config()
    if path is None:
        return config
    path = Path(path)
    if not path.exists():
        logger.debug(f"Suites file not found: {path}, using defaults")
        return config

    raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    if not raw:
        return config

    for group, entries in raw.items():
        if group not in GROUPS:
            logger.warning(f"Unknown suite group '{group}' in {path.name}")
            continue
        for name, entry in (entries or {}).items():
            spec = config.get(name)
            if spec is None:
                logger.warning(f"Unknown suite '{name}' in {path.name}, skipped")
                continue
            entry = entry or {}
            config.suites[name] = SuiteSpec(
                name=name,
                group=spec.group,
                grid={**spec.grid, **(entry.get("grid") or {})},
                enabled=entry.get("enabled", True),
                description=entry.get("description", ""),
            )

    logger.info(f"Loaded suites: {len(config.group(*GROUPS))} enabled from {path.name}")
    return config
