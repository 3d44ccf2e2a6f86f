"""
Единый загрузчик конфигурации.
Приоритет: переменные окружения → .env каталога → .env корня → config.json → дефолты
"""
import copy
import json
import logging
import os
from pathlib import Path
from dotenv import load_dotenv

logger = logging.getLogger("core.config")

# Дефолтная конфигурация
DEFAULTS = {
    "family": [0, 1, 2],
    "log_level": "WARNING",
    "reports": {
        "save": False,
        "dir": "reports",
    },
    "counterexample_limit": 32,
    "grids": {
        "K": 5,
        "M": 5,
        "N": 16,
    },
}

PROJECT_ROOT = Path(__file__).resolve().parent.parent

_TRUE = {"1", "true", "yes", "on"}


def _deep_merge(base: dict, override: dict) -> dict:
    """Рекурсивное слияние: override перезаписывает base."""
    result = copy.deepcopy(base)
    for k, v in override.items():
        if k in result and isinstance(result[k], dict) and isinstance(v, dict):
            result[k] = _deep_merge(result[k], v)
        else:
            result[k] = v
    return result


def load_config(config_dir: str | Path | None = None) -> dict:
    """
    Загружает полную конфигурацию.

    1. Базовые дефолты
    2. config.json из каталога (по умолчанию — корень проекта)
    3. .env из каталога → .env из корня проекта
    4. BICYCLIC_* из окружения
    """
    config_dir = Path(config_dir).resolve() if config_dir else PROJECT_ROOT

    # Загружаем .env (каталог → корень)
    dir_env = config_dir / ".env"
    root_env = PROJECT_ROOT / ".env"
    if dir_env.exists():
        load_dotenv(dir_env, override=True)
    if root_env.exists() and root_env != dir_env:
        load_dotenv(root_env, override=False)

    # Загружаем config.json
    config_file = config_dir / "config.json"
    file_config = {}
    if config_file.exists():
        try:
            file_config = json.loads(config_file.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            logger.warning(f"Config parse error in {config_file}: {e}, using defaults")

    # Слияние: defaults + config.json
    cfg = _deep_merge(DEFAULTS, file_config)

    # Переопределения из окружения
    if level := os.getenv("BICYCLIC_LOG_LEVEL"):
        cfg["log_level"] = level.upper()
    if reports_dir := os.getenv("BICYCLIC_REPORTS_DIR"):
        cfg["reports"]["dir"] = reports_dir
    if save := os.getenv("BICYCLIC_SAVE_REPORTS"):
        cfg["reports"]["save"] = save.strip().lower() in _TRUE

    # Относительный каталог отчётов считается от каталога конфигурации
    reports_dir = Path(cfg["reports"]["dir"])
    if not reports_dir.is_absolute():
        reports_dir = config_dir / reports_dir
    cfg["reports"]["dir"] = str(reports_dir)

    # suites.yaml: сначала в каталоге конфигурации, затем в корне
    suites_file = config_dir / "suites.yaml"
    if not suites_file.exists():
        suites_file = PROJECT_ROOT / "suites.yaml"
    cfg["suites_file"] = str(suites_file) if suites_file.exists() else ""

    # Мета
    cfg["config_dir"] = str(config_dir)
    cfg["project_root"] = str(PROJECT_ROOT)

    return cfg
