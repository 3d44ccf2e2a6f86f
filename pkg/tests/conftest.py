import json
import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.semigroup import F3, window  # noqa: E402
from oracle.tabulated import dump_table, tabulate  # noqa: E402


@pytest.fixture
def f3():
    return F3


@pytest.fixture(scope="session")
def window6():
    return window(6, F3)


@pytest.fixture
def table_file(tmp_path):
    """Записать таблицу (TabulatedEndo или готовый dict) во временный JSON-файл."""

    def write(table, name: str = "table.json") -> Path:
        data = table if isinstance(table, dict) else dump_table(table)
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write


@pytest.fixture
def nf_table_file(table_file):
    def write(form, N: int = 4, name: str = "table.json") -> Path:
        return table_file(tabulate(form, N), name)

    return write


@pytest.fixture
def clean_env(monkeypatch):
    for key in ("BICYCLIC_LOG_LEVEL", "BICYCLIC_REPORTS_DIR", "BICYCLIC_SAVE_REPORTS"):
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)
    return monkeypatch
