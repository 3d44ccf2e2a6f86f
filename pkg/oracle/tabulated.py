"""
Табулированные отображения окна Window(N) над F³ и их файловый формат.

Файл таблицы:
  {"N": 2, "entries": [{"x": {"i":0,"j":0,"p":0}, "fx": {"i":0,"j":0,"p":2}}, ...]}
"""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Union

from core.errors import (
    InvalidElement,
    InvalidParameter,
    MalformedEntry,
    MissingEntry,
)
from core.semigroup import F3, Elem, window
from core.text import elem_from_json, elem_to_json, format_elem
from endo.base import BaseEndo
from endo.normal_form import NormalForm, format_nf, nf_apply

logger = logging.getLogger("oracle.tabulated")

# Сколько отсутствующих ключей ещё перечисляется поимённо
MISSING_LISTED = 4096


@dataclass
class TabulatedEndo:
    """Полная таблица на Window(domain_bound); координаты образов не ограничены."""
    domain_bound: int
    table: dict[Elem, Elem] = field(repr=False)
    name: str = "table"

    def __getitem__(self, x: Elem) -> Elem:
        return self.table[x]

    def __len__(self):
        return len(self.table)

    def keys(self) -> list[Elem]:
        return sorted(self.table)


def tabulate_map(fn: Callable[[Elem], Elem], N: int, name: str = "map") -> TabulatedEndo:
    """Табулировать произвольное отображение на Window(N)."""
    if N < 0:
        raise InvalidParameter(f"window bound must be non-negative, got {N}")
    table = {x: fn(x) for x in window(N, F3)}
    for x, fx in table.items():
        _check_image(fx, format_elem(x))
    return TabulatedEndo(N, table, name)


def tabulate(f: Union[NormalForm, BaseEndo], N: int) -> TabulatedEndo:
    """table[x] = f(x) для всех x из Window(N)."""
    if isinstance(f, NormalForm):
        return tabulate_map(lambda x: nf_apply(f, x), N, format_nf(f))
    return tabulate_map(f.apply, N, f.name)


def _check_image(fx: Elem, position: str):
    if fx.p not in F3.starts:
        raise MalformedEntry(f"image {format_elem(fx)} has ray start outside F^3", position)


def dump_table(T: TabulatedEndo) -> dict:
    return {
        "N": T.domain_bound,
        "entries": [{"x": elem_to_json(x), "fx": elem_to_json(T.table[x])} for x in T.keys()],
    }


def save_table(T: TabulatedEndo, path: Union[str, Path]):
    Path(path).write_text(json.dumps(dump_table(T), ensure_ascii=False, indent=2), encoding="utf-8")


def load_table(path: Union[str, Path]) -> TabulatedEndo:
    """
    Загрузить таблицу и проверить её полноту на Window(N).

    MalformedEntry — синтаксическая ошибка JSON (строка/колонка), запись
    неверной формы, ключ вне окна, повтор ключа, луч образа вне F³.
    MissingEntry — перечисляет отсутствующие ключи.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except UnicodeDecodeError as e:
        raise MalformedEntry("file is not UTF-8", f"byte {e.start}") from e
    except json.JSONDecodeError as e:
        raise MalformedEntry(f"invalid JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from e

    if not isinstance(raw, dict) or "N" not in raw or "entries" not in raw:
        raise MalformedEntry("table must be an object with keys N and entries", "top level")
    N = raw["N"]
    if isinstance(N, bool) or not isinstance(N, int) or N < 0:
        raise MalformedEntry(f"N must be a non-negative integer, got {N!r}", "N")
    if not isinstance(raw["entries"], list):
        raise MalformedEntry("entries must be a list", "entries")

    # Окно строится только если его размер соизмерим с файлом
    size = (N + 1) ** 2 * len(F3.starts)
    if size - len(raw["entries"]) > MISSING_LISTED:
        raise MissingEntry([f"{size - len(raw['entries'])} of {size} entries of Window({N})"])

    expected = set(window(N, F3))
    table: dict[Elem, Elem] = {}
    for idx, entry in enumerate(raw["entries"]):
        position = f"entries[{idx}]"
        if not isinstance(entry, dict) or set(entry) != {"x", "fx"}:
            raise MalformedEntry("entry must have exactly keys x and fx", position)
        try:
            x = elem_from_json(entry["x"])
            fx = elem_from_json(entry["fx"])
        except InvalidElement as e:
            raise MalformedEntry(str(e), position) from e
        if x not in expected:
            raise MalformedEntry(f"key {format_elem(x)} is outside Window({N})", position)
        if x in table:
            raise MalformedEntry(f"duplicate key {format_elem(x)}", position)
        _check_image(fx, position)
        table[x] = fx

    missing = sorted(expected - set(table))
    if missing:
        raise MissingEntry([format_elem(x) for x in missing])

    logger.info(f"Table loaded: {path} (N={N}, {len(table)} entries)")
    return TabulatedEndo(N, table, path.stem)
