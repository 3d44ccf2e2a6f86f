"""Отчёт о проверке закона на сетке параметров."""
from dataclasses import dataclass, field
from typing import Any

from core.semigroup import Elem
from core.text import format_elem
from endo.normal_form import NormalForm, format_nf
from endo.semidirect import SDPair, format_sd

COUNTEREXAMPLE_LIMIT = 32


def _plain(value: Any) -> Any:
    """Значение контрпримера в JSON-совместимом виде."""
    if isinstance(value, Elem):
        return format_elem(value)
    if isinstance(value, NormalForm):
        return format_nf(value)
    if isinstance(value, SDPair):
        return format_sd(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


@dataclass
class Report:
    """
    status = "pass" ⇔ контрпримеров нет.
    Список контрпримеров обрезается до limit, полное число — total_counterexamples.
    """
    suite: str
    grid: dict
    checks: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    total_counterexamples: int = 0
    note: str = ""
    limit: int = COUNTEREXAMPLE_LIMIT

    @property
    def status(self) -> str:
        return "pass" if self.total_counterexamples == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.total_counterexamples == 0

    def record(self, ok: bool, inputs, expected=None, actual=None):
        """Учесть одну проверку."""
        self.checks += 1
        if not ok:
            self.fail(inputs, expected, actual, counted=True)

    def count(self, n: int):
        """Учесть n успешно пройденных проверок пакетом."""
        self.checks += n

    def fail(self, inputs, expected=None, actual=None, counted: bool = False):
        if not counted:
            self.checks += 1
        self.total_counterexamples += 1
        if len(self.counterexamples) < max(self.limit, 1):
            self.counterexamples.append({
                "inputs": _plain(inputs),
                "expected": _plain(expected),
                "actual": _plain(actual),
            })

    def to_json(self) -> dict:
        data = {
            "suite": self.suite,
            "grid": _plain(self.grid),
            "status": self.status,
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "total_counterexamples": self.total_counterexamples,
        }
        if self.note:
            data["note"] = self.note
        return data
