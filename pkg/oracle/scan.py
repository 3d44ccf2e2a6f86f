"""Перебор классифицированных форм: образ встречает все три слоя, единица не уходит в [1)."""
import logging
from typing import Iterable

from core.errors import InvalidParameter
from core.semigroup import F3, IDENTITY, layer, layers, window
from endo.normal_form import NormalForm, nf_apply

from .report import COUNTEREXAMPLE_LIMIT, Report

logger = logging.getLogger("oracle.scan")

SCAN_WINDOW = 8

COMPLETENESS_NOTE = (
    "scans the classified normal forms only; the statements hold for every "
    "injective endomorphism only modulo the decomposition theorem"
)


def scan_grid(K: int, M: int, ws: Iterable[int] = (0, 1)) -> list[NormalForm]:
    """Формы (k, m, w) с 1 ≤ k ≤ K, 0 ≤ m ≤ M, w ∈ ws в порядке k, m, w."""
    ws = tuple(ws)
    return [NormalForm(k, m, w) for k in range(1, K + 1) for m in range(M + 1) for w in ws]


def scan_exclusions(K: int, M: int, limit: int = COUNTEREXAMPLE_LIMIT) -> Report:
    """
    Для каждой формы с k ≤ K, m ≤ M, w ∈ {0,1} на Window(8):
      (a) образ встречает слой 2, (b) слой 0, (c) слой 1,
      (d) образ (0,0,[0)) не в слое 1.
    """
    if K < 1 or M < 0:
        raise InvalidParameter(f"scan needs K ≥ 1 and M ≥ 0, got K={K}, M={M}")
    forms = scan_grid(K, M)
    report = Report("scan_exclusions",
                    {"K": K, "M": M, "window": SCAN_WINDOW, "forms": len(forms)},
                    note=COMPLETENESS_NOTE, limit=limit)
    xs = window(SCAN_WINDOW, F3)
    for f in forms:
        met = layers(nf_apply(f, x) for x in xs)
        for p in (2, 0, 1):
            report.record(p in met, (f, f"image meets layer {p}"), True, False)
        e0 = nf_apply(f, IDENTITY)
        report.record(layer(e0) != 1, (f, "identity image outside layer 1"), "layer 0 or 2", e0)
    logger.info(f"Scan K={K} M={M}: {report.status} ({len(forms)} forms, {report.checks} checks)")
    return report
