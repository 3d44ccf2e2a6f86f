"""
Проверки табулированных отображений и восстановление нормальной формы.

Окно не может доказать глобальное равенство: при успехе таблица
«согласована с» нормальной формой на Window(N), а не «равна» ей.
"""
import logging
from collections import defaultdict
from typing import Optional

from core.errors import (
    DomainTooSmall,
    InvalidParameter,
    MiddleLayerIdentityImage,
    NonPositiveK,
    NotClassifiable,
)
from core.semigroup import F3, IDENTITY, Elem, layer, mul, window
from core.text import format_elem
from endo.normal_form import NormalForm, format_nf, nf_apply

from .report import COUNTEREXAMPLE_LIMIT, Report
from .tabulated import TabulatedEndo

logger = logging.getLogger("oracle.verify")


def verify_homomorphism(T: TabulatedEndo, N: int, limit: int = COUNTEREXAMPLE_LIMIT) -> Report:
    """T[x·y] = T[x]·T[y] для всех x, y из Window(N); требуется 2N ≤ T.domain_bound."""
    if N < 0:
        raise InvalidParameter(f"pair window must be non-negative, got {N}")
    if 2 * N > T.domain_bound:
        raise DomainTooSmall(
            f"pair window {N} needs a table on Window({2 * N}), got Window({T.domain_bound})"
        )
    report = Report("homomorphism", {"table": T.name, "N": N, "domain_bound": T.domain_bound},
                    limit=limit)
    table = T.table
    xs = window(N, F3)
    for x in xs:
        tx = table[x]
        for y in xs:
            expected = mul(tx, table[y])
            actual = table[mul(x, y)]
            report.record(actual == expected, (x, y), expected, actual)
    if report.passed:
        report.note = f"{T.name} is consistent with a homomorphism on Window({N})"
    else:
        logger.warning(f"{T.name}: {report.total_counterexamples} homomorphism violations")
    return report


def verify_injective(T: TabulatedEndo, limit: int = COUNTEREXAMPLE_LIMIT) -> Report:
    """Попарная различность значений таблицы."""
    report = Report("injectivity", {"table": T.name, "domain_bound": T.domain_bound}, limit=limit)
    preimages: dict[Elem, list[Elem]] = defaultdict(list)
    for x in T.keys():
        preimages[T.table[x]].append(x)
    for image in sorted(preimages):
        xs = preimages[image]
        report.count(1)
        for other in xs[1:]:
            report.fail((xs[0], other), "distinct images", image)
    if report.passed:
        report.note = f"{T.name} is injective on Window({T.domain_bound})"
    return report


def layer_behaviour(T: TabulatedEndo) -> Optional[str]:
    """
    "preserving": (0,0,[p)) ↦ слой p для всех p;
    "reversing":  (0,0,[p)) ↦ слой 2 − p;
    иначе None.
    """
    layers = [layer(T[Elem(0, 0, p)]) for p in F3.starts]
    if layers == [0, 1, 2]:
        return "preserving"
    if layers == [2, 1, 0]:
        return "reversing"
    return None


def decompose(T: TabulatedEndo) -> NormalForm:
    """
    Восстановить (k, m, w) по таблице только вычислениями:
      1) e₀ = T[(0,0,[0))] = (m, m, [0)) ⇒ w = 0, (m, m, [2)) ⇒ w = 1;
      2) k = i − j для T[(1,0,[0))] = (k+m, m, ·);
      3) сверка T[x] = nf_apply((k,m,w), x) на всём окне.
    """
    if T.domain_bound < 2:
        raise InvalidParameter(f"decomposition needs Window(2) or larger, got Window({T.domain_bound})")

    e0 = T[IDENTITY]
    if e0.i != e0.j:
        raise NotClassifiable(f"image of the identity {format_elem(e0)} is not an idempotent")
    if e0.p == 1:
        raise MiddleLayerIdentityImage(
            f"image of the identity {format_elem(e0)} lies in the middle layer [1)"
        )
    w = 0 if e0.p == 0 else 1
    m = e0.i

    g = T[Elem(1, 0, 0)]
    k = g.i - g.j
    if k < 1:
        raise NonPositiveK(f"T[(1,0,0)] = {format_elem(g)} gives k = {k}")

    f = NormalForm(k, m, w)
    for x in T.keys():
        expected = nf_apply(f, x)
        if T.table[x] != expected:
            raise NotClassifiable(
                f"table differs from {format_nf(f)} at {format_elem(x)}: "
                f"expected {format_elem(expected)}, got {format_elem(T.table[x])}"
            )
    logger.info(f"{T.name} is consistent with {format_nf(f)} on Window({T.domain_bound})")
    return f


def decompose_report(T: TabulatedEndo) -> tuple[NormalForm, Report]:
    """decompose() с отчётом в формулировке «согласована с»."""
    f = decompose(T)
    report = Report("decompose", {"table": T.name, "domain_bound": T.domain_bound})
    report.count(len(T))
    report.note = (
        f"consistent with {format_nf(f)} on Window({T.domain_bound}); "
        f"layers {layer_behaviour(T)}"
    )
    return f, report
