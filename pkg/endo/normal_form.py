"""
Нормальные формы инъективных эндоморфизмов B_ω^{F³}: α₍ₖ₎ ∘ λ^m ∘ ϖ₃^w.

Композиция диаграммная: nf_compose(f, g) сначала применяет f, затем g.

Показатели правил R3/R4 взяты из поточечной проверки. Опубликованные формулы
композиции с ϖ₃ в первом множителе дают показатель на единицу больше
(при k₁ = k₂ = 1, m₁ = m₂ = 0 получается λ³, тогда как ϖ₃² = λ²).
Расхождение закреплено регрессионной проверкой errata в oracle.suites.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterable

from core.errors import InvalidParameter, ParseError, UnsupportedFamily
from core.semigroup import Elem

from .base import BaseEndo
from .generators import Alpha, Composite, Flip, Shift

logger = logging.getLogger("endo.normal_form")

_NF_RE = re.compile(r"^a(\d+)\.l(\d+)\.w(\d+)$")
_TOKEN_RE = re.compile(r"^(?:(id)|a(\d+)|l(\d*)|(w))$")


@dataclass(frozen=True, order=True)
class NormalForm:
    """(k, m, w) ↔ α₍ₖ₎ ∘ λ^m ∘ ϖ₃^w. Конструировать через nf_make()."""
    k: int
    m: int
    w: int

    def __str__(self):
        return format_nf(self)


def nf_make(k: int, m: int = 0, w: int = 0) -> NormalForm:
    for value, what in ((k, "k"), (m, "m"), (w, "w")):
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidParameter(f"{what} must be an integer, got {value!r}")
    if k < 1:
        raise InvalidParameter(f"k must be a positive integer, got {k}")
    if m < 0:
        raise InvalidParameter(f"m must be non-negative, got {m}")
    if w not in (0, 1):
        raise InvalidParameter(f"w must be 0 or 1, got {w}")
    return NormalForm(k, m, w)


IDENTITY_NF = NormalForm(1, 0, 0)
LAMBDA = NormalForm(1, 1, 0)
VARPI = NormalForm(1, 0, 1)


def alpha(k: int) -> NormalForm:
    return nf_make(k, 0, 0)


def nf_apply(f: NormalForm, x: Elem) -> Elem:
    """Вычисление по замкнутым формулам (сверяются с nf_apply_chained)."""
    k, m = f.k, f.m
    if f.w == 0:
        if x.p in (0, 1):
            return Elem(k * x.i + m, k * x.j + m, x.p)
        if x.p == 2:
            return Elem(k * (x.i + 1) - 1 + m, k * (x.j + 1) - 1 + m, 2)
    else:
        if x.p == 0:
            return Elem(k * x.i + m, k * x.j + m, 2)
        if x.p == 1:
            return Elem(k * x.i + m + 1, k * x.j + m + 1, 1)
        if x.p == 2:
            return Elem(k * (x.i + 1) + 1 + m, k * (x.j + 1) + 1 + m, 0)
    raise UnsupportedFamily(f"normal forms act on F^3 only, got ray [{x.p})")


def generators_of(f: NormalForm) -> Composite:
    """Цепочка α₍ₖ₎, λ^m, ϖ₃^w."""
    parts: list[BaseEndo] = [Alpha(f.k)]
    if f.m:
        parts.append(Shift(f.m))
    if f.w:
        parts.append(Flip(3))
    return Composite(parts)


def nf_apply_chained(f: NormalForm, x: Elem) -> Elem:
    """Поэлементное применение порождающих — оракул для nf_apply."""
    return generators_of(f).apply(x)


class NormalFormEndo(BaseEndo):
    def __init__(self, f: NormalForm):
        self.form = f
        self.name = format_nf(f)

    def apply(self, x: Elem) -> Elem:
        return nf_apply(self.form, x)


def nf_compose(f: NormalForm, g: NormalForm) -> NormalForm:
    """
    Нормальная форма h с (x)h = ((x)f)g.

      R1 w=(0,0): (k₁k₂, k₂m₁+m₂, 0)
      R2 w=(0,1): (k₁k₂, k₂m₁+m₂, 1)
      R3 w=(1,0): (k₁k₂, k₂m₁+k₂+m₂−1, 1)
      R4 w=(1,1): (k₁k₂, k₂m₁+k₂+m₂+1, 0)
    """
    k = f.k * g.k
    m = g.k * f.m + g.m
    if f.w == 0:
        return NormalForm(k, m, g.w)
    if g.w == 0:
        return NormalForm(k, m + g.k - 1, 1)
    return NormalForm(k, m + g.k + 1, 0)


def printed_exponent(f: NormalForm, g: NormalForm) -> int:
    """
    Показатель λ в напечатанных формулах композиции с ϖ₃ в первом множителе:
    k₂m₁+k₂+m₂ (без ϖ₃ во втором) и k₂m₁+k₂+m₂+2 (с ϖ₃).
    Используется только регрессией errata.
    """
    if f.w != 1:
        raise InvalidParameter(f"printed exponents cover w_f = 1 only, got {format_nf(f)}")
    base = g.k * f.m + g.k + g.m
    return base if g.w == 0 else base + 2


def nf_from_word(tokens: Iterable[str]) -> NormalForm:
    """
    Привести слово над порождающими к нормальной форме.

    Токены: id, a<k>, l, l<m>, w или литерал a<k>.l<m>.w<w>;
    применяются слева направо.
    """
    result = IDENTITY_NF
    for token in tokens:
        result = nf_compose(result, _parse_token(token))
    return result


def _parse_token(token: str) -> NormalForm:
    token = token.strip()
    if _NF_RE.match(token):
        return parse_nf(token)
    match = _TOKEN_RE.match(token)
    if not match:
        raise ParseError(token, "a generator token id, a<k>, l, l<m>, w or a<k>.l<m>.w<w>")
    ident, k, m, w = match.groups()
    if ident:
        return IDENTITY_NF
    if k is not None:
        return nf_make(int(k), 0, 0)
    if w:
        return VARPI
    return nf_make(1, int(m) if m else 1, 0)


# ── Форматы ──────────────────────────────────────────────────────

def format_nf(f: NormalForm) -> str:
    return f"a{f.k}.l{f.m}.w{f.w}"


def parse_nf(text: str) -> NormalForm:
    match = _NF_RE.match(text.strip())
    if not match:
        raise ParseError(text, "a normal form literal like a2.l3.w1")
    return nf_make(*(int(g) for g in match.groups()))


def nf_to_json(f: NormalForm) -> dict:
    return {"k": f.k, "m": f.m, "w": f.w}
