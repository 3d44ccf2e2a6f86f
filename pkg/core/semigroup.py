"""
Арифметика полугруппы B_ω^F над ω-замкнутыми семействами лучей.

Элемент — тройка (i, j, [p)), луч хранится своим началом p.
Все типы неизменяемые, все операции — чистые функции.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    InvalidElement,
    InvalidParameter,
    NotOmegaClosed,
    RayUnderflow,
)

logger = logging.getLogger("core.semigroup")


def _check_natural(value, what: str) -> int:
    # bool является подклассом int, но как координата не допускается
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidElement(f"{what} must be a non-negative integer, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class Ray:
    """Луч [start) = {x ∈ ω : x ≥ start} — непустое индуктивное подмножество ω."""
    start: int

    def __post_init__(self):
        _check_natural(self.start, "ray start")

    def __contains__(self, x: int) -> bool:
        return x >= self.start

    def shifted(self, n: int) -> "Ray":
        """-n + [a) = [max(a - n, 0)) для n ∈ ω."""
        return Ray(max(self.start - n, 0))

    def meet(self, other: "Ray") -> "Ray":
        return Ray(max(self.start, other.start))

    def __str__(self):
        return f"[{self.start})"


class Elem(NamedTuple):
    """Элемент (i, j, [p)) полугруппы. Валидирующий конструктор — elem()."""
    i: int
    j: int
    p: int

    @property
    def ray(self) -> Ray:
        return Ray(self.p)

    def __str__(self):
        return f"({self.i},{self.j},{self.p})"


def elem(i: int, j: int, p: int) -> Elem:
    """Создать элемент с проверкой координат."""
    return Elem(_check_natural(i, "i"), _check_natural(j, "j"), _check_natural(p, "ray start"))


@dataclass(frozen=True)
class Family:
    """
    Конечное ω-замкнутое семейство лучей, отсортированное по возрастанию начала.
    Создаётся через make_family() — прямой вызов не проверяет замкнутость.
    """
    rays: tuple[Ray, ...]

    @property
    def n(self) -> int:
        return len(self.rays)

    @property
    def starts(self) -> tuple[int, ...]:
        return tuple(r.start for r in self.rays)

    def __contains__(self, item) -> bool:
        start = item.start if isinstance(item, Ray) else item
        return start in self.starts

    def __iter__(self) -> Iterator[Ray]:
        return iter(self.rays)

    def __len__(self):
        return len(self.rays)

    def check(self, a: Elem) -> Elem:
        """Убедиться, что луч элемента принадлежит семейству."""
        if a.p not in self.starts:
            raise InvalidElement(f"ray [{a.p}) of {a} is not a member of family {self}")
        return a

    @classmethod
    def canonical(cls, n: int) -> "Family":
        """F^n = {[0), ..., [n-1)}."""
        if n < 1:
            raise InvalidParameter(f"family size must be positive, got {n}")
        return make_family(range(n))

    @classmethod
    def interval(cls, s: int, t: int) -> "Family":
        """F^{[s,t]} = {[s), ..., [t)}."""
        if s > t:
            raise InvalidParameter(f"empty ray interval [{s}, {t}]")
        return make_family(range(s, t + 1))

    def __str__(self):
        return ",".join(str(s) for s in self.starts)


def make_family(starts: Iterable[int]) -> Family:
    """
    Проверить и построить семейство лучей.

    ω-замкнутость: [max(a, b - n)) ∈ F для всех a, b ∈ F и n ∈ ω.
    При n ≥ b пересечение стабилизируется, поэтому хватает n ∈ [0, max start].
    """
    starts = list(starts)
    if not starts:
        raise InvalidParameter("family must contain at least one ray")
    for s in starts:
        _check_natural(s, "ray start")
    if len(set(starts)) != len(starts):
        raise InvalidParameter(f"duplicate ray starts in {starts}")

    rays = tuple(Ray(s) for s in sorted(starts))
    members = set(starts)
    top = rays[-1].start
    for r1, r2 in product(rays, rays):
        for n in range(top + 1):
            if max(r1.start, r2.start - n) not in members:
                raise NotOmegaClosed((r1, r2, n))
    return Family(rays)


F3 = make_family([0, 1, 2])
IDENTITY = Elem(0, 0, 0)


# ── Умножение ────────────────────────────────────────────────────

def _mul_left(a: Elem, b: Elem) -> Elem:
    # ветвь a.j ≤ b.i
    return Elem(a.i - a.j + b.i, b.j, max(a.p + a.j - b.i, b.p))


def _mul_right(a: Elem, b: Elem) -> Elem:
    # ветвь a.j ≥ b.i
    return Elem(a.i, a.j - b.i + b.j, max(a.p, b.p + b.i - a.j))


def mul(a: Elem, b: Elem, fam: Optional[Family] = None) -> Elem:
    """
    Произведение элементов; пересечение сдвинутых лучей вычисляется как max начал.

    Если передано семейство, лучи сомножителей проверяются на принадлежность;
    луч результата принадлежит семейству в силу ω-замкнутости.
    """
    if fam is not None:
        fam.check(a)
        fam.check(b)
    if a.j < b.i:
        return _mul_left(a, b)
    if a.j > b.i:
        return _mul_right(a, b)
    result = _mul_left(a, b)
    assert result == _mul_right(a, b), f"branches of the product disagree at {a}·{b}"
    return result


def inv(a: Elem) -> Elem:
    """Инверсный элемент (j, i, [p))."""
    return Elem(a.j, a.i, a.p)


def is_idempotent(a: Elem) -> bool:
    return a.i == a.j


def bicyclic_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Умножение в бициклическом моноиде B_ω = ω×ω."""
    (i1, j1), (i2, j2) = a, b
    if j1 <= i2:
        return i1 - j1 + i2, j2
    return i1, j1 - i2 + j2


# ── Окна ─────────────────────────────────────────────────────────

def window(bound: int, fam: Family = F3) -> list[Elem]:
    """Окно {(i, j, R) : i, j ≤ N, R ∈ F} в лексикографическом порядке."""
    if bound < 0:
        raise InvalidParameter(f"window bound must be non-negative, got {bound}")
    return [Elem(i, j, p) for i in range(bound + 1) for j in range(bound + 1) for p in fam.starts]


def idempotents(bound: int, fam: Family = F3) -> list[Elem]:
    return [Elem(c, c, p) for c in range(bound + 1) for p in fam.starts]


# ── Порядок и отношения ──────────────────────────────────────────

def nat_leq(a: Elem, b: Elem, fam: Family = F3) -> bool:
    """
    Естественный частичный порядок a ≼ b в замкнутой форме:
    a.i − a.j = b.i − b.j, a.j ≥ b.j, a.p + a.j ≥ b.p + b.j и [a.p) ∈ F.
    Проверяется против определения в nat_leq_search().
    """
    return (
        a.i - a.j == b.i - b.j
        and a.j >= b.j
        and a.p + a.j >= b.p + b.j
        and a.p in fam
    )


def nat_leq_search(a: Elem, b: Elem, fam: Family = F3) -> bool:
    """a ≼ b по определению: a = b·e для идемпотента e = (c, c, [q)), c ≤ max(a.j, b.j)."""
    for c in range(max(a.j, b.j) + 1):
        for q in fam.starts:
            if mul(b, Elem(c, c, q)) == a:
                return True
    return False


def idem_leq(e: Elem, f: Elem) -> bool:
    """Порядок на полурешётке идемпотентов: e ≼ f ⇔ ef = fe = e."""
    if not (is_idempotent(e) and is_idempotent(f)):
        raise InvalidElement(f"idempotents expected, got {e} and {f}")
    return mul(e, f) == e and mul(f, e) == e


def d_related(a: Elem, b: Elem) -> bool:
    """D-эквивалентность: в B_ω^{F^n} равносильна равенству лучей."""
    return a.p == b.p


def d_witness(a: Elem, b: Elem) -> Optional[Elem]:
    """Свидетель z: z·z⁻¹ = a·a⁻¹ и z⁻¹·z = b·b⁻¹, либо None."""
    if a.p != b.p:
        return None
    z = Elem(a.i, b.i, a.p)
    assert mul(z, inv(z)) == mul(a, inv(a)) and mul(inv(z), z) == mul(b, inv(b))
    return z


def d_classes(elems: Iterable[Elem]) -> list[list[Elem]]:
    """Разбить элементы на D-классы (по лучу), классы и элементы отсортированы."""
    classes: dict[int, list[Elem]] = {}
    for a in elems:
        classes.setdefault(a.p, []).append(a)
    return [sorted(classes[p]) for p in sorted(classes)]


# ── Сдвиги и углы ────────────────────────────────────────────────

def shift_map(a: Elem, s: int) -> Elem:
    """(i, j, [p + s)) ↦ (i, j, [p)) — изоморфизм B^{F^{[s,t]}} на B^{F^{t-s+1}}."""
    if a.p < s:
        raise RayUnderflow(f"cannot shift ray [{a.p}) of {a} down by {s}")
    return Elem(a.i, a.j, a.p - s)


def sandwich(a: Elem, m: int) -> Elem:
    """(m, m, [0))·a·(m, m, [0))."""
    e = Elem(m, m, 0)
    return mul(mul(e, a), e)


def corner_contains(a: Elem, m: int) -> bool:
    """Принадлежность углу (m,m,[0))·B·(m,m,[0)) = образу λ^m."""
    return a.i >= m and a.j >= m


def corner_unshift(a: Elem, m: int) -> Elem:
    """Обратное к корестрикции λ^m на угол: (i, j, [p)) ↦ (i − m, j − m, [p))."""
    if not corner_contains(a, m):
        raise InvalidParameter(f"{a} is outside the corner of ({m},{m},0)")
    return Elem(a.i - m, a.j - m, a.p)


# ── Слои F³ ──────────────────────────────────────────────────────

def layer(a: Elem) -> int:
    """Слой элемента: начало его луча."""
    return a.ray.start


def layers(elems: Iterable[Elem]) -> frozenset[int]:
    """Множество слоёв, которые встречает набор элементов (B_{0,1} ↔ {0, 1} и т. д.)."""
    return frozenset(layer(a) for a in elems)
