"""
Порождающие эндоморфизмы:
  λ      — (i, j, [p)) ↦ (i+1, j+1, [p))              на любом F^n
  ϖₙ     — (i, j, [p)) ↦ (i+p, j+p, [n−1−p))          на F^n
  α₍ₖ₎   — (ki, kj, [p)) при p ∈ {0,1},
           (k(i+1)−1, k(j+1)−1, [2)) при p = 2         только на F³
"""
from core.errors import InvalidParameter, UnsupportedFamily
from core.semigroup import Elem

from .base import BaseEndo


class Identity(BaseEndo):
    name = "id"

    def apply(self, x: Elem) -> Elem:
        return x


class Shift(BaseEndo):
    """λ^power; power = 1 — сам λ."""

    def __init__(self, power: int = 1):
        if power < 0:
            raise InvalidParameter(f"lambda exponent must be non-negative, got {power}")
        self.steps = power
        self.name = "l" if power == 1 else f"l{power}"

    def apply(self, x: Elem) -> Elem:
        return Elem(x.i + self.steps, x.j + self.steps, x.p)


class Flip(BaseEndo):
    """ϖₙ — разворот слоёв семейства F^n."""

    def __init__(self, n: int = 3):
        if n < 1:
            raise InvalidParameter(f"family size must be positive, got {n}")
        self.n = n
        self.name = "w" if n == 3 else f"varpi{n}"

    def apply(self, x: Elem) -> Elem:
        if x.p >= self.n:
            raise UnsupportedFamily(f"{x} is not an element over F^{self.n}")
        return Elem(x.i + x.p, x.j + x.p, self.n - 1 - x.p)


class Alpha(BaseEndo):
    """α₍ₖ₎ — инъективный моноидный эндоморфизм B_ω^{F³}."""

    def __init__(self, k: int):
        if k < 1:
            raise InvalidParameter(f"alpha multiplier must be positive, got {k}")
        self.k = k
        self.name = f"a{k}"

    def apply(self, x: Elem) -> Elem:
        k = self.k
        if x.p in (0, 1):
            return Elem(k * x.i, k * x.j, x.p)
        if x.p == 2:
            return Elem(k * (x.i + 1) - 1, k * (x.j + 1) - 1, 2)
        raise UnsupportedFamily(f"alpha is defined on F^3 only, got ray [{x.p})")


class Composite(BaseEndo):
    """Цепочка отображений, применяемых слева направо."""

    def __init__(self, parts: list[BaseEndo]):
        flat: list[BaseEndo] = []
        for part in parts:
            flat.extend(part.parts if isinstance(part, Composite) else [part])
        self.parts = flat
        self.name = "∘".join(p.name for p in flat) or "id"

    def apply(self, x: Elem) -> Elem:
        for part in self.parts:
            x = part.apply(x)
        return x


class MapEndo(BaseEndo):
    """Произвольная функция как отображение (транспонирование, константы в тестах)."""

    def __init__(self, fn, name: str = "map"):
        self.fn = fn
        self.name = name

    def apply(self, x: Elem) -> Elem:
        return self.fn(x)
