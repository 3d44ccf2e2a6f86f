"""Базовый интерфейс эндоморфизма для всей библиотеки"""
from abc import ABC, abstractmethod

from core.semigroup import Elem


class BaseEndo(ABC):
    """
    Отображение полугруппы в себя.

    Композиция диаграммная, как в (x)(f∘g) = ((x)f)g:
    f.then(g) сначала применяет f, потом g.
    """
    name: str = "endo"

    @abstractmethod
    def apply(self, x: Elem) -> Elem:
        """Образ элемента"""
        pass

    def __call__(self, x: Elem) -> Elem:
        return self.apply(x)

    def then(self, other: "BaseEndo") -> "BaseEndo":
        from .generators import Composite
        return Composite([self, other])

    def power(self, exponent: int) -> "BaseEndo":
        from .generators import Composite, Identity
        if exponent == 0:
            return Identity()
        return Composite([self] * exponent)

    def __repr__(self):
        return self.name
