"""
Иерархия исключений библиотеки.

Библиотечный код только бросает исключения; перевод в диагностику и коды
выхода делает cli.py.
"""


class BicyclicError(Exception):
    """Корневое исключение библиотеки."""


class InvalidElement(BicyclicError, ValueError):
    """Элемент с нецелыми или отрицательными координатами, либо луч вне семейства."""


class InvalidParameter(BicyclicError, ValueError):
    """Недопустимый параметр (k = 0, w ∉ {0,1}, отрицательная граница окна...)."""


class NotOmegaClosed(BicyclicError, ValueError):
    """Семейство лучей не ω-замкнуто. witness = (R1, R2, n)."""

    def __init__(self, witness):
        self.witness = witness
        r1, r2, n = witness
        super().__init__(
            f"family is not omega-closed: [{r1.start}) ∩ (-{n} + [{r2.start})) "
            f"= [{max(r1.start, r2.start - n)}) is not a member"
        )


class RayUnderflow(BicyclicError, ValueError):
    """Сдвиг луча ниже нуля."""


class UnsupportedFamily(BicyclicError, ValueError):
    """Отображение определено только для F³ (начала лучей 0, 1, 2)."""


class NotInSubmonoid(BicyclicError, ValueError):
    """Нормальная форма с w = 1 вне подмоноида ⟨α, λ⟩."""


class DomainTooSmall(BicyclicError, ValueError):
    """Таблица не покрывает произведения элементов парного окна."""


class MiddleLayerIdentityImage(BicyclicError):
    """Образ единицы лежит в среднем слое [1)."""


class NotClassifiable(BicyclicError):
    """Таблица не является ограничением ни одной нормальной формы."""


class NonPositiveK(BicyclicError):
    """Восстановленный множитель k < 1."""


class MissingEntry(BicyclicError, ValueError):
    """В файле таблицы отсутствуют ключи окна."""

    def __init__(self, missing: list):
        self.missing = missing
        shown = ", ".join(str(x) for x in missing[:8])
        more = f" (+{len(missing) - 8} more)" if len(missing) > 8 else ""
        super().__init__(f"table is missing {len(missing)} entries: {shown}{more}")


class MalformedEntry(BicyclicError, ValueError):
    """Некорректная запись файла таблицы. position — номер записи или строка/колонка JSON."""

    def __init__(self, message: str, position: str = ""):
        self.position = position
        super().__init__(f"{message} at {position}" if position else message)


class ParseError(BicyclicError, ValueError):
    """Не удалось разобрать литерал. token — исходный текст."""

    def __init__(self, token: str, expected: str):
        self.token = token
        super().__init__(f"cannot parse {token!r}: expected {expected}")
