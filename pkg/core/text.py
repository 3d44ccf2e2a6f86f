"""
Текстовые и JSON-представления элементов и семейств.

  элемент:   "(i,j,p)"  — пробелы незначимы, p — начало луча
  семейство: "0,1,2"
  JSON:      {"i": …, "j": …, "p": …}
"""
import re

from .errors import InvalidElement, ParseError
from .semigroup import Elem, Family, elem, make_family

_ELEM_RE = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_FAMILY_RE = re.compile(r"^\d+(\s*,\s*\d+)*$")


def format_elem(a: Elem) -> str:
    return f"({a.i},{a.j},{a.p})"


def parse_elem(text: str) -> Elem:
    m = _ELEM_RE.match(text.strip())
    if not m:
        raise ParseError(text, "an element literal like (i,j,p)")
    return elem(*(int(g) for g in m.groups()))


def elem_to_json(a: Elem) -> dict:
    return {"i": a.i, "j": a.j, "p": a.p}


def elem_from_json(data) -> Elem:
    if not isinstance(data, dict) or set(data) != {"i", "j", "p"}:
        raise InvalidElement(f"element object must have exactly keys i, j, p: {data!r}")
    return elem(data["i"], data["j"], data["p"])


def parse_family(text: str) -> Family:
    if not _FAMILY_RE.match(text.strip()):
        raise ParseError(text, "comma-separated ray starts like 0,1,2")
    return make_family(int(s) for s in text.split(","))
