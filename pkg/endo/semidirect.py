"""
Полупрямое произведение (ℕ,·) ⋉_h (ω,+) с действием (m)h_k = k·m.

nf_to_sd — изоморфизм подмоноида ⟨α₍•₎, λ*⟩ (формы с w = 0) на SDPair.
"""
import re
from dataclasses import dataclass

from core.errors import InvalidParameter, NotInSubmonoid, ParseError

from .normal_form import NormalForm, format_nf, nf_make

_SD_RE = re.compile(r"^\(?\s*(\d+)\s*,\s*(\d+)\s*\)?$")


@dataclass(frozen=True, order=True)
class SDPair:
    k: int
    m: int

    def __post_init__(self):
        if self.k < 1 or self.m < 0:
            raise InvalidParameter(f"semidirect pair needs k ≥ 1 and m ≥ 0, got ({self.k},{self.m})")

    def __str__(self):
        return format_sd(self)


def sd_identity() -> SDPair:
    return SDPair(1, 0)


def sd_mul(a: SDPair, b: SDPair) -> SDPair:
    """(k₁, m₁)·(k₂, m₂) = (k₁k₂, k₂m₁ + m₂)."""
    return SDPair(a.k * b.k, b.k * a.m + b.m)


def nf_to_sd(f: NormalForm) -> SDPair:
    if f.w != 0:
        raise NotInSubmonoid(f"{format_nf(f)} contains varpi and lies outside the alpha-lambda submonoid")
    return SDPair(f.k, f.m)


def sd_to_nf(pair: SDPair) -> NormalForm:
    return nf_make(pair.k, pair.m, 0)


def format_sd(pair: SDPair) -> str:
    return f"({pair.k},{pair.m})"


def parse_sd(text: str) -> SDPair:
    match = _SD_RE.match(text.strip())
    if not match:
        raise ParseError(text, "a semidirect pair like (k,m)")
    return SDPair(int(match.group(1)), int(match.group(2)))


def sd_to_json(pair: SDPair) -> dict:
    return {"k": pair.k, "m": pair.m}
