"""Стратегии hypothesis для элементов, семейств и нормальных форм."""
from hypothesis import strategies as st

from core.semigroup import Elem, Family
from endo.normal_form import NormalForm
from endo.semidirect import SDPair

BIG = 2 ** 62


def coords(max_value: int = BIG):
    return st.integers(min_value=0, max_value=max_value)


def elements(starts=(0, 1, 2), max_value: int = BIG):
    return st.builds(Elem, coords(max_value), coords(max_value), st.sampled_from(starts))


def canonical_families(max_n: int = 6):
    return st.integers(min_value=1, max_value=max_n).map(Family.canonical)


@st.composite
def family_elements(draw, max_n: int = 6, max_value: int = BIG):
    fam = draw(canonical_families(max_n))
    return fam, draw(elements(fam.starts, max_value))


def normal_forms(max_k: int = 1000, max_m: int = BIG):
    return st.builds(
        NormalForm,
        st.integers(min_value=1, max_value=max_k),
        coords(max_m),
        st.sampled_from((0, 1)),
    )


def sd_pairs(max_k: int = 1000, max_m: int = BIG):
    return st.builds(SDPair, st.integers(min_value=1, max_value=max_k), coords(max_m))
