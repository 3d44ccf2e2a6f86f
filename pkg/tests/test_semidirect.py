import pytest
from hypothesis import given

from core.errors import InvalidParameter, NotInSubmonoid, ParseError
from endo.normal_form import VARPI, NormalForm, nf_compose
from endo.semidirect import (
    SDPair,
    format_sd,
    nf_to_sd,
    parse_sd,
    sd_identity,
    sd_mul,
    sd_to_json,
    sd_to_nf,
)

from .strategies import normal_forms, sd_pairs


def test_mul_example():
    assert sd_mul(SDPair(2, 1), SDPair(3, 4)) == SDPair(6, 7)


@given(sd_pairs(), sd_pairs(), sd_pairs())
def test_associative(a, b, c):
    assert sd_mul(sd_mul(a, b), c) == sd_mul(a, sd_mul(b, c))


@given(sd_pairs())
def test_identity(a):
    assert sd_mul(sd_identity(), a) == a == sd_mul(a, sd_identity())


@given(normal_forms().map(lambda f: NormalForm(f.k, f.m, 0)),
       normal_forms().map(lambda f: NormalForm(f.k, f.m, 0)))
def test_isomorphism_with_submonoid(f, g):
    assert nf_to_sd(nf_compose(f, g)) == sd_mul(nf_to_sd(f), nf_to_sd(g))
    assert sd_to_nf(nf_to_sd(f)) == f


def test_varpi_outside_submonoid():
    with pytest.raises(NotInSubmonoid):
        nf_to_sd(VARPI)


@pytest.mark.parametrize("k, m", [(0, 0), (1, -1)])
def test_invalid_pair(k, m):
    with pytest.raises(InvalidParameter):
        SDPair(k, m)


def test_codecs():
    assert parse_sd("(2,3)") == SDPair(2, 3)
    assert parse_sd("2, 3") == SDPair(2, 3)
    assert format_sd(SDPair(2, 3)) == "(2,3)"
    assert sd_to_json(SDPair(2, 3)) == {"k": 2, "m": 3}
    with pytest.raises(ParseError):
        parse_sd("(2;3)")
