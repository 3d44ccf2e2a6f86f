import pytest

from core.errors import (
    DomainTooSmall,
    InvalidParameter,
    MiddleLayerIdentityImage,
    NonPositiveK,
    NotClassifiable,
)
from core.semigroup import Elem
from endo.generators import Alpha, Flip, Shift
from endo.normal_form import NormalForm, nf_apply
from oracle.tabulated import tabulate, tabulate_map
from oracle.verify import (
    decompose,
    decompose_report,
    layer_behaviour,
    verify_homomorphism,
    verify_injective,
)


def transpose(x):
    return Elem(x.j, x.i, x.p)


class TestHomomorphism:
    def test_normal_form_passes(self):
        report = verify_homomorphism(tabulate(NormalForm(2, 1, 1), 8), 4)
        assert report.passed
        assert report.checks == 75 ** 2
        assert report.note.startswith("a2.l1.w1 is consistent with a homomorphism")

    def test_transpose_fails(self):
        report = verify_homomorphism(tabulate_map(transpose, 4, "transpose"), 2, limit=10_000)
        assert report.status == "fail"
        assert report.total_counterexamples > 0
        bad = {tuple(ce["inputs"]) for ce in report.counterexamples}
        assert ("(0,1,0)", "(1,0,0)") in bad

    def test_counterexamples_truncated(self):
        report = verify_homomorphism(tabulate_map(transpose, 8, "transpose"), 4, limit=5)
        assert len(report.counterexamples) == 5
        assert report.total_counterexamples > 5

    def test_constant_identity_map_passes(self):
        report = verify_homomorphism(tabulate_map(lambda x: Elem(0, 0, 0), 4, "const"), 2)
        assert report.passed
        assert report.checks == 27 ** 2

    def test_domain_too_small(self):
        with pytest.raises(DomainTooSmall):
            verify_homomorphism(tabulate(NormalForm(1, 0, 0), 5), 3)


class TestInjective:
    def test_injective(self):
        assert verify_injective(tabulate(NormalForm(3, 0, 1), 4)).passed

    def test_constant_map(self):
        report = verify_injective(tabulate_map(lambda x: Elem(0, 0, 0), 1, "const"))
        assert report.status == "fail"
        assert report.total_counterexamples == 11


class TestDecompose:
    @pytest.mark.parametrize("f", [
        NormalForm(1, 0, 0), NormalForm(2, 1, 1), NormalForm(5, 5, 0), NormalForm(3, 0, 1),
    ])
    def test_round_trip(self, f):
        assert decompose(tabulate(f, 16)) == f

    def test_generator_chain(self):
        T = tabulate(Flip(3).then(Alpha(2)).then(Flip(3)), 6)
        assert decompose(T) == NormalForm(2, 3, 0)

    def test_report_wording(self):
        f, report = decompose_report(tabulate(NormalForm(2, 1, 0), 4))
        assert f == NormalForm(2, 1, 0)
        assert report.note == "consistent with a2.l1.w0 on Window(4); layers preserving"
        assert "equal" not in report.note

    def test_layer_behaviour(self):
        assert layer_behaviour(tabulate(NormalForm(2, 1, 0), 2)) == "preserving"
        assert layer_behaviour(tabulate(NormalForm(2, 1, 1), 2)) == "reversing"
        assert layer_behaviour(tabulate_map(lambda x: Elem(x.i, x.j, 0), 2)) is None

    def test_middle_layer(self):
        with pytest.raises(MiddleLayerIdentityImage):
            decompose(tabulate_map(lambda x: Elem(x.i + 5, x.j + 5, 1), 2))

    def test_transpose_not_positive(self):
        with pytest.raises(NonPositiveK):
            decompose(tabulate_map(transpose, 4))

    def test_identity_image_not_idempotent(self):
        with pytest.raises(NotClassifiable):
            decompose(tabulate_map(lambda x: Elem(x.i + 1, x.j, x.p), 2))

    def test_single_entry_mismatch(self):
        f = NormalForm(2, 1, 0)
        table = tabulate(f, 4).table
        table[Elem(3, 4, 2)] = Shift()(table[Elem(3, 4, 2)])
        T = tabulate_map(lambda x: table[x], 4, "tampered")
        with pytest.raises(NotClassifiable, match=r"\(3,4,2\)"):
            decompose(T)

    def test_small_window(self):
        with pytest.raises(InvalidParameter):
            decompose(tabulate(NormalForm(1, 0, 0), 1))

    def test_tabulation_matches_closed_form(self):
        f = NormalForm(4, 2, 1)
        T = tabulate(f, 3)
        assert T[Elem(1, 0, 0)] == nf_apply(f, Elem(1, 0, 0)) == Elem(6, 2, 2)
