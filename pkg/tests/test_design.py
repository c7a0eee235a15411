import logging
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aqsc.design import (
    DegenerateGenus,
    NotAdmissible,
    UnsupportedSymbol,
    admissibility,
    asymmetry_curve,
    closed_form_family,
    closed_form_symbols,
    code_parameters,
    enumerate_admissible,
    even_genus_equivalence,
    face_count,
    is_admissible,
    rate_comparison,
    _ceil_ratio,
)
from aqsc.geometry import (
    NonHyperbolicSurface,
    NotHyperbolic,
    SchlafliSymbol,
    Surface,
    polygon_area,
)

NO = lambda g: Surface(g, orientable=False)
OR = lambda h: Surface(h, orientable=True)


class TestFaceCount:
    @pytest.mark.parametrize("surface,p,q,expect", [
        (NO(5), 3, 7, 42),
        (NO(7), 4, 5, 25),
        (OR(2), 8, 8, 1),
        (OR(3), 4, 5, 20),
        (OR(2), 4, 5, 10),
    ])
    def test_values(self, surface, p, q, expect):
        assert face_count(surface, SchlafliSymbol(p, q)) == expect

    def test_exact_rational(self):
        assert face_count(NO(3), SchlafliSymbol(3, 13)) == Fraction(26, 7)
        # integer face count does not imply admissibility: the {3,10}
        # genus-5 pair fails later on vertex count 9/2
        assert face_count(NO(5), SchlafliSymbol(3, 10)) == 15

    def test_rejects_flat_surface_or_symbol(self):
        with pytest.raises(NonHyperbolicSurface):
            face_count(OR(1), SchlafliSymbol(3, 7))
        with pytest.raises(NotHyperbolic):
            face_count(NO(5), SchlafliSymbol(4, 4))

    def test_matches_area_quotient(self):
        # count of faces must equal surface area / face area; surface area
        # is -2 pi chi by Gauss-Bonnet
        for genus in range(3, 31):
            for p in range(3, 31):
                for q in range(3, 31):
                    sym = SchlafliSymbol(p, q)
                    if not sym.is_hyperbolic:
                        continue
                    surface = NO(genus)
                    quotient = (-2 * math.pi * surface.euler_characteristic
                                / polygon_area(sym))
                    assert float(face_count(surface, sym)) == pytest.approx(
                        quotient, abs=1e-9)


class TestAdmissibility:
    def test_table_examples_admissible(self):
        assert is_admissible(NO(5), SchlafliSymbol(3, 7))
        assert is_admissible(NO(7), SchlafliSymbol(3, 21))
        assert is_admissible(NO(11), SchlafliSymbol(6, 12))

    def test_fractional_vertex_count(self):
        adm = admissibility(NO(5), SchlafliSymbol(3, 10))
        assert not adm.ok and "vertex count" in adm.reason

    def test_fractional_face_count(self):
        adm = admissibility(NO(3), SchlafliSymbol(3, 13))
        assert not adm.ok and "face count" in adm.reason

    def test_flat_cases(self):
        assert not admissibility(OR(1), SchlafliSymbol(4, 4)).ok
        assert not admissibility(NO(2), SchlafliSymbol(3, 7)).ok
        assert not admissibility(NO(5), SchlafliSymbol(3, 6)).ok

    @given(st.integers(3, 25), st.integers(3, 25), st.integers(3, 20),
           st.booleans())
    @settings(max_examples=300, deadline=None)
    def test_admissible_implies_integral_record(self, p, q, genus, orientable):
        sym = SchlafliSymbol(p, q)
        surface = Surface(genus, orientable)
        if not is_admissible(surface, sym):
            with pytest.raises(NotAdmissible):
                code_parameters(surface, sym)
            return
        cp = code_parameters(surface, sym)
        assert 2 * cp.n == p * cp.n_f
        assert cp.n_f * sym.p % sym.q == 0
        assert cp.k == 2 - surface.euler_characteristic
        assert cp.d_z >= 1 and cp.d_x >= 1


class TestCodeParameters:
    def test_genus5_37(self):
        cp = code_parameters(NO(5), SchlafliSymbol(3, 7))
        assert (cp.n_f, cp.n, cp.k, cp.d_z, cp.d_x) == (42, 63, 5, 7, 4)
        assert cp.record == "[[63,5,7/4]]"
        assert cp.rate == Fraction(5, 63)
        assert cp.d == 4 and cp.gap == 3
        assert cp.distance_provenance == "formula"

    def test_genus7_45(self):
        cp = code_parameters(NO(7), SchlafliSymbol(4, 5))
        assert cp.record == "[[50,7,5/4]]"

    def test_genus9_58(self):
        cp = code_parameters(NO(9), SchlafliSymbol(5, 8))
        assert cp.record == "[[20,9,3/2]]"

    def test_ceiling_not_rounding(self):
        # {3,21} at genus 7: raw ratio 4.098 must ceil to 5
        cp = code_parameters(NO(7), SchlafliSymbol(3, 21))
        assert cp.d_h / cp.l_qp == pytest.approx(4.098, abs=5e-3)
        assert cp.d_z == 5

    def test_integer_ratio_snaps(self):
        # the fundamental polygon is one face; d_h equals its edge length
        # and float division gives 0.999..., which must not ceil to 2
        for h in range(2, 7):
            cp = code_parameters(OR(h), SchlafliSymbol(4 * h, 4 * h))
            assert cp.n_f == 1 and cp.d_z == 1 and cp.d_x == 1

    def test_not_admissible_raises(self):
        with pytest.raises(NotAdmissible):
            code_parameters(NO(5), SchlafliSymbol(3, 10))

    def test_duality_swaps_distances(self):
        for genus in (5, 7, 9, 11):
            for sym in (SchlafliSymbol(3, 7), SchlafliSymbol(4, 5)):
                a = code_parameters(NO(genus), sym)
                b = code_parameters(NO(genus), sym.dual)
                assert (a.n, a.k) == (b.n, b.k)
                assert (a.d_z, a.d_x) == (b.d_x, b.d_z)

    def test_str(self):
        cp = code_parameters(NO(5), SchlafliSymbol(3, 7))
        assert "{3,7}" in str(cp) and "[[63,5,7/4]]" in str(cp)


class TestCeilRatio:
    def test_plain_ceiling(self):
        assert _ceil_ratio(4.1, 1.0) == 5
        assert _ceil_ratio(3.9, 1.0) == 4

    def test_snap_below_and_above(self):
        assert _ceil_ratio(1.0 - 1e-12, 1.0) == 1
        assert _ceil_ratio(1.0 + 1e-12, 1.0) == 1
        assert _ceil_ratio(3.0 - 1e-12, 1.0) == 3

    @given(st.integers(1, 50), st.floats(0.1, 10))
    def test_exact_multiples(self, k, den):
        assert _ceil_ratio(k * den, den) == k


class TestEnumeration:
    def test_superset_of_genus5_table(self):
        rows = enumerate_admissible(NO(5), 30, 30)
        pairs = {(cp.sym.p, cp.sym.q) for cp in rows}
        assert {(3, 7), (3, 8), (3, 9), (3, 12), (3, 15),
                (4, 5), (4, 7), (4, 8), (4, 10)} <= pairs
        # admissible but beyond the printed rows
        assert (4, 6) in pairs

    def test_sorted_and_deterministic(self):
        rows = enumerate_admissible(NO(7), 21, 21)
        keys = [(cp.sym.p, cp.sym.q) for cp in rows]
        assert keys == sorted(keys)
        assert rows == enumerate_admissible(NO(7), 21, 21)

    def test_min_rate_filter(self):
        rows = enumerate_admissible(NO(5), 30, 30, min_rate=Fraction(1, 6))
        assert rows and all(cp.rate >= Fraction(1, 6) for cp in rows)
        assert all(cp.sym != SchlafliSymbol(3, 7) for cp in rows)

    def test_every_result_admissible(self):
        for cp in enumerate_admissible(NO(9), 20, 20):
            assert is_admissible(cp.surface, cp.sym)


class TestClosedFormFamilies:
    def test_seven_families(self):
        syms = closed_form_symbols()
        assert len(syms) == 7
        assert SchlafliSymbol(7, 3) in syms and SchlafliSymbol(8, 4) in syms

    @pytest.mark.parametrize("p,q,cf,cn", [
        (7, 3, 6, 21), (8, 3, 3, 12), (9, 3, 2, 9), (12, 3, 1, 6),
        (5, 4, 4, 10), (6, 4, 2, 6), (8, 4, 1, 4),
    ])
    def test_coefficients_match_direct_computation(self, p, q, cf, cn):
        fam = closed_form_family(SchlafliSymbol(p, q))
        assert (fam.n_f_coeff, fam.n_coeff) == (cf, cn)
        for g in range(3, 31):
            cp = fam.at_genus(g)
            assert cp.n_f == cf * (g - 2)
            assert cp.n == cn * (g - 2)
            assert cp.k == g

    def test_forms(self):
        assert closed_form_family(SchlafliSymbol(7, 3)).n_form == "21(g-2)"
        assert closed_form_family(SchlafliSymbol(12, 3)).n_f_form == "g-2"

    def test_unsupported(self):
        with pytest.raises(UnsupportedSymbol):
            closed_form_family(SchlafliSymbol(3, 7))


class TestRateComparison:
    @given(st.integers(3, 60))
    def test_exact_ratio(self, genus):
        rc = rate_comparison(SchlafliSymbol(3, 7), genus)
        assert rc.ratio == Fraction(genus - 2, genus - 1)
        assert rc.non_orientable > rc.orientable
        assert rc.orientable == rc.non_orientable * rc.ratio

    def test_rates_are_k_over_n(self):
        g = 6
        rc = rate_comparison(SchlafliSymbol(4, 5), g)
        cp_or = code_parameters(OR(g), SchlafliSymbol(4, 5))
        cp_no = code_parameters(NO(g), SchlafliSymbol(4, 5))
        assert rc.orientable == cp_or.rate
        assert rc.non_orientable == cp_no.rate

    def test_degenerate_genus(self):
        with pytest.raises(DegenerateGenus):
            rate_comparison(SchlafliSymbol(3, 7), 2)
        with pytest.raises(DegenerateGenus):
            rate_comparison(SchlafliSymbol(3, 7), 1)

    def test_flat_symbol_rejected(self):
        with pytest.raises(NotHyperbolic):
            rate_comparison(SchlafliSymbol(4, 4), 5)


class TestEvenGenusEquivalence:
    def test_octagon(self):
        eq = even_genus_equivalence(2, SchlafliSymbol(8, 8))
        assert eq.parameters_match
        assert eq.orientable.n == 4 and eq.orientable.k == 4

    def test_45_face_counts(self):
        assert even_genus_equivalence(3, SchlafliSymbol(4, 5)).orientable.n_f == 20
        assert even_genus_equivalence(2, SchlafliSymbol(4, 5)).orientable.n_f == 10

    def test_matches_for_sample(self):
        for h in range(2, 8):
            for sym in (SchlafliSymbol(3, 7), SchlafliSymbol(4, 5), SchlafliSymbol(3, 8)):
                if not is_admissible(OR(h), sym):
                    continue
                eq = even_genus_equivalence(h, sym)
                assert eq.parameters_match, (h, sym)
                assert eq.non_orientable.surface == NO(2 * h)


class TestAsymmetryCurve:
    def test_37_gaps(self):
        pts = asymmetry_curve(SchlafliSymbol(3, 7), (5, 7, 9, 11))
        assert [(pt.genus, pt.gap) for pt in pts] == [(5, 3), (7, 4), (9, 4), (11, 5)]

    def test_distances_match_code_parameters(self):
        pts = asymmetry_curve(SchlafliSymbol(3, 8), range(3, 20))
        for pt in pts:
            cp = code_parameters(NO(pt.genus), SchlafliSymbol(3, 8))
            assert (pt.d_z, pt.d_x) == (cp.d_z, cp.d_x)

    def test_skips_inadmissible_with_notice(self, caplog):
        with caplog.at_level(logging.INFO, logger="aqsc.design"):
            pts = asymmetry_curve(SchlafliSymbol(3, 10), (4, 5, 6, 7))
        genera = [pt.genus for pt in pts]
        assert 5 not in genera          # vertex count 9/2
        assert any("skipping genus 5" in rec.getMessage()
                   for rec in caplog.records)

    def test_gap_not_monotone(self):
        # the gap grows on trend but dips at genus 13; record the fact
        pts = asymmetry_curve(SchlafliSymbol(3, 7), range(5, 15, 2))
        gaps = {pt.genus: pt.gap for pt in pts}
        assert gaps[11] == 5 and gaps[13] == 4
