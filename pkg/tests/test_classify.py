from __future__ import annotations

from fractions import Fraction

import pytest

from zetacode.gf import GF
from zetacode.enumerator import (
    WeightEnumerator,
    from_distribution,
    macwilliams_substitute,
)
from zetacode.linear_code import LinearCode, Matrix, weight_distribution
from zetacode.classify import (
    FormalReport,
    classification_report,
    classify,
    extremal_bound,
    formal_checks,
    is_formal_weight_enumerator,
    w12,
    w8,
)

HAMMING8 = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]


def test_w8_constant():
    assert [int(c) for c in w8().coeffs] == [1, 0, 0, 0, 14, 0, 0, 0, 1]


def test_w12_constant():
    assert [int(c) for c in w12().coeffs] == [1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1]


def test_w8_is_the_extended_hamming_enumerator():
    c = LinearCode(Matrix.from_indices(GF(2), HAMMING8))
    assert tuple(int(x) for x in w8().coeffs) == weight_distribution(c).counts


# -- type classification ------------------------------------------------------


def test_w8_classified_type_ii_extremal():
    rep = classify(w8(), 2)
    assert rep.virtually_self_dual
    assert rep.b_max == 4
    assert rep.type_label == "II"
    assert rep.d == 4 and rep.d_bound == 4
    assert rep.extremal


def test_product_pattern_reported_as_type_i_with_flag():
    e = WeightEnumerator(2, (1, 0, 1), q=2) ** 5
    rep = classify(e, 2)
    assert rep.type_label == "I"
    assert rep.v_pattern
    assert rep.d == 2
    assert rep.d_bound == 2 * (10 // 8) + 2 == 4
    assert not rep.extremal


def test_tetra_is_extremal_type_iii():
    # self-dual, support {0, 3}, so 3-divisible with 4 | n
    tetra = WeightEnumerator(4, (1, 0, 0, 8, 0), q=3)
    rep = classify(tetra, 3)
    assert rep.virtually_self_dual
    assert rep.b_max == 3
    assert rep.type_label == "III"
    assert rep.d == 3 == rep.d_bound
    assert rep.extremal


def test_non_divisible_support_is_type_none():
    # x^2 + xy/2 + y^2/2 is fixed by the scaled binary transform but has
    # support gcd 1, so no divisibility type applies
    e = WeightEnumerator(2, (1, Fraction(1, 2), Fraction(1, 2)), q=2)
    rep = classify(e, 2)
    assert rep.virtually_self_dual
    assert rep.b_max == 1
    assert rep.type_label == "none"
    assert not rep.extremal


def test_not_virtually_self_dual_reported():
    rep = classify(WeightEnumerator(4, (1, 0, 0, 0, 1), q=2), 2)
    assert not rep.virtually_self_dual
    assert rep.type_label == "none"
    assert rep.reason is not None


def test_type_v_for_general_q():
    e = WeightEnumerator(2, (1, 0, 4), q=5) ** 2
    rep = classify(e, 5)
    assert rep.virtually_self_dual
    assert rep.v_pattern
    assert rep.type_label == "V"


def test_extremal_bound_formulas():
    assert extremal_bound("I", 8) == 4
    assert extremal_bound("II", 8) == 4
    assert extremal_bound("III", 12) == 6
    assert extremal_bound("IV", 6) == 4
    with pytest.raises(ValueError):
        extremal_bound("V", 8)


def test_bounds_monotone_in_length():
    for label in ("I", "II", "III", "IV"):
        values = [extremal_bound(label, n) for n in range(2, 73, 2)]
        assert values == sorted(values)


# -- formal enumerators ----------------------------------------------------------


def test_w12_is_formal_w8_is_not():
    assert is_formal_weight_enumerator(w12())
    assert not is_formal_weight_enumerator(w8())


def test_odd_length_is_not_formal():
    assert not is_formal_weight_enumerator(WeightEnumerator(5, (1, 0, 0, 0, 1, 0)))


def test_w8_times_w12_is_formal():
    prod = w8() * w12()
    assert prod.n == 20
    assert is_formal_weight_enumerator(prod)
    rep = formal_checks(prod)
    assert rep.d == 4
    assert rep.d_bound == 4 * ((20 - 12) // 24) + 4 == 4
    assert rep.extremal
    assert rep.anti_functional_equation


def test_w8_squared_times_w12_is_formal():
    prod = (w8() ** 2) * w12()
    assert is_formal_weight_enumerator(prod)
    assert formal_checks(prod).anti_functional_equation


def test_w12_formal_checks():
    rep = formal_checks(w12())
    assert isinstance(rep, FormalReport)
    assert rep.symmetric
    assert rep.support_multiple_of_4
    assert rep.n_mod_8 == 4
    assert rep.zeta.degree == 6
    assert rep.zeta.coeffs[0] == Fraction(-1, 15)
    assert rep.zeta.evaluate(1) == 1
    assert rep.anti_functional_equation
    assert rep.d_bound == 4
    assert rep.extremal
    # the root-circle verdict is reported, not assumed
    assert isinstance(rep.rh.holds, bool)
    assert len(rep.rh.roots) == 6


def test_formal_checks_rejects_non_formal():
    with pytest.raises(ValueError, match="formal"):
        formal_checks(w8())


def test_transform_is_an_involution_up_to_scale():
    for e in (w8(), w12(), w8() * w12()):
        twice = macwilliams_substitute(macwilliams_substitute(e, 2), 2)
        scale = Fraction(2) ** e.n
        assert [c / scale for c in twice.coeffs] == list(e.coeffs)


def test_classification_report_fields():
    rep = classification_report(w8(), 2)
    assert rep["type"] == "II"
    assert rep["extremal"] is True
    assert rep["formal_weight_enumerator"] is False
    assert rep["zeta"]["coefficients"] == ["1/5", "2/5", "2/5"]
    rep12 = classification_report(w12(), 2)
    assert rep12["formal_weight_enumerator"] is True
    assert rep12["formal"]["anti_functional_equation"] is True
