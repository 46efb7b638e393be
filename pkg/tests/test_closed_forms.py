from fractions import Fraction
from math import comb

import pytest

from partition_lab import closed_forms
from partition_lab.closed_forms import S2_FORMS, S3_FORMS, form_for, s2_closed, s3_closed
from partition_lab.levels import s_level


def lagrange_at(xs, ys, x):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


def test_form_table_shape():
    assert len(S2_FORMS) == 2 and all(len(f.coeffs) == 4 for f in S2_FORMS)
    assert len(S3_FORMS) == 6 and all(len(f.coeffs) == 6 and f.coeffs[-1] == 216 for f in S3_FORMS)
    assert sorted(f.shift for f in S3_FORMS) == [9, 10, 11, 12, 13, 14]
    for n in range(9, 60):
        f = form_for(3, n)
        assert f.class_id == (n % 3, n % 2) and f.applies_to(n)


def test_s2_examples():
    assert s2_closed(21) == 2 * comb(8, 0) + 6 * comb(8, 1) + 6 * comb(8, 2) + 2 * comb(8, 3) == 330
    assert s2_closed(16) == 1 + 4 * 6 + 5 * 15 + 2 * 20 == 140
    assert s2_closed(4) == 1


def test_s3_examples():
    assert s3_closed(21) == 1 + 48 * 2 + 310 == 407
    assert s3_closed(9) == 1
    # S_31(14) + S_32(14) = 20 + 10
    assert s3_closed(14) == 30


def test_domain_errors():
    with pytest.raises(ValueError):
        s2_closed(3)
    with pytest.raises(ValueError):
        s3_closed(8)
    with pytest.raises(ValueError):
        form_for(4, 20)
    with pytest.raises(ValueError):
        S2_FORMS[0].evaluate(6)


def test_closed_forms_match_nested_sums():
    for n in range(4, 401):
        assert s2_closed(n) == s_level(2, n), n
    for n in range(9, 401):
        assert s3_closed(n) == s_level(3, n), n


@pytest.mark.parametrize("form", S2_FORMS + S3_FORMS, ids=lambda f: f.describe())
def test_degree_by_interpolation(form):
    # a cubic (level 2) or quintic (level 3) in n on each class: fit on
    # degree+1 points of the nested sum, predict further points
    degree = len(form.coeffs) - 1
    xs = [form.shift + form.period * i for i in range(degree + 1)]
    ys = [s_level(form.level, x) for x in xs]
    for extra in range(degree + 1, degree + 8):
        x = form.shift + form.period * extra
        assert lagrange_at(xs, ys, x) == s_level(form.level, x)
    # and the fit is not of lower degree
    assert lagrange_at(xs[:-1], ys[:-1], xs[-1]) != ys[-1]


def test_coefficients_are_read_at_call_time(monkeypatch):
    bad = closed_forms.ResidueClassForm(2, (1,), 5, 2, (2, 6, 7, 2))
    monkeypatch.setattr(closed_forms, "S2_FORMS", (bad, S2_FORMS[1]))
    assert s2_closed(21) != s_level(2, 21)
