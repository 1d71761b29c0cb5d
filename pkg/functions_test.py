import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from DegreeFunctions import (
    SLI_THRESHOLD,
    DegreeFunction,
    Family,
    FunctionSpecError,
    MissingContextError,
    UnaddressedRangeError,
    Verdict,
    classify,
    classify_xi,
    evaluate,
    exact_values,
    parse_function_spec,
    printed_range_check,
    xi_pair,
)

SAMPLES_PER_RANGE = 1000


def test_evaluate_examples():
    assert evaluate(DegreeFunction.power(2), 4) == 16
    assert evaluate(DegreeFunction.forgotten_coindex(11), 3) == 63
    assert evaluate(DegreeFunction.table(5, 6, 7, 8), 2) == 6
    for a in (0.1, 1.0, 7.5):
        assert evaluate(DegreeFunction.sum_lodeg(a), 1) == 0


def test_evaluate_rejects_other_degrees():
    for x in (0, 5, -1):
        with pytest.raises(ValueError):
            evaluate(DegreeFunction.power(2), x)


@pytest.mark.parametrize(
    "f", [DegreeFunction.power(600), DegreeFunction.sum_exdeg(1e100), DegreeFunction.sum_exdeg(1e77)], ids=str
)
def test_evaluate_out_of_float_range(f):
    assert evaluate(f, 1) > 0
    with pytest.raises(FunctionSpecError, match="overflows"):
        evaluate(f, 4)
    with pytest.raises(FunctionSpecError):
        classify(f)


def test_order_dependent_function_needs_order():
    with pytest.raises(MissingContextError):
        evaluate(DegreeFunction.forgotten_coindex(), 2)
    assert evaluate(DegreeFunction.forgotten_coindex().bind(11), 2) == 32


def test_forgotten_coindex_is_a_zeroth_order_coindex():
    fbar = DegreeFunction.forgotten_coindex(12)
    assert list(fbar.values()) == list(DegreeFunction.zeroth_order_coindex(3, 12).values())


@pytest.mark.parametrize(
    "family, params, n",
    [
        (Family.SUM_EXDEG, (1.0,), None),
        (Family.SUM_EXDEG, (-2.0,), None),
        (Family.SUM_LODEG, (0.0,), None),
        (Family.FORGOTTEN_COINDEX, (), 1),
        (Family.POWER, (2.0,), 7),
        (Family.POWER, (math.inf,), None),
        (Family.CUSTOM_TABLE, (1.0, 2.0), None),
    ],
)
def test_invalid_parameters(family, params, n):
    with pytest.raises(FunctionSpecError):
        DegreeFunction(family, params, n)


def test_xi_pair_examples():
    assert xi_pair(DegreeFunction.power(2)) == (-2, -2)
    assert xi_pair(DegreeFunction.power(1)) == (0, 0)
    assert xi_pair(DegreeFunction.forgotten_coindex(11)) == (-6, -4)


@given(st.integers(2, 500))
def test_xi_pair_of_forgotten_coindex(n):
    assert xi_pair(DegreeFunction.forgotten_coindex(n)) == (16 - 2 * n, 18 - 2 * n)


def test_exact_values():
    assert exact_values(DegreeFunction.power(-1)) == (1, 0.5, pytest.approx(1 / 3), 0.25)
    assert exact_values(DegreeFunction.power(0.5)) is None
    assert exact_values(DegreeFunction.sum_exdeg(2)) == (2, 8, 24, 64)
    assert exact_values(DegreeFunction.table(1, 2.5, 3, 4)) is None


def test_classify_examples():
    assert classify(DegreeFunction.power(2)).verdict == Verdict.CASE_I
    assert classify(DegreeFunction.power(1)).verdict == Verdict.BOUNDARY
    c = classify(DegreeFunction.power(0.5))
    assert c.verdict == Verdict.CASE_II
    assert c.xi1 == pytest.approx(0.08088, abs=1e-5)
    assert c.xi2 == pytest.approx(0.06538, abs=1e-5)
    assert c.xi2 / 2 < c.xi1 < 2 * c.xi2


def test_classify_xi_tolerance():
    assert classify_xi(-2, -4 + 1e-12).verdict == Verdict.BOUNDARY  # xi1 == xi2/2 up to 5e-13
    assert classify_xi(-1, -10).verdict == Verdict.NEITHER
    assert classify_xi(1, 1).verdict == Verdict.CASE_II
    with pytest.raises(ValueError):
        classify_xi(1, 1, tolerance=0)


@given(st.floats(-3, 3))
def test_power_xi_closed_forms(alpha):
    xi1, xi2 = xi_pair(DegreeFunction.power(alpha))
    assert xi1 == pytest.approx(-(2**alpha - 2) * (2**alpha - 1) / 3, rel=1e-12, abs=1e-12)
    assert xi2 == pytest.approx((3 ** (alpha + 1) - 2 ** (2 * alpha + 1) - 1) / 3, rel=1e-12, abs=1e-12)


@given(st.floats(0.01, 3).filter(lambda a: a != 1))
def test_sum_exdeg_xi_closed_forms(a):
    xi1, xi2 = xi_pair(DegreeFunction.sum_exdeg(a))
    assert xi1 == pytest.approx(-2 * a * (a - 1) * (2 * a**2 + 2 * a - 1) / 3, rel=1e-12, abs=1e-12)
    assert xi2 == pytest.approx(-a * (a - 1) * (8 * a**2 - a - 1) / 3, rel=1e-12, abs=1e-12)


@settings(max_examples=200)
@given(st.one_of(st.floats(1.5, 3), st.floats(0.2, 0.8), st.floats(-3, -0.5)), st.floats(0.1, 10))
def test_scaling_preserves_or_swaps_case(alpha, c):
    f = DegreeFunction.power(alpha)
    xi1, xi2 = xi_pair(f)
    for factor in (c, -c):
        scaled = f.scaled(factor)
        assert xi_pair(scaled) == pytest.approx((factor * xi1, factor * xi2), rel=1e-9)
    swapped = {Verdict.CASE_I: Verdict.CASE_II, Verdict.CASE_II: Verdict.CASE_I}
    assert classify(f.scaled(c)).verdict == classify(f).verdict
    assert classify(f.scaled(-c)).verdict == swapped[classify(f).verdict]


def test_scaling_keeps_boundary():
    f = DegreeFunction.power(1)
    assert classify(f.scaled(3)).verdict == Verdict.BOUNDARY
    assert classify(f.scaled(-3)).verdict == Verdict.BOUNDARY


def test_forgotten_coindex_cases():
    for n in range(11, 41):
        assert classify(DegreeFunction.forgotten_coindex(n)).verdict == Verdict.CASE_I
    assert classify(DegreeFunction.forgotten_coindex(10)).verdict == Verdict.BOUNDARY


def test_sum_lodeg_threshold():
    assert SLI_THRESHOLD == pytest.approx(0.6246, abs=1e-4)
    assert classify(DegreeFunction.sum_lodeg(SLI_THRESHOLD + 0.01)).verdict == Verdict.CASE_I
    assert classify(DegreeFunction.sum_lodeg(SLI_THRESHOLD - 0.01)).verdict != Verdict.CASE_I


PRINTED_RANGES = [
    (Family.POWER, 1 + 1e-3, 10),
    (Family.POWER, -10, -1e-3),
    (Family.POWER, 1e-3, 1 - 1e-3),
    (Family.SUM_EXDEG, 1 + 1e-3, 5),
    (Family.SUM_EXDEG, 0.01, 1 / 3 - 1e-3),
    (Family.SUM_EXDEG, 1 / 2 + 1e-3, 1 - 1e-3),
    (Family.SUM_LODEG, SLI_THRESHOLD + 1e-3, 5),
    (Family.LN_MULT_ZAGREB1, -5, -1e-3),
    (Family.LN_MULT_ZAGREB1, 1e-3, 5),
    (Family.LN_MULT_ZAGREB2, -5, -1e-3),
    (Family.LN_MULT_ZAGREB2, 1e-3, 5),
]


@pytest.mark.parametrize("family, low, high", PRINTED_RANGES)
def test_classify_agrees_with_printed_ranges(family, low, high):
    rng = np.random.default_rng(20240611)
    for parameter in rng.uniform(low, high, SAMPLES_PER_RANGE):
        f = DegreeFunction.from_family(family, float(parameter))
        assert classify(f).verdict == printed_range_check(family, float(parameter)), parameter


def test_printed_range_examples():
    assert printed_range_check(Family.POWER, 3) == Verdict.CASE_I
    assert printed_range_check(Family.SUM_LODEG, 1) == Verdict.CASE_I
    assert printed_range_check(Family.LN_MULT_ZAGREB2, -1) == Verdict.CASE_II
    assert printed_range_check(Family.FORGOTTEN_COINDEX, 11) == Verdict.CASE_I
    for family, parameter in [
        (Family.SUM_EXDEG, 0.4),
        (Family.POWER, 1),
        (Family.SUM_LODEG, 0.5),
        (Family.FORGOTTEN_COINDEX, 10),
        (Family.CUSTOM_TABLE, 1),
    ]:
        with pytest.raises(UnaddressedRangeError):
            printed_range_check(family, parameter)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("power:2", DegreeFunction.power(2)),
        ("sei:2.0", DegreeFunction.sum_exdeg(2)),
        ("sli:1.0", DegreeFunction.sum_lodeg(1)),
        ("lnpi1:-1", DegreeFunction.ln_mult_zagreb1(-1)),
        ("lnpi2:0.5", DegreeFunction.ln_mult_zagreb2(0.5)),
        ("fbar:11", DegreeFunction.forgotten_coindex(11)),
        ("coindex:3,11", DegreeFunction.zeroth_order_coindex(3, 11)),
        ("table:1,2,3,4", DegreeFunction.table(1, 2, 3, 4)),
    ],
)
def test_parse_function_spec(text, expected):
    f = parse_function_spec(text)
    assert f == expected
    assert parse_function_spec(f.describe()) == f


@pytest.mark.parametrize("text", ["", "power", "power:", "power:x", "cube:2", "table:1,2,3", "fbar:10.5", "fbar:1", "coindex:3"])
def test_malformed_function_spec(text):
    with pytest.raises(FunctionSpecError):
        parse_function_spec(text)


def test_describe():
    assert DegreeFunction.power(0.5).describe() == "power:0.5"
    assert DegreeFunction.power(-2).describe() == "power:-2"
    assert str(DegreeFunction.forgotten_coindex(11)) == "fbar:11"
