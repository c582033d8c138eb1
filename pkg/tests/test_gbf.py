import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqforge.gbf import Gbf, evaluate, quadratic_form, quadratic_gcp
from seqforge.gcp import ConstructionError
from seqforge.verify import is_gcp


def test_truth_table_uses_x1_as_low_bit():
    f = Gbf.from_terms(2, 2, {(1,): 1})
    assert f.truth_table().tolist() == [0, 1, 0, 1]
    g = Gbf.from_terms(2, 2, {(2,): 1})
    assert g.truth_table().tolist() == [0, 0, 1, 1]


def test_evaluate_example_function():
    f = Gbf.from_terms(2, 2, {(1, 2): 1, (1,): 1, (2,): 1, (): 1})
    assert evaluate(f).signs() == [-1, 1, 1, 1]
    assert f(0, 0) == 1 and f(1, 1) == 0


def test_coefficients_are_reduced_and_merged():
    f = Gbf(3, 4, (((2, 1), 3), ((1, 2), 3), ((3,), 4)))
    assert f.coeffs == (((1, 2), 2),)


def test_gbf_rejects_bad_variables():
    with pytest.raises(ValueError):
        Gbf.from_terms(2, 2, {(3,): 1})
    with pytest.raises(ValueError):
        quadratic_form(3, 2, 1, [1, 1, 2], [0, 0, 0])


def test_truth_table_matches_call():
    f = Gbf.from_terms(3, 4, {(1, 3): 2, (2,): 1, (): 3})
    tt = f.truth_table()
    for I in range(8):
        assert tt[I] == f(I & 1, (I >> 1) & 1, (I >> 2) & 1)


@st.composite
def gcp_params(draw):
    q, h = draw(st.sampled_from([(2, 1), (4, 2), (8, 3)]))
    m = draw(st.integers(1, 6))
    perm = draw(st.permutations(list(range(1, m + 1))))
    c = draw(st.lists(st.integers(0, q - 1), min_size=m, max_size=m))
    theta = draw(st.integers(0, q - 1))
    return m, q, h, perm, c, theta


@settings(max_examples=80, deadline=None)
@given(gcp_params())
def test_quadratic_form_gives_golay_pairs(params):
    m, q, h, perm, c, theta = params
    pair = quadratic_gcp(m, q, h, perm, c, theta)
    assert len(pair) == 2 ** m
    assert is_gcp(pair).holds


def test_degenerate_coefficient_is_rejected():
    # 2^{h-1} = 2 vanishes mod 2, so both members coincide and cannot be complementary
    with pytest.raises(ConstructionError):
        quadratic_gcp(2, 2, 2, [1, 2], [0, 0])
