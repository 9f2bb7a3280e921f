import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from glaisher_lab.polyexact import (
    PolyRat,
    Variable,
    build_P_lemma1,
    build_Q_lemma1,
    build_Q_scaled,
    build_R_lemma4,
    cos_multiple,
    cosh_multiple,
    eval_poly,
    lemma4_constant,
    recurrence_leading_coefficient,
)


def test_Q_lemma1_small_cases():
    assert build_Q_lemma1(1, 2).coeffs == (F(2), F(-3, 2))
    assert build_Q_lemma1(1, 1).coeffs == (F(2),)


def test_Q_lemma1_matches_transcendental():
    t = 0.5
    direct = math.cos(6 * math.asin(t)) + math.cosh(6 * math.asinh(t))
    assert abs(float(eval_poly(build_Q_lemma1(3, 1), F(1, 4))) - direct) <= 1e-12


@pytest.mark.parametrize("n, a", [(1, 1), (1, 3), (3, 2), (5, F(1, 2)), (7, 10)])
def test_Q_lemma1_degree_and_oracle(n, a):
    Q = build_Q_lemma1(n, a)
    assert Q.degree <= n
    for t in (0.1, 0.37, 0.8):
        direct = math.cos(2 * n * math.asin(t)) + math.cosh(2 * n * math.asinh(t / float(a)))
        assert abs(float(eval_poly(Q, F(t) ** 2)) - direct) <= 1e-10 * max(1, abs(direct))


def test_P_lemma1_examples():
    assert build_P_lemma1(1, 2).coeffs == (F(1),)  # 2/a
    for n, a in ((3, 2), (5, 1), (7, F(1, 2))):
        assert build_P_lemma1(n, a).coeffs[0] == F(2 * n**3) / a


def test_P_lemma1_matches_transcendental():
    n, a, t = 3, 2, 0.5
    direct = 2 * n * math.sin(n * math.asin(t)) * math.sinh(n * math.asinh(t / a)) / t**2
    assert abs(float(eval_poly(build_P_lemma1(n, a), F(1, 4))) - direct) <= 1e-12


def test_P_lemma1_rejects_even_n():
    with pytest.raises(ValueError):
        build_P_lemma1(2, 1)


def test_lemma4_example():
    C, R = build_R_lemma4(2, 1)
    assert C == F(-1, 4)
    assert R.coeffs == (F(3, 2),)
    assert R.degree <= 1


def test_lemma4_remainder_oracle():
    n, t = 4, 0.5
    C, R = build_R_lemma4(n, 1)
    Q = build_Q_lemma1(n, 1)
    direct = math.cos(n * math.asin(t)) * math.cosh(n * math.asinh(t)) - float(C) * float(eval_poly(Q, F(1, 4)))
    assert abs(float(eval_poly(R, F(1, 4))) - direct) <= 1e-12


@pytest.mark.parametrize("n", [2, 4, 6, 8])
@pytest.mark.parametrize("a", [F(1, 2), 1, 2, 3])
def test_lemma4_degree_bound(n, a):
    _, R = build_R_lemma4(n, a)
    assert R.degree <= n - 1


def test_lemma4_constant_is_limit():
    # as t -> infinity, cos(n asin t) cosh(n asinh(t/a)) / Q -> C
    assert lemma4_constant(2, 1) == F(-1, 4)
    assert lemma4_constant(4, 2) == F(1, 2) * 16 / 257


def test_Q_scaled_examples():
    assert build_Q_scaled(2).coeffs == (F(2), F(0), F(16))
    assert build_Q_scaled(1).coeffs == (F(2),)
    assert build_Q_scaled(2).leading == 16 == recurrence_leading_coefficient(2)
    assert build_Q_scaled(2).variable is Variable.T_DIRECT


@pytest.mark.parametrize("n", range(1, 13))
def test_Q_scaled_degree_and_leading(n):
    Q = build_Q_scaled(n)
    assert Q.degree == 2 * (n // 2)
    assert all(c == 0 for c in Q.coeffs[1::2])
    if n % 2 == 0:
        assert Q.leading == recurrence_leading_coefficient(n)


def test_eval_poly_examples():
    assert eval_poly(PolyRat.from_ints([2, F(-3, 2)]), F(4, 3)) == 0
    assert eval_poly(PolyRat.from_ints([5, 1, 1]), 0) == 5
    x = -1j * math.sqrt(2) / 4
    assert abs(eval_poly(build_Q_scaled(2), x)) <= 1e-15


@given(st.integers(0, 8), st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_cos_multiple_is_chebyshev(m, x):
    theta = math.asin(math.sqrt(x))
    assert abs(float(eval_poly(cos_multiple(m), x)) - math.cos(2 * m * theta)) <= 1e-10


@given(st.integers(0, 8), st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_cosh_multiple_is_chebyshev(m, x):
    phi = math.asinh(math.sqrt(x))
    exact = math.cosh(2 * m * phi)
    assert abs(float(eval_poly(cosh_multiple(m), x)) - exact) <= 1e-10 * exact


@given(
    st.lists(st.fractions(max_denominator=20), max_size=5),
    st.lists(st.fractions(max_denominator=20), max_size=5),
    st.fractions(max_denominator=20),
)
def test_ring_operations_are_exact(p, q, z):
    P, Q = PolyRat(tuple(p)), PolyRat(tuple(q))
    assert eval_poly(P + Q, z) == eval_poly(P, z) + eval_poly(Q, z)
    assert eval_poly(P * Q, z) == eval_poly(P, z) * eval_poly(Q, z)
    assert eval_poly(P - P, z) == 0


def test_derivative_and_strings():
    P = PolyRat.from_ints([1, F(1, 2), 3])
    assert P.derivative().coeffs == (F(1, 2), F(6))
    assert P.to_strings() == ["1/1", "1/2", "3/1"]
    assert PolyRat(()).to_strings() == ["0/1"]
    assert PolyRat(()).degree == -1


def test_exact_layer_rejects_floats():
    with pytest.raises(TypeError):
        build_Q_lemma1(3, 0.5)
    with pytest.raises(ValueError):
        build_Q_lemma1(3, 0)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_degree_claims(n):
    assert build_Q_lemma1(n, 2).degree == n
    assert build_Q_lemma1(n, F(1, 3)).degree == n
    assert build_Q_lemma1(n, 1).degree == n - 1
    assert build_P_lemma1(n, 2).degree == n - 1
