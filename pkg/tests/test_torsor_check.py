import pytest

from gwweyl.poly import divmod_poly
from gwweyl.torsor_check import MultiPoly, lift_polynomials, verify_lift_identity


@pytest.mark.parametrize("n", range(9))
def test_lift_identity(n):
    assert verify_lift_identity(n)


@pytest.mark.parametrize("n", [0, 2, 5])
def test_untwisted_case(n):
    assert verify_lift_identity(n, g_zero=True)


def test_n_zero_by_hand():
    P, Q = lift_polynomials(0)
    g, r = MultiPoly(0).names.index("g"), MultiPoly(0).names.index("r")
    gr = [0, 0, 0, 0]
    gr[g] = gr[r] = 1
    one_minus_gr = MultiPoly(0, {(0, 0, 0, 0): 1, tuple(gr): -1})
    assert one_minus_gr * Q == P


def test_perturbed_identity_fails():
    P, Q = lift_polynomials(2)
    bad = P + MultiPoly(2).constant(1)
    _, rem = divmod_poly(bad, Q)
    assert rem
