import itertools

import pytest

from gwweyl.char_ring import lambda_character
from gwweyl.diag_restrict import (
    DiagPoly,
    ElementaryPoly,
    b_to_v,
    diag_forgetful,
    from_elementary_symmetric,
    is_symmetric,
    lambda_series,
    restrict_lambda,
    restriction_rank,
    to_elementary_symmetric,
    v_to_b,
    variable,
    verify_triangularity,
)
from gwweyl.errors import NonSymmetricError
from gwweyl.gw_coeff import MODELS, GWCoeff, hyperbolic_minus, hyperbolic_plus
from gwweyl.gw_ring import augmentation, generator, sp_generator_set
from gwweyl.rep_ring import restrict_to_diagonal, standard_class
from gwweyl.root_system import build_root_system


def one(model="split"):
    return GWCoeff.one(model)


def test_restrict_lambda_examples():
    n = 3
    assert restrict_lambda(1, n) == sum((variable(n, i) for i in range(n)), DiagPoly(n))
    series = lambda_series(1)
    assert series[0] == DiagPoly(1, {(0,): one()})
    assert series[1] == variable(1, 0)
    assert series[2] == DiagPoly(1, {(0,): one()})
    with pytest.raises(ValueError):
        restrict_lambda(2, 1)
    with pytest.raises(ValueError):
        restrict_lambda(0, 2)
    assert restrict_lambda(2, 2) == DiagPoly(2, {(1, 1): one(), (0, 0): GWCoeff.integer("split", 2)})


def _brute_force_lambda(k, n, model):
    # expand the product of (1 + v_i t + t^2) term by term
    out = {}
    for choice in itertools.product(range(3), repeat=n):
        if sum(choice) != k:
            continue
        e = tuple(int(c == 1) for c in choice)
        out[e] = out.get(e, GWCoeff.zero(model)) + one(model)
    return DiagPoly(n, out, "v", model)


@pytest.mark.parametrize("model", MODELS)
def test_restrict_lambda_matches_brute_force(model):
    for n in range(1, 5):
        for k in range(1, n + 1):
            assert restrict_lambda(k, n, model) == _brute_force_lambda(k, n, model)


def test_elementary_examples():
    n = 2
    s1 = ElementaryPoly(n, {(1, 0): one()})
    assert to_elementary_symmetric(variable(2, 0) + variable(2, 1)) == s1
    assert to_elementary_symmetric(restrict_lambda(2, 2)) == ElementaryPoly(
        2, {(0, 1): one(), (0, 0): GWCoeff.integer("split", 2)})
    assert to_elementary_symmetric(restrict_lambda(3, 3)) == ElementaryPoly(
        3, {(0, 0, 1): one(), (1, 0, 0): GWCoeff.integer("split", 2)})


def test_non_symmetric_rejected():
    with pytest.raises(NonSymmetricError):
        to_elementary_symmetric(variable(2, 0))


@pytest.mark.parametrize("model", MODELS)
def test_symmetric_round_trip(model):
    for n in range(1, 5):
        for k in range(1, n + 1):
            p = restrict_lambda(k, n, model)
            assert is_symmetric(p)
            assert from_elementary_symmetric(to_elementary_symmetric(p)) == p
            q = v_to_b(p)
            assert from_elementary_symmetric(to_elementary_symmetric(q)) == q


@pytest.mark.parametrize("model", MODELS)
def test_triangularity(model):
    for n in range(1, 5):
        for k in range(1, n + 1):
            assert verify_triangularity(k, n, model)


@pytest.mark.parametrize("model", MODELS)
def test_change_of_variables(model):
    hm = hyperbolic_minus(model)
    v1 = variable(1, 0, "v", model)
    assert v_to_b(v1) == variable(1, 0, "b", model) + DiagPoly(1, {(0,): hm}, "b", model)
    c = DiagPoly(2, {(0, 0): hm}, "v", model)
    assert v_to_b(c) == DiagPoly(2, {(0, 0): hm}, "b", model)
    for n in range(1, 4):
        for k in range(1, n + 1):
            p = restrict_lambda(k, n, model)
            assert b_to_v(v_to_b(p)) == p


@pytest.mark.parametrize("model", MODELS)
def test_constant_term_is_the_augmentation(model):
    for r in range(1, 4):
        lam = sp_generator_set(r, "lambda", model)
        for k in range(1, r + 1):
            const = v_to_b(restrict_lambda(k, r, model)).constant_term()
            assert const == augmentation(generator(lam, k - 1, model))


def test_lambda_two_on_two_factors_in_b():
    p = v_to_b(restrict_lambda(2, 2))
    hp = hyperbolic_plus("split")
    assert p.constant_term() == hp * 2 + 2
    assert p[(1, 1)] == one()
    assert p[(1, 0)] == hyperbolic_minus("split")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_forgetful_matches_k0_restriction(n):
    rs = build_root_system(f"C{n}")
    v = standard_class(rs)
    for k in range(1, n + 1):
        assert diag_forgetful(restrict_lambda(k, n)) == restrict_to_diagonal(n, lambda_character(rs, v, k))


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_restriction_injective_up_to_degree_four(n, model):
    rank, cols = restriction_rank(n, 4, model)
    assert rank == cols


def test_sign_of_monomials():
    p = DiagPoly(2)
    assert p.sign((1, 0)) == -1
    assert p.sign((1, 1)) == 1
