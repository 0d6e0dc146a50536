import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwweyl.errors import ModelMismatchError
from gwweyl.gw_coeff import (
    MODELS,
    GWCoeff,
    coefficient_basis,
    epsilon,
    format_coeff,
    gw_add,
    gw_mul,
    gw_rank,
    hyperbolic_minus,
    hyperbolic_plus,
    parse_coeff,
)

ints = st.integers(-50, 50)


def coeffs(model):
    k = 1 if model == "split" else 2
    return st.builds(lambda p, m: GWCoeff(model, tuple(p), m), st.lists(ints, min_size=k, max_size=k), ints)


def homogeneous(model):
    k = 1 if model == "split" else 2
    plus = st.builds(lambda p: GWCoeff(model, tuple(p), 0), st.lists(ints, min_size=k, max_size=k))
    minus = st.builds(lambda m: GWCoeff(model, (0,) * k, m), ints)
    return st.one_of(plus, minus)


@pytest.mark.parametrize("model", MODELS)
def test_distinguished_elements(model):
    hm, hp = hyperbolic_minus(model), hyperbolic_plus(model)
    assert hm * hm == hp * 2
    assert gw_rank(hm) == 2
    assert gw_rank(hp) == 2
    assert gw_rank(hp + hm) == 4
    assert gw_rank(GWCoeff.one(model)) == 1


def test_split_hp_is_two():
    assert hyperbolic_plus("split") == 2


def test_real_hp_squared():
    hp = hyperbolic_plus("real")
    assert hp * hp == hp * 2


def test_real_epsilon():
    e = epsilon("real")
    assert e * e == 1
    assert gw_rank(e) == 1


def test_model_mismatch():
    with pytest.raises(ModelMismatchError):
        gw_add(GWCoeff.one("split"), GWCoeff.one("real"))
    with pytest.raises(ModelMismatchError):
        parse_coeff("e", "split")


@pytest.mark.parametrize("model", MODELS)
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_ring_axioms(model, data):
    a, b, c = (data.draw(coeffs(model)) for _ in range(3))
    assert gw_mul(a, b) == gw_mul(b, a)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * 1 == a and a + 0 == a
    assert gw_rank(a * b) == gw_rank(a) * gw_rank(b)
    assert gw_rank(a + b) == gw_rank(a) + gw_rank(b)


@pytest.mark.parametrize("model", MODELS)
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_module_rule_and_grading(model, data):
    hm = hyperbolic_minus(model)
    x = data.draw(coeffs(model)).plus_part()
    assert x * hm == hm * gw_rank(x)
    a, b = data.draw(homogeneous(model)), data.draw(homogeneous(model))
    if a * b:
        assert (a * b).sign() == a.sign() * b.sign()


@pytest.mark.parametrize("model", MODELS)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_text_round_trip(model, data):
    a = data.draw(coeffs(model))
    assert parse_coeff(format_coeff(a), model) == a


def test_format_examples():
    assert str(GWCoeff("split", (3,), 1)) == "3 + Hm"
    assert str(GWCoeff("real", (1, -2), -1)) == "1 - 2*e - Hm"
    assert str(GWCoeff("split", (0,), 0)) == "0"
    assert parse_coeff("2Hp", "real") == GWCoeff("real", (2, 2), 0)


@pytest.mark.parametrize("model", MODELS)
def test_vector_round_trip(model):
    for b in coefficient_basis(model):
        assert GWCoeff.from_vector(model, b.to_vector()) == b
