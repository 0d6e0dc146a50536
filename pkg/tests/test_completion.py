import itertools

import pytest

from gwweyl.completion import (
    TruncSeries,
    atiyah_segal_map,
    cofinality_check,
    commuting_triangle,
    completion_map,
    finite_stage,
    graded_topology_check,
    limit_consistency,
    partitions_count,
    series_mul,
    series_subst,
    series_variable,
    stage_transition,
    symmetric_orbit_count,
)
from gwweyl.errors import TruncationError
from gwweyl.gw_coeff import MODELS, GWCoeff
from gwweyl.gw_ring import generator, gw_constant, sp_generator_set
from gwweyl.poly import SparsePoly

ONE = GWCoeff.one("split")


def test_series_basics():
    b = series_variable(["b1"], 3, 0)
    one = TruncSeries(["b1"], 3, {(0,): ONE})
    assert series_mul(b, one) == b
    b1 = series_variable(["b1"], 1, 0)
    assert series_mul(b1, b1) == TruncSeries(["b1"], 1)
    y = [series_variable(["y1", "y2"], 2, i) for i in range(2)]
    got = series_subst(SparsePoly(1, {(2,): ONE}), [y[0] + y[1]])
    assert got == TruncSeries(["y1", "y2"], 2, {(2, 0): ONE, (1, 1): ONE * 2, (0, 2): ONE})


def test_series_errors():
    y = series_variable(["y1"], 2, 0)
    with pytest.raises(TruncationError):
        series_subst(SparsePoly(1, {(1,): ONE}), [y + 1])
    with pytest.raises(TruncationError):
        series_mul(y, series_variable(["y1"], 3, 0))
    with pytest.raises(TruncationError):
        TruncSeries(["y1"], -1)


def test_series_sign():
    y = series_variable(["y1", "y2"], 4, 0)
    assert y.sign() == -1
    assert (y * y).sign() == 1
    assert (y + y * y).sign() is None


@pytest.mark.parametrize("model", MODELS)
def test_completion_map_examples(model):
    cm = completion_map(1, 5, model)
    b = generator(sp_generator_set(1, "borel", model), 0, model)
    assert cm(b) == cm.target_variable(0)
    c = gw_constant(b.gens, 7, model)
    assert cm(c) == TruncSeries(["s1(b)"], 5, {(0,): GWCoeff.integer(model, 7)}, model=model)
    cm2 = completion_map(2, 3, model)
    assert sorted(m.terms.popitem()[0] for m in cm2.domain_basis()) == \
        sorted(e for e in itertools.product(range(4), range(2)) if e[0] + 2 * e[1] <= 3)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_completion_map_bijective(r, model):
    assert completion_map(r, 6, model).is_bijective()


def test_completion_accepts_lambda_input():
    cm = completion_map(2, 4)
    lam = sp_generator_set(2, "lambda")
    image = cm(generator(lam, 0))
    assert image.constant_term() == GWCoeff("split", (0,), 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_cofinality(r):
    for D in range(7):
        assert cofinality_check(r, D)


def test_graded_topology_examples():
    assert graded_topology_check(2, 0, 4)
    assert graded_topology_check(1, 1, 4)
    assert graded_topology_check(2, 2, 6)
    with pytest.raises(ValueError):
        graded_topology_check(2, 3, 4)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_graded_topology_all(r, model):
    for D in range(7):
        for i in range(D // 2 + 1):
            assert graded_topology_check(r, i, D, model)


def test_finite_stage_examples():
    R = finite_stage(1, 1)
    b = SparsePoly(1, {(1,): ONE})
    assert R.reduce(b) == SparsePoly(1)
    R5 = finite_stage(1, 5)
    assert R5.basis(3) == [(0,), (1,), (2,), (3,)]
    with pytest.raises(ValueError):
        finite_stage(1, 0)


def test_transitions_compose():
    r = 2
    R3, R5, R8 = (finite_stage(r, N) for N in (3, 5, 8))
    x = R8.element({(7, 1): ONE, (4, 4): ONE * 3, (2, 0): ONE, (0, 0): ONE})
    direct = stage_transition(R8, R3)(x)
    composed = stage_transition(R5, R3)(stage_transition(R8, R5)(x))
    assert direct == composed
    with pytest.raises(ValueError):
        stage_transition(R3, R5)


@pytest.mark.parametrize("model", MODELS)
def test_limit_consistency(model):
    for r in (1, 2, 3):
        for D in range(6):
            for sched in (lambda n: n, lambda n: n + 1):
                assert limit_consistency(r, D, sched, model=model)


def test_limit_consistency_requires_increasing_schedule():
    with pytest.raises(ValueError):
        limit_consistency(1, 2, lambda n: 3)


def test_partition_counts_against_enumeration():
    for r in range(1, 5):
        for d in range(10):
            assert partitions_count(d, r) == symmetric_orbit_count(r, d)


@pytest.mark.parametrize("model", MODELS)
def test_atiyah_segal_examples(model):
    asm = atiyah_segal_map(1, 4, model)
    b = generator(sp_generator_set(1, "borel", model), 0, model)
    assert asm(b) == series_variable(["y1"], 4, 0, model=model)
    asm2 = atiyah_segal_map(2, 4, model)
    s1 = generator(sp_generator_set(2, "borel", model), 0, model)
    y = [series_variable(["y1", "y2"], 4, i, model=model) for i in range(2)]
    assert asm2(s1) == y[0] + y[1]
    asm0 = atiyah_segal_map(2, 0, model)
    c = gw_constant(s1.gens, GWCoeff.integer(model, 3), model)
    assert asm0(c) == TruncSeries(["y1", "y2"], 0, {(0, 0): GWCoeff.integer(model, 3)}, model=model)
    assert asm0(s1) == TruncSeries(["y1", "y2"], 0, model=model)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_atiyah_segal_injective_onto_invariants(r, model):
    asm = atiyah_segal_map(r, 6, model)
    assert asm.is_injective()
    assert asm.is_bijective_onto_invariants()
    for rep in asm.report():
        assert rep.image_rank == rep.invariant_dim


@pytest.mark.parametrize("model", MODELS)
def test_atiyah_segal_is_a_ring_map(model):
    asm = atiyah_segal_map(3, 6, model)
    gens = sp_generator_set(3, "borel", model)
    a = generator(gens, 0, model) + gw_constant(gens, 2, model)
    b = generator(gens, 1, model) * generator(gens, 2, model)
    assert asm(a * b) == asm(a) * asm(b)


@pytest.mark.parametrize("model", MODELS)
def test_commuting_triangle(model):
    for r in (1, 2, 3):
        for D in range(7):
            assert commuting_triangle(r, D, model)


def test_lambda_input_to_atiyah_segal():
    asm = atiyah_segal_map(2, 3)
    lam = sp_generator_set(2, "lambda")
    v = generator(lam, 0)
    y = [series_variable(["y1", "y2"], 3, i) for i in range(2)]
    hm = GWCoeff("split", (0,), 1)
    assert asm(v) == y[0] + y[1] + TruncSeries(["y1", "y2"], 3, {(0, 0): hm * 2})
