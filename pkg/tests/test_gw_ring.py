import random

import pytest

from gwweyl.errors import GeneratorMismatchError, UnsupportedPresetError
from gwweyl.gw_coeff import MODELS, GWCoeff, hyperbolic_minus, hyperbolic_plus
from gwweyl.gw_ring import (
    GWPoly,
    augmentation,
    borel_to_lambda,
    duality_data,
    forgetful,
    forgetful_class,
    generator,
    gw_constant,
    gw_mul,
    gw_poly_from_json,
    lambda_to_borel,
    shadow_generator_set,
    sign_by_plethysm,
    sign_of_weight,
    sp_generator_set,
    sp_sign_table,
    torus_identity_duality,
)
from gwweyl.rep_ring import GenPoly, evaluate, preset_generators
from gwweyl.root_system import (
    build_root_system,
    dominance_lt,
    dominant_weights_in_box,
    fundamental_weight,
)


def random_poly(rng, gens, model, degree=3, terms=4):
    out = {}
    n = len(gens)
    for _ in range(terms):
        e = [0] * n
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(n)] += 1
        vec = [rng.randint(-3, 3) for _ in range(2 if model == "split" else 3)]
        out[tuple(e)] = GWCoeff.from_vector(model, vec)
    return GWPoly(gens, out, model)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sign_table(n):
    assert sp_sign_table(n) == [(-1) ** i for i in range(1, n + 1)]


@pytest.mark.parametrize("t", ["C2", "C3"])
def test_sign_formula_matches_plethysm_oracle(t):
    rs = build_root_system(t)
    dd = duality_data(rs)
    for x in dominant_weights_in_box(rs, 3):
        assert sign_of_weight(rs, dd, x) == sign_by_plethysm(rs, x)


def test_sign_formula_matches_plethysm_on_c4_fundamentals():
    rs = build_root_system("C4")
    dd = duality_data(rs)
    for i in range(1, 5):
        assert sign_of_weight(rs, dd, fundamental_weight(rs, i)) == sign_by_plethysm(rs, fundamental_weight(rs, i))


def test_torus_signs():
    rs = build_root_system("T2")
    assert sign_of_weight(rs, duality_data(rs), (3, -2)) == 1
    ident = torus_identity_duality(rs)
    assert sign_of_weight(rs, ident, (1, 0)) == 0
    assert sign_of_weight(rs, ident, (0, 0)) == 1


def test_gl_signs():
    rs = build_root_system("A2gl")
    dd = duality_data(rs, "GLTransposeInverse")
    for x in dominant_weights_in_box(rs, 3):
        assert sign_of_weight(rs, dd, x) == 1


def test_unsupported_preset():
    rs = build_root_system("T2")
    with pytest.raises(UnsupportedPresetError):
        duality_data(rs, "SpIdentity")
    with pytest.raises(UnsupportedPresetError):
        duality_data(rs, "Nope")


@pytest.mark.parametrize("t", ["C2", "C3"])
def test_sign_total_and_multiplicative(t):
    rs = build_root_system(t)
    dd = duality_data(rs)
    ws = dominant_weights_in_box(rs, 3)
    for x in ws:
        assert sign_of_weight(rs, dd, x) != 0
        for y in ws:
            xy = tuple(a + b for a, b in zip(x, y))
            assert sign_of_weight(rs, dd, xy) == sign_of_weight(rs, dd, x) * sign_of_weight(rs, dd, y)


def test_gw_mul_examples():
    for model in MODELS:
        gens = sp_generator_set(1, "borel", model)
        b = generator(gens, 0, model)
        one = gw_constant(gens, 1, model)
        assert gw_mul(b, one) == b
        bb = gw_mul(b, b)
        assert bb == GWPoly(gens, {(2,): GWCoeff.one(model)}, model)
        assert bb.homogeneous_sign() == 1
        assert b.homogeneous_sign() == -1
        hm = gw_constant(gens, hyperbolic_minus(model), model)
        assert gw_mul(hm, hm) == gw_constant(gens, hyperbolic_plus(model) * 2, model)


def test_gw_mul_rejects_mismatched_generators():
    a = generator(sp_generator_set(2, "lambda"), 0)
    b = generator(sp_generator_set(2, "borel"), 0)
    with pytest.raises(GeneratorMismatchError):
        gw_mul(a, b)
    with pytest.raises(GeneratorMismatchError):
        gw_mul(a, generator(sp_generator_set(2, "lambda", "real"), 0, "real"))


@pytest.mark.parametrize("model", MODELS)
def test_sign_grading_is_multiplicative(model):
    rng = random.Random(3)
    gens = sp_generator_set(3, "lambda", model)
    hm = hyperbolic_minus(model)
    for _ in range(50):
        e1 = tuple(rng.randint(0, 2) for _ in range(3))
        e2 = tuple(rng.randint(0, 2) for _ in range(3))
        c1 = hm * rng.randint(1, 3) if rng.random() < 0.5 else GWCoeff.integer(model, rng.randint(1, 3))
        c2 = hm * rng.randint(1, 3) if rng.random() < 0.5 else GWCoeff.integer(model, rng.randint(1, 3))
        a, b = GWPoly(gens, {e1: c1}, model), GWPoly(gens, {e2: c2}, model)
        assert (a * b).homogeneous_sign() == a.homogeneous_sign() * b.homogeneous_sign()


def test_forgetful_examples():
    gens = sp_generator_set(1, "lambda")
    assert forgetful(gw_constant(gens, 1)) == GenPoly(1, {(0,): 1})
    assert forgetful(gw_constant(gens, hyperbolic_minus("split"))) == GenPoly(1, {(0,): 2})
    assert forgetful(generator(gens, 0)) == GenPoly(1, {(1,): 1})


@pytest.mark.parametrize("model", MODELS)
def test_forgetful_is_a_ring_map(model):
    rng = random.Random(5)
    gens = sp_generator_set(2, "lambda", model)
    for _ in range(20):
        a, b = random_poly(rng, gens, model), random_poly(rng, gens, model)
        assert forgetful(a * b) == forgetful(a) * forgetful(b)


@pytest.mark.parametrize("model", MODELS)
def test_augmentation_is_a_ring_map(model):
    rng = random.Random(6)
    for basis in ("lambda", "borel"):
        gens = sp_generator_set(3, basis, model)
        for _ in range(20):
            a, b = random_poly(rng, gens, model), random_poly(rng, gens, model)
            assert augmentation(a * b) == augmentation(a) * augmentation(b)


def test_augmentation_examples():
    for model in MODELS:
        b = generator(sp_generator_set(1, "borel", model), 0, model)
        assert augmentation(b) == 0
        assert augmentation(gw_constant(b.gens, 1, model)) == 1
        lam = sp_generator_set(2, "lambda", model)
        assert augmentation(generator(lam, 1, model)) == hyperbolic_plus(model) * 2 + 2
        assert all(g.augmentation == 0 for r in range(1, 5) for g in sp_generator_set(r, "borel", model))


@pytest.mark.parametrize("model", MODELS)
def test_lambda_generators(model):
    (v,) = sp_generator_set(1, "lambda", model)
    assert v.sign == -1
    assert v.augmentation == hyperbolic_minus(model)
    for r in range(1, 5):
        rs = build_root_system(f"C{r}")
        for k, g in enumerate(sp_generator_set(r, "lambda", model), start=1):
            assert g.sign == (-1) ** k
            assert g.augmentation.sign() == g.sign
            assert g.augmentation.rank() == sum(m * _dim(rs, x) for x, m in g.shadow.items())


def _dim(rs, x):
    from gwweyl.char_ring import weyl_dimension
    return weyl_dimension(rs, x)


@pytest.mark.parametrize("model", MODELS)
def test_basis_change_examples(model):
    hm = hyperbolic_minus(model)
    lam1, bor1 = sp_generator_set(1, "lambda", model), sp_generator_set(1, "borel", model)
    assert lambda_to_borel(generator(lam1, 0, model), 1) == generator(bor1, 0, model) + gw_constant(bor1, hm, model)
    c = gw_constant(lam1, 5, model)
    assert lambda_to_borel(c, 1) == gw_constant(bor1, 5, model)
    lam2, bor2 = sp_generator_set(2, "lambda", model), sp_generator_set(2, "borel", model)
    got = lambda_to_borel(generator(lam2, 1, model), 2)
    expected = GWPoly(bor2, {(0, 1): GWCoeff.one(model), (1, 0): hm,
                             (0, 0): hyperbolic_plus(model) * 2 + 2}, model)
    assert got == expected


@pytest.mark.parametrize("model", MODELS)
def test_basis_change_round_trip(model):
    rng = random.Random(8)
    for r in (1, 2, 3, 4):
        lam = sp_generator_set(r, "lambda", model)
        bor = sp_generator_set(r, "borel", model)
        for _ in range(10):
            a = random_poly(rng, lam, model)
            b = lambda_to_borel(a, r)
            assert borel_to_lambda(b, r) == a
            assert augmentation(a) == augmentation(b)
            c = random_poly(rng, bor, model)
            assert lambda_to_borel(borel_to_lambda(c, r), r) == c


@pytest.mark.parametrize("r", [2, 3])
def test_monomial_shadows_are_triangular(r):
    # forgetful image of each lambda monomial is E_x + lower terms
    rs = build_root_system(f"C{r}")
    gens = sp_generator_set(r, "lambda")
    k0_gens = preset_generators(rs, "sp-lambda")
    for e in [(1, 0, 0)[:r], (0, 1, 0)[:r], (2, 1, 0)[:r], (1, 1, 1)[:r], (0, 2, 1)[:r]]:
        mono = GWPoly(gens, {e: GWCoeff.one("split")})
        c = forgetful_class(rs, mono)
        assert c == evaluate(forgetful(mono), k0_gens)
        top = tuple(sum(a * w[j] for a, w in zip(e, rs.fundamental_weights)) for j in range(r))
        assert c[top] == 1
        assert all(x == top or dominance_lt(rs, x, top) for x in c)


def test_borel_shadow_ranks_are_zero():
    for r in (1, 2, 3):
        rs = build_root_system(f"C{r}")
        for g in sp_generator_set(r, "borel"):
            assert sum(m * _dim(rs, x) for x, m in g.shadow.items()) == 0


def test_json_round_trip():
    for model in MODELS:
        gens = sp_generator_set(2, "lambda", model)
        a = random_poly(random.Random(1), gens, model)
        assert gw_poly_from_json(a.to_json(), gens) == a
    with pytest.raises(GeneratorMismatchError):
        gw_poly_from_json({"generators": ["x"], "terms": []}, sp_generator_set(1))


def test_generator_range():
    with pytest.raises(ValueError):
        sp_generator_set(7)


def test_shadow_set_accepts_borel():
    rs = build_root_system("C2")
    gens = shadow_generator_set(rs, sp_generator_set(2, "borel"))
    assert gens.names == ["s1(b)", "s2(b)"]
