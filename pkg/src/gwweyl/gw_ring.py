"""The graded ring GW^+-(Rep(G, iota)) in its polynomial presentation.

Elements are polynomials over :class:`~gwweyl.gw_coeff.GWCoeff` in signed
generators. Each generator carries its sign (the degree of its form), the
class of its underlying representation in K_0 and its augmentation, i.e.
its image in GW^+-(k) under restriction to the trivial group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .char_ring import K0Class, exterior_square, symmetric_square
from .diag_restrict import restrict_lambda_borel
from .errors import GeneratorMismatchError, UnsupportedPresetError
from .gw_coeff import GWCoeff, gw_rank, hyperbolic_minus, parse_coeff
from .poly import SparsePoly
from .rep_ring import (
    Generator,
    GeneratorSet,
    GenPoly,
    evaluate,
    preset_generators,
)
from .root_system import (
    CartanType,
    InvolutionSpec,
    RootSystemData,
    build_root_system,
    fundamental_weight,
    identity_involution,
    inversion_involution,
    pairing,
    require_dominant,
)

PRESETS = ("SpIdentity", "TorusInversion", "GLTransposeInverse")


@dataclass(frozen=True, eq=False)
class DualityData:
    involution: InvolutionSpec
    preset: str


def duality_data(rs: RootSystemData, preset: str | None = None) -> DualityData:
    """Duality for one of the shipped presets; the default follows the family."""
    fam = rs.type.family
    default = {"C": "SpIdentity", "C1xn": "SpIdentity", "T": "TorusInversion",
               "A": "GLTransposeInverse"}[fam]
    preset = preset or default
    ok = {"SpIdentity": ("C", "C1xn"), "TorusInversion": ("T",), "GLTransposeInverse": ("A",)}
    if preset not in ok:
        raise UnsupportedPresetError(f"unknown preset {preset!r}")
    if fam not in ok[preset]:
        raise UnsupportedPresetError(f"preset {preset} does not apply to {rs.type}")
    inv = identity_involution(rs) if preset == "SpIdentity" else inversion_involution(rs)
    return DualityData(inv, preset)


def torus_identity_duality(rs: RootSystemData) -> DualityData:
    """Torus with trivial involution: only the zero weight is self-dual."""
    if rs.type.family != "T":
        raise UnsupportedPresetError("only for tori")
    return DualityData(identity_involution(rs), "TorusIdentity")


def sign_of_weight(rs: RootSystemData, dd: DualityData, x) -> int:
    """+1 symmetric, -1 anti-symmetric, 0 not self-dual."""
    x = require_dominant(rs, x)
    if dd.involution.duality(x) != x:
        return 0
    if dd.preset == "SpIdentity":
        return -1 if pairing(x, rs.h) % 2 else 1
    if dd.preset in ("TorusInversion", "GLTransposeInverse", "TorusIdentity"):
        return 1
    raise UnsupportedPresetError(f"no sign rule for preset {dd.preset!r}")


def sign_by_plethysm(rs: RootSystemData, x) -> int:
    """Sign of the invariant form on E_x for the untwisted duality.

    A self-dual irreducible carries a symmetric form iff the trivial
    representation occurs in Sym^2, and an alternating one iff it occurs in
    Lambda^2. Independent of :func:`sign_of_weight`.
    """
    zero = (0,) * rs.rank
    s = symmetric_square(rs, x)[zero]
    a = exterior_square(rs, x)[zero]
    if s and a:
        raise AssertionError("form both symmetric and alternating")
    return 1 if s else (-1 if a else 0)


# -- signed generators and polynomials ---------------------------------------------


@dataclass(frozen=True)
class SignedGenerator:
    name: str
    sign: int
    shadow: K0Class
    leading: tuple
    augmentation: GWCoeff
    invertible: bool = False


class GWPoly(SparsePoly):
    """Polynomial over GWCoeff in a fixed tuple of signed generators."""

    __slots__ = ("gens", "model")

    def __init__(self, gens: Sequence[SignedGenerator], terms=(), model="split"):
        self.gens = tuple(gens)
        self.model = model
        super().__init__(len(self.gens), terms)

    def _new(self, terms):
        return GWPoly(self.gens, terms, self.model)

    def _check(self, other):
        if isinstance(other, GWPoly):
            if other.gens != self.gens:
                raise GeneratorMismatchError("polynomials use different generator sets")
            if other.model != self.model:
                raise GeneratorMismatchError("polynomials use different coefficient models")
            return other
        return super()._check(other)

    def constant(self, c):
        if isinstance(c, int):
            c = GWCoeff.integer(self.model, c)
        return super().constant(c)

    @property
    def names(self):
        return [g.name for g in self.gens]

    def term_sign(self, exp, coeff) -> int | None:
        s = coeff.sign()
        if s is None:
            return None
        for g, k in zip(self.gens, exp):
            if k % 2 and g.sign < 0:
                s = -s
        return s

    def homogeneous_sign(self) -> int | None:
        """Common sign of all terms, or None when mixed. Zero counts as +1."""
        signs = {self.term_sign(e, c) for e, c in self.terms.items()}
        if not signs:
            return 1
        if len(signs) == 1 and None not in signs:
            return signs.pop()
        return None

    def inverse(self):
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (e, c), = self.terms.items()
        if c not in (GWCoeff.one(self.model), -GWCoeff.one(self.model)):
            raise ValueError("only unit monomials are invertible")
        if any(k and not g.invertible for g, k in zip(self.gens, e)):
            raise ValueError("monomial involves a non-invertible generator")
        return self._raw({tuple(-k for k in e): c})

    def __str__(self):
        return self.format(self.names)

    def to_json(self) -> dict:
        return {
            "generators": self.names,
            "model": self.model,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items())],
        }


def gw_poly_from_json(data, gens: Sequence[SignedGenerator], model: str = "split") -> GWPoly:
    if isinstance(data, str):
        data = json.loads(data)
    names = [g.name for g in gens]
    if data.get("generators", names) != names:
        raise GeneratorMismatchError(f"expected generators {names}, got {data['generators']}")
    model = data.get("model", model)
    return GWPoly(gens, ((tuple(t["exp"]), parse_coeff(str(t["coeff"]), model))
                         for t in data["terms"]), model)


def generator(gens, i: int, model="split") -> GWPoly:
    e = [0] * len(gens)
    e[i] = 1
    return GWPoly(gens, {tuple(e): GWCoeff.one(model)}, model)


def gw_constant(gens, c, model="split") -> GWPoly:
    return GWPoly(gens, (), model).constant(c)


def gw_mul(a: GWPoly, b: GWPoly) -> GWPoly:
    return a * b


def shadow_generator_set(rs: RootSystemData, gens: Sequence[SignedGenerator],
                         strict: bool = False) -> GeneratorSet:
    # Borel shadows such as V - 2 have incomparable lower terms, so the
    # default only asks for triangularity in the total order.
    return GeneratorSet(rs, [Generator(g.name, g.shadow, g.leading, g.invertible) for g in gens],
                        strict=strict)


def forgetful(a: GWPoly) -> GenPoly:
    """Forget forms: coefficients go to their ranks, generators to their shadows."""
    return GenPoly(a.nvars, ((e, gw_rank(c)) for e, c in a.terms.items()))


def forgetful_class(rs: RootSystemData, a: GWPoly) -> K0Class:
    return evaluate(forgetful(a), shadow_generator_set(rs, a.gens))


def augmentation(a: GWPoly) -> GWCoeff:
    """Image in GW^+-(k); ``a`` lies in the augmentation ideal iff this is zero."""
    total = GWCoeff.zero(a.model)
    for e, c in a.terms.items():
        term = c
        for g, k in zip(a.gens, e):
            if k > 0:
                term = term * (g.augmentation ** k)
            elif k < 0:
                # invertible generators are one-dimensional symmetric lines
                term = term * (g.augmentation ** (-k))
        total = total + term
    return total


def in_augmentation_ideal(a: GWPoly) -> bool:
    return not augmentation(a)


# -- symplectic generator sets -------------------------------------------------------


def _lambda_augmentation(k: int, r: int, model: str) -> GWCoeff:
    """Coefficient of t^k in (1 + Hm t + t^2)^r."""
    one = GWCoeff.one(model)
    series = [one]
    for _ in range(r):
        new = [GWCoeff.zero(model)] * (len(series) + 2)
        for i, c in enumerate(series):
            new[i] = new[i] + c
            new[i + 1] = new[i + 1] + c * hyperbolic_minus(model)
            new[i + 2] = new[i + 2] + c
        series = new
    return series[k] if k < len(series) else GWCoeff.zero(model)


@lru_cache(maxsize=None)
def sp_generator_set(r: int, basis: str = "lambda", model: str = "split") -> tuple:
    """Signed generators of GW^+-(Rep Sp_{2r}).

    ``lambda``: the exterior powers Lambda^k(V, phi), k = 1..r.
    ``borel``:  the elementary symmetric functions s_k(b) of the Borel classes
                of the diagonal Sp_2 factors; they generate the augmentation ideal.
    """
    if not 1 <= r <= 6:
        raise ValueError("r must be in 1..6")
    rs = build_root_system(CartanType.C(r))
    if basis == "lambda":
        shadows = preset_generators(rs, "sp-lambda")
        return tuple(
            SignedGenerator(g.name, (-1) ** k, g.shadow, g.leading, _lambda_augmentation(k, r, model))
            for k, g in enumerate(shadows, start=1))
    if basis == "borel":
        images = _borel_images_in_lambda(r, model)
        return tuple(
            SignedGenerator(f"s{k}(b)", (-1) ** k, forgetful_class(rs, images[k - 1]),
                            fundamental_weight(rs, k), GWCoeff.zero(model))
            for k in range(1, r + 1))
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _lambda_images_in_borel_terms(r: int, model: str) -> tuple:
    """Term dicts of ``Lambda^k`` in the s_j(b) variables, k = 1..r."""
    return tuple(dict(restrict_lambda_borel(k, r, model).terms) for k in range(1, r + 1))


@lru_cache(maxsize=None)
def _borel_images_in_lambda(r: int, model: str) -> tuple:
    """``s_k(b)`` written in the lambda generators, solved by triangularity."""
    lam = sp_generator_set(r, "lambda", model)
    images: list[GWPoly] = []
    for k in range(1, r + 1):
        terms = _lambda_images_in_borel_terms(r, model)[k - 1]
        top = tuple(int(i == k - 1) for i in range(r))
        # s_k = Lambda^k - (everything else), and everything else only uses s_j, j < k
        rest = GWPoly(lam, (), model)
        for e, c in terms.items():
            if e == top:
                continue
            mono = gw_constant(lam, c, model)
            for j, a in enumerate(e):
                if a:
                    mono = mono * images[j] ** a
            rest = rest + mono
        images.append(generator(lam, k - 1, model) - rest)
    return tuple(images)


def lambda_to_borel(a: GWPoly, r: int) -> GWPoly:
    borel = sp_generator_set(r, "borel", a.model)
    targets = []
    for terms in _lambda_images_in_borel_terms(r, a.model):
        targets.append(GWPoly(borel, terms, a.model))
    if a.gens != sp_generator_set(r, "lambda", a.model):
        raise GeneratorMismatchError("expected a polynomial in the lambda generators")
    return a.substitute(targets, one=GWCoeff.one(a.model))


def borel_to_lambda(a: GWPoly, r: int) -> GWPoly:
    if a.gens != sp_generator_set(r, "borel", a.model):
        raise GeneratorMismatchError("expected a polynomial in the Borel generators")
    return a.substitute(list(_borel_images_in_lambda(r, a.model)), one=GWCoeff.one(a.model))


def sp_sign_table(n: int) -> list[int]:
    """sign_of_weight(omega_i) for i = 1..n under the identity involution on Sp_{2n}."""
    rs = build_root_system(CartanType.C(n))
    dd = duality_data(rs, "SpIdentity")
    return [sign_of_weight(rs, dd, fundamental_weight(rs, i)) for i in range(1, n + 1)]
