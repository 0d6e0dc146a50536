"""Augmentation-ideal completion at finite precision.

The completion of GW^+-(Rep Sp_{2r}) is modelled by truncated power series.
In the Borel basis the augmentation ideal IO is generated by the variables
``s_k = s_k(b)``, so ideal powers are read off from minimum degrees. We
truncate by weighted degree (``s_k`` has weight k), which matches the
grading on the y-side where ``s_k -> e_k(y)`` is homogeneous of degree k.
The weighted and unweighted filtrations are cofinal
(:func:`cofinality_check`), so both give the same completion.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil
from typing import Callable, Sequence

from . import _linalg
from .diag_restrict import _monomials_up_to, elementary_symmetric
from .errors import TruncationError
from .gw_coeff import GWCoeff, coefficient_basis, epsilon, hyperbolic_minus
from .gw_ring import GWPoly, lambda_to_borel, sp_generator_set
from .poly import SparsePoly

MAX_R = 6


class TruncSeries(SparsePoly):
    """Power series over GWCoeff, truncated above weighted degree ``cap``.

    Every variable has sign -1 (it is a Borel-type class), so a monomial's
    sign is the parity of its unweighted degree.
    """

    __slots__ = ("names", "cap", "weights", "model")

    def __init__(self, names: Sequence[str], cap: int, terms=(), weights=None, model="split"):
        if cap < 0:
            raise TruncationError("cap must be non-negative")
        self.names = tuple(names)
        self.cap = cap
        self.weights = tuple(weights) if weights else (1,) * len(self.names)
        self.model = model
        super().__init__(len(self.names), terms)
        self.terms = {e: c for e, c in self.terms.items() if self._deg(e) <= cap}

    def _deg(self, e) -> int:
        return sum(a * w for a, w in zip(e, self.weights))

    def _new(self, terms):
        return TruncSeries(self.names, self.cap, terms, self.weights, self.model)

    def _raw(self, terms):
        out = SparsePoly._raw(self, terms)
        out.terms = {e: c for e, c in out.terms.items() if self._deg(e) <= self.cap}
        return out

    def _check(self, other):
        if isinstance(other, TruncSeries):
            if other.cap != self.cap:
                raise TruncationError(f"cap mismatch: {self.cap} vs {other.cap}")
            if other.names != self.names or other.weights != self.weights:
                raise TruncationError("series use different variables")
            return other
        return super()._check(other)

    def constant(self, c):
        if isinstance(c, int):
            c = GWCoeff.integer(self.model, c)
        return super().constant(c)

    def mul(self, other, keep=None):
        inner = keep or (lambda e: True)
        return super().mul(other, lambda e: self._deg(e) <= self.cap and inner(e))

    def degree_part(self, d: int) -> "TruncSeries":
        return self._raw({e: c for e, c in self.terms.items() if self._deg(e) == d})

    def min_weighted_degree(self) -> int | None:
        return min((self._deg(e) for e in self.terms), default=None)

    def sign(self) -> int | None:
        signs = set()
        for e, c in self.terms.items():
            s = c.sign()
            if s is None:
                return None
            signs.add(s * (-1) ** sum(e))
        if len(signs) > 1:
            return None
        return signs.pop() if signs else 1

    def __str__(self):
        return self.format(list(self.names))


def series_variable(names, cap, i, weights=None, model="split") -> TruncSeries:
    e = tuple(int(j == i) for j in range(len(names)))
    return TruncSeries(names, cap, {e: GWCoeff.one(model)}, weights, model)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def series_subst(s: SparsePoly, images: Sequence[TruncSeries]) -> TruncSeries:
    """Substitute series without constant term for the variables of ``s``."""
    if not images:
        raise TruncationError("need at least one image")
    cap = images[0].cap
    for im in images:
        if im.cap != cap:
            raise TruncationError("images have different caps")
        if im.constant_term():
            raise TruncationError("cannot substitute a series with non-zero constant term")
    model = images[0].model
    return s.substitute(list(images), one=GWCoeff.one(model))


def y_names(r: int) -> list[str]:
    return [f"y{i + 1}" for i in range(r)]


def sigma_names(r: int) -> list[str]:
    return [f"s{k + 1}(b)" for k in range(r)]


def _check_r(r: int):
    if not 1 <= r <= MAX_R:
        raise ValueError(f"r must be in 1..{MAX_R}")


# -- linear algebra over the coefficient ring -----------------------------------------


def _z_rows(polys, keys, model):
    """Integer coordinates of ``p * beta`` for each p and Z-basis element beta."""
    basis = coefficient_basis(model)
    width = len(basis)
    rows = []
    for p in polys:
        for beta in basis:
            q = p * beta
            row = []
            for e in keys:
                c = q.terms.get(e)
                row.extend(c.to_vector() if c else (0,) * width)
            rows.append(row)
    return rows


def _unimodular(rows) -> bool:
    if not rows:
        return True
    if len(rows) != len(rows[0]):
        return False
    return abs(_linalg.determinant(rows)) == 1


# -- the completion of the representation ring -----------------------------------------


@dataclass
class CompletionMap:
    """GW^+-(Rep Sp_{2r}) -> GW^+-(k)[[s_1..s_r]] modulo weighted degree > D."""

    r: int
    cap: int
    model: str = "split"

    @property
    def weights(self):
        return tuple(range(1, self.r + 1))

    def target_variable(self, k: int) -> TruncSeries:
        return series_variable(sigma_names(self.r), self.cap, k, self.weights, self.model)

    def __call__(self, a: GWPoly) -> TruncSeries:
        lam = sp_generator_set(self.r, "lambda", a.model)
        if a.gens == lam:
            a = lambda_to_borel(a, self.r)
        elif a.gens != sp_generator_set(self.r, "borel", a.model):
            raise ValueError("expected a polynomial in the lambda or Borel generators")
        return TruncSeries(sigma_names(self.r), self.cap, a.terms, self.weights, self.model)

    def domain_basis(self) -> list[GWPoly]:
        gens = sp_generator_set(self.r, "borel", self.model)
        return [GWPoly(gens, {e: GWCoeff.one(self.model)}, self.model)
                for e in _monomials_up_to(self.r, self.cap, self.weights)]

    def is_bijective(self) -> bool:
        """Unimodularity of the map from the quotient by weighted degree > D."""
        images = [self(m) for m in self.domain_basis()]
        keys = _monomials_up_to(self.r, self.cap, self.weights)
        return _unimodular(_z_rows(images, keys, self.model))


def completion_map(r: int, D: int, model: str = "split") -> CompletionMap:
    _check_r(r)
    return CompletionMap(r, D, model)


def cofinality_check(r: int, D: int) -> bool:
    """IO^{D+1} ⊆ J_D ⊆ IO^{ceil((D+1)/r)} on all monomials up to degree r*(D+1).

    ``J_D`` is spanned by monomials of weighted degree > D and IO^m by
    monomials of unweighted degree >= m.
    """
    weights = range(1, r + 1)
    lower = ceil((D + 1) / r)
    for e in _monomials_up_to(r, r * (D + 1)):
        plain = sum(e)
        weighted = sum(a * w for a, w in zip(e, weights))
        if plain >= D + 1 and weighted <= D:
            return False
        if weighted > D and plain < lower:
            return False
    return True


# -- graded versus ungraded topology ------------------------------------------------------


def _monomial(r, e, model, coeff=None):
    return SparsePoly(r, {tuple(e): coeff if coeff is not None else GWCoeff.one(model)})


def _min_degree(p: SparsePoly) -> int | None:
    return min((sum(e) for e in p.terms), default=None)


def _plus_ideal_generators(r: int, max_degree: int, model: str) -> list[SparsePoly]:
    """Z-spanning set of the plus part of IO in degrees 1..max_degree.

    Plus elements of the ideal: even monomials times plus coefficients and
    odd monomials times Hm.
    """
    out = []
    for e in _monomials_up_to(r, max_degree):
        d = sum(e)
        if d == 0:
            continue
        if d % 2 == 0:
            out.append(_monomial(r, e, model))
            if model == "real":
                out.append(_monomial(r, e, model, epsilon(model)))
        else:
            out.append(_monomial(r, e, model, hyperbolic_minus(model)))
    return out


def _factor_into_plus(e: tuple, i: int) -> tuple[list[tuple], tuple]:
    """Split ``b^e`` (degree >= 2i) into i degree-two monomials and a rest."""
    letters = [v for v, a in enumerate(e) for _ in range(a)]
    pairs = []
    for j in range(i):
        p = [0] * len(e)
        p[letters[2 * j]] += 1
        p[letters[2 * j + 1]] += 1
        pairs.append(tuple(p))
    rest = [0] * len(e)
    for v in letters[2 * i:]:
        rest[v] += 1
    return pairs, tuple(rest)


def graded_topology_check(r: int, i: int, D: int, model: str = "split") -> bool:
    """Check IO^{2i} ⊆ (IO^+)^i R and (IO^+)^i R ⊆ IO^i up to degree D.

    Coordinates are b_1..b_r with IO = (b_1..b_r); each b has sign -1.
    """
    if 2 * i > D:
        raise ValueError("need 2i <= D")
    if i == 0:
        return True
    one = GWCoeff.one(model)
    # first inclusion: explicit factorization into plus monomials
    for e in _monomials_up_to(r, D):
        if sum(e) < 2 * i:
            continue
        pairs, rest = _factor_into_plus(e, i)
        prod = _monomial(r, rest, model)
        for p in pairs:
            if sum(p) % 2 or sum(p) == 0:
                return False
            prod = prod * _monomial(r, p, model)
        if prod != _monomial(r, e, model, one):
            return False
    # second inclusion: products of i plus generators land in IO^i
    gens = _plus_ideal_generators(r, D - (i - 1), model)
    gens.sort(key=_min_degree)
    for combo in itertools.combinations_with_replacement(range(len(gens)), i):
        if sum(_min_degree(gens[j]) for j in combo) > D:
            continue
        prod = _monomial(r, (0,) * r, model)
        for j in combo:
            prod = prod * gens[j]
        md = _min_degree(prod)
        if md is not None and md < i:
            return False
    return True


# -- finite stages ----------------------------------------------------------------------------


@dataclass
class FiniteStageRing:
    """GW^+-(k)[b_1..b_r] / (b_1^N, ..., b_r^N)."""

    r: int
    N: int
    model: str = "split"

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")

    def reduce(self, p: SparsePoly) -> SparsePoly:
        return SparsePoly(self.r, {e: c for e, c in p.terms.items() if max(e, default=0) < self.N})

    def mul(self, a: SparsePoly, b: SparsePoly) -> SparsePoly:
        return a.mul(b, keep=lambda e: max(e, default=0) < self.N)

    def basis(self, max_degree: int | None = None) -> list[tuple]:
        out = itertools.product(range(self.N), repeat=self.r)
        if max_degree is not None:
            out = (e for e in out if sum(e) <= max_degree)
        return sorted(out)

    def element(self, terms) -> SparsePoly:
        return self.reduce(SparsePoly(self.r, terms))


def finite_stage(r: int, N: int, model: str = "split") -> FiniteStageRing:
    _check_r(r)
    return FiniteStageRing(r, N, model)


def stage_transition(src: FiniteStageRing, tgt: FiniteStageRing) -> Callable[[SparsePoly], SparsePoly]:
    """The quotient map from a higher stage onto a lower one."""
    if src.r != tgt.r or src.model != tgt.model:
        raise ValueError("stages are not comparable")
    if src.N < tgt.N:
        raise ValueError("transitions go from larger N to smaller N")
    return tgt.reduce


def _low(p: SparsePoly, D: int) -> SparsePoly:
    return SparsePoly(p.nvars, {e: c for e, c in p.terms.items() if sum(e) <= D})


def _random_element(rng, r, max_degree, model, bound=3):
    terms = {}
    for e in _monomials_up_to(r, max_degree):
        if rng.random() < 0.4:
            vec = [rng.randint(-bound, bound) for _ in coefficient_basis(model)]
            c = GWCoeff.from_vector(model, vec)
            if c:
                terms[e] = c
    return SparsePoly(r, terms)


def limit_consistency(r: int, D: int, schedule: Callable[[int], int] = lambda n: n,
                      stages: int | None = None, model: str = "split", seed: int = 0) -> bool:
    """Finite-precision form of lim_N GW[b]/(b^N) = GW[[y]].

    For each stage N = schedule(n) with N > D, the part of degree <= D must
    match the truncated series ring (same monomial basis, same products),
    transitions must restrict to the identity there, and transitions must
    compose and be surjective ring maps.
    """
    _check_r(r)
    stages = stages or D + 3
    Ns = [schedule(n) for n in range(1, stages + 1)]
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise ValueError("schedule must be strictly increasing")
    rings = [finite_stage(r, N, model) for N in Ns]
    trunc = _monomials_up_to(r, D)
    rng = random.Random(seed)
    big = [R for R in rings if R.N > D]
    if not big:
        return False
    for R in big:
        if sorted(R.basis(D)) != sorted(trunc):
            return False
        for _ in range(5):
            a = _random_element(rng, r, D, model)
            b = _random_element(rng, r, D, model)
            in_stage = R.mul(a, b)
            as_series = a.mul(b, keep=lambda e: sum(e) <= D)
            if _low(in_stage, D) != as_series:
                return False
    for hi, lo in itertools.combinations(range(len(rings)), 2):
        src, tgt = rings[lo], rings[hi]  # src has the larger N
        f = stage_transition(src, tgt)
        for e in tgt.basis():
            if f(src.element({e: GWCoeff.one(model)})) != tgt.element({e: GWCoeff.one(model)}):
                return False
        for _ in range(3):
            a = src.reduce(_random_element(rng, r, D + 2, model))
            b = src.reduce(_random_element(rng, r, D + 2, model))
            if f(src.mul(a, b)) != tgt.mul(f(a), f(b)):
                return False
            if tgt.N > D and _low(f(a), D) != _low(a, D):
                return False
    for i, j, k in itertools.combinations(range(len(rings)), 3):
        a = rings[k].reduce(_random_element(rng, r, D + 3, model))
        direct = stage_transition(rings[k], rings[i])(a)
        composed = stage_transition(rings[j], rings[i])(stage_transition(rings[k], rings[j])(a))
        if direct != composed:
            return False
    return True


# -- the Atiyah-Segal map ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions_count(d: int, max_parts: int) -> int:
    """Partitions of d into at most ``max_parts`` parts (equivalently parts <= max_parts)."""
    if d == 0:
        return 1
    if max_parts == 0:
        return 0
    rest = partitions_count(d - max_parts, max_parts) if d >= max_parts else 0
    return partitions_count(d, max_parts - 1) + rest


def symmetric_orbit_count(r: int, d: int) -> int:
    """Number of S_r-orbits on monomials of degree d in r variables, by enumeration."""
    orbits = {tuple(sorted(e)) for e in _monomials_up_to(r, d) if sum(e) == d}
    return len(orbits)


@dataclass
class DegreeReport:
    degree: int
    domain_dim: int
    image_rank: int
    invariant_dim: int
    unimodular: bool

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "domain_dim": self.domain_dim,
            "image_rank": self.image_rank,
            "invariant_dim": self.invariant_dim,
            "injective": self.injective,
            "onto_invariants": self.onto_invariants,
        }

    @property
    def injective(self) -> bool:
        return self.image_rank == self.domain_dim

    @property
    def onto_invariants(self) -> bool:
        return self.image_rank == self.invariant_dim and self.unimodular


@dataclass
class AtiyahSegalMap:
    """s_k(b) -> e_k(y_1..y_r) into GW^+-(k)[[y]] modulo degree > D."""

    r: int
    cap: int
    model: str = "split"
    _images: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        names = y_names(self.r)
        self._images = [TruncSeries(names, self.cap,
                                    ((e, GWCoeff.integer(self.model, c))
                                     for e, c in elementary_symmetric(k, self.r).terms.items()),
                                    model=self.model)
                        for k in range(1, self.r + 1)]

    @property
    def images(self) -> list[TruncSeries]:
        return list(self._images)

    def __call__(self, a: GWPoly) -> TruncSeries:
        if a.gens == sp_generator_set(self.r, "lambda", a.model):
            a = lambda_to_borel(a, self.r)
        elif a.gens != sp_generator_set(self.r, "borel", a.model):
            raise ValueError("expected a polynomial in the lambda or Borel generators")
        return self.apply_exponents(a.terms)

    def apply_exponents(self, terms) -> TruncSeries:
        return series_subst(SparsePoly(self.r, terms), self._images)

    def degree_report(self, d: int) -> DegreeReport:
        weights = tuple(range(1, self.r + 1))
        dom = [e for e in _monomials_up_to(self.r, d, weights)
               if sum(a * w for a, w in zip(e, weights)) == d]
        one = GWCoeff.one(self.model)
        images = [self.apply_exponents({e: one}) for e in dom]
        for im in images:
            if any(sum(e) != d for e in im.terms):
                raise AssertionError("image is not homogeneous")
        # every image is symmetric, so its coordinates on sorted exponents
        # are its coordinates in the orbit-sum basis
        orbit_keys = sorted({tuple(sorted(e, reverse=True))
                             for e in _monomials_up_to(self.r, d) if sum(e) == d})
        all_keys = sorted({e for im in images for e in im.terms})
        rank = _linalg.rank(_z_rows(images, all_keys, self.model))
        width = len(coefficient_basis(self.model))
        return DegreeReport(
            degree=d,
            domain_dim=len(dom) * width,
            image_rank=rank,
            invariant_dim=symmetric_orbit_count(self.r, d) * width,
            unimodular=_unimodular(_z_rows(images, orbit_keys, self.model)),
        )

    def report(self) -> list[DegreeReport]:
        return [self.degree_report(d) for d in range(self.cap + 1)]

    def images_symmetric(self) -> bool:
        from .diag_restrict import is_symmetric
        return all(is_symmetric(im) for im in self._images)

    def is_injective(self) -> bool:
        return all(rep.injective for rep in self.report())

    def is_bijective_onto_invariants(self) -> bool:
        return self.images_symmetric() and all(rep.onto_invariants for rep in self.report())


def atiyah_segal_map(r: int, D: int, model: str = "split") -> AtiyahSegalMap:
    _check_r(r)
    return AtiyahSegalMap(r, D, model)


def commuting_triangle(r: int, D: int, model: str = "split") -> bool:
    """Completion followed by s_k -> e_k(y) agrees with the Atiyah-Segal map on a basis."""
    cm = completion_map(r, D, model)
    asm = atiyah_segal_map(r, D, model)
    for m in cm.domain_basis():
        via = series_subst(SparsePoly(r, cm(m).terms), [
            TruncSeries(y_names(r), D, im.terms, model=model) for im in asm.images])
        if via != asm(m):
            return False
    return True
