"""Restriction from Sp_{2n} to the diagonal Sp_2^{x n} and symmetric functions.

On the diagonal subgroup the graded GW ring is a polynomial ring in the
classes ``v_i`` of the standard forms of the factors, or equivalently in the
rank-zero classes ``b_i = v_i - Hm``. Each ``v_i`` and ``b_i`` is of minus
degree. Exterior powers restrict to the coefficients of
``prod_i (1 + v_i t + t^2)``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import _linalg
from .char_ring import K0Class, LaurentPoly, decompose_character
from .errors import NonSymmetricError, InternalConsistencyError
from .gw_coeff import GWCoeff, coefficient_basis, gw_rank, hyperbolic_minus
from .poly import SparsePoly
from .root_system import CartanType, build_root_system

MAX_N = 6


class DiagPoly(SparsePoly):
    """Polynomial over GWCoeff in ``v_1..v_n`` (tag ``"v"``) or ``b_1..b_n`` (tag ``"b"``)."""

    __slots__ = ("tag", "model")

    def __init__(self, nvars, terms=(), tag="v", model="split"):
        self.tag = tag
        self.model = model
        super().__init__(nvars, terms)

    def _new(self, terms):
        return DiagPoly(self.nvars, terms, self.tag, self.model)

    def constant(self, c):
        if isinstance(c, int):
            c = GWCoeff.integer(self.model, c)
        return super().constant(c)

    @property
    def names(self):
        return [f"{self.tag}{i + 1}" for i in range(self.nvars)]

    def sign(self, exp) -> int:
        return (-1) ** sum(exp)

    def __str__(self):
        return self.format(self.names)


class ElementaryPoly(SparsePoly):
    """Polynomial in the elementary symmetric functions ``s1..sn`` of some variables."""

    __slots__ = ("tag", "model")

    def __init__(self, nvars, terms=(), tag="v", model="split"):
        self.tag = tag
        self.model = model
        super().__init__(nvars, terms)

    def _new(self, terms):
        return ElementaryPoly(self.nvars, terms, self.tag, self.model)

    @property
    def names(self):
        return [f"s{i + 1}({self.tag})" for i in range(self.nvars)]

    @property
    def weights(self):
        return tuple(range(1, self.nvars + 1))

    def __str__(self):
        return self.format(self.names)


def _unit(model):
    return GWCoeff.one(model)


def variable(n: int, i: int, tag="v", model="split") -> DiagPoly:
    e = [0] * n
    e[i] = 1
    return DiagPoly(n, {tuple(e): _unit(model)}, tag, model)


@lru_cache(maxsize=None)
def lambda_series(n: int, model: str = "split") -> tuple:
    """Coefficients of ``prod_{i<=n} (1 + v_i t + t^2)``, i.e. t^0 .. t^{2n}."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}")
    one = DiagPoly(n, {(0,) * n: _unit(model)}, "v", model)
    zero = DiagPoly(n, (), "v", model)
    coeffs = [one] + [zero] * (2 * n)
    for i in range(n):
        v = variable(n, i, "v", model)
        new = [zero] * (2 * n + 1)
        for k, c in enumerate(coeffs):
            if not c:
                continue
            new[k] = new[k] + c
            if k + 1 <= 2 * n:
                new[k + 1] = new[k + 1] + c * v
            if k + 2 <= 2 * n:
                new[k + 2] = new[k + 2] + c
        coeffs = new
    return tuple(coeffs)


def restrict_lambda(k: int, n: int, model: str = "split") -> DiagPoly:
    """Restriction of ``Lambda^k(V, phi)`` from Sp_{2n} to Sp_2^{x n}."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return lambda_series(n, model)[k]


# -- symmetric functions ----------------------------------------------------------------


@lru_cache(maxsize=None)
def elementary_symmetric(k: int, n: int) -> SparsePoly:
    """``e_k(x_1..x_n)`` with integer coefficients."""
    terms = {}
    for combo in itertools.combinations(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


def expand_elementary_monomial(exps, n: int) -> SparsePoly:
    """``prod_k e_k^{exps[k-1]}`` expanded in the underlying variables."""
    out = SparsePoly(n, {(0,) * n: 1})
    for k, a in enumerate(exps, start=1):
        if a:
            out = out * elementary_symmetric(k, n) ** a
    return out


def is_symmetric(p: SparsePoly) -> bool:
    n = p.nvars
    for i in range(n - 1):
        swapped = {e[:i] + (e[i + 1], e[i]) + e[i + 2:]: c for e, c in p.terms.items()}
        if swapped != p.terms:
            return False
    return True


def to_elementary_symmetric(p: DiagPoly) -> ElementaryPoly:
    """Rewrite a symmetric polynomial in elementary symmetric functions.

    Repeatedly cancels the graded-lex leading monomial ``x^a`` (which has
    ``a_1 >= ... >= a_n``) with ``prod e_k^{a_k - a_{k+1}}``.
    """
    if not is_symmetric(p):
        raise NonSymmetricError("polynomial is not invariant under permuting variables")
    n = p.nvars
    key = lambda e: (sum(e), e)  # noqa: E731
    rem = SparsePoly(n, p.terms)
    out = {}
    last = None
    while rem:
        lead = max(rem.terms, key=key)
        if last is not None and key(lead) >= key(last):
            raise InternalConsistencyError("leading monomial failed to decrease")
        c = rem.terms[lead]
        exps = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        if any(a < 0 for a in exps):
            raise InternalConsistencyError("leading exponent is not a partition")
        out[exps] = c
        rem = rem - expand_elementary_monomial(exps, n) * c
        last = lead
    return ElementaryPoly(n, out, p.tag, getattr(p, "model", "split"))


def from_elementary_symmetric(q: ElementaryPoly) -> DiagPoly:
    n = q.nvars
    out = DiagPoly(n, (), q.tag, q.model)
    for e, c in q.terms.items():
        out = out + DiagPoly(n, expand_elementary_monomial(e, n).terms, q.tag, q.model) * c
    return out


def verify_triangularity(k: int, n: int, model: str = "split") -> bool:
    """``res Lambda^k = s_k + (polynomial in s_j, j < k)``."""
    q = to_elementary_symmetric(restrict_lambda(k, n, model))
    top = tuple(int(i == k - 1) for i in range(n))
    if q[top] != _unit(model):
        return False
    for e in q.terms:
        if e == top:
            continue
        if any(e[j] for j in range(k - 1, n)):
            return False
    return True


def v_to_b(p: DiagPoly) -> DiagPoly:
    """Substitute ``v_i = b_i + Hm``."""
    if p.tag != "v":
        raise ValueError("expected a polynomial in the v-variables")
    n = p.nvars
    hm = hyperbolic_minus(p.model)
    images = []
    for i in range(n):
        b = variable(n, i, "b", p.model)
        images.append(b + b.constant(hm))
    return p.substitute(images, one=_unit(p.model)) if n else p


def b_to_v(p: DiagPoly) -> DiagPoly:
    """Substitute ``b_i = v_i - Hm``."""
    if p.tag != "b":
        raise ValueError("expected a polynomial in the b-variables")
    n = p.nvars
    hm = hyperbolic_minus(p.model)
    images = []
    for i in range(n):
        v = variable(n, i, "v", p.model)
        images.append(v - v.constant(hm))
    return p.substitute(images, one=_unit(p.model))


def restrict_lambda_borel(k: int, n: int, model: str = "split") -> ElementaryPoly:
    """``res Lambda^k`` as a polynomial in ``s_j(b)`` with GW coefficients."""
    return to_elementary_symmetric(v_to_b(restrict_lambda(k, n, model)))


# -- K_0 shadows and injectivity ----------------------------------------------------------


def diag_forgetful(p: DiagPoly) -> K0Class:
    """Forget forms: coefficients to ranks, ``v_i`` to the standard rep of factor i."""
    n = p.nvars
    rs = build_root_system(CartanType.sp2_power(n))
    images = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        if p.tag == "v":
            images.append(LaurentPoly(n, {e: 1, tuple(-x for x in e): 1}))
        else:
            images.append(LaurentPoly(n, {e: 1, tuple(-x for x in e): 1, (0,) * n: -2}))
    int_poly = SparsePoly(n, ((e, gw_rank(c)) for e, c in p.terms.items()))
    ch = int_poly.substitute(images)
    return decompose_character(rs, ch)


def _monomials_up_to(nvars: int, max_degree: int, weights=None):
    w = weights or (1,) * nvars
    out = []

    def rec(prefix, remaining):
        if len(prefix) == nvars:
            out.append(tuple(prefix))
            return
        wi = w[len(prefix)]
        for a in range(remaining // wi + 1):
            rec(prefix + [a], remaining - a * wi)

    rec([], max_degree)
    return out


def z_matrix_rank(images: list, model: str) -> tuple[int, int]:
    """Z-rank of the GW-linear span of ``images`` (polynomials over GWCoeff).

    Each image is multiplied by each Z-basis element of the coefficient ring
    and flattened to integer coordinates. Returns ``(rank, columns)``.
    """
    basis = coefficient_basis(model)
    cols = []
    for p in images:
        for beta in basis:
            cols.append(p * beta)
    keys = sorted({e for q in cols for e in q.terms})
    width = len(basis)
    rows = []
    for q in cols:
        row = []
        for e in keys:
            c = q.terms.get(e)
            row.extend(c.to_vector() if c else (0,) * width)
        rows.append(row)
    return _linalg.rank(rows), len(rows)


def restriction_rank(n: int, max_degree: int, model: str = "split") -> tuple[int, int]:
    """Rank test for injectivity of ``Lambda^k -> res Lambda^k`` on monomials of degree <= max_degree."""
    gens = [restrict_lambda(k, n, model) for k in range(1, n + 1)]
    images = []
    for e in _monomials_up_to(n, max_degree):
        p = DiagPoly(n, {(0,) * n: _unit(model)}, "v", model)
        for g, a in zip(gens, e):
            if a:
                p = p * g ** a
        images.append(p)
    return z_matrix_rank(images, model)
