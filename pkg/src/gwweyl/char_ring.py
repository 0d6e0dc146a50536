"""Characters: Laurent polynomials on the character lattice and K_0 classes.

``LaurentPoly`` is Z[X*] with ``t_i`` standing for the character ``e_i``.
``K0Class`` is an element of K_0(Rep G) written in the basis of irreducibles
``E_x``, keyed by dominant weights in epsilon coordinates.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    InternalConsistencyError,
    NotACharacterError,
    NotARepresentationError,
    RankMismatchError,
)
from .poly import SparsePoly
from .root_system import (
    RootSystemData,
    act,
    is_dominant,
    pairing,
    require_dominant,
    to_dominant,
    weyl_group,
    weyl_orbit,
)


class LaurentPoly(SparsePoly):
    __slots__ = ()

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def from_weights(cls, n: int, weights: Iterable) -> "LaurentPoly":
        return cls(n, ((tuple(w), 1) for w in weights))

    def weyl_act(self, w) -> "LaurentPoly":
        """Permute exponents by the lattice matrix ``w``."""
        if len(w) != self.nvars:
            raise RankMismatchError("matrix size does not match the lattice rank")
        return self._raw({act(w, e): c for e, c in self.terms.items()})

    def inverse(self) -> "LaurentPoly":
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise ValueError("only unit monomials are invertible")
        return self._raw({tuple(-v for v in e): c})

    def evaluate_at_ones(self) -> int:
        return sum(self.terms.values())

    def format(self, names=None) -> str:
        names = names or [f"t{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_weyl_act(p: LaurentPoly, w) -> LaurentPoly:
    return p.weyl_act(w)


def laurent_divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[X*]; raises if ``den`` does not divide ``num``.

    Lex-leading terms are cancelled one at a time. Every exponent of an exact
    quotient lies in the box ``[min(num) - min(den), max(num) - max(den)]``
    coordinatewise, which bounds the loop.
    """
    if not den:
        raise ZeroDivisionError("division by zero")
    n = num.nvars
    if not num:
        return LaurentPoly(n)
    lo = [min(e[i] for e in num.terms) - min(e[i] for e in den.terms) for i in range(n)]
    hi = [max(e[i] for e in num.terms) - max(e[i] for e in den.terms) for i in range(n)]
    dlead = max(den.terms)
    dc = den.terms[dlead]
    rem = dict(num.terms)
    quot = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        q = tuple(a - b for a, b in zip(lead, dlead))
        if c % dc or any(not (l <= v <= h) for v, l, h in zip(q, lo, hi)):
            raise InternalConsistencyError("Laurent division is not exact")
        qc = c // dc
        quot[q] = qc
        for e, v in den.terms.items():
            k = tuple(a + b for a, b in zip(q, e))
            s = rem.get(k, 0) - qc * v
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return LaurentPoly(n, quot)


# ---------------------------------------------------------------------------


class K0Class(Mapping):
    """Finite map from dominant weights to integer multiplicities."""

    __slots__ = ("_m",)

    def __init__(self, multiplicities: Mapping | Iterable = ()):
        acc: dict = {}
        items = multiplicities.items() if isinstance(multiplicities, Mapping) else multiplicities
        for k, v in items:
            k = tuple(k)
            acc[k] = acc.get(k, 0) + v
        self._m = {k: v for k, v in acc.items() if v}

    def __getitem__(self, k):
        return self._m.get(tuple(k), 0)

    def __iter__(self):
        return iter(self._m)

    def __len__(self):
        return len(self._m)

    def __contains__(self, k):
        return tuple(k) in self._m

    def __eq__(self, other):
        if isinstance(other, K0Class):
            return self._m == other._m
        if isinstance(other, Mapping):
            return self._m == K0Class(other)._m
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def __add__(self, other):
        return K0Class(list(self._m.items()) + list(K0Class(other)._m.items()))

    def __neg__(self):
        return K0Class({k: -v for k, v in self._m.items()})

    def __sub__(self, other):
        return self + (-K0Class(other))

    def scale(self, c: int) -> "K0Class":
        return K0Class({k: c * v for k, v in self._m.items()})

    def is_actual(self) -> bool:
        return all(v > 0 for v in self._m.values())

    def __repr__(self):
        return f"K0Class({dict(sorted(self._m.items(), reverse=True))})"

    def format(self, label=None) -> str:
        if not self._m:
            return "0"
        label = label or (lambda w: ",".join(map(str, w)))
        parts = []
        for k, v in sorted(self._m.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
            name = f"E_{label(k)}"
            parts.append(name if v == 1 else ("-" + name if v == -1 else f"{v}*{name}"))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {",".join(map(str, k)): v for k, v in sorted(self._m.items())}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "K0Class":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(int(x) for x in k.split(",")): int(v) for k, v in data.items()})


def trivial_class(rs: RootSystemData) -> K0Class:
    return K0Class({(0,) * rs.rank: 1})


# -- Weyl character formula ---------------------------------------------------


def _alternant(rs: RootSystemData, x) -> LaurentPoly:
    wg = weyl_group(rs)
    return LaurentPoly(rs.rank, ((act(w, x), s) for w, s in zip(wg.elements, wg.signs)))


def weyl_denominator(rs: RootSystemData) -> LaurentPoly:
    den = rs._cache.get("weyl_den")
    if den is None:
        den = _alternant(rs, rs.rho_shift)
        rs._cache["weyl_den"] = den
    return den


def weyl_character(rs: RootSystemData, x) -> LaurentPoly:
    """Character of ``E_x`` as the exact quotient of Weyl alternants."""
    x = require_dominant(rs, x)
    cache = rs._cache.setdefault("chars", {})
    if x in cache:
        return cache[x]
    shifted = tuple(a + b for a, b in zip(x, rs.rho_shift))
    ch = laurent_divide_exact(_alternant(rs, shifted), weyl_denominator(rs))
    cache[x] = ch
    return ch


def weyl_dimension(rs: RootSystemData, x) -> int:
    x = require_dominant(rs, x)
    num = Fraction(1)
    for co in rs.positive_coroots:
        num *= Fraction(pairing(x, co) * 2 + pairing(rs.two_rho, co), pairing(rs.two_rho, co))
    if num.denominator != 1:
        raise InternalConsistencyError("non-integral Weyl dimension")
    return int(num)


def _fund_coweight_bounds(rs: RootSystemData, x):
    """Upper bounds on the simple-root coordinates of ``x - mu`` for dominant mu <= x."""
    from . import _linalg

    k = len(rs.simple_roots)
    # fundamental coweights restricted to the root span: <alpha_j, v_i> = delta_ij
    gram = [[pairing(a, c) for c in rs.simple_coroots] for a in rs.simple_roots]
    inv = _linalg.inverse(gram)
    bounds = []
    for i in range(k):
        v = [sum(inv[j][i] * rs.simple_coroots[j][t] for j in range(k)) for t in range(rs.rank)]
        b = sum(Fraction(xt) * vt for xt, vt in zip(x, v))
        bounds.append(int(b))  # floor for non-negative b
    return bounds


def dominant_weights_below(rs: RootSystemData, x) -> list:
    """All dominant mu with mu <= x, by scanning simple-root coordinates."""
    x = tuple(x)
    if not rs.simple_roots:
        return [x]
    bounds = _fund_coweight_bounds(rs, x)
    out = []

    def rec(i, mu):
        if i == len(bounds):
            if is_dominant(rs, mu):
                out.append(mu)
            return
        a = rs.simple_roots[i]
        for c in range(bounds[i] + 1):
            rec(i + 1, tuple(m - c * ai for m, ai in zip(mu, a)))

    rec(0, x)
    return out


def freudenthal_multiplicities(rs: RootSystemData, x) -> dict:
    """Dominant weight multiplicities of ``E_x`` by Freudenthal's recursion.

    Independent of the alternant division in :func:`weyl_character`; uses
    the standard inner product in epsilon coordinates, which is W-invariant
    for every supported family.
    """
    x = require_dominant(rs, x)
    dom = dominant_weights_below(rs, x)
    dom.sort(key=rs.order_key, reverse=True)
    mult = {x: 1}
    dot = lambda a, b: sum(p * q for p, q in zip(a, b))  # noqa: E731
    allowed = set(dom)

    def m(nu):
        d = to_dominant(rs, nu)
        return mult.get(d, 0) if d in allowed else 0

    for mu in dom:
        if mu == x:
            continue
        # (x + rho)^2 - (mu + rho)^2 = (x - mu, x + mu + 2 rho)
        denom = dot([a - b for a, b in zip(x, mu)],
                    [a + b + c for a, b, c in zip(x, mu, rs.two_rho)])
        total = 0
        for alpha in rs.positive_roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                d = to_dominant(rs, nu)
                if d not in allowed:
                    break
                total += m(nu) * dot(nu, alpha)
                k += 1
        val = Fraction(2 * total, denom)
        if val.denominator != 1:
            raise InternalConsistencyError(f"non-integral Freudenthal multiplicity at {mu}")
        if val:
            mult[mu] = int(val)
    return mult


def freudenthal_character(rs: RootSystemData, x) -> LaurentPoly:
    terms = []
    for mu, m in freudenthal_multiplicities(rs, x).items():
        terms.extend((w, m) for w in weyl_orbit(rs, mu))
    return LaurentPoly(rs.rank, terms)


# -- K_0 <-> characters --------------------------------------------------------


def character_of(rs: RootSystemData, c: Mapping) -> LaurentPoly:
    out = LaurentPoly.zero(rs.rank)
    for x, m in K0Class(c).items():
        out = out + weyl_character(rs, x) * m
    return out


def is_weyl_invariant(rs: RootSystemData, p: LaurentPoly) -> bool:
    return all(p.weyl_act(s) == p for s in weyl_group(rs).generators)


def decompose_character(rs: RootSystemData, p: LaurentPoly) -> K0Class:
    """Write a W-invariant Laurent polynomial in the basis of irreducible characters."""
    if p.nvars != rs.rank:
        raise RankMismatchError("character lives on a lattice of the wrong rank")
    if not is_weyl_invariant(rs, p):
        raise NotACharacterError("polynomial is not Weyl-invariant")
    rem = dict(p.terms)
    out = {}
    last = None
    while rem:
        top = max(rem, key=rs.order_key)
        if last is not None and rs.order_key(top) >= rs.order_key(last):
            raise InternalConsistencyError("leading weight failed to decrease")
        if not is_dominant(rs, top):
            raise InternalConsistencyError(f"maximal exponent {top} is not dominant")
        c = rem[top]
        out[top] = c
        for e, v in weyl_character(rs, top).terms.items():
            s = rem.get(e, 0) - c * v
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
        last = top
    return K0Class(out)


def _dot_dominant(rs: RootSystemData, v) -> tuple[tuple | None, int]:
    """Reflect ``v`` into the dominant chamber; None if it lies on a wall.

    Returns the dominant weight and the sign of the Weyl element used.
    """
    v = tuple(v)
    sign = 1
    changed = True
    while changed:
        changed = False
        for a, c in zip(rs.simple_roots, rs.simple_coroots):
            k = pairing(v, c)
            if k == 0:
                continue
            if k < 0:
                v = tuple(vi - k * ai for vi, ai in zip(v, a))
                sign = -sign
                changed = True
    if any(pairing(v, c) == 0 for c in rs.simple_coroots):
        return None, 0
    return v, sign


def tensor_decompose(rs: RootSystemData, x, y) -> K0Class:
    """``E_x * E_y`` in the irreducible basis, by the Brauer-Klimyk rule.

    Each weight ``mu`` of the smaller factor contributes
    ``sign(w) E_{w(x + mu + rho) - rho}`` for the ``w`` making it dominant.
    """
    x = require_dominant(rs, x)
    y = require_dominant(rs, y)
    if weyl_dimension(rs, x) < weyl_dimension(rs, y):
        x, y = y, x
    rho = rs.rho_shift
    out: dict = {}
    for mu, m in weyl_character(rs, y).terms.items():
        v = tuple(a + b + r for a, b, r in zip(x, mu, rho))
        dom, sign = _dot_dominant(rs, v)
        if dom is None:
            continue
        z = tuple(a - r for a, r in zip(dom, rho))
        out[z] = out.get(z, 0) + sign * m
    return K0Class(out)


def tensor_decompose_by_characters(rs: RootSystemData, x, y) -> K0Class:
    """Oracle for :func:`tensor_decompose`: multiply characters and decompose."""
    x = require_dominant(rs, x)
    y = require_dominant(rs, y)
    return decompose_character(rs, weyl_character(rs, x) * weyl_character(rs, y))


def weight_multiset(rs: RootSystemData, v: Mapping) -> dict:
    return dict(character_of(rs, v).terms)


def exterior_power_characters(rs: RootSystemData, v: Mapping, kmax: int) -> list:
    """Characters of Lambda^0 .. Lambda^kmax of an actual representation ``v``.

    Computed as elementary symmetric functions of the weight multiset via
    the generating product prod_w (1 + e^w t)^{m_w}.
    """
    v = K0Class(v)
    if not v.is_actual():
        raise NotARepresentationError("exterior powers need non-negative multiplicities")
    n = rs.rank
    coeffs = [LaurentPoly.one(n)] + [LaurentPoly.zero(n) for _ in range(kmax)]
    for w, m in weight_multiset(rs, v).items():
        if m < 0:
            raise NotARepresentationError("character has a negative weight multiplicity")
        mono = LaurentPoly(n, {w: 1})
        for _ in range(m):
            for k in range(kmax, 0, -1):
                if coeffs[k - 1]:
                    coeffs[k] = coeffs[k] + coeffs[k - 1] * mono
    return coeffs


def lambda_character(rs: RootSystemData, v: Mapping, k: int) -> K0Class:
    """``Lambda^k`` of an actual representation, decomposed into irreducibles."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return decompose_character(rs, exterior_power_characters(rs, v, k)[k])


def class_dimension(rs: RootSystemData, c: Mapping) -> int:
    return sum(m * weyl_dimension(rs, x) for x, m in K0Class(c).items())


def adams_double(p: LaurentPoly) -> LaurentPoly:
    """Second Adams operation: every exponent doubled."""
    return p._raw({tuple(2 * v for v in e): c for e, c in p.terms.items()})


def symmetric_square(rs: RootSystemData, x) -> K0Class:
    ch = weyl_character(rs, x)
    return _half(rs, ch * ch + adams_double(ch))


def exterior_square(rs: RootSystemData, x) -> K0Class:
    ch = weyl_character(rs, x)
    return _half(rs, ch * ch - adams_double(ch))


def _half(rs, p):
    if any(c % 2 for c in p.terms.values()):
        raise InternalConsistencyError("plethysm coefficient not even")
    return decompose_character(rs, p._raw({e: c // 2 for e, c in p.terms.items()}))
