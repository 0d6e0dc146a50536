"""Root data, Weyl groups, dominance and duality involutions.

Supported families, all in standard epsilon coordinates of the character
lattice ``X* = Z^n``:

* ``C``    -- Sp_{2n}: simple roots e_i - e_{i+1} and 2e_n.
* ``A``    -- GL_n on its full rank-n lattice (semisimple rank n-1).
* ``T``    -- a split torus of rank m (no roots, trivial Weyl group).
* ``C1xn`` -- Sp_2^{x n}, the diagonal product of n copies of Sp_2 inside Sp_{2n}.

Type strings are ``"C3"``, ``"A2gl"`` (GL_3), ``"T4"`` and ``"C1x3"``;
``"A1"`` is accepted as SL_2 = Sp_2 and parses to ``C1``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import _linalg
from .errors import (
    InternalConsistencyError,
    InvalidInvolutionError,
    InvalidTypeError,
    NotDominantError,
    RankCapError,
    RankMismatchError,
)

Weight = tuple  # tuple[int, ...] in epsilon coordinates
Coweight = tuple
Matrix = tuple  # tuple of row tuples

FAMILIES = ("A", "C", "T", "C1xn")
DEFAULT_MAX_RANK = 6


def max_rank() -> int:
    return int(os.environ.get("GWWEYL_MAX_RANK", DEFAULT_MAX_RANK))


@dataclass(frozen=True)
class CartanType:
    family: str
    ss_rank: int
    lattice_rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidTypeError(f"unknown family {self.family!r}")
        if self.family == "T":
            if self.ss_rank != 0 or self.lattice_rank < 1:
                raise InvalidTypeError("torus needs semisimple rank 0 and lattice rank >= 1")
            return
        if self.ss_rank < 1:
            raise InvalidTypeError(f"{self.family} needs positive rank")
        expected = self.ss_rank + 1 if self.family == "A" else self.ss_rank
        if self.lattice_rank != expected:
            raise InvalidTypeError(
                f"{self.family}: lattice rank {self.lattice_rank} != {expected}")

    @classmethod
    def C(cls, n: int) -> "CartanType":
        return cls("C", n, n)

    @classmethod
    def A_gl(cls, n: int) -> "CartanType":
        """GL_n: semisimple rank n - 1 on the rank-n lattice."""
        return cls("A", n - 1, n)

    @classmethod
    def torus(cls, m: int) -> "CartanType":
        return cls("T", 0, m)

    @classmethod
    def sp2_power(cls, n: int) -> "CartanType":
        return cls("C1xn", n, n)

    def __str__(self):
        if self.family == "C":
            return f"C{self.ss_rank}"
        if self.family == "A":
            return f"A{self.ss_rank}gl"
        if self.family == "T":
            return f"T{self.lattice_rank}"
        return f"C1x{self.ss_rank}"


_TYPE_RE = re.compile(r"^(?:(C)(\d+)|(A)(\d+)(gl)?|(T)(\d+)|C1x(\d+))$")


def parse_cartan_type(text: str) -> CartanType:
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise InvalidTypeError(f"cannot parse type {text!r} (try C3, A2gl, T4, C1x3)")
    c, cn, a, an, gl, t, tn, pn = m.groups()
    if c:
        return CartanType.C(int(cn))
    if a:
        n = int(an)
        if gl:
            return CartanType("A", n, n + 1)
        if n == 1:
            return CartanType.C(1)
        raise InvalidTypeError("simply connected A_n lattices other than A1 are unsupported; use A{n}gl")
    if t:
        return CartanType.torus(int(tn))
    return CartanType.sp2_power(int(pn))


# ---------------------------------------------------------------------------


def pairing(x: Sequence[int], y: Sequence) -> int:
    return sum(a * b for a, b in zip(x, y))


def _reflection_matrix(root, coroot) -> Matrix:
    n = len(root)
    return tuple(tuple(int(r == c) - root[r] * coroot[c] for c in range(n)) for r in range(n))


def _identity(n) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def _compose(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def act(w: Matrix, x: Sequence[int]) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in w)


@dataclass(frozen=True, eq=False)
class WeylGroup:
    elements: tuple  # of Matrix
    generators: tuple  # simple reflections
    signs: tuple  # det(w) = (-1)^length, aligned with elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, w):
        return w in self._index

    def __iter__(self):
        return iter(self.elements)

    def sign(self, w: Matrix) -> int:
        return self.signs[self._index[w]]

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {w: i for i, w in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """Root datum in epsilon coordinates.

    ``cartan_matrix[i][j] = <alpha_j, alpha_i coroot>``. ``two_rho`` is twice
    the half-sum of positive roots; ``h`` is the sum of positive coroots.
    ``central`` lists the Z-basis of the group part of the dominant cone
    (the determinant for GL_n, the unit vectors for a torus).
    """

    type: CartanType
    simple_roots: tuple
    positive_roots: tuple
    simple_coroots: tuple
    positive_coroots: tuple
    fundamental_weights: tuple
    central: tuple
    cartan_matrix: tuple
    two_rho: Weight
    h: Coweight
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.type.lattice_rank

    @property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(tuple(-a for a in r) for r in self.positive_roots)

    @property
    def rho_shift(self) -> Weight:
        """An integral weight pairing to 1 with every simple coroot.

        Differs from rho by a W-invariant vector, so it may replace rho in
        the Weyl character formula.
        """
        n = self.rank
        return tuple(sum(w[i] for w in self.fundamental_weights) for i in range(n))

    def height(self, x: Sequence[int]) -> int:
        """``<x, h>``: strictly increasing along the dominance order."""
        return pairing(x, self.h)

    def order_key(self, x: Sequence[int]):
        """Total order refining dominance: (height, lexicographic)."""
        return (self.height(x), tuple(x))

    def weyl_group(self) -> WeylGroup:
        return weyl_group(self)

    def __repr__(self):
        return f"RootSystemData({self.type})"


def _check_cap(t: CartanType):
    cap = max_rank()
    if t.lattice_rank > cap:
        raise RankCapError(f"lattice rank {t.lattice_rank} exceeds cap {cap} (set GWWEYL_MAX_RANK)")


def _simple_data(t: CartanType):
    n = t.lattice_rank
    e = lambda i: tuple(int(j == i) for j in range(n))  # noqa: E731
    sub = lambda a, b: tuple(x - y for x, y in zip(a, b))  # noqa: E731
    if t.family == "T":
        return (), (), (), tuple(e(i) for i in range(n))
    if t.family == "C1xn":
        roots = tuple(tuple(2 * v for v in e(i)) for i in range(n))
        coroots = tuple(e(i) for i in range(n))
        return roots, coroots, tuple(e(i) for i in range(n)), ()
    if t.family == "C":
        roots = [sub(e(i), e(i + 1)) for i in range(n - 1)] + [tuple(2 * v for v in e(n - 1))]
        coroots = [sub(e(i), e(i + 1)) for i in range(n - 1)] + [e(n - 1)]
        fund = [tuple(int(j <= i) for j in range(n)) for i in range(n)]
        return tuple(roots), tuple(coroots), tuple(fund), ()
    # A on the GL_n lattice
    roots = tuple(sub(e(i), e(i + 1)) for i in range(n - 1))
    fund = tuple(tuple(int(j <= i) for j in range(n)) for i in range(n - 1))
    return roots, roots, fund, ((1,) * n,)


def _coroot_of(alpha):
    norm = sum(a * a for a in alpha)
    out = tuple(Fraction(2 * a, norm) for a in alpha)
    if any(c.denominator != 1 for c in out):
        raise InternalConsistencyError(f"non-integral coroot for {alpha}")
    return tuple(int(c) for c in out)


def build_root_system(t: CartanType | str) -> RootSystemData:
    """Root datum for ``t``; cached, so equal types give the same object."""
    if isinstance(t, str):
        t = parse_cartan_type(t)
    _check_cap(t)
    return _build(t)


@lru_cache(maxsize=None)
def _build(t: CartanType) -> RootSystemData:
    simple, simple_co, fund, central = _simple_data(t)
    n = t.lattice_rank
    refl = [_reflection_matrix(a, c) for a, c in zip(simple, simple_co)]
    # close the simple roots under the simple reflections
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for s in refl:
                img = act(s, r)
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    if simple:
        basis = [list(col) for col in zip(*simple)]
        positive = []
        for r in roots:
            coeffs = _linalg.solve(basis, r)
            if coeffs is None or any(c.denominator != 1 for c in coeffs):
                raise InternalConsistencyError(f"root {r} not an integral combination of simple roots")
            if all(c >= 0 for c in coeffs):
                positive.append(r)
            elif not all(c <= 0 for c in coeffs):
                raise InternalConsistencyError(f"root {r} is neither positive nor negative")
    else:
        positive = []
    positive = tuple(sorted(positive, reverse=True))
    pos_co = tuple(_coroot_of(a) for a in positive)
    two_rho = tuple(sum(a[i] for a in positive) for i in range(n))
    h = tuple(sum(c[i] for c in pos_co) for i in range(n))
    cartan = tuple(tuple(pairing(aj, ci) for aj in simple) for ci in simple_co)
    return RootSystemData(
        type=t,
        simple_roots=tuple(simple),
        positive_roots=positive,
        simple_coroots=tuple(simple_co),
        positive_coroots=pos_co,
        fundamental_weights=tuple(fund),
        central=tuple(central),
        cartan_matrix=cartan,
        two_rho=two_rho,
        h=h,
    )


def weyl_group(rs: RootSystemData) -> WeylGroup:
    """Enumerate W by closing the simple reflections under composition."""
    cached = rs._cache.get("weyl")
    if cached is not None:
        return cached
    n = rs.rank
    gens = tuple(_reflection_matrix(a, c) for a, c in zip(rs.simple_roots, rs.simple_coroots))
    ident = _identity(n)
    elements = [ident]
    signs = [1]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            sw = signs[seen[w]]
            for s in gens:
                v = _compose(s, w)
                if v not in seen:
                    seen[v] = len(elements)
                    elements.append(v)
                    signs.append(-sw)
                    nxt.append(v)
        frontier = nxt
    wg = WeylGroup(elements=tuple(elements), generators=gens, signs=tuple(signs))
    rs._cache["weyl"] = wg
    return wg


def _check_rank(rs: RootSystemData, *xs):
    for x in xs:
        if len(x) != rs.rank:
            raise RankMismatchError(f"weight {tuple(x)} has length {len(x)}, expected {rs.rank}")


def is_dominant(rs: RootSystemData, x: Sequence[int]) -> bool:
    _check_rank(rs, x)
    return all(pairing(x, c) >= 0 for c in rs.simple_coroots)


def require_dominant(rs: RootSystemData, x: Sequence[int]) -> Weight:
    if not is_dominant(rs, x):
        raise NotDominantError(f"{tuple(x)} is not dominant for {rs.type}")
    return tuple(x)


def simple_root_coordinates(rs: RootSystemData, v: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of ``v`` in the simple-root basis, or None outside their span."""
    if not rs.simple_roots:
        return [] if not any(v) else None
    basis = [list(col) for col in zip(*rs.simple_roots)]
    return _linalg.solve(basis, list(v))


def dominance_leq(rs: RootSystemData, x: Sequence[int], y: Sequence[int]) -> bool:
    """``x <= y``: ``y - x`` is a non-negative integral combination of positive roots."""
    _check_rank(rs, x, y)
    diff = [b - a for a, b in zip(x, y)]
    if not rs.simple_roots:
        return not any(diff)
    coeffs = simple_root_coordinates(rs, diff)
    if coeffs is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def dominance_lt(rs, x, y) -> bool:
    return tuple(x) != tuple(y) and dominance_leq(rs, x, y)


def to_dominant(rs: RootSystemData, x: Sequence[int]) -> Weight:
    """The unique dominant weight in the W-orbit of ``x``."""
    x = tuple(x)
    changed = True
    while changed:
        changed = False
        for a, c in zip(rs.simple_roots, rs.simple_coroots):
            k = pairing(x, c)
            if k < 0:
                x = tuple(xi - k * ai for xi, ai in zip(x, a))
                changed = True
    return x


def weyl_orbit(rs: RootSystemData, x: Sequence[int]) -> set:
    x = tuple(x)
    orbit = {x}
    frontier = [x]
    refl = weyl_group(rs).generators
    while frontier:
        nxt = []
        for y in frontier:
            for s in refl:
                z = act(s, y)
                if z not in orbit:
                    orbit.add(z)
                    nxt.append(z)
        frontier = nxt
    return orbit


# -- bases ------------------------------------------------------------------


def _fund_basis(rs):
    return list(rs.fundamental_weights) + list(rs.central)


def to_fundamental(rs: RootSystemData, x: Sequence[int]) -> tuple:
    """Coordinates of ``x`` in the basis (fundamental weights, central generators)."""
    _check_rank(rs, x)
    basis = [list(col) for col in zip(*_fund_basis(rs))]
    sol = _linalg.solve(basis, list(x))
    if sol is None:
        raise InternalConsistencyError(f"{tuple(x)} outside the span of the fundamental basis")
    return tuple(int(c) if c.denominator == 1 else c for c in sol)


def from_fundamental(rs: RootSystemData, coords: Sequence) -> Weight:
    basis = _fund_basis(rs)
    if len(coords) != len(basis):
        raise RankMismatchError(f"expected {len(basis)} fundamental coordinates, got {len(coords)}")
    return tuple(sum(c * b[i] for c, b in zip(coords, basis)) for i in range(rs.rank))


def fundamental_weight(rs: RootSystemData, i: int) -> Weight:
    """``omega_i`` (1-based, like the usual notation); ``omega_0 = 0``."""
    if i == 0:
        return (0,) * rs.rank
    return rs.fundamental_weights[i - 1]


def dominant_weights_in_box(rs: RootSystemData, total: int):
    """Dominant weights with non-negative fundamental coordinates summing to <= total.

    Central coordinates (GL_n, tori) are held at zero.
    """
    k = len(rs.fundamental_weights)
    out = []

    def rec(prefix, remaining):
        if len(prefix) == k:
            out.append(from_fundamental(rs, list(prefix) + [0] * len(rs.central)))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a)

    rec([], total)
    return out


# -- duality ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class InvolutionSpec:
    iota_star: Matrix
    w_iota: Matrix

    def duality(self, x):
        """``-w_iota iota* x``."""
        return tuple(-v for v in act(self.w_iota, act(self.iota_star, x)))


def _as_matrix(m) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in m)


def _cone_generators(rs):
    gens = list(rs.fundamental_weights)
    for z in rs.central:
        gens.append(tuple(z))
        gens.append(tuple(-v for v in z))
    return gens


def duality_involution(rs: RootSystemData, iota_star) -> InvolutionSpec:
    """Find the unique Weyl element ``w`` with ``w(-iota*(X+)) = X+``."""
    m = _as_matrix(iota_star)
    n = rs.rank
    if len(m) != n or any(len(row) != n for row in m):
        raise InvalidInvolutionError("iota* has the wrong shape")
    if _compose(m, m) != _identity(n):
        raise InvalidInvolutionError("iota* does not square to the identity")
    roots = set(rs.roots)
    if {act(m, r) for r in roots} != roots:
        raise InvalidInvolutionError("iota* does not permute the roots")
    neg = tuple(tuple(-v for v in row) for row in m)
    gens = _cone_generators(rs)
    matches = [w for w in weyl_group(rs)
               if all(is_dominant(rs, act(w, act(neg, g))) for g in gens)]
    if len(matches) != 1:
        raise InternalConsistencyError(f"expected exactly one w_iota, found {len(matches)}")
    w = matches[0]
    if _compose(w, w) != _identity(n):
        raise InternalConsistencyError("w_iota is not an involution")
    return InvolutionSpec(iota_star=m, w_iota=w)


def identity_involution(rs: RootSystemData) -> InvolutionSpec:
    return duality_involution(rs, _identity(rs.rank))


def inversion_involution(rs: RootSystemData) -> InvolutionSpec:
    """``iota* = -id``: inversion on a torus, transpose-inverse on GL_n."""
    n = rs.rank
    return duality_involution(rs, tuple(tuple(-int(r == c) for c in range(n)) for r in range(n)))


def dual_dominant_weight(rs: RootSystemData, inv: InvolutionSpec, x: Sequence[int]) -> Weight:
    """Highest weight of the twisted dual of ``E_x``."""
    require_dominant(rs, x)
    y = inv.duality(x)
    if not is_dominant(rs, y):
        raise InternalConsistencyError(f"dual of {tuple(x)} is not dominant: {y}")
    return y


def identity_matrix(n: int) -> Matrix:
    return _identity(n)
