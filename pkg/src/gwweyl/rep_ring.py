"""K_0(Rep G) as a ring: products, polynomial presentations and restriction."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import _linalg
from .char_ring import (
    K0Class,
    LaurentPoly,
    character_of,
    class_dimension,
    decompose_character,
    lambda_character,
)
from .errors import (
    GeneratorSetIncompleteError,
    InternalConsistencyError,
    InvalidLatticeMapError,
    NotACharacterError,
    UnsupportedPresetError,
)
from .poly import SparsePoly
from .root_system import (
    CartanType,
    RootSystemData,
    build_root_system,
    dominance_lt,
    fundamental_weight,
    is_dominant,
)


def k0_mul(rs: RootSystemData, a: Mapping, b: Mapping) -> K0Class:
    return decompose_character(rs, character_of(rs, a) * character_of(rs, b))


def k0_pow(rs: RootSystemData, a: Mapping, k: int) -> K0Class:
    out = K0Class({(0,) * rs.rank: 1})
    for _ in range(k):
        out = k0_mul(rs, out, a)
    return out


@dataclass(frozen=True)
class Generator:
    name: str
    shadow: K0Class
    leading: tuple
    invertible: bool = False


class GeneratorSet:
    """Ordered polynomial generators of K_0(Rep G).

    Each shadow must be ``E_lead + (strictly smaller terms)``; invertible
    generators must be one-dimensional. With ``strict=False`` the lower
    terms only need to be smaller in the fixed total refinement of
    dominance, which is all the triangular elimination relies on.
    """

    def __init__(self, rs: RootSystemData, generators: Sequence[Generator], strict: bool = True):
        self.rs = rs
        self.strict = strict
        self.generators = tuple(generators)
        for g in self.generators:
            self._validate(g)
        self._basis = [list(col) for col in zip(*(g.leading for g in self.generators))]
        self._cache_pow: dict = {}

    def _validate(self, g: Generator):
        rs = self.rs
        if g.shadow[g.leading] != 1:
            raise GeneratorSetIncompleteError(f"{g.name}: leading weight has multiplicity {g.shadow[g.leading]}")
        lead = tuple(g.leading)
        for x in g.shadow:
            if x == lead:
                continue
            if self.strict:
                below = dominance_lt(rs, x, lead)
            else:
                below = rs.order_key(x) < rs.order_key(lead)
            if not below:
                raise GeneratorSetIncompleteError(f"{g.name}: term {x} is not below the leading weight")
        if g.invertible and (len(g.shadow) != 1 or class_dimension(rs, g.shadow) != 1):
            raise GeneratorSetIncompleteError(f"{g.name}: invertible generators must be one-dimensional")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def __eq__(self, other):
        return (isinstance(other, GeneratorSet) and self.rs is other.rs
                and self.generators == other.generators)

    def __hash__(self):
        return hash(self.generators)

    def power(self, i: int, k: int) -> K0Class:
        key = (i, k)
        if key not in self._cache_pow:
            g = self.generators[i]
            if k >= 0:
                base = g.shadow
            else:
                (z,) = tuple(g.shadow)
                base = K0Class({tuple(-v for v in z): 1})
            self._cache_pow[key] = k0_pow(self.rs, base, abs(k))
        return self._cache_pow[key]

    def exponents_of(self, x) -> tuple:
        """The unique exponent vector whose leading weights sum to ``x``."""
        sol = _linalg.solve(self._basis, list(x)) if self.generators else None
        if sol is None or any(c.denominator != 1 for c in sol):
            raise GeneratorSetIncompleteError(f"weight {tuple(x)} is not expressible in the leading weights")
        exps = tuple(int(c) for c in sol)
        for g, a in zip(self.generators, exps):
            if a < 0 and not g.invertible:
                raise GeneratorSetIncompleteError(f"weight {tuple(x)} needs a negative power of {g.name}")
        return exps


class GenPoly(SparsePoly):
    """Polynomial in the generators of a :class:`GeneratorSet`."""

    __slots__ = ()

    def to_json(self) -> list:
        return [{"exponents": list(e), "coefficient": c} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, nvars: int, data) -> "GenPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(nvars, ((tuple(d["exponents"]), int(d["coefficient"])) for d in data))


def evaluate(p: SparsePoly, gens: GeneratorSet) -> K0Class:
    """Evaluate a generator polynomial on the shadows."""
    rs = gens.rs
    total = LaurentPoly.zero(rs.rank)
    for e, c in p.terms.items():
        ch = LaurentPoly.one(rs.rank)
        for i, k in enumerate(e):
            if k:
                ch = ch * character_of(rs, gens.power(i, k))
        total = total + ch * c
    return decompose_character(rs, total)


def express_in_generators(rs: RootSystemData, c: Mapping, gens: GeneratorSet) -> GenPoly:
    """Invert the triangular map from generator monomials to irreducibles."""
    rem = K0Class(c)
    out: dict = {}
    last = None
    n = len(gens)
    for _ in range(100000):
        if not rem:
            return GenPoly(n, out)
        top = max(rem, key=rs.order_key)
        if last is not None and rs.order_key(top) >= rs.order_key(last):
            raise InternalConsistencyError("elimination failed to lower the leading weight")
        exps = gens.exponents_of(top)
        coeff = rem[top]
        out[exps] = out.get(exps, 0) + coeff
        rem = rem - evaluate(GenPoly(n, {exps: 1}), gens).scale(coeff)
        last = top
    raise InternalConsistencyError("elimination did not terminate")


# -- presets --------------------------------------------------------------------


def standard_class(rs: RootSystemData) -> K0Class:
    """The defining representation: E_{omega_1} for C_n and GL_n, sum of lines for a torus."""
    fam = rs.type.family
    if fam in ("C", "A"):
        return K0Class({fundamental_weight(rs, 1): 1})
    if fam == "C1xn":
        return K0Class({w: 1 for w in rs.fundamental_weights})
    return K0Class({z: 1 for z in rs.central})


def preset_generators(rs: RootSystemData, name: str) -> GeneratorSet:
    fam = rs.type.family
    if name == "sp-lambda" and fam == "C":
        v = standard_class(rs)
        gens = [Generator("V" if k == 1 else f"L{k}V", lambda_character(rs, v, k),
                          fundamental_weight(rs, k)) for k in range(1, rs.rank + 1)]
        return GeneratorSet(rs, gens)
    if name == "sp-fundamental" and fam in ("C", "C1xn"):
        gens = [Generator(f"E{k}", K0Class({fundamental_weight(rs, k): 1}), fundamental_weight(rs, k))
                for k in range(1, len(rs.fundamental_weights) + 1)]
        return GeneratorSet(rs, gens)
    if name == "gl-lambda-det" and fam == "A":
        v = standard_class(rs)
        n = rs.rank
        gens = [Generator("V" if k == 1 else f"L{k}V", lambda_character(rs, v, k),
                          fundamental_weight(rs, k)) for k in range(1, n)]
        gens.append(Generator("det", lambda_character(rs, v, n), rs.central[0], invertible=True))
        return GeneratorSet(rs, gens)
    if name == "torus-standard" and fam == "T":
        gens = [Generator(f"z{i + 1}", K0Class({z: 1}), z, invertible=True)
                for i, z in enumerate(rs.central)]
        return GeneratorSet(rs, gens)
    raise UnsupportedPresetError(f"preset {name!r} does not apply to {rs.type}")


def load_generator_config(source) -> GeneratorSet:
    """Build a generator set from a JSON config ``{"type": "C3", "preset": "sp-lambda"}``.

    ``source`` is a path, a JSON string or an already parsed mapping.
    """
    if isinstance(source, Mapping):
        data = source
    else:
        text = str(source)
        if not text.lstrip().startswith("{"):
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        data = json.loads(text)
    try:
        rs = build_root_system(data["type"])
        return preset_generators(rs, data["preset"])
    except KeyError as exc:
        raise UnsupportedPresetError(f"generator config is missing {exc}") from exc


# -- restriction ------------------------------------------------------------------


def restrict_along(rs_source: RootSystemData, rs_target: RootSystemData, lattice_map,
                   c: Mapping) -> K0Class:
    """Restrict a class along a map of character lattices (given as a matrix)."""
    ch = character_of(rs_source, c)
    m = tuple(tuple(row) for row in lattice_map)
    if len(m) != rs_target.rank or any(len(row) != rs_source.rank for row in m):
        raise InvalidLatticeMapError("lattice map has the wrong shape")
    image = LaurentPoly(rs_target.rank,
                        ((tuple(sum(a * b for a, b in zip(row, e)) for row in m), v)
                         for e, v in ch.terms.items()))
    try:
        return decompose_character(rs_target, image)
    except NotACharacterError as exc:
        raise InvalidLatticeMapError("image is not Weyl-invariant for the target") from exc


def diagonal_sp2_embedding(n: int):
    """Sp_2^{x n} inside Sp_{2n}: the identity on Z^n."""
    return build_root_system(CartanType.C(n)), build_root_system(CartanType.sp2_power(n)), \
        tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def restrict_to_diagonal(n: int, c: Mapping) -> K0Class:
    src, tgt, m = diagonal_sp2_embedding(n)
    return restrict_along(src, tgt, m, c)


def sn_invariance_check(c_restricted: Mapping, n: int) -> bool:
    """Invariance of a class on Sp_2^{x n} under permuting the factors."""
    c = K0Class(c_restricted)
    for perm in itertools.permutations(range(n)):
        moved = K0Class({tuple(x[p] for p in perm): m for x, m in c.items()})
        if moved != c:
            return False
    return True


def restriction_matrix_rank(n: int, box: int) -> tuple[int, int]:
    """Rank of restriction on irreducibles with fundamental coordinates <= box.

    Returns ``(rank, number of irreducibles)``; equal values mean injective.
    """
    src, tgt, m = diagonal_sp2_embedding(n)
    weights = [w for w in itertools.product(range(box + 1), repeat=n)]
    dom = []
    from .root_system import from_fundamental

    for a in weights:
        x = from_fundamental(src, a)
        if is_dominant(src, x):
            dom.append(x)
    images = [restrict_along(src, tgt, m, {x: 1}) for x in dom]
    keys = sorted({k for im in images for k in im})
    matrix = [[im[k] for k in keys] for im in images]
    return _linalg.rank(matrix), len(dom)
