"""The graded coefficient ring GW^+(k) + GW^-(k).

GW^- is free of rank one on the symplectic hyperbolic plane ``Hm`` and the
ring structure is fixed by ``Hm^2 = 2 Hp`` together with the module rule
``x * Hm = rank(x) * Hm`` for plus-homogeneous ``x``. The plus part is
pluggable:

``split``
    GW of a quadratically closed field: plus elements are integers,
    ``Hp = 2`` and ``rank`` is the identity.
``real``
    GW(R) = Z[e]/(e^2 - 1) with ``e = <-1>``: plus elements are pairs
    ``(a, b)`` meaning ``a + b e``, ``Hp = 1 + e`` and ``rank = a + b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ModelMismatchError

MODELS = ("split", "real")
_PLUS_LEN = {"split": 1, "real": 2}


@dataclass(frozen=True)
class GWCoeff:
    model: str
    plus: tuple
    minus: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise ModelMismatchError(f"unknown coefficient model {self.model!r}")
        if len(self.plus) != _PLUS_LEN[self.model]:
            raise ValueError(f"{self.model} plus part needs {_PLUS_LEN[self.model]} entries")

    # -- constructors ----------------------------------------------------------
    @classmethod
    def integer(cls, model: str, n: int) -> "GWCoeff":
        return cls(model, (n,) + (0,) * (_PLUS_LEN[model] - 1), 0)

    @classmethod
    def zero(cls, model: str) -> "GWCoeff":
        return cls.integer(model, 0)

    @classmethod
    def one(cls, model: str) -> "GWCoeff":
        return cls.integer(model, 1)

    @classmethod
    def from_vector(cls, model: str, vec) -> "GWCoeff":
        k = _PLUS_LEN[model]
        return cls(model, tuple(vec[:k]), vec[k])

    # -- structure -------------------------------------------------------------
    def to_vector(self) -> tuple:
        """Coordinates in the Z-basis (1, [e,] Hm)."""
        return self.plus + (self.minus,)

    @property
    def plus_rank(self) -> int:
        return sum(self.plus)

    def rank(self) -> int:
        return self.plus_rank + 2 * self.minus

    def sign(self) -> int | None:
        """+1 / -1 for homogeneous elements, None for mixed; 0 is treated as +1."""
        has_plus = any(self.plus)
        if self.minus and has_plus:
            return None
        return -1 if self.minus else 1

    def plus_part(self) -> "GWCoeff":
        return GWCoeff(self.model, self.plus, 0)

    def minus_part(self) -> "GWCoeff":
        return GWCoeff(self.model, (0,) * len(self.plus), self.minus)

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> "GWCoeff":
        if isinstance(other, GWCoeff):
            if other.model != self.model:
                raise ModelMismatchError(f"{self.model} vs {other.model}")
            return other
        if isinstance(other, int):
            return GWCoeff.integer(self.model, other)
        raise TypeError(f"cannot combine GWCoeff with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return GWCoeff(self.model, tuple(a + b for a, b in zip(self.plus, o.plus)),
                       self.minus + o.minus)

    __radd__ = __add__

    def __neg__(self):
        return GWCoeff(self.model, tuple(-a for a in self.plus), -self.minus)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        p = _plus_mul(self.model, self.plus, o.plus)
        hp = hyperbolic_plus(self.model).plus
        mm = self.minus * o.minus  # Hm * Hm = 2 Hp
        p = tuple(a + 2 * mm * b for a, b in zip(p, hp))
        minus = sum(self.plus) * o.minus + sum(o.plus) * self.minus
        return GWCoeff(self.model, p, minus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = GWCoeff.one(self.model)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.minus) or any(self.plus)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GWCoeff.integer(self.model, other)
        if not isinstance(other, GWCoeff):
            return NotImplemented
        return (self.model, self.plus, self.minus) == (other.model, other.plus, other.minus)

    def __hash__(self):
        return hash((self.model, self.plus, self.minus))

    def __str__(self):
        return format_coeff(self)

    def __repr__(self):
        return f"GWCoeff({self.model!r}, {format_coeff(self)!r})"


def _plus_mul(model, a, b):
    if model == "split":
        return (a[0] * b[0],)
    # (a0 + a1 e)(b0 + b1 e), e^2 = 1
    return (a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gw_add(a: GWCoeff, b: GWCoeff) -> GWCoeff:
    return a + b


def gw_mul(a: GWCoeff, b: GWCoeff) -> GWCoeff:
    return a * b


def gw_rank(a) -> int:
    return a.rank() if isinstance(a, GWCoeff) else int(a)


def hyperbolic_plus(model: str) -> GWCoeff:
    return GWCoeff(model, (2,) if model == "split" else (1, 1), 0)


def hyperbolic_minus(model: str) -> GWCoeff:
    return GWCoeff(model, (0,) * _PLUS_LEN[model], 1)


def epsilon(model: str) -> GWCoeff:
    """The form <-1>; only distinct from 1 in the real model."""
    if model == "split":
        return GWCoeff.one(model)
    return GWCoeff(model, (0, 1), 0)


def coefficient_basis(model: str) -> list[GWCoeff]:
    """A Z-basis of GW^+(k) + GW^-(k): 1, [e,] Hm."""
    k = _PLUS_LEN[model] + 1
    return [GWCoeff.from_vector(model, [int(i == j) for j in range(k)]) for i in range(k)]


# -- text format ---------------------------------------------------------------


def _scaled(n: int, sym: str) -> str:
    return sym if n == 1 else ("-" + sym if n == -1 else f"{n}*{sym}")


def format_coeff(c: GWCoeff) -> str:
    parts = []
    if c.model == "split":
        if c.plus[0] or not c.minus:
            parts.append(str(c.plus[0]))
    else:
        a, b = c.plus
        if a or (not b and not c.minus):
            parts.append(str(a))
        if b:
            parts.append(_scaled(b, "e"))
    if c.minus:
        parts.append(_scaled(c.minus, "Hm"))
    return " + ".join(parts).replace("+ -", "- ")


_TERM = re.compile(r"^([+-]?\d*)\*?(e|Hm|Hp)?$")


def parse_coeff(text: str, model: str = "split") -> GWCoeff:
    """Parse ``"p"``, ``"p + m*Hm"``, ``"a + b*e + m*Hm"`` or sums with ``Hp``."""
    s = text.replace(" ", "").replace("-", "+-")
    out = GWCoeff.zero(model)
    for tok in filter(None, s.split("+")):
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"cannot parse coefficient term {tok!r}")
        num, sym = m.groups()
        n = int(num) if num not in ("", "+", "-") else (-1 if num == "-" else 1)
        if sym is None:
            out = out + n
        elif sym == "Hm":
            out = out + hyperbolic_minus(model) * n
        elif sym == "Hp":
            out = out + hyperbolic_plus(model) * n
        else:
            if model != "real":
                raise ModelMismatchError("'e' only exists in the real model")
            out = out + epsilon(model) * n
    return out
