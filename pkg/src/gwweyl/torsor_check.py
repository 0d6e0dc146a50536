"""The lifting identity for unimodular rows twisted by g*r.

Given ``sum_i a_i b_i = 1 + g r``, the choice ``a_i' = a_i``,
``b_i' = b_i - g r b_i`` and ``c = d = r`` satisfies
``sum_i a_i' b_i' + g^2 c d = 1``. Equivalently

    P = sum_i a_i (b_i - g r b_i) + g^2 r^2 - 1

is a multiple of ``Q = sum_i a_i b_i - 1 - g r``, namely ``P = (1 - g r) Q``.
"""

from __future__ import annotations

from .poly import SparsePoly, divmod_poly


class MultiPoly(SparsePoly):
    """Integer polynomial in a_0..a_n, b_0..b_n, g, r."""

    __slots__ = ("n",)

    def __init__(self, n: int, terms=()):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        super().__init__(2 * n + 4, terms)

    def _new(self, terms):
        return MultiPoly(self.n, terms)

    @property
    def names(self) -> list[str]:
        n = self.n
        return [f"a{i}" for i in range(n + 1)] + [f"b{i}" for i in range(n + 1)] + ["g", "r"]

    def __str__(self):
        return self.format(self.names)


def _var(n: int, name: str) -> MultiPoly:
    idx = MultiPoly(n).names.index(name)
    return MultiPoly(n, {tuple(int(j == idx) for j in range(2 * n + 4)): 1})


def lift_polynomials(n: int, g_zero: bool = False) -> tuple[MultiPoly, MultiPoly]:
    """``(P, Q)`` as above; ``g_zero`` sets g = 0 (the untwisted case)."""
    one = MultiPoly(n).constant(1)
    g = MultiPoly(n) if g_zero else _var(n, "g")
    r = _var(n, "r")
    gr = g * r
    P = MultiPoly(n)
    Q = MultiPoly(n)
    for i in range(n + 1):
        a, b = _var(n, f"a{i}"), _var(n, f"b{i}")
        P = P + a * (b - gr * b)
        Q = Q + a * b
    P = P + gr * gr - one
    Q = Q - one - gr
    return P, Q


def verify_lift_identity(n: int, g_zero: bool = False) -> bool:
    """Exact division of P by Q: zero remainder and quotient ``1 - g r``."""
    P, Q = lift_polynomials(n, g_zero)
    quot, rem = divmod_poly(P, Q)
    if rem:
        return False
    one = MultiPoly(n).constant(1)
    expected = one if g_zero else one - _var(n, "g") * _var(n, "r")
    return quot == expected and quot * Q == P
