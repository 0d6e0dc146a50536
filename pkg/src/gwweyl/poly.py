"""Sparse multivariate (Laurent) polynomials over a commutative coefficient ring.

Coefficients may be Python ints or any object implementing ``+ - *``,
``__bool__`` (false for zero) and mixed arithmetic with ints, such as
:class:`gwweyl.gw_coeff.GWCoeff`. Exponent vectors are tuples of ints; negative
entries are allowed, which makes this class double as a Laurent polynomial.
Subclasses that carry metadata override :meth:`_new`.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Mapping

Exponent = tuple


class SparsePoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Any] | Iterable = ()):
        self.nvars = nvars
        acc: dict[Exponent, Any] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if e in acc:
                acc[e] = acc[e] + c
            else:
                acc[e] = c
        self.terms = {e: c for e, c in acc.items() if c}

    # -- construction -------------------------------------------------------
    def _new(self, terms) -> "SparsePoly":
        return type(self)(self.nvars, terms)

    def _raw(self, terms: dict) -> "SparsePoly":
        """Wrap an already-normalised term dict without re-checking it."""
        p = self._new(())
        p.terms = terms
        return p

    def constant(self, c) -> "SparsePoly":
        return self._new({(0,) * self.nvars: c})

    def monomial(self, exp, c=1) -> "SparsePoly":
        return self._new({tuple(exp): c})

    def variable(self, i: int, c=1) -> "SparsePoly":
        e = [0] * self.nvars
        e[i] = 1
        return self._new({tuple(e): c})

    # -- inspection ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __getitem__(self, exp):
        return self.terms.get(tuple(exp), 0)

    def items(self):
        return self.terms.items()

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self, weights=None) -> int:
        """Maximal weighted total degree; -1 for the zero polynomial."""
        w = weights or (1,) * self.nvars
        return max((sum(a * b for a, b in zip(e, w)) for e in self.terms), default=-1)

    def min_degree(self, weights=None) -> int | None:
        w = weights or (1,) * self.nvars
        return min((sum(a * b for a, b in zip(e, w)) for e in self.terms), default=None)

    def homogeneous_part(self, d: int, weights=None) -> "SparsePoly":
        w = weights or (1,) * self.nvars
        return self._raw({e: c for e, c in self.terms.items()
                          if sum(a * b for a, b in zip(e, w)) == d})

    def truncate(self, cap: int, weights=None) -> "SparsePoly":
        w = weights or (1,) * self.nvars
        return self._raw({e: c for e, c in self.terms.items()
                          if sum(a * b for a, b in zip(e, w)) <= cap})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SparsePoly):
            return self.constant(other)
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def mul(self, other, keep: Callable[[Exponent], bool] | None = None):
        """Product, optionally discarding exponents for which ``keep`` is false."""
        other = self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if keep is not None and not keep(e):
                    continue
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return self._raw({e: c for e, c in out.items() if c})

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self._raw({e: c * other for e, c in self.terms.items() if c * other})
        return self.mul(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return self.terms == self.constant(other).terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def map_coefficients(self, f) -> "SparsePoly":
        return self._raw({e: f(c) for e, c in self.terms.items() if f(c)})

    # -- substitution -------------------------------------------------------
    def substitute(self, images: list, one=None, keep=None):
        """Substitute polynomial ``images[i]`` for variable ``i``.

        All images must share one result type; negative exponents need
        images that support ``inverse()``.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        template = images[0] if images else None
        if template is None:
            raise ValueError("cannot substitute into a polynomial with no variables")
        unit = template.constant(1 if one is None else one)
        result = template.constant(0)
        powers: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                if k >= 0:
                    powers[key] = images[i] ** k if keep is None else _keep_pow(images[i], k, keep, unit)
                else:
                    powers[key] = images[i].inverse() ** (-k)
            return powers[key]

        for e, c in self.terms.items():
            term = unit * c
            for i, k in enumerate(e):
                if k:
                    term = term.mul(power(i, k), keep) if keep is not None else term * power(i, k)
            result = result + term
        return result

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {dict(self.sorted_terms())!r})"

    def format(self, names: list[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            cs = str(c)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            elif " " in cs:
                parts.append(f"({cs})*{mon}")
            else:
                parts.append(f"{cs}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def _keep_pow(p, k, keep, unit):
    result = unit
    for _ in range(k):
        result = result.mul(p, keep)
    return result


def lex_leading(p: SparsePoly):
    """Lexicographically largest exponent and its coefficient."""
    e = max(p.terms)
    return e, p.terms[e]


def divmod_poly(p: SparsePoly, q: SparsePoly):
    """Multivariate division of ``p`` by a single divisor ``q`` in lex order.

    Returns ``(quotient, remainder)`` with ``p == quotient*q + remainder`` and
    no remainder term divisible by the leading monomial of ``q``. Coefficient
    division must be exact (integer coefficients need a unit leading
    coefficient or exact quotients).
    """
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    lq, cq = lex_leading(q)
    quot: dict = {}
    rem: dict = {}
    work = p
    while work:
        le, lc = lex_leading(work)
        if all(a >= b for a, b in zip(le, lq)) and _divides(cq, lc):
            e = tuple(a - b for a, b in zip(le, lq))
            c = lc // cq if isinstance(lc, int) else lc / cq
            quot[e] = quot.get(e, 0) + c
            work = work - q.monomial(e, c) * q
        else:
            rem[le] = lc
            work = work._raw({k: v for k, v in work.terms.items() if k != le})
    return p._new(quot), p._new(rem)


def _divides(a, b) -> bool:
    if isinstance(a, int) and isinstance(b, int):
        return b % a == 0
    return True
