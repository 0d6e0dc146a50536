"""Acceptance suite: eleven exact checks with their time budgets.

Each check returns a :class:`CriterionResult`. ``run_all`` is used by the
``verify-all`` command and by the test suite.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from .char_ring import (
    K0Class,
    class_dimension,
    freudenthal_character,
    lambda_character,
    tensor_decompose,
    weyl_character,
)
from .completion import atiyah_segal_map, completion_map, graded_topology_check, limit_consistency
from .diag_restrict import restrict_lambda, to_elementary_symmetric, verify_triangularity
from .gw_coeff import MODELS, GWCoeff, hyperbolic_minus, hyperbolic_plus
from .gw_ring import duality_data, sign_of_weight
from .rep_ring import standard_class
from .root_system import (
    CartanType,
    build_root_system,
    dominance_leq,
    dominance_lt,
    dominant_weights_in_box,
    from_fundamental,
    fundamental_weight,
    is_dominant,
)
from .torsor_check import verify_lift_identity


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3), "budget": self.budget}


def _timed(number: int, name: str, budget: float | None, body: Callable[[], tuple[bool, str]]):
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        ok = False
        detail += f"; over the {budget:g}s budget"
    return CriterionResult(number, name, ok, detail, elapsed, budget)


def _random_homogeneous(rng: random.Random, model: str, bound: int = 20) -> GWCoeff:
    if rng.random() < 0.5:
        plus = tuple(rng.randint(-bound, bound) for _ in range(1 if model == "split" else 2))
        return GWCoeff(model, plus, 0)
    return GWCoeff.integer(model, 0) + hyperbolic_minus(model) * rng.randint(-bound, bound)


# -- the criteria ----------------------------------------------------------------------


def sign_table(seed: int = 0) -> CriterionResult:
    def body():
        bad = []
        for n in range(1, 5):
            rs = build_root_system(CartanType.C(n))
            dd = duality_data(rs, "SpIdentity")
            for i in range(1, n + 1):
                if sign_of_weight(rs, dd, fundamental_weight(rs, i)) != (-1) ** i:
                    bad.append(f"C{n} w{i}")
        return not bad, "all (-1)^i" if not bad else f"mismatch at {bad}"
    return _timed(1, "sign table of fundamental weights", 1.0, body)


def exterior_powers(seed: int = 0) -> CriterionResult:
    def body():
        bad = []
        for n in (2, 3, 4):
            rs = build_root_system(CartanType.C(n))
            v = standard_class(rs)
            for i in range(1, n + 1):
                expected = K0Class({fundamental_weight(rs, j): 1 for j in range(i, -1, -2)})
                got = lambda_character(rs, v, i)
                if got != expected or class_dimension(rs, got) != comb(2 * n, i):
                    bad.append(f"C{n} i={i}")
        return not bad, "Lambda^i V = E_wi + E_w(i-2) + ..." if not bad else f"mismatch at {bad}"
    return _timed(2, "exterior power decomposition", 10.0, body)


def highest_weight_products(seed: int = 0, pairs: int = 200) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        checked = 0
        for t in ("C2", "C3"):
            rs = build_root_system(t)
            for _ in range(pairs):
                x = from_fundamental(rs, [rng.randint(0, 3) for _ in range(rs.rank)])
                y = from_fundamental(rs, [rng.randint(0, 3) for _ in range(rs.rank)])
                top = tuple(a + b for a, b in zip(x, y))
                d = tensor_decompose(rs, x, y)
                if d[top] != 1:
                    return False, f"{t}: {x} x {y} has E_(x+y) with multiplicity {d[top]}"
                for z, m in d.items():
                    if z != top and (m <= 0 or not dominance_lt(rs, z, top)):
                        return False, f"{t}: {x} x {y} has constituent {z} not below x+y"
                checked += 1
        return True, f"{checked} random pairs"
    return _timed(3, "highest-weight product law", 60.0, body)


def nothing_below_zero(seed: int = 0) -> CriterionResult:
    def body():
        scanned = 0
        for t in ("C2", "C3"):
            rs = build_root_system(t)
            n = len(rs.simple_roots)
            for coeffs in itertools.product(range(7), repeat=n):
                if not any(coeffs):
                    continue
                z = tuple(-sum(c * a[j] for c, a in zip(coeffs, rs.simple_roots))
                          for j in range(rs.rank))
                scanned += 1
                if is_dominant(rs, z) and dominance_leq(rs, z, (0,) * rs.rank):
                    return False, f"{t}: dominant {z} lies below 0"
        return True, f"{scanned} negative root combinations, none dominant"
    return _timed(4, "no dominant weight below zero", None, body)


def restriction_triangularity(seed: int = 0) -> CriterionResult:
    def body():
        for model in MODELS:
            for n in range(1, 5):
                for k in range(1, n + 1):
                    if not verify_triangularity(k, n, model):
                        return False, f"fails for k={k}, n={n} ({model})"
        q = to_elementary_symmetric(restrict_lambda(3, 3))
        one = GWCoeff.one("split")
        expected = {(0, 0, 1): one, (1, 0, 0): one * 2}
        if q.terms != expected:
            return False, f"res Lambda^3 on Sp_2^3 gave {q}"
        return True, "k <= n <= 4, both models; res Lambda^3 = s3 + 2 s1"
    return _timed(5, "restriction triangularity", None, body)


def character_oracles(seed: int = 0) -> CriterionResult:
    def body():
        count = 0
        for t in ("C2", "C3"):
            rs = build_root_system(t)
            for x in dominant_weights_in_box(rs, 6):
                if weyl_character(rs, x) != freudenthal_character(rs, x):
                    return False, f"{t}: Weyl and Freudenthal disagree at {x}"
                count += 1
        rs = build_root_system("C1")
        for a in range(21):
            for b in range(21):
                cg = K0Class({(a + b - 2 * i,): 1 for i in range(min(a, b) + 1)})
                if tensor_decompose(rs, (a,), (b,)) != cg:
                    return False, f"A1: {a} x {b} differs from Clebsch-Gordan"
        return True, f"{count} characters; 441 A1 products"
    return _timed(6, "character oracle agreement", None, body)


def coefficient_laws(seed: int = 0, samples: int = 1000) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        for model in MODELS:
            hm, hp = hyperbolic_minus(model), hyperbolic_plus(model)
            if hm * hm != hp * 2:
                return False, f"{model}: Hm^2 != 2 Hp"
            for _ in range(samples):
                a = _random_homogeneous(rng, model)
                b = _random_homogeneous(rng, model)
                if a.sign() == 1 and a * hm != hm * a.rank():
                    return False, f"{model}: module rule fails for {a}"
                if (a * b).sign() != a.sign() * b.sign() and a * b:
                    return False, f"{model}: sign of {a} * {b}"
        return True, f"{samples} samples per model"
    return _timed(7, "coefficient ring laws", None, body)


def completion_theorem(seed: int = 0, D: int = 6) -> CriterionResult:
    def body():
        for model in MODELS:
            for r in (1, 2, 3):
                asm = atiyah_segal_map(r, D, model)
                if not asm.is_injective():
                    return False, f"r={r} ({model}): not injective"
                if not asm.is_bijective_onto_invariants():
                    return False, f"r={r} ({model}): image is not the invariant series"
                if not completion_map(r, D, model).is_bijective():
                    return False, f"r={r} ({model}): truncated completion not bijective"
        return True, f"r <= 3, D = {D}, both models"
    return _timed(8, "completion theorem at finite precision", 300.0, body)


def graded_topology(seed: int = 0, D: int = 6) -> CriterionResult:
    def body():
        for model in MODELS:
            for r in (1, 2, 3):
                for i in range(D // 2 + 1):
                    if not graded_topology_check(r, i, D, model):
                        return False, f"r={r}, i={i} ({model})"
        return True, f"r <= 3, 2i <= {D}, both models"
    return _timed(9, "graded versus ungraded topology", None, body)


def inverse_limit(seed: int = 0) -> CriterionResult:
    schedules = {"N=n": lambda n: n, "N=n+1": lambda n: n + 1}

    def body():
        for label, sched in schedules.items():
            for r in (1, 2, 3):
                for D in range(6):
                    if not limit_consistency(r, D, sched, seed=seed):
                        return False, f"r={r}, D={D}, schedule {label}"
        return True, "r <= 3, D <= 5, schedules N=n and N=n+1"
    return _timed(10, "inverse-limit consistency", None, body)


def torsor_lift(seed: int = 0) -> CriterionResult:
    def body():
        bad = [n for n in range(9) if not verify_lift_identity(n)]
        return not bad, "n <= 8" if not bad else f"fails for n in {bad}"
    return _timed(11, "torsor lift identity", None, body)


CRITERIA = (
    sign_table,
    exterior_powers,
    highest_weight_products,
    nothing_below_zero,
    restriction_triangularity,
    character_oracles,
    coefficient_laws,
    completion_theorem,
    graded_topology,
    inverse_limit,
    torsor_lift,
)


def run_all(seed: int = 0) -> list[CriterionResult]:
    return [crit(seed=seed) for crit in CRITERIA]
