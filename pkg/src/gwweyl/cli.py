"""Command-line front end: ``gwweyl <command> [options]``.

Exit status is 0 on success, 1 when a computation fails or a check does
not hold, and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Sequence

from . import acceptance
from .char_ring import (
    K0Class,
    lambda_character,
    tensor_decompose,
    weyl_character,
    weyl_dimension,
)
from .completion import (
    atiyah_segal_map,
    cofinality_check,
    completion_map,
    graded_topology_check,
    limit_consistency,
)
from .diag_restrict import (
    DiagPoly,
    restrict_lambda,
    to_elementary_symmetric,
    v_to_b,
)
from .errors import GWWeylError
from .gw_coeff import MODELS, GWCoeff, parse_coeff
from .gw_ring import (
    GWPoly,
    augmentation,
    duality_data,
    gw_poly_from_json,
    sign_of_weight,
    sp_generator_set,
)
from .rep_ring import standard_class
from .root_system import (
    RootSystemData,
    build_root_system,
    from_fundamental,
    parse_cartan_type,
    require_dominant,
    to_fundamental,
    weyl_group,
)
from .torsor_check import verify_lift_identity

SCHEMA = 1
MAX_PRECISION = 10


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    coeff_model: str = "split"
    precision: int = 6
    fmt: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.coeff_model not in MODELS:
            raise UsageError(f"unknown coefficient model {self.coeff_model!r}")
        if not 0 <= self.precision <= MAX_PRECISION:
            raise UsageError(f"precision must be in 0..{MAX_PRECISION}")
        if self.fmt not in ("text", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


# -- parsing helpers ---------------------------------------------------------------------


def _root_system(args) -> RootSystemData:
    if not args.type:
        raise UsageError("--type is required")
    try:
        return build_root_system(parse_cartan_type(args.type))
    except GWWeylError as exc:
        raise UsageError(str(exc)) from exc


def parse_weight(rs: RootSystemData, text: str, basis: str):
    try:
        coords = [int(t) for t in text.split(",")] if text.strip() else []
    except ValueError as exc:
        raise UsageError(f"weight {text!r} is not a comma-separated list of integers") from exc
    if len(coords) != rs.rank:
        raise UsageError(f"{rs.type} weights have {rs.rank} coordinates, got {len(coords)}")
    return tuple(coords) if basis == "eps" else from_fundamental(rs, coords)


def _weight_label(rs: RootSystemData, basis: str):
    def label(x):
        coords = x if basis == "eps" else to_fundamental(rs, x)
        body = ",".join(map(str, coords))
        return body if len(coords) == 1 else f"({body})"
    return label


def _json_number(c):
    return c if isinstance(c, int) else str(c)


def _weight_json(rs: RootSystemData, x) -> dict:
    return {"eps": list(x), "fund": [_json_number(c) for c in to_fundamental(rs, x)]}


def _class_json(rs: RootSystemData, c: K0Class) -> list:
    return [{"weight": _weight_json(rs, x), "multiplicity": m} for x, m in sorted(c.items())]


def _split_top(text: str, seps: str) -> list[str]:
    """Split at separators outside parentheses, keeping a leading sign with its part."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append(cur)
            cur = ch if ch in "+-" else ""
        else:
            cur += ch
    parts.append(cur)
    return [p for p in parts if p.strip() not in ("", "+")]


def parse_polynomial(text: str, template, names: Sequence[str], model: str):
    """Parse sums of products like ``2*V*L2V^2 - (1 + Hm)*V``.

    ``template`` is an empty polynomial of the target type; factors are
    variable names (optionally ``^k``) or coefficients in the text format
    of :func:`parse_coeff`.
    """
    text = text.replace(" ", "")
    if text.startswith("{"):
        raise UsageError("JSON input is handled separately")
    index = {n: i for i, n in enumerate(names)}
    total = template
    for term in _split_top(text, "+-"):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        coeff = GWCoeff.integer(model, sign)
        exp = [0] * len(names)
        for factor in _split_top(term, "*"):
            base, power = factor, 1
            m = re.fullmatch(r"(.+)\^(\d+)", factor)
            if m:
                base, power = m.group(1), int(m.group(2))
            if base in index:
                exp[index[base]] += power
                continue
            inner = base[1:-1] if base.startswith("(") and base.endswith(")") else base
            try:
                coeff = coeff * parse_coeff(inner, model) ** power
            except (ValueError, GWWeylError) as exc:
                raise UsageError(f"cannot parse factor {factor!r}; variables are {list(names)}") from exc
        total = total + template._raw({tuple(exp): coeff}) if coeff else total
    return total


def _gw_poly(text: str, gens, model: str) -> GWPoly:
    if text.lstrip().startswith("{"):
        try:
            return gw_poly_from_json(text, gens, model)
        except (KeyError, ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"bad polynomial JSON: {exc}") from exc
    return parse_polynomial(text, GWPoly(gens, (), model), [g.name for g in gens], model)


# -- commands -----------------------------------------------------------------------------


def cmd_roots(args, cfg):
    rs = _root_system(args)
    data = {
        "type": str(rs.type),
        "simple_roots": [list(a) for a in rs.simple_roots],
        "simple_coroots": [[_json_number(c) for c in a] for a in rs.simple_coroots],
        "positive_roots": sorted(list(a) for a in rs.positive_roots),
        "fundamental_weights": [list(w) for w in rs.fundamental_weights],
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "two_rho": list(rs.two_rho),
        "h": [_json_number(c) for c in rs.h],
    }
    text = "\n".join([
        f"type: {rs.type}",
        f"simple roots: {data['simple_roots']}",
        f"positive roots ({len(rs.positive_roots)}): {data['positive_roots']}",
        f"fundamental weights: {data['fundamental_weights']}",
        f"sum of positive coroots: {tuple(rs.h)}",
    ])
    return data, text


def cmd_weyl(args, cfg):
    rs = _root_system(args)
    order = weyl_group(rs).order
    return {"type": str(rs.type), "order": order}, str(order)


def cmd_char(args, cfg):
    rs = _root_system(args)
    x = require_dominant(rs, parse_weight(rs, args.weight or "", args.basis))
    ch = weyl_character(rs, x)
    terms = [{"exponent": list(e), "coefficient": c} for e, c in sorted(ch.terms.items())]
    return {"type": str(rs.type), "weight": _weight_json(rs, x), "terms": terms}, ch.format()


def cmd_dim(args, cfg):
    rs = _root_system(args)
    x = parse_weight(rs, args.weight or "", args.basis)
    d = weyl_dimension(rs, x)
    return {"type": str(rs.type), "weight": _weight_json(rs, x), "dimension": d}, str(d)


def cmd_tensor(args, cfg):
    rs = _root_system(args)
    if args.x is None or args.y is None:
        raise UsageError("--x and --y are required")
    x = parse_weight(rs, args.x, args.basis)
    y = parse_weight(rs, args.y, args.basis)
    c = tensor_decompose(rs, x, y)
    data = {"type": str(rs.type), "x": _weight_json(rs, x), "y": _weight_json(rs, y),
            "product": _class_json(rs, c)}
    return data, c.format(_weight_label(rs, args.basis))


def cmd_lambda(args, cfg):
    rs = _root_system(args)
    if args.k is None:
        raise UsageError("--k is required")
    v = K0Class({parse_weight(rs, args.weight, args.basis): 1}) if args.weight else standard_class(rs)
    c = lambda_character(rs, v, args.k)
    return {"type": str(rs.type), "k": args.k, "class": _class_json(rs, c)}, \
        c.format(_weight_label(rs, args.basis))


def cmd_sign(args, cfg):
    rs = _root_system(args)
    x = parse_weight(rs, args.weight or "", args.basis)
    dd = duality_data(rs, args.preset)
    s = sign_of_weight(rs, dd, x)
    text = {1: "+1", -1: "-1", 0: "0"}[s]
    return {"type": str(rs.type), "preset": dd.preset, "weight": _weight_json(rs, x), "sign": s}, text


def _sp_gens(args, cfg):
    if args.r is None:
        raise UsageError("--r is required")
    return sp_generator_set(args.r, args.gens, cfg.coeff_model)


def cmd_gw_mul(args, cfg):
    gens = _sp_gens(args, cfg)
    if args.x is None or args.y is None:
        raise UsageError("--x and --y are required")
    a = _gw_poly(args.x, gens, cfg.coeff_model)
    b = _gw_poly(args.y, gens, cfg.coeff_model)
    p = a * b
    data = dict(p.to_json(), sign=p.homogeneous_sign())
    return data, str(p)


def cmd_augment(args, cfg):
    gens = _sp_gens(args, cfg)
    if args.x is None:
        raise UsageError("--x is required")
    a = _gw_poly(args.x, gens, cfg.coeff_model)
    aug = augmentation(a)
    return {"input": a.to_json(), "augmentation": str(aug), "in_ideal": not aug}, str(aug)


def _diag_json(p) -> dict:
    return {"variables": p.names, "model": p.model,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in sorted(p.terms.items())]}


def cmd_restrict(args, cfg):
    n = args.r if args.r is not None else args.n
    if n is None or args.k is None:
        raise UsageError("--r and --k are required")
    p = restrict_lambda(args.k, n, cfg.coeff_model)
    if args.vars == "b":
        p = v_to_b(p)
    if args.symfun:
        p = to_elementary_symmetric(p)
    return dict(_diag_json(p), r=n, k=args.k), str(p)


def cmd_symfun(args, cfg):
    n = args.r if args.r is not None else args.n
    if n is None or args.x is None:
        raise UsageError("--r (number of variables) and --x are required")
    template = DiagPoly(n, (), args.vars, cfg.coeff_model)
    p = parse_polynomial(args.x, template, template.names, cfg.coeff_model)
    q = to_elementary_symmetric(p)
    return _diag_json(q), str(q)


def cmd_complete(args, cfg):
    if args.r is None:
        raise UsageError("--r is required")
    D = cfg.precision
    cm = completion_map(args.r, D, cfg.coeff_model)
    lam = sp_generator_set(args.r, "lambda", cfg.coeff_model)
    images = {}
    for i, g in enumerate(lam):
        e = tuple(int(j == i) for j in range(args.r))
        images[g.name] = str(cm(GWPoly(lam, {e: GWCoeff.one(cfg.coeff_model)}, cfg.coeff_model)))
    checks = {
        "bijective": cm.is_bijective(),
        "cofinal_with_ideal_powers": cofinality_check(args.r, D),
        "graded_topology": all(graded_topology_check(args.r, i, D, cfg.coeff_model)
                               for i in range(D // 2 + 1)),
        "limit_consistency": all(limit_consistency(args.r, min(D, 5), s, model=cfg.coeff_model)
                                 for s in (lambda n: n, lambda n: n + 1)),
    }
    data = {"r": args.r, "precision": D, "model": cfg.coeff_model,
            "images": images, "checks": checks}
    lines = [f"{k} -> {v}" for k, v in images.items()]
    lines += [f"{k}: {'yes' if v else 'NO'}" for k, v in checks.items()]
    ok = all(checks.values())
    return data, "\n".join(lines), ok


def cmd_as_map(args, cfg):
    if args.r is None:
        raise UsageError("--r is required")
    asm = atiyah_segal_map(args.r, cfg.precision, cfg.coeff_model)
    rows = [rep.as_dict() for rep in asm.report()]
    ok = all(r["injective"] and r["onto_invariants"] for r in rows) and asm.images_symmetric()
    data = {"r": args.r, "precision": cfg.precision, "model": cfg.coeff_model,
            "images": [str(im) for im in asm.images], "degrees": rows,
            "injective": all(r["injective"] for r in rows), "bijective_onto_invariants": ok}
    lines = ["deg  domain  image  invariants"]
    lines += [f"{r['degree']:>3}  {r['domain_dim']:>6}  {r['image_rank']:>5}  {r['invariant_dim']:>10}"
              for r in rows]
    lines.append("injective, image = invariants" if ok else "FAILED")
    return data, "\n".join(lines), ok


def cmd_torsor_lift(args, cfg):
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    ok = verify_lift_identity(args.n)
    return {"n": args.n, "identity_holds": ok}, "OK" if ok else "FAIL", ok


def cmd_verify_all(args, cfg):
    results = acceptance.run_all(seed=cfg.seed)
    ok = all(r.passed for r in results)
    data = {"criteria": [r.as_dict() for r in results], "all_passed": ok}
    text = "\n".join(r.line() for r in results)
    text += f"\n{sum(r.passed for r in results)}/{len(results)} passed"
    return data, text, ok


COMMANDS = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "char": cmd_char,
    "dim": cmd_dim,
    "tensor": cmd_tensor,
    "lambda": cmd_lambda,
    "sign": cmd_sign,
    "gw-mul": cmd_gw_mul,
    "augment": cmd_augment,
    "restrict": cmd_restrict,
    "symfun": cmd_symfun,
    "complete": cmd_complete,
    "as-map": cmd_as_map,
    "torsor-lift": cmd_torsor_lift,
    "verify-all": cmd_verify_all,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="root datum: C3, A2gl (GL_3), T4, C1x2; A1 means C1")
    common.add_argument("--weight", help="comma-separated coordinates")
    common.add_argument("--x")
    common.add_argument("--y")
    common.add_argument("--k", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--precision", type=int, default=6)
    common.add_argument("--coeff-model", choices=MODELS, default="split")
    common.add_argument("--basis", choices=("eps", "fund"), default="fund",
                        help="weight coordinates (default: fundamental weights)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--report", choices=("json", "text"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--preset", choices=("SpIdentity", "TorusInversion", "GLTransposeInverse"))
    common.add_argument("--gens", choices=("lambda", "borel"), default="lambda",
                        help="generator set for GW polynomials")
    common.add_argument("--vars", choices=("v", "b"), default="v")
    common.add_argument("--symfun", action="store_true",
                        help="rewrite in elementary symmetric functions")

    parser = _Parser(prog="gwweyl", description="Representation and Grothendieck-Witt ring computations.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=_HELP.get(name))
    return parser


_HELP = {
    "roots": "simple, positive roots and coroots",
    "weyl": "order of the Weyl group",
    "char": "Weyl character of an irreducible",
    "dim": "dimension of an irreducible",
    "tensor": "decompose E_x (x) E_y into irreducibles",
    "lambda": "decompose the k-th exterior power of the standard representation",
    "sign": "duality sign of a dominant weight",
    "gw-mul": "multiply two GW polynomials",
    "augment": "augmentation (rank) of a GW polynomial",
    "restrict": "restrict Lambda^k V from Sp_2r to the diagonal Sp_2^r",
    "symfun": "rewrite a symmetric polynomial in elementary symmetric functions",
    "complete": "completion checks at a given precision",
    "as-map": "per-degree report for the map into invariant power series",
    "torsor-lift": "verify the unimodular lifting identity",
    "verify-all": "run the acceptance suite",
}

_VALUE_FLAGS = ("--weight", "--x", "--y")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse mistakes "-1,0" for an option; rewrite to "--weight=-1,0"
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        a = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if a in _VALUE_FLAGS and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{a}={nxt}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def _emit(data, text, fmt, out):
    if fmt == "json":
        out.write(json.dumps(dict(data, schema=SCHEMA), sort_keys=True, indent=2) + "\n")
    else:
        out.write(text + "\n")


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else argv))
        if not args.command:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        cfg = RunConfig(args.coeff_model, args.precision, args.report or args.format, args.seed)
        result = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"gwweyl: usage error: {exc}\n")
        return 2
    except (GWWeylError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"gwweyl: error: {exc}\n")
        return 1
    if len(result) == 3:
        data, text, ok = result
    else:
        (data, text), ok = result, True
    _emit(data, text, cfg.fmt, out)
    return 0 if ok else 1


def dispatch(argv: Sequence[str]) -> int:
    return main(list(argv))


if __name__ == "__main__":
    raise SystemExit(main())
