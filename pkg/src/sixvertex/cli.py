"""Command-line front end.

All matrices travel as JSON objects ``{"a1": ..., ..., "c2": ..., "mode": ...}``.
Exit status: 0 affirmative, 1 well-formed negative or undefined result,
2 usage or input error. ``SIXVERTEX_MODE`` (``exact``, ``float`` or
``float:<eps>``) sets the scalar mode for inputs that do not name one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, families, groupoid, ybe
from .exceptions import DegenerateProductError, SixVertexError
from .scalars import EXACT, ScalarMode, parse_scalar, scalar_to_json

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def default_mode() -> ScalarMode:
    setting = os.environ.get("SIXVERTEX_MODE", "exact").strip().lower()
    if setting == "exact":
        return EXACT
    kind, _, eps = setting.partition(":")
    if kind != "float":
        raise InputError(f"SIXVERTEX_MODE must be 'exact', 'float' or 'float:<eps>', not {setting!r}")
    try:
        return ScalarMode.float_mode(float(eps)) if eps else ScalarMode.float_mode()
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_json(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _matrices(obj, names, mode):
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    missing = [n for n in names if n not in obj]
    if missing:
        raise InputError(f"missing {', '.join(missing)}")
    # A matrix that names its own mode keeps it; the rest follow SIXVERTEX_MODE.
    return [core.matrix_from_json(obj[n], None if _has_mode(obj[n]) else mode) for n in names]


def _has_mode(m) -> bool:
    return isinstance(m, dict) and "mode" in m


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _conditions_json(c: ybe.SolveConditions) -> dict:
    return {
        "condition1": [scalar_to_json(c.cond1_lhs), scalar_to_json(c.cond1_rhs)],
        "condition2": [scalar_to_json(c.cond2_lhs), scalar_to_json(c.cond2_rhs)],
    }


def cmd_verify(args) -> int:
    u, w, v = _matrices(_read_json(args.input), ("u", "w", "v"), default_mode())
    ok = ybe.is_yb_solution(u, w, v)
    _emit(
        {
            "verdict": "solution" if ok else "not a solution",
            "residuals": [scalar_to_json(r) for r in ybe.component_residuals(u, w, v)],
        }
    )
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_compose(args) -> int:
    mode = default_mode()
    obj = _read_json(args.input)
    if args.case == "w":
        u, v = _matrices(obj, ("u", "v"), mode)
        conditions = lambda: ybe.solve_conditions(u, v)  # noqa: E731
        solve = lambda: ybe.solve_w(u, v)  # noqa: E731
    elif args.case == "u":
        w, v = _matrices(obj, ("w", "v"), mode)
        conditions = lambda: ybe.solve_conditions(w, core.inverse(v))  # noqa: E731
        solve = lambda: ybe.solve_u(w, v)  # noqa: E731
    else:
        u, w = _matrices(obj, ("u", "w"), mode)
        conditions = lambda: ybe.solve_conditions(core.inverse(u), w)  # noqa: E731
        solve = lambda: ybe.solve_v(u, w)  # noqa: E731
    try:
        result = solve()
    except DegenerateProductError as exc:
        _emit({"result": "degenerate", "vanishing": list(exc.vanishing), "message": str(exc)})
        return EXIT_NEGATIVE
    if result is None:
        _emit({"result": "undefined", **_conditions_json(conditions())})
        return EXIT_NEGATIVE
    _emit({"result": core.matrix_to_json(result)})
    return EXIT_OK


def cmd_classify(args) -> int:
    m = core.matrix_from_json(_read_json(args.input), None)
    _emit(core.classify(m).to_dict())
    return EXIT_OK


def cmd_dual(args) -> int:
    m = core.matrix_from_json(_read_json(args.input), None)
    _emit(core.matrix_to_json(core.dual(m)))
    return EXIT_OK


_FAMILY_KEYS = ("q1", "q2", "beta", "z1", "z2", "w", "q", "z", "m11", "m12", "m21", "m22", "c")


def _family_params(args) -> dict:
    params = {}
    if args.params:
        text = args.params
        if text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        try:
            params = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed --params JSON: {exc.msg}") from None
        if not isinstance(params, dict):
            raise InputError("--params must be a JSON object")
    for key in _FAMILY_KEYS + ("kind", "which", "variant", "n", "k"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def cmd_family(args) -> int:
    mode = default_mode()
    params = _family_params(args)
    kind = params.get("kind")

    def get(name, default=None):
        if name not in params:
            if default is None:
                raise InputError(f"family {kind!r} needs --{name.replace('_', '-')}")
            return mode.coerce(default)
        value = params[name]
        return parse_scalar(value, mode) if isinstance(value, str) else mode.coerce(value)

    if kind == "tau":
        g = families.GL2GL1Element(get("m11"), get("m12"), get("m21"), get("m22"), get("c"), mode=mode)
        m = families.tau(g)
    elif kind in ("cf", "ff"):
        p = families.FamilyParams(get("q1"), get("q2"), get("beta", 1), mode=mode)
        m = families.r_family(p, kind, families.GroupElem3(get("z1"), get("z2"), get("w", 1), mode=mode))
    elif kind == "quantum":
        m = families.quantum_r(get("q"), get("z"), params.get("variant", "cf"), mode=mode)
    elif kind == "five-vertex":
        m = families.five_vertex(
            params.get("variant", "cf"),
            params.get("which", "b2_zero"),
            get("z1"),
            get("z2"),
            get("w", 1),
            get("beta", 1),
            mode=mode,
        )
    elif kind == "asm":
        m = families.asm_matrix()
    elif kind == "tl":
        if "n" not in params or "k" not in params:
            raise InputError("family 'tl' needs --n and --k")
        op = families.tl_generator(get("q"), int(params["n"]), int(params["k"]))
        _emit(
            {
                "n": op.n,
                "k": op.k,
                "matrix": [[scalar_to_json(x) for x in row] for row in op.matrix.rows],
            }
        )
        return EXIT_OK
    else:
        raise InputError(f"unknown family kind {kind!r}")
    _emit(core.matrix_to_json(m))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    report = groupoid.associativity_fuzz(args.strategy, args.seed, args.trials, eps=args.eps)
    print(report.dumps())
    return EXIT_OK if not report.failures else EXIT_NEGATIVE


def cmd_axioms(args) -> int:
    samples = groupoid.sample_composable(args.strategy, args.seed, args.samples, length=3, eps=args.eps)
    report = groupoid.axiom_suite(samples, seed=args.seed)
    print(report.dumps())
    return EXIT_OK if not report.failures else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sixvertex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check [[u, w, v]] = 0 and print the 13 component residuals")
    p.add_argument("input", nargs="?", help="JSON file with keys u, w, v (default: stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compose", help="solve the Yang-Baxter equation for one matrix")
    p.add_argument("--case", choices=("w", "u", "v"), default="w")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("classify", help="print class flags of a matrix")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dual", help="print the dual matrix")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("family", help="construct a member of a parametrized family")
    p.add_argument("--kind", choices=("tau", "cf", "ff", "five-vertex", "quantum", "asm", "tl"))
    p.add_argument("--params", help="JSON object of parameters, or @file")
    for key in _FAMILY_KEYS:
        p.add_argument(f"--{key}")
    p.add_argument("--variant", choices=("cf", "ff"), help="family variant for quantum and five-vertex")
    p.add_argument("--which", choices=("b1_zero", "b2_zero"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_family)

    for name, func, count in (("fuzz", cmd_fuzz, "--trials"), ("axioms", cmd_axioms, "--samples")):
        p = sub.add_parser(name)
        p.add_argument("--strategy", choices=("family_exact", "cross_float"), default="family_exact")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument(count, type=int, default=100, dest="trials" if name == "fuzz" else "samples")
        p.add_argument("--eps", type=float, default=1e-9)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SixVertexError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
