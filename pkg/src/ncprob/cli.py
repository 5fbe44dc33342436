"""Command-line surface: coproduct expansion, cumulant transforms, additive
convolutions, and the verification harness.

All results go to stdout as canonical JSON (or fixed-format report lines for
`verify`), so identical invocations are byte-identical; timings and errors go
to stderr.  Exit codes: 0 success, 1 failed checks, 2 parse errors, 3 degree
exceeded, 4 kind mismatch, 5 unknown suite.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .core import (
    COMMUTATIVE,
    ORDERED,
    Word,
    degree_of,
    parse_element,
    parse_rational,
    parse_word,
    render,
)
from .cumulants import (
    CUMULANT_KINDS,
    cumulants_to_moments,
    moments_to_cumulants,
)
from .errors import DegreeExceeded, NcprobError, ParseError, UnitInput
from .functionals import CumulantTable, StateTable
from .hopf import delta, delta_b, delta_f, delta_half, delta_m_linearized
from .universal import UNIVERSAL_KINDS, additive_convolve_table
from .verify import SUITES, run_suite


def degree_cap() -> int:
    try:
        return int(os.environ.get("NCPROB_MAX_DEGREE_CAP", "8"))
    except ValueError:
        raise ParseError("NCPROB_MAX_DEGREE_CAP must be an integer")


def _check_cap(degree: int):
    cap = degree_cap()
    if degree > cap:
        raise DegreeExceeded(
            f"degree {degree} exceeds NCPROB_MAX_DEGREE_CAP={cap}")


# ---------------------------------------------------------------------------
# state / cumulant file IO


def _word_map_to_json(values) -> dict:
    ordered = sorted(values.items(), key=lambda kv: (kv[0].degree, kv[0].letters))
    return {render(w): str(v) for w, v in ordered}


def _json_to_word_map(data, what: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object")
    out = {}
    for key, value in data.items():
        w = parse_word(key)
        if w.is_unit():
            raise ParseError(f"the unit must not appear in {what}")
        out[w] = parse_rational(value)
    return out


def load_state(path: str) -> StateTable:
    data = _load_json(path)
    try:
        return StateTable(int(data["letters"]), int(data["max_degree"]),
                          _json_to_word_map(data.get("moments", {}), "moments"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def load_cumulants(path: str) -> CumulantTable:
    data = _load_json(path)
    try:
        return CumulantTable(int(data["letters"]), int(data["max_degree"]),
                             _json_to_word_map(data.get("cumulants", {}), "cumulants"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def dump_state(state: StateTable) -> str:
    return json.dumps({"letters": state.letters, "max_degree": state.max_degree,
                       "moments": _word_map_to_json(state.values)}, indent=2)


def dump_cumulants(table: CumulantTable) -> str:
    return json.dumps({"letters": table.letters, "max_degree": table.max_degree,
                       "cumulants": _word_map_to_json(table.values)}, indent=2)


# ---------------------------------------------------------------------------
# subcommands


def cmd_coproduct(args) -> tuple[str, int]:
    text = args.input
    ctype = args.type
    if ctype == "dm":
        elem = parse_element(text)
        if not isinstance(elem, Word) or elem.is_unit():
            raise ParseError("--type dm expects a non-empty word")
        _check_cap(elem.degree)
        out = delta_m_linearized(elem)
    else:
        elem = parse_element(text)
        flavor = ORDERED if ctype in ("full", "prec", "succ") else COMMUTATIVE
        if not isinstance(elem, Word) and elem.flavor != flavor:
            raise ParseError(
                f"--type {ctype} expects a word or a {flavor} bar expression")
        _check_cap(degree_of(elem))
        try:
            if ctype == "full":
                out = delta(elem, ORDERED, reduced=args.reduced)
            elif ctype in ("prec", "succ"):
                out = delta_half(elem, ctype, reduced=args.reduced)
            elif ctype == "m":
                out = delta(elem, COMMUTATIVE, reduced=args.reduced)
            elif ctype == "b":
                out = delta_b(elem, reduced=args.reduced)
            else:
                out = delta_f(elem, reduced=args.reduced)
        except UnitInput as exc:
            raise ParseError(str(exc)) from exc
    records = [{"left": render(l), "right": render(r), "coeff": str(c)}
               for (l, r), c in sorted(
                   out.items(),
                   key=lambda kv: (degree_of(kv[0]), render(kv[0][0]), render(kv[0][1])))]
    return json.dumps(records, indent=2), 0


def cmd_cumulants(args) -> tuple[str, int]:
    state = load_state(args.state)
    max_degree = args.max_degree if args.max_degree is not None else state.max_degree
    _check_cap(max_degree)
    if max_degree > state.max_degree:
        raise DegreeExceeded(
            f"state table stops at degree {state.max_degree}, asked for {max_degree}")
    trimmed = StateTable(state.letters, max_degree,
                         {w: v for w, v in state.items() if w.degree <= max_degree})
    return dump_cumulants(moments_to_cumulants(args.kind, trimmed)), 0


def cmd_moments(args) -> tuple[str, int]:
    table = load_cumulants(args.cumulants)
    max_degree = args.max_degree if args.max_degree is not None else table.max_degree
    _check_cap(max_degree)
    if max_degree > table.max_degree:
        raise DegreeExceeded(
            f"cumulant table stops at degree {table.max_degree}, asked for {max_degree}")
    trimmed = CumulantTable(table.letters, max_degree,
                            {w: v for w, v in table.items() if w.degree <= max_degree})
    return dump_state(cumulants_to_moments(args.kind, trimmed)), 0


def cmd_convolve(args) -> tuple[str, int]:
    phi = load_state(args.state1)
    psi = load_state(args.state2)
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = min(phi.max_degree, psi.max_degree)
    _check_cap(max_degree)
    if max_degree > min(phi.max_degree, psi.max_degree):
        raise DegreeExceeded(
            f"state tables stop at degree {min(phi.max_degree, psi.max_degree)}, "
            f"asked for {max_degree}")
    return dump_state(additive_convolve_table(args.kind, phi, psi, max_degree)), 0


def cmd_verify(args) -> tuple[str, int]:
    _check_cap(args.max_degree)
    t0 = time.perf_counter()
    report = run_suite(args.suite, seed=args.seed, max_degree=args.max_degree,
                       trials=args.trials)
    elapsed = time.perf_counter() - t0
    lines = []
    for check in report.checks:
        if check.passed:
            lines.append(f"PASS {report.suite}/{check.name}")
        else:
            detail = f": {check.detail}" if check.detail else ""
            lines.append(f"FAIL {report.suite}/{check.name}{detail}")
    passed = sum(c.passed for c in report.checks)
    lines.append(f"{passed}/{len(report.checks)} checks passed "
                 f"(seed={report.seed}, max_degree={report.max_degree}, "
                 f"trials={report.trials})")
    print(f"verify {report.suite}: {elapsed:.2f}s", file=sys.stderr)
    return "\n".join(lines), 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncprob",
        description="Hopf-algebraic calculus for non-commutative probability: "
                    "coproducts, cumulants, additive convolutions, verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coproduct", help="expand a coproduct on a word or bar monomial")
    p.add_argument("--type", required=True,
                   choices=["full", "prec", "succ", "m", "dm", "b", "f"])
    p.add_argument("--input", required=True, metavar="EXPR",
                   help="word like a1.a2, commutative bar a1.a2|a3, "
                        "or ordered bar [a1|a2]")
    p.add_argument("--reduced", action="store_true",
                   help="drop the boundary terms (no effect for dm)")
    p.set_defaults(fn=cmd_coproduct)

    p = sub.add_parser("cumulants", help="moments -> cumulants of a state file")
    p.add_argument("--kind", required=True, choices=list(CUMULANT_KINDS))
    p.add_argument("--state", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(fn=cmd_cumulants)

    p = sub.add_parser("moments", help="cumulants -> moments")
    p.add_argument("--kind", required=True, choices=list(CUMULANT_KINDS))
    p.add_argument("--cumulants", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("convolve", help="additive convolution of two state files")
    p.add_argument("--kind", required=True, choices=list(UNIVERSAL_KINDS))
    p.add_argument("--state1", required=True)
    p.add_argument("--state2", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(fn=cmd_convolve)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output, code = args.fn(args)
    except NcprobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
