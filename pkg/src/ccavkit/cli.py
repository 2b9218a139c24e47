"""Command-line interface.

Exit codes: 0 success (for ``solve``: p can be made a winner), 1 ``solve``
answered no, 2 bad input, 3 tabulated family given to ``classify``,
4 enumeration bound exceeded, 5 reduction precondition violated.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import io
from .core import Election, ElectionError
from .generators import Tabulated, classify, validate
from .hardness import reductions as red
from .hardness.threedm import ThreeDMError, gen_3dm, solve_3dm_brute
from .solvers import METHODS, BoundExceeded, solve, solve_brute_force
from .vectors import distinguish, normalize

EXIT_NO = 1
EXIT_INPUT = 2
EXIT_TABULATED = 3
EXIT_BOUND = 4
EXIT_PRECONDITION = 5

CASES = ("veto-style", "approval-style", "auto", "three-coeff", "case1", "case2", "case3", "case4")
COEFF_COUNTS = {"three-coeff": 3, "case1": 5, "case2": 2, "case3": 3, "case4": 2}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _emit(doc) -> None:
    sys.stdout.write(io.dumps(doc) + "\n")


def cmd_normalize(args) -> int:
    _emit(list(normalize(io.parse_vector_literal(args.vector))))
    return 0


def cmd_classify(args) -> int:
    spec = io.generator_from_json(io.load(args.spec))
    if isinstance(spec, Tabulated):
        raise CliError("tabulated families cannot be classified; give a pattern or builtin", EXIT_TABULATED)
    _emit(classify(spec).as_dict())
    return 0


def _brute_options(args) -> dict:
    return {"max_distinct": args.max_distinct, "max_subsets": args.max_subsets}


def cmd_solve(args) -> int:
    inst = io.ccav_from_json(io.load(args.instance))
    if (args.spec is None) == (args.vector is None):
        raise CliError("give exactly one of a generator file or --vector")
    if args.spec is not None:
        spec = io.generator_from_json(io.load(args.spec))
    else:
        spec = Tabulated((io.parse_vector_literal(args.vector),))
    try:
        result = solve(inst, spec, args.method, **_brute_options(args))
    except BoundExceeded as exc:
        raise CliError(str(exc), EXIT_BOUND) from exc
    _emit(io.result_to_json(result))
    return 0 if result.decision else EXIT_NO


def cmd_distinguish(args) -> int:
    v1, v2 = io.parse_vector_literal(args.v1), io.parse_vector_literal(args.v2)
    if len(v1) != len(v2):
        raise CliError(f"vectors have different lengths ({len(v1)} and {len(v2)})")
    votes = distinguish(v1, v2)
    if votes is None:
        _emit({"equivalent": True})
        return 0
    m = len(v1)
    election = Election(("a", "b") + tuple(f"d{i}" for i in range(1, m - 1)), votes)
    _emit({
        "equivalent": False,
        "election": io.election_to_json(election),
        "verification": {
            "v1_winners": sorted(election.winners(v1)),
            "v2_winners": sorted(election.winners(v2)),
        },
    })
    return 0


def _coeffs(args, case: str) -> list:
    if args.coeffs is None:
        raise CliError(f"--coeffs is required for {case}", EXIT_PRECONDITION)
    values = [io.parse_rational(v.strip()) for v in args.coeffs.split(",")]
    if len(values) != COEFF_COUNTS[case]:
        raise CliError(f"{case} takes {COEFF_COUNTS[case]} coefficients, got {len(values)}",
                       EXIT_PRECONDITION)
    return values


def _build_reduction(args, inst):
    case = args.case
    if case in ("veto-style", "approval-style", "auto"):
        if args.generator is None:
            raise CliError(f"--generator is required for {case}", EXIT_PRECONDITION)
        spec = io.generator_from_json(io.load(args.generator))
        build = {"veto-style": red.reduce_veto_style, "approval-style": red.reduce_approval_style,
                 "auto": red.reduce_auto}[case]
        return build(spec, inst)
    values = _coeffs(args, case)
    build = {"three-coeff": red.reduce_three_coeff, "case1": red.reduce_case1,
             "case2": red.reduce_case2, "case3": red.reduce_case3, "case4": red.reduce_case4}[case]
    return build(*values, inst)


def cmd_reduce(args) -> int:
    inst = io.threedm_from_json(io.load(args.threedm))
    try:
        reduction = _build_reduction(args, inst)
    except red.ReductionError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    out = {
        "kind": reduction.kind,
        "condition_holds": reduction.condition_holds,
        "num_candidates": reduction.instance.m,
        "vector": [io.fmt_rational(v) for v in reduction.vector],
        "instance": io.envelope("ccav", io.ccav_to_json(reduction.instance)),
    }
    if args.check:
        try:
            cover = solve_3dm_brute(inst)
            ccav = solve_brute_force(reduction.instance, reduction.vector, **_brute_options(args))
        except (BoundExceeded, ThreeDMError) as exc:
            raise CliError(str(exc), EXIT_BOUND) from exc
        out["check"] = {
            "threedm_positive": cover is not None,
            "ccav_positive": ccav.decision,
            "agree": (cover is not None) == ccav.decision,
        }
    _emit(out)
    return 0


def cmd_gen3dm(args) -> int:
    _emit(io.envelope("threedm", io.threedm_to_json(gen_3dm(args.k, args.n, args.planted, args.seed))))
    return 0


def cmd_validate(args) -> int:
    spec = io.generator_from_json(io.load(args.spec))
    _emit(validate(spec, args.up_to).as_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ccavkit", description="CCAV for positional scoring rules")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the normal form of a scoring vector")
    p.add_argument("--vector", required=True, help="comma-separated rationals, e.g. 3,2,1/2,0")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("classify", help="polynomial case or hardness witness of a family")
    p.add_argument("spec", help="generator JSON file")
    p.set_defaults(func=cmd_classify)

    def bounds(p, distinct):
        p.add_argument("--max-distinct", type=int, default=distinct,
                       help="largest number of distinct unregistered votes to enumerate")
        p.add_argument("--max-subsets", type=int, default=10 ** 7,
                       help="largest number of sub-multisets to enumerate")

    p = sub.add_parser("solve", help="decide a CCAV instance")
    p.add_argument("instance", help="CCAV JSON file")
    p.add_argument("spec", nargs="?", help="generator JSON file")
    p.add_argument("--vector", help="use this scoring vector instead of a generator")
    p.add_argument("--method", choices=METHODS, default="auto")
    bounds(p, 20)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("distinguish", help="election separating two scoring vectors")
    p.add_argument("--v1", required=True)
    p.add_argument("--v2", required=True)
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("reduce", help="build a CCAV instance from a 3DM instance")
    p.add_argument("threedm", help="3DM JSON file")
    p.add_argument("--case", choices=CASES, required=True)
    p.add_argument("--generator", help="generator JSON file (veto-style, approval-style, auto)")
    p.add_argument("--coeffs", help="comma-separated coefficients (three-coeff, case1..case4)")
    p.add_argument("--check", action="store_true", help="solve both sides exhaustively and compare")
    bounds(p, 24)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen3dm", help="random 3DM instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--planted", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen3dm)

    p = sub.add_parser("validate", help="monotonicity and purity report for a family")
    p.add_argument("spec", help="generator JSON file")
    p.add_argument("--up-to", type=int, default=10)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ccavkit: {exc}", file=sys.stderr)
        return exc.code
    except (ElectionError, OSError) as exc:
        print(f"ccavkit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
