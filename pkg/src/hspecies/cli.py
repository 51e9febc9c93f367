"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from typing import List, Optional

from .algebras import REGISTRY, get_algebra
from .algebras.qsym import QSYM, alpha_map
from .bialgebra import GradedBialgebra, antipode, antipode_takeuchi, graded_dimension, verify
from .combinatorics import format_element
from .linear import LinComb

DIMS_CAP = 8
VERIFY_CAP = 4

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _algebra(name: str, unicode: bool) -> GradedBialgebra:
    try:
        A = get_algebra(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if unicode and A.name in ("lorder", "lorder-dual"):
        A = replace(
            A,
            format=lambda l: " ".join(format_element(x, True) for x in l.items) if l.items else "()",
        )
    return A


def _parse(A: GradedBialgebra, text: str) -> LinComb:
    try:
        return LinComb.basis(A.parse(text))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse {text!r} as a {A.name} basis element: {exc}") from None


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def cmd_dims(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    cap = args.max_degree if args.max_degree is not None else DIMS_CAP
    if args.n < 0 or args.n > cap:
        raise UsageError(f"degree {args.n} outside 0..{cap} (raise --max-degree to allow more)")
    dims = [graded_dimension(A, k) for k in range(args.n + 1)]
    _emit(args, " ".join(map(str, dims)), {"algebra": A.name, "dimensions": dims})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    cap = args.max_degree if args.max_degree is not None else DIMS_CAP
    if args.n < 0 or args.n > cap:
        raise UsageError(f"degree {args.n} outside 0..{cap}")
    basis = sorted(A.basis(args.n), key=A.sort_key)
    _emit(
        args,
        "\n".join(A.format(b) for b in basis),
        {"algebra": A.name, "degree": args.n, "basis": [A.to_json(b) for b in basis]},
    )
    return EXIT_OK


def cmd_mul(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    factors = [_parse(A, t) for t in args.elements]
    result = factors[0]
    for f in factors[1:]:
        result = A.mul(result, f)
    _emit(
        args,
        A.format_element(result),
        {"algebra": A.name, "operation": "mul", "inputs": args.elements, "result": A.element_to_json(result)},
    )
    return EXIT_OK


def cmd_comul(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    result = A.comul(_parse(A, args.element))
    _emit(
        args,
        A.format_tensor(result),
        {"algebra": A.name, "operation": "comul", "inputs": [args.element], "result": A.tensor_to_json(result)},
    )
    return EXIT_OK


def cmd_antipode(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    x = _parse(A, args.element)
    result = antipode_takeuchi(A, x) if args.takeuchi else antipode(A, x)
    _emit(
        args,
        A.format_element(result),
        {
            "algebra": A.name,
            "operation": "antipode",
            "method": "takeuchi" if args.takeuchi else "recursive",
            "inputs": [args.element],
            "result": A.element_to_json(result),
        },
    )
    return EXIT_OK


def cmd_map_qsym(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    if A.name != "dqsym":
        raise UsageError("map-qsym forgets signs and is only defined on dqsym")
    result = alpha_map(_parse(A, args.element))
    _emit(
        args,
        QSYM.format_element(result),
        {"algebra": "qsym", "operation": "map-qsym", "inputs": [args.element], "result": QSYM.element_to_json(result)},
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    A = _algebra(args.algebra, args.unicode)
    cap = args.max_degree if args.max_degree is not None else VERIFY_CAP
    degree = args.degree if args.degree is not None else cap
    if degree < 0 or degree > cap:
        raise UsageError(f"degree {degree} outside 0..{cap} (raise --max-degree to allow more)")
    start = time.perf_counter()
    report = verify(A, degree)
    elapsed = time.perf_counter() - start
    payload = report.to_dict()
    payload["seconds"] = round(elapsed, 3)
    _emit(args, report.summary() + f"\n({elapsed:.2f} s)", payload)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-degree", type=int, default=None, metavar="N",
                        help=f"degree cap (default {DIMS_CAP} for dims/enumerate, {VERIFY_CAP} for verify)")
    common.add_argument("--unicode", action="store_true", help="render negative elements with overbars")

    parser = argparse.ArgumentParser(prog="hspecies", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    algebras = sorted(REGISTRY)

    p = sub.add_parser("dims", parents=[common], help="graded dimensions in degrees 0..N")
    p.add_argument("algebra", choices=algebras)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("enumerate", parents=[common], help="list the degree-N basis")
    p.add_argument("algebra", choices=algebras)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mul", parents=[common], help="product of basis elements, left to right")
    p.add_argument("algebra", choices=algebras)
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("comul", parents=[common], help="coproduct of a basis element")
    p.add_argument("algebra", choices=algebras)
    p.add_argument("element")
    p.set_defaults(func=cmd_comul)

    p = sub.add_parser("antipode", parents=[common], help="antipode of a basis element")
    p.add_argument("algebra", choices=algebras)
    p.add_argument("element")
    p.add_argument("--takeuchi", action="store_true", help="use the alternating-sum formula")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("map-qsym", parents=[common], help="forget signs: dqsym -> qsym")
    p.add_argument("algebra", choices=["dqsym"])
    p.add_argument("element")
    p.set_defaults(func=cmd_map_qsym)

    p = sub.add_parser("verify", parents=[common], help="exhaustive Hopf-axiom check")
    p.add_argument("algebra", choices=algebras)
    p.add_argument("--degree", type=int, default=None, help="total degree bound (default: the cap)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
