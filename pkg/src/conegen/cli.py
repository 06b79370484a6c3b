"""Command-line front end.

Exit codes: 0 success (or member / verified), 1 negative answer
(non-member / verification failed), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import conecore, oracle
from .conecore import GeneratorSet
from .conefile import (
    ConeFileError,
    ResultDocument,
    decimal_text,
    digest,
    format_cone_file,
    format_row,
    parse_cone_file,
    parse_point,
)
from .lpfeas import Feasible
from .ratcore import DimensionError, Vector

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str, stdin: TextIO) -> GeneratorSet:
    if path == "-":
        return parse_cone_file(stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    return parse_cone_file(text, path)


def _decimal_comments(vectors: Sequence[Vector], digits: int | None) -> list[str]:
    if digits is None:
        return []
    lines = [f"# decimal approximation ({digits} digits, lossy):"]
    lines += ["# ~ " + " ".join(decimal_text(x, digits) for x in v) for v in vectors]
    return lines


def _emit_set(out: TextIO, S: GeneratorSet, comments: Sequence[str], digits: int | None) -> None:
    out.write(format_cone_file(S, comments))
    for line in _decimal_comments(S.vectors, digits):
        out.write(line + "\n")


def _rows(indices: Sequence[int]) -> str:
    return " ".join(str(i + 1) for i in indices) or "-"


def cmd_member(args, out: TextIO, stdin: TextIO) -> int:
    S = _read(args.file, stdin)
    point = parse_point(" ".join(args.point), S.ambient_dim)
    res = conecore.certify_membership(point, S)
    is_member = isinstance(res, Feasible)
    key = "lambda" if is_member else "farkas"
    cert = res.y if is_member else res.z
    if args.format == "json":
        doc = ResultDocument(
            "member", digest(S), S.ambient_dim,
            certificates={key: cert},
            sizes={"input": len(S), "output": 0},
            verdict=is_member,
        )
        out.write(doc.to_json() + "\n")
    else:
        out.write("member\n" if is_member else "not member\n")
        out.write(f"{key} {format_row(cert)}\n")
        for line in _decimal_comments([cert], args.decimal):
            out.write(line + "\n")
    return EXIT_OK if is_member else EXIT_NEGATIVE


def _set_result(args, out, op, S, result, comments=(), indices=None, lineality_dim=None):
    if args.format == "json":
        sizes = {"input": len(S), "output": len(result)}
        if lineality_dim is not None:
            sizes["lineality_dim"] = lineality_dim
        doc = ResultDocument(op, digest(S), S.ambient_dim, output=result.vectors,
                             sizes=sizes, indices=indices or {})
        out.write(doc.to_json(args.decimal) + "\n")
    else:
        _emit_set(out, result, comments, args.decimal)
    return EXIT_OK


def cmd_reduce(args, out, stdin) -> int:
    S = _read(args.file, stdin)
    kept = conecore.reduce_ci_indices(S)
    return _set_result(args, out, "reduce", S, S.subset(kept), indices={"kept": tuple(kept)})


def cmd_minimize(args, out, stdin) -> int:
    S = _read(args.file, stdin)
    G, dec = conecore.minimize_with_decomposition(S, jobs=args.jobs)
    return _set_result(args, out, "minimize", S, G, lineality_dim=dec.lineality_dim)


def cmd_lineality(args, out, stdin) -> int:
    S = _read(args.file, stdin)
    dec = conecore.decompose(S, jobs=args.jobs)
    comments = [f"lineality_dim {dec.lineality_dim}", f"lineal_part rows {_rows(dec.lineal_part)}"]
    indices = {"lineal_part": dec.lineal_part, "lineality_basis": dec.lineality_basis}
    return _set_result(args, out, "lineality", S, S.subset(dec.lineal_part), comments,
                       indices, dec.lineality_dim)


def cmd_decompose(args, out, stdin) -> int:
    S = _read(args.file, stdin)
    dec = conecore.decompose(S, jobs=args.jobs)
    projected = GeneratorSet(S.ambient_dim, dec.projected_conic)
    indices = {
        "lineal_part": dec.lineal_part,
        "conic_part": dec.conic_part,
        "lineality_basis": dec.lineality_basis,
    }
    if args.format == "json":
        doc = ResultDocument(
            "decompose", digest(S), S.ambient_dim, output=projected.vectors,
            certificates={f"basis_{k}": S[i] for k, i in enumerate(dec.lineality_basis)},
            sizes={"input": len(S), "output": len(projected), "lineality_dim": dec.lineality_dim},
            indices=indices,
        )
        out.write(doc.to_json(args.decimal) + "\n")
        return EXIT_OK
    comments = [
        f"lineality_dim {dec.lineality_dim}",
        f"lineal_part rows {_rows(dec.lineal_part)}",
        f"conic_part rows {_rows(dec.conic_part)}",
        f"lineality_basis rows {_rows(dec.lineality_basis)}",
    ]
    comments += [f"basis {format_row(S[i])}" for i in dec.lineality_basis]
    comments.append("projected conic part:")
    _emit_set(out, projected, comments, args.decimal)
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    if args.file == "-" and args.candidate == "-":
        raise UsageError("only one of the two files can be read from stdin")
    S = _read(args.file, stdin)
    G = _read(args.candidate, stdin)
    if S.ambient_dim != G.ambient_dim:
        raise UsageError(f"dimension mismatch: input has n={S.ambient_dim}, candidate has n={G.ambient_dim}")
    report = oracle.verify_minimum(S, G)
    if args.format == "json":
        sizes = {"input": len(S), "output": len(G), "expected": report.expected_size,
                 "lineality_dim": report.lineality_dim}
        if report.bruteforce_size is not None:
            sizes["bruteforce"] = report.bruteforce_size
        doc = ResultDocument(
            "verify", digest(S), S.ambient_dim, output=G.vectors, sizes=sizes,
            indices={"missing": tuple(report.missing), "extra": tuple(report.extra),
                     "redundant": tuple(report.redundant)},
            verdict=report.passed,
        )
        out.write(doc.to_json(args.decimal) + "\n")
    else:
        for line in report.lines(G):
            out.write(line + "\n")
        out.write("verified\n" if report.passed else "verification failed\n")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_random(args, out, stdin) -> int:
    try:
        spec = oracle.InstanceSpec(args.n, args.m, args.d, args.seed, args.bound, args.nonnegative)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    S = oracle.random_instance(spec, check=False)
    d = conecore.decompose(S, jobs=args.jobs).lineality_dim
    if d < spec.d:
        raise AssertionError(f"planted lineality {spec.d} but found {d}")
    comments = [
        f"random n={spec.n} m={spec.m} d={spec.d} seed={spec.seed} bound={spec.bound}"
        + (" nonnegative" if spec.nonnegative else ""),
        f"lineality_dim {d}",
    ]
    if args.format == "json":
        doc = ResultDocument("random", digest(S), S.ambient_dim, output=S.vectors,
                             sizes={"input": 0, "output": len(S), "lineality_dim": d})
        out.write(doc.to_json(args.decimal) + "\n")
    else:
        _emit_set(out, S, comments, args.decimal)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for the lineal-part membership tests")
    common.add_argument("--decimal", type=int, default=None, metavar="K",
                        help="also show K-digit decimal approximations (lossy)")

    parser = argparse.ArgumentParser(
        prog="conegen",
        description="Exact minimum-cardinality generators of finitely generated cones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", parents=[common], help="decide whether a point lies in the cone")
    p.add_argument("file")
    p.add_argument("point", nargs="+", help='coordinates, e.g. "1 -1/2" (quote if negative fractions)')
    p.set_defaults(func=cmd_member)

    for name, func, doc in [
        ("reduce", cmd_reduce, "conically independent subset of the generators"),
        ("minimize", cmd_minimize, "minimum-cardinality generator"),
        ("lineality", cmd_lineality, "generators lying in the lineality space"),
        ("decompose", cmd_decompose, "lineal/conic split and projected conic part"),
    ]:
        p = sub.add_parser(name, parents=[common], help=doc)
        p.add_argument("file", help="cone file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="check a candidate minimum generator")
    p.add_argument("file")
    p.add_argument("candidate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", parents=[common], help="seeded random cone file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("--nonnegative", action="store_true")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    inp = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.jobs < 1:
        print("conegen: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.decimal is not None and args.decimal < 0:
        print("conegen: error: --decimal must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out, inp)
    except (ConeFileError, DimensionError, UsageError) as exc:
        print(f"conegen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
