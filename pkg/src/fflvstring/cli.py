"""Command-line front end with stable JSON output.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
gate failure.  Identical invocations produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .crystal import string_points
from .degenmap import build_matrix, build_translation, fold_vector
from .errors import VerificationError
from .exact import det_int
from .fflv import points
from .rootsys import LieType, build_labels, reduced_word
from .verify import all_passed, reports_to_json, run_grid
from .wedge import act_sequence, sim_check_ops, wedge_basis

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_GATE_FAILURE = 3


class UsageError(Exception):
    pass


def _parse_type(value: str) -> str:
    if value not in ("A", "C"):
        raise UsageError(f"--type must be A or C, got {value!r}")
    return value


def _parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--weight must be comma-separated integers: {exc}")
    if len(coeffs) != rank:
        raise UsageError(
            f"--weight needs exactly {rank} coefficients, got {len(coeffs)}"
        )
    if any(a < 0 for a in coeffs):
        raise UsageError("--weight coefficients must be nonnegative")
    return coeffs


def _default_threads() -> int:
    env = os.environ.get("FSL_THREADS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def polytope_document(lt: LieType, weight, kind: str) -> dict:
    """Stable JSON document for one lattice-point set."""
    pts = points(lt, weight) if kind == "fflv" else string_points(lt, weight)
    doc = {
        "type": lt.family,
        "rank": lt.rank,
        "weight": list(weight),
        "kind": kind,
        "labels": [
            {"row": lab.row, "col": lab.col, "barred": lab.barred}
            for lab in build_labels(lt)
        ],
    }
    if kind == "string":
        doc["word"] = list(reduced_word(lt))
    doc["points"] = [list(p) for p in pts]
    return doc


def parse_polytope_document(text: str) -> dict:
    """Inverse of the JSON rendering, for lossless round-trips."""
    doc = json.loads(text)
    doc["weight"] = list(doc["weight"])
    doc["points"] = [list(p) for p in doc["points"]]
    return doc


def _cmd_points(args, kind: str) -> int:
    lt = LieType(_parse_type(args.type), args.rank)
    weight = _parse_weight(args.weight, lt.rank)
    doc = polytope_document(lt, weight, kind)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_verify_main(args) -> int:
    if args.max_level < 0:
        raise UsageError("--max-level must be nonnegative")
    lt = LieType(_parse_type(args.type), args.rank)
    matrix = None
    if args.corrupt_matrix:
        mat = [list(row) for row in build_matrix(lt)]
        mat[0][0] -= 1
        matrix = tuple(tuple(row) for row in mat)
    reports = run_grid(
        [(lt, args.max_level)], threads=args.threads, matrix=matrix
    )
    header = f"{'case':<16}{'fflv':>6}{'string':>8}{'dim':>6}  {'status':<8}{'twist':<7}"
    print(header)
    for rep in reports:
        case = f"{rep.family}{rep.rank} {rep.weight}"
        twist = "ok" if rep.weight_twist is not None else "none"
        print(
            f"{case:<16}{rep.fflv_count:>6}{rep.string_count:>8}"
            f"{rep.weyl_dim:>6}  {rep.status:<8}{twist:<7}({rep.elapsed:.3f}s)"
        )
        for p in rep.missing:
            print(f"  missing string point: {list(p)}")
        for p in rep.extra:
            print(f"  unmatched image point: {list(p)}")
    if args.json:
        _emit(reports_to_json(reports), args.json)
    return EXIT_OK if all_passed(reports) else EXIT_VERIFICATION_FAILED


def _require_positive_rank(args) -> None:
    if args.max_rank < 1:
        raise UsageError("--max-rank must be at least 1")


def _cmd_verify_unimodular(args) -> int:
    _require_positive_rank(args)
    failures = []
    for family in ("A", "C"):
        for n in range(1, args.max_rank + 1):
            lt = LieType(family, n)
            try:
                mat = build_matrix(lt)
            except VerificationError as exc:
                print(f"{lt}: FAILED ({exc})")
                failures.append(str(lt))
                continue
            det = det_int(mat)
            entries = sorted({x for row in mat for x in row})
            upper = all(
                mat[r][c] == 0 for r in range(len(mat)) for c in range(r)
            )
            diag_ok = all(mat[k][k] == -1 for k in range(len(mat)))
            print(
                f"{lt}: det = {det}, entries = {entries}, "
                f"triangular = {upper and diag_ok}"
            )
            if det not in (1, -1) or not upper or not diag_ok:
                failures.append(str(lt))
    return EXIT_VERIFICATION_FAILED if failures else EXIT_OK


def _cmd_verify_fold(args) -> int:
    _require_positive_rank(args)
    failures = []
    for n in range(1, args.max_rank + 1):
        source = LieType("A", 2 * n - 1)
        target = LieType("C", n)
        for i in range(1, n + 1):
            w_a = tuple(1 if k == i - 1 else 0 for k in range(2 * n - 1))
            w_c = tuple(1 if k == i - 1 else 0 for k in range(n))
            folded = fold_vector(build_translation(source, w_a), n)
            expected = build_translation(target, w_c)
            ok = folded == expected
            print(f"fold t({source}, omega_{i}) == t({target}, omega_{i}): {ok}")
            if not ok:
                failures.append((n, i))
    if failures:
        print(f"failing (rank, index) pairs: {failures}")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _cmd_verify_comm(args) -> int:
    _require_positive_rank(args)
    failures = []
    for family in ("A", "C"):
        for m in range(1, args.max_rank + 1):
            dim = m + 1 if family == "A" else 2 * m
            bad = 0
            for l in range(1, m + 1):
                for j in range(1, m + 1):
                    expected = abs(l - j) != 1
                    pointwise = all(
                        act_sequence([l, j], wedge_basis((t,)), family, m)
                        == act_sequence([j, l], wedge_basis((t,)), family, m)
                        for t in range(1, dim + 1)
                    )
                    if pointwise != expected:
                        bad += 1
                        failures.append((family, m, l, j, "pointwise"))
                    for i in range(1, m + 1):
                        sim = sim_check_ops([l, j], [j, l], i, family, m)
                        if sim != expected:
                            bad += 1
                            failures.append((family, m, l, j, f"sim i={i}"))
            print(f"{family}{m}: commutation table {'ok' if bad == 0 else 'FAILED'}")
    if failures:
        print(f"failing cases: {failures[:10]}")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fflvstring",
        description="Exact lattice-point pipelines for chain and string polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fflv = sub.add_parser("fflv", help="chain polytope lattice points")
    fflv_sub = fflv.add_subparsers(dest="subcommand", required=True)
    fflv_points = fflv_sub.add_parser("points", help="emit a point document")
    _add_points_args(fflv_points)

    stringpoly = sub.add_parser("stringpoly", help="string polytope lattice points")
    string_sub = stringpoly.add_subparsers(dest="subcommand", required=True)
    string_points_cmd = string_sub.add_parser("points", help="emit a point document")
    _add_points_args(string_points_cmd)

    verify = sub.add_parser("verify", help="theorem verification sweeps")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True)

    main_cmd = verify_sub.add_parser("main", help="set equality over a weight grid")
    main_cmd.add_argument("--type", required=True)
    main_cmd.add_argument("--rank", type=int, required=True)
    main_cmd.add_argument("--max-level", type=int, required=True)
    main_cmd.add_argument("--json", default=None)
    main_cmd.add_argument("--threads", type=int, default=_default_threads())
    main_cmd.add_argument(
        "--corrupt-matrix", action="store_true", help=argparse.SUPPRESS
    )

    uni = verify_sub.add_parser("unimodular", help="determinant sweep")
    uni.add_argument("--max-rank", type=int, required=True)

    fold = verify_sub.add_parser("fold", help="translation folding sweep")
    fold.add_argument("--max-rank", type=int, required=True)

    comm = verify_sub.add_parser("comm", help="commutation equivalence sweep")
    comm.add_argument("--max-rank", type=int, required=True)
    return parser


def _add_points_args(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--type", required=True)
    cmd.add_argument("--rank", type=int, required=True)
    cmd.add_argument("--weight", required=True)
    cmd.add_argument("--out", default=None)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "fflv":
            return _cmd_points(args, "fflv")
        if args.command == "stringpoly":
            return _cmd_points(args, "string")
        if args.command == "verify":
            if args.subcommand == "main":
                return _cmd_verify_main(args)
            if args.subcommand == "unimodular":
                return _cmd_verify_unimodular(args)
            if args.subcommand == "fold":
                return _cmd_verify_fold(args)
            if args.subcommand == "comm":
                return _cmd_verify_comm(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"internal gate failure: {exc}", file=sys.stderr)
        return EXIT_GATE_FAILURE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
