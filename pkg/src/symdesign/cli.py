"""Command-line front end.

Subcommands::

    symdesign tmax        exact design order for one (group, n, k) instance
    symdesign lower-bound rank-scan lower bound only
    symdesign smatrix     dump the exact charge matrix with labels
    symdesign table       reproduce the headline tables over a range of n
    symdesign verify      run a named verification suite
    symdesign custom      solve a user problem from a JSON document

Exit codes: 0 success, 2 precondition failure (for example a gate set below
its semi-universality threshold), 3 input parse error, 4 internal
verification failure.  ``--format json`` output uses the fixed key set
{group, n, k, tmax, lower_bound, certificate, proven_exact, closed_form,
agrees, ms}; infinite orders render as the string "infinity" in every format.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .charges import (
    CycleType,
    build_charge_matrix,
    character_matrix,
    conjugacy_classes,
    load_custom_problem,
)
from .closedforms import closed_tmax
from .groups import GroupSpec, canonical_order, sectors, sud, zp, U1, SU2
from .infinity import INFINITE, is_finite
from .solver import (
    SemiUniversalityError,
    compute_tmax,
    lower_bound,
    tmax_exact,
    verify_certificate,
)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_PARSE = 3
EXIT_VERIFY = 4


def _group_from_flags(args) -> GroupSpec:
    kind = args.group.lower()
    if kind == "u1":
        return U1
    if kind == "su2":
        return SU2
    if kind == "zp":
        if args.p is None:
            raise ValueError("--p is required for --group zp")
        return zp(args.p)
    if kind == "sud":
        if args.d is None:
            raise ValueError("--d is required for --group sud")
        return sud(args.d)
    raise ValueError(f"unknown group {args.group!r}")


def _parse_classes(text: str) -> list[CycleType]:
    """Parse a class list such as ``id,2,3,2+2`` or ``(1),(12),(12)(34)``."""
    out = []
    for token in text.split(","):
        token = token.strip().lower()
        if token in ("id", "e", "1", "(1)"):
            out.append(CycleType(()))
            continue
        if token.startswith("("):
            lengths = tuple(
                sorted((len(part) for part in token.strip("()").split(")(")), reverse=True)
            )
            out.append(CycleType(lengths))
            continue
        lengths = tuple(sorted((int(x) for x in token.split("+")), reverse=True))
        out.append(CycleType(lengths))
    return out


def _render_value(v):
    return str(v) if not is_finite(v) else v


def _format_certificate(cert, table) -> list[str]:
    if cert is None:
        return []
    out = []
    for irrep, q in zip(table.ids, cert.q):
        if q:
            out.append(f"{irrep.label}: {q:+d}")
    return out


def _closed_form_for(group, n, k, classes):
    """Closed-form value when the instance is inside a tabulated regime."""
    try:
        if group.kind == "SUd" and classes is not None:
            cycle_sets = {c.cycles for c in classes}
            if cycle_sets == {(), (2,), (3,), (2, 2)}:
                cf = closed_tmax(group, n, k, variant="tgroup")
            elif cycle_sets == {(), (2,)}:
                cf = closed_tmax(group, n, k, variant="sv")
            elif cycle_sets == {c.cycles for c in conjugacy_classes(k)}:
                cf = closed_tmax(group, n, k)
            else:
                return None
        else:
            cf = closed_tmax(group, n, k)
    except ValueError:
        return None
    if n < cf.valid_from_n:
        return None
    return cf


def _emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = list(report.keys())
        writer.writerow(keys)
        writer.writerow(
            [
                ";".join(report[k]) if isinstance(report[k], list) else report[k]
                for k in keys
            ]
        )
        return buf.getvalue().rstrip("\n")
    lines = [f"{key} = {value}" for key, value in report.items()]
    return "\n".join(lines)


def cmd_tmax(args) -> int:
    group = _group_from_flags(args)
    classes = _parse_classes(args.classes) if args.classes else None
    started = time.perf_counter()
    try:
        result, table, matrix = compute_tmax(
            group,
            args.n,
            args.k,
            assume_semiuniversal=args.assume_semiuniversal,
            classes=classes,
        )
    except SemiUniversalityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if result.certificate is not None and not verify_certificate(
        result.certificate, matrix, table
    ):
        print("error: certificate failed re-verification", file=sys.stderr)
        return EXIT_VERIFY
    cf = _closed_form_for(group, args.n, args.k, classes)
    report = {
        "group": str(group),
        "n": args.n,
        "k": args.k,
        "tmax": _render_value(result.tmax),
        "lower_bound": _render_value(result.lower_bound),
        "certificate": _format_certificate(result.certificate, table),
        "proven_exact": result.proven_exact,
        "closed_form": _render_value(cf.value) if cf else None,
        "agrees": (cf.value == result.tmax) if cf else None,
        "ms": round(elapsed_ms, 3),
    }
    print(_emit(report, args.format))
    return EXIT_OK


def cmd_lower_bound(args) -> int:
    group = _group_from_flags(args)
    classes = _parse_classes(args.classes) if args.classes else None
    table = canonical_order(sectors(group, args.n))
    if classes is not None:
        matrix = character_matrix(group, args.n, args.k, classes).aligned_to(table)
    else:
        matrix = build_charge_matrix(group, args.n, args.k).aligned_to(table)
    started = time.perf_counter()
    lb = lower_bound(matrix, table)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    report = {
        "group": str(group),
        "n": args.n,
        "k": args.k,
        "ell": lb.ell,
        "sector": table.ids[lb.ell - 1].label if lb.ell is not None else None,
        "bound": _render_value(lb.bound),
        "ms": round(elapsed_ms, 3),
    }
    print(_emit(report, args.format))
    return EXIT_OK


def cmd_smatrix(args) -> int:
    group = _group_from_flags(args)
    classes = _parse_classes(args.classes) if args.classes else None
    if classes is not None:
        matrix = character_matrix(group, args.n, args.k, classes)
    else:
        matrix = build_charge_matrix(group, args.n, args.k)
    cols = [irrep.label for irrep in matrix.col_ids]
    rows = []
    for label, row in zip(matrix.row_labels, matrix.rows):
        name = label.label if hasattr(label, "label") else str(label)
        rows.append((name, [str(x) for x in row]))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "group": str(group),
                    "n": args.n,
                    "k": args.k,
                    "columns": cols,
                    "rows": {name: vals for name, vals in rows},
                },
                indent=2,
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["row"] + cols)
        for name, vals in rows:
            writer.writerow([name] + vals)
    else:
        width = max(len(c) for c in cols + [name for name, _ in rows]) + 1
        print(" " * width + " ".join(c.rjust(width) for c in cols))
        for name, vals in rows:
            print(name.rjust(width) + " ".join(v.rjust(width) for v in vals))
    return EXIT_OK


def _table_rows(which: str, n_lo: int, n_hi: int, d: int, threads: int = 1):
    """(group label, k, n, solver, closed form) rows for the requested table."""
    jobs = []
    if which == "table1":
        for p in (2, 3, 4, 5):
            for n in range(max(n_lo, p + 1), n_hi + 1):
                jobs.append((zp(p), n, p, None))
        for k in range(2, 7):
            for n in range(n_lo, n_hi + 1):
                jobs.append((U1, n, k, None))
        for k in range(2, 8):
            for n in range(n_lo, n_hi + 1):
                jobs.append((SU2, n, k, None))
    elif which == "table2":
        for k in range(2, 7):
            for n in range(n_lo, n_hi + 1):
                jobs.append((U1, n, k, None))
        for k in range(2, 8):
            for n in range(n_lo, n_hi + 1):
                jobs.append((SU2, n, k, None))
    elif which == "tablesud":
        group = sud(d)
        for k in (3, 4):
            for n in range(n_lo, n_hi + 1):
                jobs.append((group, n, k, None))
        if d >= 4:
            from .charges import T_GROUP_CLASSES

            for n in range(n_lo, n_hi + 1):
                jobs.append((group, n, 4, list(T_GROUP_CLASSES)))
    else:
        raise ValueError(f"unknown table {which!r}")

    kept = []
    for group, n, k, classes in jobs:
        if group.kind != "SUd" and n <= k:
            continue
        cf = _closed_form_for(group, n, k, classes)
        if cf is None or n < cf.valid_from_n or n < k:
            continue
        kept.append((group, n, k, classes, cf))

    def solve(job):
        group, n, k, classes, cf = job
        result, _, _ = compute_tmax(group, n, k, classes=classes)
        return {
            "group": str(group) if classes is None else f"{group}+classes",
            "formula": cf.formula_id,
            "k": k,
            "n": n,
            "tmax": _render_value(result.tmax),
            "closed_form": _render_value(cf.value),
            "agrees": result.tmax == cf.value,
        }

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(solve, kept))  # order-preserving, deterministic
    return [solve(job) for job in kept]


def cmd_table(args) -> int:
    try:
        lo_s, hi_s = args.n_range.split("..")
        n_lo, n_hi = int(lo_s), int(hi_s)
    except ValueError:
        print("error: --n-range expects A..B", file=sys.stderr)
        return EXIT_PARSE
    rows = _table_rows(args.reproduce.lower(), n_lo, n_hi, args.d or 3, args.threads)
    if args.format == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["group", "formula", "k", "n", "tmax", "closed_form", "agrees"])
        for row in rows:
            writer.writerow(
                [
                    row["group"],
                    row["formula"],
                    row["k"],
                    row["n"],
                    row["tmax"],
                    row["closed_form"],
                    row["agrees"],
                ]
            )
    return EXIT_OK


def cmd_custom(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        table, matrix = load_custom_problem(text)
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_PARSE
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    table_sorted = canonical_order(table)
    matrix = matrix.aligned_to(table_sorted)
    started = time.perf_counter()
    # running a custom problem is itself the assertion of semi-universality
    result = tmax_exact(matrix, table_sorted, assume_semiuniversal=True)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    report = {
        "group": "custom",
        "n": None,
        "k": None,
        "tmax": _render_value(result.tmax),
        "lower_bound": _render_value(result.lower_bound),
        "certificate": _format_certificate(result.certificate, table_sorted),
        "proven_exact": result.proven_exact,
        "closed_form": None,
        "agrees": None,
        "ms": round(elapsed_ms, 3),
    }
    print(_emit(report, args.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_identities_u1(n_max: int):
    from math import comb

    from .closedforms import (
        tr_f_c,
        u1_a_norm,
        u1_a_operator,
        u1_c_eigenvalue,
        u1_f_norm,
        u1_f_values,
    )

    checks = 0
    failures = 0

    def check(ok):
        nonlocal checks, failures
        checks += 1
        failures += 0 if ok else 1

    for n in range(1, n_max + 1):
        cvals = [[u1_c_eigenvalue(n, l, w) for w in range(n + 1)] for l in range(n + 1)]
        for l in range(n + 1):
            for lp in range(n + 1):
                acc = sum(cvals[l][w] * cvals[lp][w] * comb(n, w) for w in range(n + 1))
                check(acc == (2**n * comb(n, l) if l == lp else 0))
            for w in range(n + 1):
                check(comb(n, w) * cvals[l][w] == comb(n, l) * cvals[w][l])
                check(comb(n, w) * cvals[l][w] == (-1) ** l * comb(n, n - w) * cvals[l][n - w])
                check(cvals[l][w] == (-1) ** w * cvals[n - l][w])
        amat = [[op_w for op_w in u1_a_operator(n, k).qvec] for k in range(n + 1)]
        for i in range(n + 1):
            for j in range(n + 1):
                acc = sum(amat[i][t] * amat[t][j] for t in range(n + 1))
                # the coefficient matrix of the low-weight family is self-inverse
                check(acc == (1 if i == j else 0))
        if n <= min(n_max, 16):
            for k in range(n + 1):
                fvals = u1_f_values(n, k)
                for l in range(n + 1):
                    direct = sum(fvals[w] * comb(n, w) * cvals[l][w] for w in range(n + 1))
                    check(direct == tr_f_c(n, k, l))
        for k in range(n + 1):
            check(u1_f_norm(n, k) == sum(abs(x) * comb(n, w) for w, x in enumerate(u1_f_values(n, k))))
            check(u1_a_norm(n, k) == 2**k * comb(n, k))
    return checks, failures


def _suite_identities_su2(n_max: int):
    from math import comb

    from .closedforms import (
        double_factorial,
        su2_a_operator,
        su2_c_eigenvalue,
        tr_a_ctilde,
    )
    from .groups import su2_multiplicity

    checks = 0
    failures = 0

    def check(ok):
        nonlocal checks, failures
        checks += 1
        failures += 0 if ok else 1

    for n in range(2, n_max + 1):
        jjs = list(range(n % 2, n + 1, 2))
        traces = {jj: (jj + 1) * su2_multiplicity(n, jj) for jj in jjs}
        for ll in range(0, n + 1, 2):
            for llp in range(0, n + 1, 2):
                acc = sum(
                    su2_c_eigenvalue(n, ll, jj) * su2_c_eigenvalue(n, llp, jj) * traces[jj]
                    for jj in jjs
                )
                if ll == llp:
                    check(
                        acc
                        == double_factorial(ll + 1)
                        * double_factorial(ll - 1)
                        * 2**n
                        * comb(n, ll)
                    )
                else:
                    check(acc == 0)
        for ss in range(0, n + 1, 2):
            op = su2_a_operator(n, ss)
            for mm in range(0, n + 1, 2):
                scale = double_factorial(mm - 1) * comb(n, mm)
                direct = sum(
                    op.values[i] * su2_c_eigenvalue(n, mm, jj) * traces[jj]
                    for i, jj in enumerate(jjs)
                )
                # compare against the unit-normalized pairing
                check(direct == tr_a_ctilde(n, ss, mm) * scale)
    return checks, failures


def _suite_characters():
    from .charges import sn_character

    rows = {
        (): lambda n: [1, 1, 1, 1, 1],
        (1,): lambda n: [n - 1, n - 3, n - 4, n - 5, n - 5],
        (2,): lambda n: [
            n * (n - 3) // 2,
            (n - 3) * (n - 4) // 2,
            (n - 3) * (n - 6) // 2,
            (n * n - 11 * n + 32) // 2,
            (n - 4) * (n - 7) // 2,
        ],
        (1, 1): lambda n: [
            (n - 1) * (n - 2) // 2,
            (n - 2) * (n - 5) // 2,
            (n - 4) * (n - 5) // 2,
            (n * n - 11 * n + 26) // 2,
            (n - 5) * (n - 6) // 2,
        ],
        (3,): lambda n: [
            n * (n - 1) * (n - 5) // 6,
            (n - 3) * (n - 4) * (n - 5) // 6,
            (n - 5) * (n * n - 10 * n + 18) // 6,
            (n - 5) * (n * n - 13 * n + 48) // 6,
            (n - 4) * (n - 5) * (n - 9) // 6,
        ],
        (1, 1, 1): lambda n: [
            (n - 1) * (n - 2) * (n - 3) // 6,
            (n - 2) * (n - 3) * (n - 7) // 6,
            (n - 3) * (n * n - 12 * n + 38) // 6,
            (n - 3) * (n - 5) * (n - 10) // 6,
            (n - 5) * (n - 6) * (n - 7) // 6,
        ],
        (2, 1): lambda n: [
            n * (n - 2) * (n - 4) // 3,
            (n - 2) * (n - 4) * (n - 6) // 3,
            (n - 4) * (n * n - 11 * n + 27) // 3,
            (n - 4) * (n - 6) * (n - 8) // 3,
            (n - 4) * (n - 6) * (n - 8) // 3,
        ],
    }
    class_cycles = [(), (2,), (3,), (2, 2), (4,)]
    checks = 0
    failures = 0
    for n in range(15, 21):
        for tail, formula in rows.items():
            parts = (n - sum(tail),) + tail
            expected = formula(n)
            for cyc, exp in zip(class_cycles, expected):
                checks += 1
                if sn_character(parts, cyc) != exp:
                    failures += 1
    return checks, failures


def _suite_oracle(n_max: int, samples: int, seed: int):
    from . import dense

    checks = 0
    failures = 0

    def check(ok):
        nonlocal checks, failures
        checks += 1
        failures += 0 if ok else 1

    for n in range(1, min(n_max, 12) + 1):
        for k in range(n + 1):
            check(dense.u1_orthogonality_check(n, k))
    for k in range(11):
        for l in range(11):
            from .closedforms import tr_f_c

            check(dense.dense_tr_f_c(10, k, l) == tr_f_c(10, k, l))
    for n in range(1, min(n_max, 8) + 1):
        check(dense.su2_c2_check(n))
        if n >= 2:
            check(dense.su2_projector_checks(n))
    check(dense.z2_witness_check(samples=samples, seed=seed))
    return checks, failures


def _suite_solver_brute():
    from .charges import build_charge_matrix
    from .groups import canonical_order, sectors, sud, zp, U1, SU2
    from .infinity import INFINITE
    from .intlinalg import kernel_lattice
    from .solver import brute_force_tmax, tmax_exact

    checks = 0
    failures = 0
    instances = []
    for n in range(2, 9):
        for k in range(max(1, n - 3), n + 1):
            instances.append((U1, n, k))
            instances.append((SU2, n, k))
    for p in (2, 3, 4, 5):
        for n in range(3, 9):
            for k in range(p, n + 1):
                instances.append((zp(p), n, k))
    for d in (3, 4):
        for n in range(4, 9):
            for k in (3, 4):
                if k <= n:
                    instances.append((sud(d), n, k))
    for group, n, k in instances:
        table = canonical_order(sectors(group, n))
        matrix = build_charge_matrix(group, n, k).aligned_to(table)
        dim = len(kernel_lattice(matrix.row_lists()))
        if dim > 3:
            continue
        checks += 1
        exact = tmax_exact(matrix, table, assume_semiuniversal=True)
        brute = brute_force_tmax(matrix, table, coeff_bound=6)
        if brute is None:
            ok = exact.tmax == INFINITE
        else:
            ok = exact.tmax == brute[0] // 2 - 1
        failures += 0 if ok else 1
    return checks, failures


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "identities-u1":
        checks, failures = _suite_identities_u1(args.n_max or 16)
    elif suite == "identities-su2":
        checks, failures = _suite_identities_su2(args.n_max or 14)
    elif suite == "characters":
        checks, failures = _suite_characters()
    elif suite == "oracle":
        checks, failures = _suite_oracle(args.n_max or 8, args.samples, args.seed)
    elif suite == "solver-brute":
        checks, failures = _suite_solver_brute()
    else:
        print(f"error: unknown suite {suite!r}", file=sys.stderr)
        return EXIT_PARSE
    status = "pass" if failures == 0 else "FAIL"
    print(f"suite {suite}: {status} ({checks - failures}/{checks} checks)")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_instance_flags(sub, with_classes=True):
    sub.add_argument("--group", required=True, choices=["u1", "su2", "zp", "sud"])
    sub.add_argument("--p", type=int, default=None, help="cyclic order (zp only)")
    sub.add_argument("--d", type=int, default=None, help="local dimension (sud only)")
    sub.add_argument("--n", type=int, required=True, help="number of sites")
    sub.add_argument("--k", type=int, required=True, help="gate locality")
    if with_classes:
        sub.add_argument(
            "--classes",
            default=None,
            help="sud only: comma list of cycle types, e.g. id,2,3,2+2",
        )
    sub.add_argument("--format", choices=["json", "csv", "text"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symdesign",
        description="exact design orders of random local symmetric circuits",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("SYMDESIGN_THREADS", "1")),
        help="worker threads for table sweeps (results are order-deterministic)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("tmax", help="exact design order with certificate")
    _add_instance_flags(s)
    s.add_argument(
        "--assume-semiuniversal",
        action="store_true",
        help="assert semi-universality for gate sets below the built-in threshold",
    )
    s.set_defaults(func=cmd_tmax)

    s = subs.add_parser("lower-bound", help="rank-scan lower bound")
    _add_instance_flags(s)
    s.set_defaults(func=cmd_lower_bound)

    s = subs.add_parser("smatrix", help="dump the exact charge matrix")
    _add_instance_flags(s)
    s.set_defaults(func=cmd_smatrix)

    s = subs.add_parser("table", help="reproduce the headline tables")
    s.add_argument("--reproduce", required=True, choices=["table1", "table2", "tableSUd"])
    s.add_argument("--n-range", required=True, help="inclusive range A..B")
    s.add_argument("--d", type=int, default=3, help="local dimension for tableSUd")
    s.add_argument("--format", choices=["json", "csv"], default="csv")
    s.set_defaults(func=cmd_table)

    s = subs.add_parser("verify", help="run a named verification suite")
    s.add_argument(
        "--suite",
        required=True,
        choices=["identities-u1", "identities-su2", "characters", "oracle", "solver-brute"],
    )
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("custom", help="solve a custom problem from JSON")
    s.add_argument("file", help="path to the problem document")
    s.add_argument("--format", choices=["json", "csv", "text"], default="text")
    s.set_defaults(func=cmd_custom)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemiUniversalityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
