"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial

from . import fmcount
from .modarith import BRUTEFORCE_LIMIT, unit_square_root_count, unit_square_roots_bruteforce
from .mukai import is_admissible

SCHEMA_VERSION = 1
CSV_COLUMNS = (
    "d",
    "d_prime",
    "u_2d",
    "type_I",
    "type_II_k0",
    "type_II_k1",
    "type_II_k2",
    "M_ST",
    "fm_formula",
    "fm_oracle",
    "agree",
)
DEPTHS = ("formula", "enumeration", "oracle", "gram")
DEFAULT_ENUM_DPRIME = 10**4
DEFAULT_GRAM_DPRIME = 50


class UsageError(Exception):
    pass


def output_record(rec: fmcount.FMRecord) -> dict:
    """Flat record shared by the CSV and JSON writers."""
    by_type = rec.counts_by_type or (None,) * 4
    row = dict(
        zip(
            CSV_COLUMNS,
            (
                rec.d,
                rec.d_prime,
                rec.u_2d,
                *by_type,
                rec.m_st,
                rec.count_formula,
                rec.count_oracle,
                rec.agree,
            ),
        )
    )
    row["schema_version"] = SCHEMA_VERSION
    return row


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_csv_cell(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def _record(d: int, enum_limit: int, gram_limit: int = 0) -> fmcount.FMRecord:
    dp = d // 18 if d % 18 == 0 else None
    within = dp is not None and dp <= enum_limit
    return fmcount.fm_record(
        d,
        enumeration=within,
        oracle=within and dp <= fmcount.ORACLE_LIMIT,
        gram=dp is not None and dp <= gram_limit,
    )


def _records(ds: list[int], jobs: int, enum_limit: int, gram_limit: int = 0) -> list[fmcount.FMRecord]:
    work = partial(_record, enum_limit=enum_limit, gram_limit=gram_limit)
    if jobs > 1 and len(ds) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, ds, chunksize=max(1, len(ds) // (4 * jobs))))
    return [work(d) for d in ds]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_admissible(d: int) -> None:
    if not is_admissible(d):
        raise UsageError(f"d={d} is not admissible: need d >= 8 and d == 0 or 2 (mod 6)")


def _enum_limit(args) -> int:
    if args.max_enum_dprime > DEFAULT_ENUM_DPRIME:
        print(f"warning: enumeration enabled up to d'={args.max_enum_dprime}; expect long runtimes", file=sys.stderr)
    return args.max_enum_dprime


def cmd_count(args) -> int:
    _require_admissible(args.d)
    rec = _record(args.d, _enum_limit(args))
    if args.format == "json":
        _emit(json.dumps(output_record(rec), indent=2) + "\n", args.out)
        return 0
    lines = [f"d={rec.d}", f"u_2d={rec.u_2d}", f"FM={rec.count_formula}"]
    if rec.d_prime is not None:
        lines.insert(1, f"d_prime={rec.d_prime}")
    if rec.m_st is not None:
        t1, k0, k1, k2 = rec.counts_by_type
        lines += [
            f"M_ST={rec.m_st}",
            f"counts_by_type: type_I={t1} type_II_k0={k0} type_II_k1={k1} type_II_k2={k2}",
            f"FM_enumeration={rec.count_enumeration}",
        ]
    if rec.count_oracle is not None:
        lines.append(f"FM_oracle={rec.count_oracle}")
    if rec.agree is not None:
        lines.append(f"agree={'true' if rec.agree else 'false'}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if rec.agree in (None, True) else 1


def cmd_table(args) -> int:
    if args.d_min < 8 or args.d_max < args.d_min:
        raise UsageError(f"need 8 <= d-min <= d-max, got {args.d_min}..{args.d_max}")
    ds = [d for d in range(args.d_min, args.d_max + 1) if is_admissible(d)]
    recs = _records(ds, args.jobs, _enum_limit(args))
    _emit(render([output_record(r) for r in recs], args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    depth = DEPTHS.index(args.depth)
    gram_limit = args.max_gram_dprime if depth >= 3 else 0
    if depth >= 3 and gram_limit > DEFAULT_GRAM_DPRIME:
        print(f"warning: Gram assembly enabled up to d'={gram_limit}; expect long runtimes", file=sys.stderr)
    ds = [d for d in range(18, args.d_max + 1, 18)]
    enum_limit = _enum_limit(args) if depth >= 1 else 0
    if depth >= 1:
        recs = _records(ds, args.jobs, enum_limit, gram_limit)
    else:
        recs = [fmcount.fm_record(d, enumeration=False, oracle=False) for d in ds]
    bad = 0
    checked_gram = 0
    for rec in recs:
        problems = list(rec.mismatches)
        dp = rec.d_prime
        # formula level: theorem case split against the proof's table
        table = fmcount.table_closed_form(dp) / 2
        if Fraction(rec.count_formula) != table:
            problems.append(f"formula {rec.count_formula} != table {table}")
        for name, value in (("enumeration", rec.count_enumeration), ("oracle", rec.count_oracle)):
            if depth >= DEPTHS.index(name) and dp <= enum_limit and value != rec.count_formula:
                problems.append(f"{name} {value} != formula {rec.count_formula}")
        checked_gram += rec.gram_checked or 0
        if problems:
            bad += 1
            print(
                f"MISMATCH d={rec.d} d'={dp} formula={rec.count_formula} "
                f"enumeration={rec.count_enumeration} oracle={rec.count_oracle}: " + "; ".join(problems)
            )
    summary = f"verified {len(recs)} values of d (18 | d <= {args.d_max}) at depth {args.depth}: {bad} mismatches"
    if depth >= 3:
        summary += f"; {checked_gram} overlattices assembled"
    print(summary)
    return 1 if bad else 0


def cmd_roots(args) -> int:
    if args.n < 1:
        raise UsageError(f"n must be positive, got {args.n}")
    count = unit_square_root_count(args.n)
    if args.list:
        if args.n > BRUTEFORCE_LIMIT:
            raise UsageError(f"--list is limited to n <= {BRUTEFORCE_LIMIT}")
        roots = unit_square_roots_bruteforce(args.n)
        text = json.dumps({"n": args.n, "count": count, "roots": roots}) if args.format == "json" else f"{count}: {roots}"
    else:
        text = json.dumps({"n": args.n, "count": count}) if args.format == "json" else str(count)
    _emit(text + "\n", args.out)
    return 0


def _glue_text(desc: fmcount.OverlatticeDescriptor) -> str:
    dp = desc.d_prime
    if desc.kind == "I":
        return f"(({desc.b1}*l + t1)/3, ({desc.b2}*l + t2)/{2 * dp})"
    return f"(({desc.b3}*l + {2 * dp * desc.k}*t1 + t2)/{6 * dp})"


def cmd_glue(args) -> int:
    if args.d < 18 or args.d % 18:
        raise UsageError(f"glue needs d divisible by 18, got d={args.d}")
    dp = args.d // 18
    descs = fmcount.enumerate_all(dp)
    if args.format == "json":
        rows = [
            {
                "kind": desc.kind,
                "b1": desc.b1,
                "b2": desc.b2,
                "k": desc.k,
                "b3": desc.b3,
                "glue": _glue_text(desc),
                "disc_coordinates": [list(c) for c in desc.disc_coordinates()],
            }
            for desc in descs
        ]
        text = json.dumps({"d": args.d, "d_prime": dp, "count": len(descs), "descriptors": rows}, indent=2)
    else:
        lines = [f"d={args.d} d_prime={dp}: {len(descs)} descriptors", f"A_S + A_T = Z_{6 * dp} + Z_3 + Z_{6 * dp}"]
        for desc in descs:
            coords = " ".join(str(c) for c in desc.disc_coordinates())
            lines.append(f"{desc.label():28s} glue {_glue_text(desc)}  coords {coords}")
        text = "\n".join(lines)
    _emit(text + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmpartners",
        description="Fourier-Mukai partner counts of very general special cubic fourfolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json"), default="text"):
        p.add_argument("--format", choices=fmt, default=default)
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    def limits(p):
        p.add_argument("--max-enum-dprime", type=int, default=DEFAULT_ENUM_DPRIME, help=argparse.SUPPRESS)

    p = sub.add_parser("count", help="report |FM(X)| for one discriminant d")
    p.add_argument("--d", type=int, required=True)
    common(p)
    limits(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="one record per admissible d in a range")
    p.add_argument("--d-min", type=int, default=8)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    common(p, ("csv", "json"), "csv")
    limits(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check every counting route for 18 | d <= d-max")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--depth", choices=DEPTHS, default="oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-gram-dprime", type=int, default=DEFAULT_GRAM_DPRIME, help=argparse.SUPPRESS)
    limits(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="count (and list) square roots of unity mod n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("glue", help="list the glue data of M_{S,T} for 18 | d")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_glue)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
