"""Command line interface.

    hsnum classify G D L
    hsnum hurwitz G D [--method all]
    hsnum hs G D L
    hsnum table MAX_G MAX_D MAX_L [--format csv]
    hsnum verify-paper

stdout carries records only; diagnostics go to stderr; the exit code is the
failure channel.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import factorial

from . import config
from .hurwitz import (
    CapExceeded, METHODS, MethodDisagreement, hurwitz_simple, num_transpositions,
)
from .severi import (
    DegenerateProjection, EmptyVariety, Kind, SeveriTriple, UnbendableUnsupported,
    classify, dims, hs_number, node_count,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_DISAGREE = 4
EXIT_UNBENDABLE = 5
EXIT_EMPTY = 6

FORMATS = ("json", "csv", "md")
CSV_COLUMNS = ("g", "d", "l", "kind", "strongly", "nonempty", "nodes", "dimW", "dimWt",
               "dimP", "h", "hs_num", "hs_den", "status", "warnings")

# (name, triple, expected h_{g,1^d}, expected Hurwitz-Severi number)
WORKED_EXAMPLES = (
    ("example 1: smooth cubic, outside point", (1, 3, 0), 240, 40),
    ("example 2: smooth cubic, point on it", (1, 2, 1), 1, 1),
    ("example 3: nodal cubic, outside point", (0, 3, 0), 24, 12),
    ("example 4: nodal cubic, smooth point", (0, 2, 1), 1, 1),
    ("example 5: smooth quartic, point on it", (3, 3, 1), 19680, 3280),
)
WORKED_UNBENDABLE = ("example 6: smooth quartic, outside point", (3, 4, 0))


def _rational(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _rational_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def build_record(t: SeveriTriple, provider) -> dict:
    cls = classify(t)
    dm = dims(t)
    record = {
        "g": t.g, "d": t.d, "l": t.l,
        "kind": cls.kind.value,
        "strongly_bendable": cls.strongly_bendable,
        "nonempty": cls.nonempty,
        "nodes": node_count(t),
        "dims": {"dim_W": dm.dim_W, "dim_W_tilde": dm.dim_W_tilde, "dim_P": dm.dim_P},
        "hurwitz": None,
        "hs": None,
        "status": "ok",
        "warnings": [],
    }
    try:
        hs = hs_number(t, provider)
    except EmptyVariety:
        record["status"] = "empty"
    except UnbendableUnsupported:
        record["status"] = "unbendable"
    except DegenerateProjection as exc:
        record["status"] = "degenerate"
        record["warnings"].append(str(exc))
    except CapExceeded as exc:
        record["status"] = "cap_exceeded"
        record["warnings"].append(str(exc))
    else:
        record["hurwitz"] = str(hs.hurwitz_input.value)
        record["hs"] = _rational(hs.value)
        record["warnings"].extend(hs.warnings)
    return record


def _kind_label(record) -> str:
    return "strongly bendable" if record["strongly_bendable"] else record["kind"]


def _csv_row(record) -> list:
    hs = record["hs"] or {"num": "", "den": ""}
    dm = record["dims"]
    return [record["g"], record["d"], record["l"], record["kind"],
            str(record["strongly_bendable"]).lower(), str(record["nonempty"]).lower(),
            record["nodes"], dm["dim_W"], dm["dim_W_tilde"], dm["dim_P"],
            record["hurwitz"] or "", hs["num"], hs["den"], record["status"],
            ";".join(record["warnings"])]


def _md_row(record) -> list:
    hs = record["hs"]
    hs_text = "" if hs is None else (hs["num"] if hs["den"] == "1" else f"{hs['num']}/{hs['den']}")
    dm = record["dims"]
    return [record["g"], record["d"], record["l"], _kind_label(record),
            "yes" if record["nonempty"] else "no", record["nodes"],
            f"{dm['dim_W']}/{dm['dim_W_tilde']}/{dm['dim_P']}",
            record["hurwitz"] or "", hs_text, record["status"], "; ".join(record["warnings"])]


def _md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render_records(records, fmt: str, as_list: bool = True) -> str:
    if fmt == "json":
        payload = records if as_list else records[0]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(_csv_row(r) for r in records)
        return buf.getvalue()
    header = ["g", "d", "l", "kind", "nonempty", "nodes", "dim W/W~/P", "h", "HS",
              "status", "warnings"]
    return _md_table(header, [_md_row(r) for r in records])


def table_records(max_g: int, max_d: int, max_l: int, provider) -> list:
    return [build_record(SeveriTriple(g, d, l), provider)
            for d in range(1, max_d + 1)
            for l in range(max_l + 1)
            for g in range(max_g + 1)]


def verify_paper(provider, out=sys.stdout) -> bool:
    """Recompute the worked examples; print a pass/fail table; True iff all pass."""
    rows = []
    for name, triple, want_h, want_hs in WORKED_EXAMPLES:
        t = SeveriTriple(*triple)
        try:
            hs = hs_number(t, provider)
            got_h, got_hs = hs.hurwitz_input.value, hs.value
        except Exception as exc:  # any failure is a failed check
            got_h, got_hs = None, f"error: {exc}"
        ok = got_h == want_h and got_hs == want_hs
        rows.append((name, str(triple), f"h={want_h}, HS={want_hs}",
                     f"h={got_h}, HS={got_hs}", "PASS" if ok else "FAIL"))

    name, triple = WORKED_UNBENDABLE
    t = SeveriTriple(*triple)
    kind = classify(t).kind
    try:
        hs_number(t, provider)
        refused = False
    except UnbendableUnsupported:
        refused = True
    ok = kind is Kind.UNBENDABLE and refused
    rows.append((name, str(triple), "unbendable, refused",
                 f"{kind.value}, {'refused' if refused else 'computed'}",
                 "PASS" if ok else "FAIL"))

    out.write(_md_table(["check", "triple", "expected", "got", "result"], rows))
    return all(row[-1] == "PASS" for row in rows)


# -- argument parsing ---------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the global flags go before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--method", choices=METHODS, default=argparse.SUPPRESS)
    common.add_argument("--cap", type=_nonneg, default=argparse.SUPPRESS,
                        help="brute-force enumeration cap (overrides HSNUM_CAP)")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS, metavar="PATH")

    parser = argparse.ArgumentParser(prog="hsnum", parents=[common],
                                     description="Hurwitz and Hurwitz-Severi numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a triple (g, d, l)")
    p.add_argument("g", type=_nonneg)
    p.add_argument("d", type=_positive)
    p.add_argument("l", type=_nonneg)

    p = sub.add_parser("hurwitz", parents=[common], help="ordinary Hurwitz number h_{g,1^d}")
    p.add_argument("g", type=_nonneg)
    p.add_argument("d", type=_positive)

    p = sub.add_parser("hs", parents=[common], help="Hurwitz-Severi number of (g, d, l)")
    p.add_argument("g", type=_nonneg)
    p.add_argument("d", type=_positive)
    p.add_argument("l", type=_nonneg)

    p = sub.add_parser("table", parents=[common], help="records for a box of triples")
    p.add_argument("max_g", type=_nonneg)
    p.add_argument("max_d", type=_positive)
    p.add_argument("max_l", type=_nonneg)

    sub.add_parser("verify-paper", parents=[common], help="recompute the worked examples")
    return parser


def _hurwitz_record(g: int, d: int, count) -> dict:
    return {
        "g": g, "d": d, "r": num_transpositions(g, d),
        "hurwitz": str(count.value),
        "pairs": _rational(Fraction(count.value, factorial(d))),
        "engines": {name: str(v) for name, v in count.engines.items()},
    }


def _render_hurwitz(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec, indent=2) + "\n"
    pairs = Fraction(int(rec["pairs"]["num"]), int(rec["pairs"]["den"]))
    engines = ";".join(f"{k}={v}" for k, v in rec["engines"].items())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["g", "d", "r", "h", "pairs_num", "pairs_den", "engines"])
        writer.writerow([rec["g"], rec["d"], rec["r"], rec["hurwitz"],
                         rec["pairs"]["num"], rec["pairs"]["den"], engines])
        return buf.getvalue()
    return _md_table(["g", "d", "r", "h", "h/d!", "engines"],
                     [[rec["g"], rec["d"], rec["r"], rec["hurwitz"],
                       _rational_text(pairs), engines]])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "md")
    try:
        settings = config.resolve(
            cap_flag=getattr(args, "cap", None),
            method_flag=getattr(args, "method", None),
            strict_flag=getattr(args, "strict", None),
            config_path=getattr(args, "config", None),
        )
    except config.ConfigError as exc:
        print(f"hsnum: {exc}", file=sys.stderr)
        return EXIT_USAGE

    def provider(g, d):
        return hurwitz_simple(g, d, method=settings.method, cap=settings.cap)

    out = sys.stdout
    try:
        if args.command == "classify":
            rec = build_record(SeveriTriple(args.g, args.d, args.l), provider)
            out.write(render_records([rec], fmt, as_list=False))
            return EXIT_OK

        if args.command == "hurwitz":
            count = hurwitz_simple(args.g, args.d, method=settings.method, cap=settings.cap)
            out.write(_render_hurwitz(_hurwitz_record(args.g, args.d, count), fmt))
            return EXIT_OK

        if args.command == "hs":
            t = SeveriTriple(args.g, args.d, args.l)
            rec = build_record(t, provider)
            out.write(render_records([rec], fmt, as_list=False))
            status = rec["status"]
            if status == "unbendable":
                print(f"hsnum: {t.g, t.d, t.l} is unbendable; this case is still widely "
                      "open and no formula is implemented", file=sys.stderr)
                return EXIT_UNBENDABLE
            if status == "empty":
                print(f"hsnum: the Severi variety {t.g, t.d, t.l} is empty", file=sys.stderr)
                return EXIT_EMPTY
            if status == "cap_exceeded":
                print(f"hsnum: {rec['warnings'][-1]}", file=sys.stderr)
                return EXIT_CAP
            if status == "degenerate":
                print(f"hsnum: {rec['warnings'][-1]}", file=sys.stderr)
                return EXIT_USAGE
            return EXIT_OK

        if args.command == "table":
            records = table_records(args.max_g, args.max_d, args.max_l, provider)
            out.write(render_records(records, fmt))
            capped = [r for r in records if r["status"] == "cap_exceeded"]
            if capped:
                print(f"hsnum: {len(capped)} row(s) exceeded the enumeration cap",
                      file=sys.stderr)
                if settings.strict:
                    return EXIT_CAP
            return EXIT_OK

        if args.command == "verify-paper":
            return EXIT_OK if verify_paper(provider, out) else EXIT_VERIFY_FAILED
    except CapExceeded as exc:
        print(f"hsnum: {exc}", file=sys.stderr)
        return EXIT_CAP
    except MethodDisagreement as exc:
        print(f"hsnum: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
