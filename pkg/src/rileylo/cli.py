"""Command line interface.

Exit codes: 0 success / certified, 1 usage error, 2 no certificate, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .knots import KnotError, TrivialKnot, normalize, schubert_form
from .orderability import certify, threshold
from .records import dumps, make_record, text_lines
from .reps import DEFAULT_PRECISION
from .riley import alpha_lambda_identity_check, lambda_poly, alpha_poly, oracle_agrees, riley_poly

EXIT_OK, EXIT_USAGE, EXIT_NO_CERT, EXIT_INCONCLUSIVE = 0, 1, 2, 3
VERDICT_EXIT = {"certified": EXIT_OK, "no_certificate": EXIT_NO_CERT,
                "inconclusive": EXIT_INCONCLUSIVE}

CSV_COLUMNS = ["k", "l", "p", "m_schubert", "r", "threshold", "r_min", "verdict",
               "y", "max_residual", "precision_bits"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _knot(k, l):
    try:
        return normalize(k, l)
    except TrivialKnot as exc:
        raise UsageError(f"trivial knot: {exc}")
    except KnotError as exc:
        raise UsageError(str(exc))


def _emit(args, command, payload, out=None):
    out = out or sys.stdout
    record = make_record(command, {k: v for k, v in vars(args).items() if k != "func"}, payload)
    if args.format == "json":
        print(dumps(record), file=out)
    else:
        print("\n".join(text_lines(record["payload"])), file=out)
    return record


def _threshold_payload(rep):
    return {
        "knot": str(rep.knot), "k": rep.knot.k, "l": rep.knot.l,
        "mirrored": rep.knot.mirrored,
        "case": rep.klass.tag.value, "case_label": rep.case_label, "m": rep.klass.m,
        "q_or_4mn": rep.q_or_4mn, "threshold": rep.threshold, "r_min": rep.r_min,
        "known_non_orderable": rep.known_non_orderable, "notes": rep.notes,
    }


def cmd_threshold(args):
    rep = threshold(_knot(args.k, args.l), args.precision)
    _emit(args, "threshold", _threshold_payload(rep))
    return EXIT_OK


def _cert_payload(cert):
    return {
        "knot": str(cert.knot), "k": cert.knot.k, "l": cert.knot.l,
        "mirrored": cert.knot.mirrored, "r": cert.r, "verdict": cert.verdict,
        "x": cert.x, "y": None if cert.y is None else float(cert.y),
        "y_digits": None if cert.y is None else str(cert.y),
        "phi_residual": cert.phi_residual, "relation_residual": cert.relation_residual,
        "hermitian_signature": cert.hermitian_signature, "su11_residual": cert.su11_residual,
        "meridian_residual": cert.meridian_residual, "precision_bits": cert.precision,
        "threshold": _threshold_payload(cert.threshold) if cert.threshold else None,
        "notes": cert.notes,
    }


def cmd_certify(args):
    if args.r < 2:
        raise UsageError("r must be at least 2")
    cert = certify(_knot(args.k, args.l), args.r, args.precision)
    _emit(args, "certify", _cert_payload(cert))
    return VERDICT_EXIT[cert.verdict]


def cmd_riley(args):
    K = _knot(args.k, args.l)
    data = riley_poly(K)
    sf = schubert_form(K)
    payload = {
        "knot": str(K), "k": K.k, "l": K.l, "mirrored": K.mirrored,
        "phi": str(data.phi_poly),
        "terms": [[a, b, c] for (a, b), c in data.phi_poly.items()],
        "deg_y": data.deg_y, "p": sf.p, "m_schubert": sf.m_schubert,
    }
    if args.symbolic:
        payload["lambda"] = str(lambda_poly(K))
        payload["alpha"] = str(alpha_poly(K))
    if args.verify:
        payload["oracle_match"] = oracle_agrees(K)
        payload["alpha_lambda_identity"] = alpha_lambda_identity_check(K)
    _emit(args, "riley", payload)
    if args.verify and not (payload["oracle_match"] and payload["alpha_lambda_identity"]):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def parse_range(text: str):
    """'a..b' or a single integer, inclusive."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use a..b")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def scan_row(task):
    k, l, r, precision = task
    K = normalize(k, l)
    sf = schubert_form(K)
    cert = certify(K, r, precision)
    rep = cert.threshold
    thr = "known_non_orderable" if rep.known_non_orderable else _fmt(rep.threshold)
    return [k, l, sf.p, sf.m_schubert, r, thr, _fmt(rep.r_min), cert.verdict,
            _fmt(None if cert.y is None else float(cert.y)), _fmt(cert.max_residual),
            cert.precision]


def scan_tasks(k_range, l_range, r_max, precision):
    tasks = []
    for k in k_range:
        for l in l_range:
            try:
                normalize(k, l)
            except KnotError:
                continue
            for r in range(2, r_max + 1):
                tasks.append((k, l, r, precision))
    return tasks


def run_scan(k_range, l_range, r_max, precision=DEFAULT_PRECISION, workers=1):
    tasks = scan_tasks(k_range, l_range, r_max, precision)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(scan_row, tasks, chunksize=4))
    else:
        rows = [scan_row(t) for t in tasks]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_scan(args):
    if args.r_max < 2:
        raise UsageError("--r-max must be at least 2")
    text = run_scan(args.k, args.l, args.r_max, args.precision, args.workers)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}")
    return EXIT_OK


def cmd_selftest(args):
    from .selftest import run_checks

    failed = 0
    results = []
    for name, ok, detail in run_checks(args.k_max, args.n_max, args.samples, args.seed):
        failed += not ok
        results.append({"check": name, "passed": ok, "detail": detail})
        if args.format == "text":
            print(f"{'PASS' if ok else 'FAIL'}  {name}" + ("" if ok else f"  [{detail}]"))
    if args.format == "json":
        _emit(args, "selftest", {"checks": results, "failed": failed})
    return EXIT_OK if failed == 0 else EXIT_INCONCLUSIVE


def build_parser():
    parser = _Parser(prog="rileylo", description=(
        "Riley polynomials, covering-degree thresholds and SU(1,1) certificates "
        "for double twist knots J(k, l)."))
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--precision", type=int,
                        default=int(os.environ.get("RILEYLO_PRECISION", DEFAULT_PRECISION)),
                        help="working precision in bits (env RILEYLO_PRECISION)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("threshold", parents=[common], help="covering-degree threshold")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("certify", parents=[common], help="SU(1,1) certificate for (knot, r)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("riley", parents=[common], help="Riley polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--symbolic", action="store_true", help="also print lambda and alpha")
    p.add_argument("--verify", action="store_true", help="check against the matrix-word oracle")
    p.set_defaults(func=cmd_riley)

    p = sub.add_parser("scan", parents=[common], help="batch certificates to CSV")
    p.add_argument("--k", type=parse_range, required=True, help="range a..b")
    p.add_argument("--l", type=parse_range, required=True,
                   help="range a..b (write --l=-4..-2 for negative bounds)")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--out", default=None, help="CSV path, '-' or omitted for stdout")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("selftest", parents=[common], help="identity and property suite")
    p.add_argument("--k-max", type=int, default=7)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rileylo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
