"""Command-line interface.

Subcommands:
  emit      print a presentation (slp text, flat relator lines, or json)
  verify    evaluate relators (optionally certify the group order)
  stats     CSV of sizes across a degree range
  falsify   re-evaluate the uncorrected constructions at a prime
  params    print the derived arithmetic parameters

Degrees are given as a single value (17), a range (13..20), or a
comma-separated mix (13,15..17).  Exit codes: 0 success, 1 verification
failure, 2 unsupported degree or size limit, 3 bad arguments.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import sys

from . import builders, sl2, verify
from .errors import (
    BadPrimeClass,
    DegreeTooLarge,
    EnumerationTooLarge,
    UnsupportedDegree,
)

_EXIT_OK = 0
_EXIT_VERIFY = 1
_EXIT_UNSUPPORTED = 2
_EXIT_BADARGS = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_EXIT_BADARGS, f"{self.prog}: error: {message}\n")


def _parse_degrees(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError("no degrees given")
    return out


def _kinds(arg):
    return ("Alt", "Sym") if arg == "both" else (arg.capitalize(),)


def _add_common(sub):
    sub.add_argument("--degree", "-n", required=True,
                     help="degree, range lo..hi, or comma list")
    sub.add_argument("--kind", choices=("alt", "sym", "both"), default="both")


def _build_parser():
    parser = _Parser(prog="shortpres",
                     description="short presentations of alternating and "
                                 "symmetric groups, with machine verification")
    subs = parser.add_subparsers(dest="command", required=True)

    p_emit = subs.add_parser("emit", help="print a presentation")
    _add_common(p_emit)
    p_emit.add_argument("--format", choices=("slp", "flat", "json"),
                        default="slp")
    p_emit.add_argument("--simplify", action=argparse.BooleanOptionalAction,
                        default=True,
                        help="reduce exponents inside auxiliary words")
    p_emit.add_argument("--out", help="write to a file instead of stdout")

    p_ver = subs.add_parser("verify", help="evaluate relators under the images")
    _add_common(p_ver)
    p_ver.add_argument("--depth", choices=("relators", "order"),
                       default="relators")
    p_ver.add_argument("--simplify", action=argparse.BooleanOptionalAction,
                       default=True)
    p_ver.add_argument("--jobs", type=int, default=1,
                       help="verify degrees in parallel processes")
    p_ver.add_argument("--out", help="also write the reports as JSON")

    p_stats = subs.add_parser("stats", help="CSV of presentation sizes")
    _add_common(p_stats)
    p_stats.add_argument("--simplify", action=argparse.BooleanOptionalAction,
                         default=True)
    p_stats.add_argument("--out", help="write CSV to a file instead of stdout")

    p_fals = subs.add_parser("falsify",
                             help="show that the uncorrected variants fail")
    p_fals.add_argument("--p", type=int, default=11,
                        help="prime at which to evaluate (default 11)")

    p_par = subs.add_parser("params", help="print derived parameters")
    _add_common(p_par)
    return parser


def _write(out_path, text):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _requests(args):
    degrees = _parse_degrees(args.degree)
    return [(n, kind) for n in degrees for kind in _kinds(args.kind)]


def _cmd_emit(args):
    blocks = []
    fmt = args.format
    reqs = _requests(args)
    for n, kind in reqs:
        pres = builders.presentation_for(n, kind, simplify=args.simplify)
        if fmt == "json" and len(reqs) > 1:
            blocks.append(json.dumps(builders.presentation_json(pres),
                                     sort_keys=False) + "\n")
        else:
            blocks.append(builders.emit(pres, fmt))
    _write(args.out, "\n".join(blocks) if fmt == "slp" else "".join(blocks))
    return _EXIT_OK


def _verify_one(task):
    n, kind, depth, simplify = task
    pres = builders.presentation_for(n, kind, simplify=simplify)
    report = verify.verify_presentation(pres, depth=depth)
    line = (f"degree={n} kind={pres.kind} case={pres.case} "
            f"relators={len(report.relators)} "
            f"identity={report.all_relators_identity}")
    if report.order_certified:
        line += (f" order={report.order} "
                 f"expected={report.details['expected_order']}")
    line += " OK" if report.ok else " FAIL"
    return line, report.ok, report.to_json()


def _cmd_verify(args):
    tasks = [(n, kind, args.depth, args.simplify) for n, kind in _requests(args)]
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, tasks))
    else:
        results = [_verify_one(t) for t in tasks]
    all_ok = True
    for line, ok, _ in results:
        print(line)
        all_ok = all_ok and ok
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([rep for _, _, rep in results], fh, indent=2)
            fh.write("\n")
    return _EXIT_OK if all_ok else _EXIT_VERIFY


def _cmd_stats(args):
    rows = ["degree,p,k,case,generators,relators,bit_length,word_length,"
            "bits_per_log2_degree"]
    for n, kind in _requests(args):
        pres = builders.presentation_for(n, kind, simplify=args.simplify)
        ps = pres.params
        bits = pres.slp.bit_length()
        rows.append(",".join(str(v) for v in (
            n, ps.p, ps.k if ps.k is not None else "",
            f"{pres.kind}:{pres.case}",
            len(pres.slp.generators), len(pres.slp.relators),
            bits, pres.slp.word_length(),
            f"{bits / math.log2(n):.3f}")))
    _write(args.out, "\n".join(rows) + "\n")
    return _EXIT_OK


def _cmd_falsify(args):
    p = args.p
    all_falsified = True
    ran_any = False
    for which in verify.FALSIFICATION_TARGETS:
        try:
            rep = verify.falsify_original(which, p)
        except BadPrimeClass as exc:
            print(f"falsify:{which}: skipped ({exc})")
            continue
        ran_any = True
        falsified = not rep.all_relators_identity
        all_falsified = all_falsified and falsified
        print(f"{rep.case}: falsified={falsified}")
        for entry in rep.relators:
            shape = entry.get("cycle_type", entry.get("value"))
            print(f"  relator[{entry['index']}] identity={entry['identity']} "
                  f"value={shape}")
        note = rep.details.get("note")
        if note:
            print(f"  note: {note}")
    if p % 12 == 11:
        u_m = sl2.gens_tu(p)[1]
        n_corr = sl2.subgroup_order(p, [u_m, sl2.element_v(p)])
        n_orig = sl2.subgroup_order(p, [u_m, sl2.element_v(p, corrected=False)])
        print(f"subgroup contrast at p={p}: corrected |<u,v>| = {n_corr}, "
              f"uncorrected |<u,v'>| = {n_orig}")
    if not ran_any:
        print(f"shortpres: error: no falsification target applies at p={p}",
              file=sys.stderr)
        return _EXIT_BADARGS
    return _EXIT_OK if all_falsified else _EXIT_VERIFY


def _cmd_params(args):
    for n, kind in _requests(args):
        ps = builders.params_for(n, kind)
        print(json.dumps(ps.to_json()))
    return _EXIT_OK


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "emit": _cmd_emit,
        "verify": _cmd_verify,
        "stats": _cmd_stats,
        "falsify": _cmd_falsify,
        "params": _cmd_params,
    }
    try:
        return handlers[args.command](args)
    except (UnsupportedDegree, DegreeTooLarge, EnumerationTooLarge) as exc:
        print(f"shortpres: {exc}", file=sys.stderr)
        return _EXIT_UNSUPPORTED
    except ValueError as exc:
        # covers bad numeric input and the remaining package errors
        print(f"shortpres: error: {exc}", file=sys.stderr)
        return _EXIT_BADARGS


if __name__ == "__main__":
    sys.exit(main())
