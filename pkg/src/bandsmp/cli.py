"""Command-line interface.

Exit codes: 0 member/true/ok, 1 non-member/false, 2 domain error or
unknown, 64 usage. All output is deterministic for fixed inputs; element
labels and variable indices are 1-based on the way in and out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import band as band_mod
from . import power, quasi, reduction, smp, words
from .errors import BandSmpError

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_band_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--band", metavar="FILE", help="band file (text or JSON format)")
    p.add_argument("--catalog", metavar="NAME", help="named catalog band, e.g. S9")


def _resolve_band(args) -> band_mod.Band:
    if bool(args.band) == bool(args.catalog):
        raise BandSmpError("exactly one of --band and --catalog is required")
    if args.band:
        return band_mod.load_band(args.band)
    return band_mod.catalog(args.catalog)


def _witness_json(w: Optional[quasi.Witness]):
    if w is None:
        return None
    d, e, x, y, h = w.labels()
    return {"d": d, "e": e, "x": x, "y": y, "h": h}


def _tuple_str(t) -> str:
    return "(" + ",".join(str(v + 1) for v in t) + ")"


# --- subcommands ---------------------------------------------------------------

def _cmd_validate(args) -> int:
    band = _resolve_band(args)
    if args.json:
        print(json.dumps({"valid": True, "order": band.order, "name": band.name}))
    else:
        print(f"VALID: band of order {band.order}")
    return EXIT_TRUE


def _cmd_green(args) -> int:
    band = _resolve_band(args)
    classes = [[v + 1 for v in cls] for cls in band.green.j_classes]
    if args.json:
        print(json.dumps({
            "order": band.order,
            "height": band.height(),
            "j_classes": classes,
        }))
    else:
        print(f"order: {band.order}")
        print(f"height: {band.height()}")
        parts = " ".join("{" + ",".join(map(str, c)) + "}" for c in classes)
        print(f"J-classes: {parts}")
    return EXIT_TRUE


def _cmd_classify(args) -> int:
    band = _resolve_band(args)
    result = quasi.classify(band, max_order=args.max_order)
    if args.json:
        print(json.dumps({
            "verdict": result.verdict,
            "lambda_witness": _witness_json(result.lambda_witness),
            "lambda_dual_witness": _witness_json(result.lambda_dual_witness),
        }))
    else:
        print(result.verdict)
        if result.lambda_witness is not None:
            print(f"lambda witness: {result.lambda_witness}")
        if result.lambda_dual_witness is not None:
            print(f"lambda-dual witness: {result.lambda_dual_witness}")
    return EXIT_TRUE


def _default_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("BANDSMP_CAP")
    if env:
        return int(env)
    return power.DEFAULT_CAP


def _decide_one(band, text, algo, force, cap):
    """Decide one instance; returns (verdict, stats_lines, json_obj)."""
    inst = power.parse_instance(text, band)
    stats = smp.LoopStats()
    stats.bound = inst.gens.n * (band.height() - 1)
    method = algo
    word = None
    if algo == "poly":
        member = smp.smp_decide_poly(inst, force=force, stats=stats)
        if not member and force and not quasi.classify(band).tractable:
            verdict = "unknown"  # completeness needs the quasiidentity scans
        else:
            verdict = "member" if member else "non-member"
    elif algo == "closure":
        word = power.member_closure_word(inst.gens, inst.target, cap=cap)
        verdict = "member" if word is not None else "non-member"
    else:
        result = smp.smp_decide_auto(inst, cap=cap, stats=stats)
        method = result.method
        word = result.word
        verdict = "member" if result.member else "non-member"

    lines = [f"method: {method}"]
    obj = {"verdict": verdict, "method": method}
    if method == "poly":
        lines.append(f"loop bound n(h-1): {stats.bound}")
        lines.append(f"infix inner-body max: {stats.infix_pass_max}")
        lines.append(f"suffix while max: {stats.suffix_call_max}")
        obj["stats"] = {
            "bound": stats.bound,
            "infix_inner_max": stats.infix_pass_max,
            "suffix_while_max": stats.suffix_call_max,
        }
        if stats.witness_pair is not None:
            x, y = stats.witness_pair
            verified = power.mul_tuple(band, y, x) == inst.target
            lines.append(f"witness pair: x={_tuple_str(x)} y={_tuple_str(y)}")
            lines.append(f"verified: {'true' if verified else 'false'}")
            obj["witness_pair"] = {
                "x": [v + 1 for v in x],
                "y": [v + 1 for v in y],
                "verified": verified,
            }
    elif word is not None:
        verified = smp.verify_word(inst.gens, word, inst.target)
        lines.append(f"witness word: {' '.join(map(str, word))}")
        lines.append(f"verified: {'true' if verified else 'false'}")
        obj["witness_word"] = word
        obj["verified"] = verified
    return verdict, lines, obj


def _verdict_code(verdict: str) -> int:
    return {"member": EXIT_TRUE, "non-member": EXIT_FALSE}.get(verdict, EXIT_ERROR)


def _decide_worker(payload):
    band_text, path, algo, force, cap = payload
    band = band_mod.parse_band_text(band_text)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        verdict, _, _ = _decide_one(band, text, algo, force, cap)
        return path, verdict, None
    except BandSmpError as exc:
        return path, "error", f"{type(exc).__name__}: {exc}"


def _cmd_smp(args) -> int:
    band = _resolve_band(args)
    cap = _default_cap(args)
    sources = []
    if args.inline:
        sources.append(("<inline>", args.inline.replace(";", "\n")))
    for path in args.instance or []:
        with open(path, "r", encoding="utf-8") as fh:
            sources.append((path, fh.read()))
    if not sources:
        raise BandSmpError("no instance given: use --instance FILE or --inline TEXT")

    if len(sources) == 1:
        name, text = sources[0]
        verdict, lines, obj = _decide_one(band, text, args.algo, args.force, cap)
        if args.json:
            print(json.dumps(obj))
        else:
            print(verdict)
            if args.stats:
                for ln in lines:
                    print(ln)
        return _verdict_code(verdict)

    # batch mode: one verdict line per instance, order preserved
    results = []
    if args.jobs > 1:
        payloads = [
            (band.to_text(), name, args.algo, args.force, cap)
            for name, _ in sources
        ]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_decide_worker, payloads))
    else:
        for name, text in sources:
            try:
                verdict, _, _ = _decide_one(band, text, args.algo, args.force, cap)
                results.append((name, verdict, None))
            except BandSmpError as exc:
                results.append((name, "error", f"{type(exc).__name__}: {exc}"))
    if args.json:
        print(json.dumps({
            "results": [
                {"instance": name, "verdict": verdict, "error": err}
                for name, verdict, err in results
            ]
        }))
    else:
        for name, verdict, err in results:
            suffix = f" ({err})" if err else ""
            print(f"{name}\t{verdict}{suffix}")
    return max(_verdict_code(v) for _, v, _ in results)


def _cmd_words(args) -> int:
    action = args.action
    if action == "content":
        w = words.word_from_text(args.word)
        print(" ".join(map(str, sorted(words.content(w)))))
    elif action == "cut":
        print(words.word_to_text(words.left_cut_s(words.word_from_text(args.word))))
    elif action == "sigma":
        print(words.word_to_text(words.sigma(words.word_from_text(args.word))))
    elif action == "dual":
        print(words.word_to_text(words.dual_word(words.word_from_text(args.word))))
    elif action == "hn":
        print(words.word_to_text(words.h_n(args.n, words.word_from_text(args.word))))
    elif action == "pbound":
        print(words.length_bound_p(args.n, args.k))
    elif action == "ghi":
        family, n = args.name[0], int(args.name[1:])
        print(words.word_to_text(words.ghi_word(family, n)))
    elif action == "eval":
        band = _resolve_band(args)
        w = words.word_from_text(args.word)
        assign = [int(v) - 1 for v in args.assign.split()]
        print(words.eval_word(band, w, assign) + 1)
    elif action == "identity":
        band = _resolve_band(args)
        ident = words.Identity(
            words.word_from_text(args.lhs), words.word_from_text(args.rhs)
        )
        result = words.satisfies_identity(band, ident)
        if result is True:
            print("holds")
            return EXIT_TRUE
        print("fails at " + " ".join(
            f"x{i + 1}={v + 1}" for i, v in enumerate(result)
        ))
        return EXIT_FALSE
    return EXIT_TRUE


def _cmd_reduce(args) -> int:
    band = _resolve_band(args)
    with open(args.cnf, "r", encoding="utf-8") as fh:
        sat = reduction.parse_dimacs(fh.read())

    classification = quasi.classify(band)
    if classification.lambda_witness is not None:
        gadget_band, witness, orientation = band, classification.lambda_witness, "S"
    elif classification.lambda_dual_witness is not None:
        # reduce into the dual band; membership there mirrors reversed products
        gadget_band = band.dual()
        witness, orientation = classification.lambda_dual_witness, "dual"
    else:
        raise BandSmpError(
            "band passes both quasiidentity scans; no hardness instance exists"
        )
    witness = quasi.normalize_witness(gadget_band, witness)
    out = reduction.sat_to_smp(sat, gadget_band, witness)

    text = power.format_instance(out.instance)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    if args.roles:
        with open(args.roles, "w", encoding="utf-8") as fh:
            fh.write(reduction.format_roles(out))
    info = {
        "instance_file": args.output,
        "orientation": orientation,
        "arity": out.instance.gens.n,
        "generators": len(out.instance.gens),
        "clauses": out.num_clauses,
        "variables": out.num_vars,
        "variable_map": {str(k): v for k, v in sorted(out.variable_map.items())},
        "witness": _witness_json(out.witness),
    }
    if args.json:
        print(json.dumps(info))
    else:
        print(f"wrote {args.output}: arity {info['arity']}, "
              f"{info['generators']} generators ({orientation} orientation)")
    return EXIT_TRUE


def _cmd_catalog(args) -> int:
    if not args.name:
        for name in band_mod.CATALOG_EXAMPLES:
            print(name)
        return EXIT_TRUE
    band = band_mod.catalog(args.name)
    if args.json:
        payload = json.dumps({
            "name": band.name,
            "order": band.order,
            "table": [[v + 1 for v in row] for row in band.table],
        })
        output = payload + "\n"
    else:
        output = band.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(output)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(output)
    return EXIT_TRUE


# --- parser --------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="bandsmp", description=__doc__)
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized behavior (none of the current "
                             "commands draw randomness; accepted for scripting)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a band table")
    _add_band_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("green", help="J-classes and height of the J-quotient")
    _add_band_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("classify", help="tractability dichotomy verdict")
    _add_band_source(p)
    p.add_argument("--max-order", type=int, default=quasi.DEFAULT_SCAN_ORDER_BOUND)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("smp", help="decide subpower membership")
    _add_band_source(p)
    p.add_argument("--instance", metavar="FILE", nargs="+",
                   help="instance file(s); several files run as a batch")
    p.add_argument("--inline", metavar="TEXT",
                   help="inline instance, ';' separates lines")
    p.add_argument("--algo", choices=("auto", "poly", "closure"), default="auto")
    p.add_argument("--force", action="store_true",
                   help="run the polynomial algorithm even if the scans fail; "
                        "'no' answers are then reported as unknown")
    p.add_argument("--cap", type=int, default=None,
                   help="closure cap (default 5e6; env BANDSMP_CAP overrides)")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_smp)

    p = sub.add_parser("words", help="free-band word tools")
    wsub = p.add_subparsers(dest="action", required=True)
    for name in ("content", "cut", "sigma", "dual"):
        wp = wsub.add_parser(name)
        wp.add_argument("word", help="space-separated variable indices")
    wp = wsub.add_parser("hn")
    wp.add_argument("--n", type=int, required=True)
    wp.add_argument("word")
    wp = wsub.add_parser("pbound")
    wp.add_argument("--n", type=int, required=True)
    wp.add_argument("--k", type=int, required=True)
    wp = wsub.add_parser("ghi")
    wp.add_argument("name", help="e.g. G3, H4, I2")
    wp = wsub.add_parser("eval")
    _add_band_source(wp)
    wp.add_argument("--assign", required=True, help="1-based elements for x1 x2 ...")
    wp.add_argument("word")
    wp = wsub.add_parser("identity")
    _add_band_source(wp)
    wp.add_argument("--lhs", required=True)
    wp.add_argument("--rhs", required=True)
    p.set_defaults(func=_cmd_words)

    p = sub.add_parser("reduce", help="emit the SAT hardness instance")
    p.add_argument("--cnf", required=True, metavar="FILE", help="DIMACS CNF input")
    _add_band_source(p)
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    p.add_argument("--roles", metavar="FILE", help="write generator role map")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("catalog", help="export a named band (no name: list them)")
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BandSmpError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except FileNotFoundError as exc:
        print(f"error: FileNotFound: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
