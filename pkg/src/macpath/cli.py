"""Command-line front end.

Exit codes: 0 on success, 1 when a computation or verification fails its
check, 2 on malformed input.  Output is JSON (deterministically ordered) or
LaTeX.  The environment variable MACPATH_THREADS caps worker parallelism;
the current engines are exact-arithmetic bound and run on a single worker,
which respects any cap.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import qt
from .dbg import ReflectionOrder, export_dot as dbg_dot
from .macdonald import (character_q0t0, e_mu_pqls, hall_littlewood, jack,
                        p_lambda_pqls)
from .pqls import enumerate_pairs, enumerate_paths
from .pseudo_crystal import crystal_graph, export_dot as crystal_dot
from .ramyip import WalkContext, e_mu_ramyip, enumerate_walks, p_lambda_ramyip
from .root_system import (format_element, parse_weight, parse_word,
                          root_system_from_label)
from . import verify as verify_mod


class UsageError(Exception):
    pass


def _root_system(args):
    try:
        return root_system_from_label(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight(args, rs):
    try:
        return parse_weight(args.weight, rs.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _mu(args, rs, lam):
    if getattr(args, "mu", None):
        try:
            return parse_weight(args.mu, rs.rank)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if getattr(args, "mu_word", None):
        try:
            w = parse_word(args.mu_word, rs)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return w.apply_weight(lam)
    raise UsageError("provide --mu or --mu-word")


def _emit_character(ch, out):
    if out == "latex":
        print(ch.latex())
    else:
        print(qt.character_to_json_str(ch))


def cmd_rootinfo(args) -> int:
    rs = _root_system(args)
    data = {
        "type": rs.type_label,
        "cartan_matrix": [list(r) for r in rs.cartan],
        "positive_roots": [list(c) for c in rs.roots[:rs.npos]],
        "positive_coroots": [list(c) for c in rs.coroots[:rs.npos]],
        "rho": list(rs.rho),
        "weyl_order": rs.weyl_order,
        "highest_root": list(rs.roots[rs.highest_root_index]),
        "highest_short_root": list(rs.roots[rs.highest_short_root_index]),
    }
    print(json.dumps(data, indent=2, sort_keys=True))
    return 0


def cmd_dbg(args) -> int:
    rs = _root_system(args)
    if args.b is not None:
        lam = _weight(args, rs)
        print(dbg_dot(rs, lam, Fraction(args.b)))
    else:
        print(dbg_dot(rs))
    return 0


def cmd_pqls(args) -> int:
    rs = _root_system(args)
    lam = _weight(args, rs)
    if args.pairs:
        mu = _mu(args, rs, lam)
        order = ReflectionOrder(rs, lam, mu)
        data = [p.to_json() for p in enumerate_pairs(rs, lam, mu, order)]
    else:
        data = [p.to_json() for p in enumerate_paths(rs, lam)]
    print(json.dumps(data, indent=2))
    return 0


def cmd_walks(args) -> int:
    rs = _root_system(args)
    lam = _weight(args, rs)
    mu = _mu(args, rs, lam)
    ctx = WalkContext(rs, lam, mu)
    out = []
    for walk in enumerate_walks(rs, lam, mu, ctx=ctx):
        end = walk.ed()
        out.append({
            "J": list(walk.J),
            "ed_wt": list(end.wt()),
            "dir": format_element(end.dir()),
            "markings": list(walk.markings),
            "L": qt.ratqv_to_json(walk.l_statistic()),
        })
        if not args.dump_walks and len(out) >= 64:
            break
    print(json.dumps(out, indent=2))
    return 0


def cmd_E(args) -> int:
    rs = _root_system(args)
    lam = _weight(args, rs)
    mu = _mu(args, rs, lam)
    rng = random.Random(args.seed)
    if args.method in ("pqls", "both"):
        a = e_mu_pqls(rs, lam, mu)
    if args.method in ("ramyip", "both"):
        b = e_mu_ramyip(rs, lam, mu)
    if args.method == "both":
        if qt.char_equal(a, b, rng=rng):
            print("MATCH")
        else:
            print("MISMATCH")
            return 1
        if args.check:
            return 0
        _emit_character(a, args.out)
        return 0
    _emit_character(a if args.method == "pqls" else b, args.out)
    return 0


def cmd_P(args) -> int:
    rs = _root_system(args)
    lam = _weight(args, rs)
    rng = random.Random(args.seed)
    if args.method in ("pqls", "both"):
        a = p_lambda_pqls(rs, lam)
    if args.method in ("ramyip", "both"):
        b = p_lambda_ramyip(rs, lam)
    if args.method == "both":
        if qt.char_equal(a, b, rng=rng):
            print("MATCH")
        else:
            print("MISMATCH")
            return 1
        if args.check:
            return 0
        _emit_character(a, args.out)
        return 0
    _emit_character(a if args.method == "pqls" else b, args.out)
    return 0


def cmd_special(args) -> int:
    rs = _root_system(args)
    lam = _weight(args, rs)
    if args.hall_littlewood:
        report = hall_littlewood(rs, lam)
        print("specialization route:")
        _emit_character(report.from_specialization, args.out)
        print("prefactor-free route:")
        _emit_character(report.literal_sum, args.out)
        print("routes agree:" , report.routes_agree)
        return 0
    if args.jack is not None:
        gamma = Fraction(args.jack)
        if gamma <= 0:
            raise UsageError("gamma must be a positive rational")
        _emit_character(jack(rs, lam, gamma), args.out)
        return 0
    if args.q0t0:
        if getattr(args, "mu", None) or getattr(args, "mu_word", None):
            mu = _mu(args, rs, lam)
            ch = e_mu_pqls(rs, lam, mu)
        else:
            ch = p_lambda_pqls(rs, lam)
        vals = character_q0t0(ch)
        print(json.dumps(
            [{"weight": list(w), "mult": str(m)} for w, m in sorted(vals.items())],
            indent=2))
        return 0
    raise UsageError("choose --hall-littlewood, --jack G, or --q0t0")


def cmd_crystal(args) -> int:
    rs = _root_system(args)
    lam = _weight(args, rs)
    graph = crystal_graph(rs, lam)
    if args.out == "dot":
        print(crystal_dot(rs, graph))
    else:
        data = {
            "vertices": [p.to_json() for p in graph.vertices],
            "edges": [{"from": i, "root": list(rs.roots[a]), "to": j}
                      for i, a, j in graph.edges],
        }
        print(json.dumps(data, indent=2))
    return 0


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    types = [t for t in ("A1", "A2", "B2", "C2", "G2", "A3", "B3")
             if int(t[1]) <= args.max_rank]
    progress = (lambda line: print(line, flush=True)) if args.progress else None
    if args.suite == "paper-a2":
        rep = verify_mod.paper_a2(rng)
    elif args.suite == "bijection":
        rep = verify_mod.bijection(types, max_coord=args.max_coord,
                                   cap_log2=args.cap, sample=args.sample,
                                   seed=args.seed, progress=progress)
    elif args.suite == "axioms":
        crystal_types = [t for t in ("A1", "A2", "B2") if int(t[1]) <= args.max_rank]
        rep = verify_mod.crystal_suite(crystal_types, max_coord=args.max_coord,
                                       progress=progress)
    elif args.suite == "connectedness":
        rep = verify_mod.crystal_suite(
            [t for t in ("A1", "A2", "B2") if int(t[1]) <= args.max_rank],
            max_coord=args.max_coord, progress=progress)
    elif args.suite == "cross-formula":
        rep = verify_mod.cross_formula(types, max_coord=args.max_coord,
                                       cap_log2=args.cap, rng=rng,
                                       progress=progress)
    else:
        raise UsageError(f"unknown suite {args.suite!r}")
    for line in rep.lines:
        print(line)
    print(f"suite {rep.name}: {'PASS' if rep.ok() else 'FAIL'}")
    return 0 if rep.ok() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macpath",
        description="Macdonald polynomials from path models on the double "
                    "Bruhat graph")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized identity-testing points")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=True):
        p.add_argument("--type", required=True, help="Cartan type, e.g. A2")
        if weight:
            p.add_argument("--weight", required=True,
                           help="dominant weight, e.g. 1,1")

    p = sub.add_parser("rootinfo", help="root system data")
    common(p, weight=False)

    p = sub.add_parser("dbg", help="DOT export of the double Bruhat graph")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", help="needed with --b")
    p.add_argument("--b", help="rational level, e.g. 1/2")

    p = sub.add_parser("pqls", help="paths, or pairs for a given mu")
    common(p)
    p.add_argument("--mu")
    p.add_argument("--mu-word")
    p.add_argument("--pairs", action="store_true")

    p = sub.add_parser("walks", help="alcove-walk trace for mu")
    common(p)
    p.add_argument("--mu")
    p.add_argument("--mu-word")
    p.add_argument("--dump-walks", action="store_true",
                   help="dump every walk, not just the first 64")

    p = sub.add_parser("E", help="nonsymmetric polynomial")
    common(p)
    p.add_argument("--mu")
    p.add_argument("--mu-word")
    p.add_argument("--method", choices=("pqls", "ramyip", "both"),
                   default="pqls")
    p.add_argument("--out", choices=("json", "latex"), default="json")
    p.add_argument("--check", action="store_true",
                   help="with --method both: only report MATCH/MISMATCH")

    p = sub.add_parser("P", help="symmetric polynomial")
    common(p)
    p.add_argument("--method", choices=("pqls", "ramyip", "both"),
                   default="pqls")
    p.add_argument("--out", choices=("json", "latex"), default="json")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("special", help="specializations")
    common(p)
    p.add_argument("--mu")
    p.add_argument("--mu-word")
    p.add_argument("--hall-littlewood", action="store_true")
    p.add_argument("--jack", help="positive rational gamma, e.g. 2/3")
    p.add_argument("--q0t0", action="store_true")
    p.add_argument("--out", choices=("json", "latex"), default="json")

    p = sub.add_parser("crystal", help="pseudo-crystal graph")
    common(p)
    p.add_argument("--out", choices=("dot", "json"), default="dot")

    p = sub.add_parser("verify", help="verification suites")
    p.add_argument("--suite", required=True,
                   choices=("paper-a2", "bijection", "axioms",
                            "connectedness", "cross-formula"))
    p.add_argument("--max-rank", type=int, default=2)
    p.add_argument("--max-coord", type=int, default=1)
    p.add_argument("--cap", type=int, default=20,
                   help="skip cases with more than 2^cap walks")
    p.add_argument("--sample", type=int, default=64)
    p.add_argument("--progress", action="store_true")
    return parser


COMMANDS = {
    "rootinfo": cmd_rootinfo,
    "dbg": cmd_dbg,
    "pqls": cmd_pqls,
    "walks": cmd_walks,
    "E": cmd_E,
    "P": cmd_P,
    "special": cmd_special,
    "crystal": cmd_crystal,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    threads = os.environ.get("MACPATH_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                print("MACPATH_THREADS must be a positive integer",
                      file=sys.stderr)
                return 2
        except ValueError:
            print("MACPATH_THREADS must be a positive integer", file=sys.stderr)
            return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
