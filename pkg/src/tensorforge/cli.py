"""Command-line front end.

Every command builds one RunReport dict; ``--json`` prints it verbatim,
the default output is a plain-text rendering of the same dict.  Exit
codes: 0 success / compatible / all-pass, 1 definite negative result,
2 error or exhausted budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .actions import (ActionPair, HomPair, action_from_hom_pair,
                      conjugation_maps, default_budget, is_compatible,
                      normalizer_conditions, question2_scan)
from .catalog import catalog_keys, make_catalog_group
from .errors import (BudgetExceeded, IncompatibleActions, IoError,
                     LimitExceeded, TensorforgeError, UnknownCatalogKey)
from .groups import center
from .homs import are_isomorphic, enumerate_homs
from .serialize import (action_pair_from_dict, group_to_dict, resolve_group,
                        tensor_report_to_dict, witness_to_dict)
from .tensor import compute_tensor
from .verify import run_verification

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _action_maps(spec, base, actor, side):
    """One action side: 'trivial', 'inversion', 'conjugation', or a path
    to a JSON file {'map': [Aut indices]}."""
    if spec == "trivial":
        return np.tile(np.arange(base.order), (actor.order, 1))
    if spec == "inversion":
        orders = actor.element_orders()
        gens = [h for h in range(actor.order)
                if orders[h] == actor.order]
        if not gens:
            raise IoError("inversion action needs a cyclic acting group")
        if not base.is_abelian:
            raise IoError("inversion is only an automorphism of an "
                          "abelian group")
        g = gens[0]
        idm = np.arange(base.order)
        maps = np.empty((actor.order, base.order), dtype=np.intp)
        power = actor.identity
        for k in range(actor.order):
            maps[power] = base.inverse if k % 2 else idm
            power = actor.mul(power, g)
        return maps
    if spec == "conjugation":
        if base.order != actor.order or not np.array_equal(
                base.table, actor.table):
            raise IoError("conjugation action requires the two groups to "
                          "be the same")
        return conjugation_maps(base)
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read {side} spec {spec!r}: {exc}") from None
    from .automorphisms import automorphism_group
    aut = automorphism_group(base)
    idx = data["map"]
    if len(idx) != actor.order:
        raise IoError(f"{side} map must have {actor.order} entries")
    return np.array([aut.elements[int(i)] for i in idx])


def _build_pair(args):
    if args.pair:
        with open(args.pair, encoding="utf-8") as fh:
            return action_pair_from_dict(json.load(fh))
    G = resolve_group(args.g)
    H = resolve_group(args.h)
    alpha = _action_maps(args.alpha, G, H, "alpha")
    beta = _action_maps(args.beta, H, G, "beta")
    return ActionPair(G, H, alpha, beta)


def _report(command, inputs, results, status, t0):
    return {"command": command, "inputs": inputs, "results": results,
            "status": status,
            "timing_ms": round((time.perf_counter() - t0) * 1000, 1)}


def cmd_catalog(args):
    t0 = time.perf_counter()
    if args.action == "list":
        keys = catalog_keys()
        return _report("catalog list", {}, {"keys": keys}, "pass", t0), \
            EXIT_OK
    G = make_catalog_group(args.key)
    data = group_to_dict(G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        results = {"written": args.out, "order": G.order}
    else:
        results = data
    return _report("catalog export", {"key": args.key}, results,
                   "pass", t0), EXIT_OK


def cmd_compat(args):
    t0 = time.perf_counter()
    pair = _build_pair(args)
    report = is_compatible(pair)
    norm_g, norm_h = normalizer_conditions(pair)
    results = {"compatible": report.compatible,
               "witness": witness_to_dict(report.witness),
               "normalizer_g": norm_g, "normalizer_h": norm_h}
    status = "pass" if report.compatible else "fail"
    code = EXIT_OK if report.compatible else EXIT_NEGATIVE
    inputs = {"g": args.g, "h": args.h,
              "alpha": args.alpha, "beta": args.beta, "pair": args.pair}
    return _report("compat", inputs, results, status, t0), code


def cmd_tensor(args):
    t0 = time.perf_counter()
    pair = _build_pair(args)
    rep = compute_tensor(pair, force=args.force,
                         max_cosets=args.max_cosets)
    results = tensor_report_to_dict(rep)
    iso_notes = []
    for label, K in (("g", pair.G), ("h", pair.H)):
        if rep.tensor.order == K.order and are_isomorphic(rep.tensor, K):
            iso_notes.append(f"isomorphic to {getattr(args, label)}")
    results["notes"] = iso_notes
    inputs = {"g": args.g, "h": args.h,
              "alpha": args.alpha, "beta": args.beta, "pair": args.pair}
    return _report("tensor", inputs, results, "pass", t0), EXIT_OK


def cmd_verify(args):
    t0 = time.perf_counter()
    rows = run_verification()
    ok = all(r["passed"] for r in rows)
    results = {"rows": rows, "passed": sum(r["passed"] for r in rows),
               "failed": sum(not r["passed"] for r in rows)}
    return _report("verify paper", {}, results,
                   "pass" if ok else "fail", t0), \
        (EXIT_OK if ok else EXIT_NEGATIVE)


def _classify_heisenberg(p, budget):
    G = make_catalog_group(f"heisenberg:{p}")
    phis = enumerate_homs(G, G, budget=budget)
    psis = enumerate_homs(G, G, budget=budget)
    zc = center(G)
    coset = np.full(G.order, -1, dtype=np.intp)
    nxt = 0
    for g in range(G.order):
        key = min(G.mul(g, z) for z in zc.members)
        if coset[key] < 0:
            coset[key] = nxt
            nxt += 1
        coset[g] = coset[key]
    # the induced actions only see the homs modulo the center
    classes = {}
    for i, phi in enumerate(phis):
        for j, psi in enumerate(psis):
            key = (coset[phi.map].tobytes(), coset[psi.map].tobytes())
            classes.setdefault(key, []).append((i, j))
    profiles = []
    for members in classes.values():
        i, j = members[0]
        pair = action_from_hom_pair(G, G, HomPair(phis[i], psis[j]))
        rep = compute_tensor(pair)
        profiles.append((rep, len(members), (i, j)))
    # deduplicate the resulting M(phi, psi) by isomorphism
    rows = []
    for rep, count, (i, j) in profiles:
        for row in rows:
            if row["order"] == rep.order and \
                    row["abelian"] == rep.tensor.is_abelian and \
                    row["invariants"] == rep.invariants and \
                    are_isomorphic(row["_witness"], rep.tensor):
                row["n_hom_pairs"] += count
                break
        else:
            rows.append({"order": rep.order,
                         "abelian": bool(rep.tensor.is_abelian),
                         "invariants": rep.invariants,
                         "nilpotency": rep.nilpotency,
                         "example_phi": i, "example_psi": j,
                         "n_hom_pairs": count,
                         "_witness": rep.tensor})
    for row in rows:
        del row["_witness"]
    rows.sort(key=lambda r: (r["order"], str(r["invariants"])))
    return {"p": p, "n_homs": len(phis),
            "n_hom_pairs": len(phis) * len(psis), "classes": rows}


def cmd_explore(args):
    t0 = time.perf_counter()
    budget = args.budget if args.budget else default_budget()
    if args.question == "question2":
        results = question2_scan(args.max_order, budget=budget)
        status = "pass" if not results["counterexamples"] else "partial"
        return _report("explore question2",
                       {"max_order": args.max_order}, results, status,
                       t0), EXIT_OK
    results = _classify_heisenberg(args.p, budget)
    return _report("explore classify-heisenberg", {"p": args.p},
                   results, "pass", t0), EXIT_OK


def _render(report, out):
    print(f"== {report['command']} "
          f"[{report['status']}, {report['timing_ms']} ms]", file=out)
    results = report["results"]
    if report["command"] == "catalog list":
        for key in results["keys"]:
            print(f"  {key}", file=out)
    elif report["command"] == "verify paper":
        for row in results["rows"]:
            mark = "PASS" if row["passed"] else "FAIL"
            print(f"  {mark}  {row['name']:34s} {row['seconds']:8.3f} s",
                  file=out)
            if not row["passed"]:
                print(f"        expected: {row['expected']}", file=out)
                print(f"        computed: {row['computed']}", file=out)
                if row["detail"]:
                    print(f"        note: {row['detail']}", file=out)
        print(f"  {results['passed']} passed, {results['failed']} failed",
              file=out)
    elif report["command"] == "compat":
        print(f"  compatible: {results['compatible']}", file=out)
        if results["witness"]:
            print(f"  witness: {results['witness']}", file=out)
        print(f"  normalizer conditions: G side {results['normalizer_g']}, "
              f"H side {results['normalizer_h']}", file=out)
    elif report["command"] == "tensor":
        print(f"  order: {results['order']}", file=out)
        print(f"  abelian: {results['abelian']}"
              + (f", invariants {results['invariants']}"
                 if results["invariants"] else ""), file=out)
        print(f"  derivative order: {results['derivative_order']}",
              file=out)
        print(f"  kernel order: {results['kernel_order']}", file=out)
        for note in results.get("notes", []):
            print(f"  {note}", file=out)
    elif report["command"] == "explore question2":
        for rec in results["records"]:
            print(f"  {json.dumps(rec)}", file=out)
        print(f"  certificate: {results['certificate']}", file=out)
    elif report["command"] == "explore classify-heisenberg":
        for row in results["classes"]:
            print(f"  {json.dumps(row)}", file=out)
        print(f"  {len(results['classes'])} isomorphism classes over "
              f"{results['n_hom_pairs']} hom pairs", file=out)
    else:
        print(json.dumps(results, indent=2), file=out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tensorforge",
        description="compatible actions and non-abelian tensor products "
                    "of finite groups")
    parser.add_argument("--json", action="store_true",
                        help="print the raw JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list or export catalog groups")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cat_sub.add_parser("list")
    exp = cat_sub.add_parser("export")
    exp.add_argument("key")
    exp.add_argument("--out", default=None)
    cat.set_defaults(func=cmd_catalog)

    def pair_args(p):
        p.add_argument("--g", help="catalog key or group file")
        p.add_argument("--h", help="catalog key or group file")
        p.add_argument("--alpha", default="trivial",
                       help="trivial | inversion | conjugation | map file")
        p.add_argument("--beta", default="trivial",
                       help="trivial | inversion | conjugation | map file")
        p.add_argument("--pair", default=None,
                       help="action pair JSON file (overrides the rest)")

    comp = sub.add_parser("compat", help="decide compatibility")
    pair_args(comp)
    comp.set_defaults(func=cmd_compat)

    ten = sub.add_parser("tensor", help="compute the tensor product")
    pair_args(ten)
    ten.add_argument("--force", action="store_true",
                     help="compute the presented group even if the pair "
                          "is incompatible")
    ten.add_argument("--max-cosets", type=int, default=None)
    ten.set_defaults(func=cmd_tensor)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("what", choices=["paper"])
    ver.set_defaults(func=cmd_verify)

    explore = sub.add_parser("explore", help="open-question evidence")
    explore_sub = explore.add_subparsers(dest="question", required=True)
    q2 = explore_sub.add_parser("question2")
    q2.add_argument("--max-order", type=int, required=True)
    q2.add_argument("--budget", type=int, default=None)
    ch = explore_sub.add_parser("classify-heisenberg")
    ch.add_argument("p", type=int)
    ch.add_argument("--budget", type=int, default=None)
    explore.set_defaults(func=cmd_explore)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "question", None) == "question2" \
            and not hasattr(args, "budget"):
        args.budget = None
    try:
        report, code = args.func(args)
    except (BudgetExceeded, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except IncompatibleActions as exc:
        print(f"error: incompatible actions ({exc}); use --force to "
              "compute the presented group anyway", file=sys.stderr)
        return EXIT_ERROR
    except (IoError, UnknownCatalogKey) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except TensorforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps(report))
    else:
        _render(report, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
