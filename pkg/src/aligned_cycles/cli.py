"""Command-line entry point.

Every verb prints exactly one JSON object on stdout. Exit codes: 0 success,
1 contract or verification failure, 2 usage error, 3 internal proof
violation (trace dumped on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path as FsPath

from .aligned import aligned_pair, check_aligned_pair
from .connectivity import analyze
from .errors import ContractError, GraphError, ProofViolation
from .generators import CATALOG, FAMILIES, GenSpec, catalog_graph, generate
from .graph import Cycle, Path, format_graph, parse_graph, to_dot
from .long_cycle import long_cycle, verify_certificate
from .oracles import (
    BudgetExceeded,
    OracleBudget,
    brute_longest_cycle,
    find_aligned_tuple,
    max_aligned_disjoint_paths,
)

SEED_ENV = "ALIGNED_CYCLES_SEED"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PROOF = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_graph(ref: str):
    """Read an edge-list file, or a catalog entry written as ``catalog:NAME``."""
    if ref.startswith("catalog:"):
        name = ref.split(":", 1)[1]
        if name not in CATALOG:
            raise UsageError(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG)}")
        return catalog_graph(name)
    try:
        text = FsPath(ref).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {ref}: {exc.strerror}") from None
    return parse_graph(text)


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# verbs


def _check_one(ref):
    g = load_graph(ref)
    rep = analyze(g)
    return {
        "graph": ref,
        "n": g.n,
        "m": g.m,
        "delta": g.min_degree(),
        "connected": rep.connected,
        "cut_vertices": sorted(rep.cut_vertices),
        "two_connected": rep.two_connected,
    }


def cmd_check(args):
    results = _fan_out(_check_one, args.graph, args.jobs)
    ok = all(r.get("two_connected") for r in results)
    _emit(results[0] if len(results) == 1 else {"results": results})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_aligned_pair(args):
    g = load_graph(args.graph[0])
    base = Path(_int_list(args.path))
    pair = aligned_pair(g, base, args.z)
    reason = check_aligned_pair(g, base, args.z, pair.p1, pair.p2)
    _emit({"p1": list(pair.p1), "p2": list(pair.p2), "checked": reason is None})
    return EXIT_OK if reason is None else EXIT_PROOF


def _long_cycle_one(ref, with_trace=False):
    g = load_graph(ref)
    cert = long_cycle(g)
    out = cert.as_dict(with_trace=with_trace)
    out["verified"] = bool(verify_certificate(g, out))
    return out


def cmd_long_cycle(args):
    if args.dot and len(args.graph) > 1:
        raise UsageError("--dot needs a single --graph")
    if len(args.graph) == 1:
        out = _long_cycle_one(args.graph[0], args.emit_trace)
        if args.dot:
            g = load_graph(args.graph[0])
            FsPath(args.dot).write_text(to_dot(g, cycle=Cycle(out["cycle"])))
        _emit(out)
        return EXIT_OK if out["verified"] else EXIT_FAIL
    results = _fan_out(_long_cycle_one, args.graph, args.jobs, args.emit_trace)
    _emit({"results": results})
    return EXIT_OK if all(r.get("verified") for r in results) else EXIT_FAIL


def _budget(args, default_n):
    return OracleBudget(max_n=args.max_n or default_n, max_millis=args.max_millis)


def cmd_oracle(args):
    g = load_graph(args.graph[0])
    if args.query == "longest-cycle":
        length, cyc = brute_longest_cycle(g, _budget(args, 12))
        _emit({"length": length, "cycle": list(cyc) if cyc else None})
        return EXIT_OK
    if not args.path:
        raise UsageError(f"oracle {args.query} needs --path")
    base = _int_list(args.path)
    if args.query == "aligned-tuple":
        if not args.terminals:
            raise UsageError("oracle aligned-tuple needs --terminals")
        x = base[0] if args.x is None else args.x
        witness = find_aligned_tuple(g, base, x, _int_list(args.terminals), _budget(args, 9))
        _emit({"exists": witness is not None,
               "witness": [list(p) for p in witness] if witness else None})
        return EXIT_OK
    _emit({"count": max_aligned_disjoint_paths(g, base, _budget(args, 9))})
    return EXIT_OK


def _parse_params(family, tokens):
    names = FAMILIES[family]
    params = {}
    for i, tok in enumerate(tokens):
        key, sep, val = tok.partition("=")
        if not sep:
            if i >= len(names):
                raise UsageError(f"{family} takes parameters {', '.join(names)}")
            key, val = names[i], tok
        try:
            params[key] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer") from None
    return params


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer") from None


def cmd_gen(args):
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    seed = args.seed if args.seed is not None else default_seed()
    try:
        spec = GenSpec(args.family, _parse_params(args.family, args.params), seed)
        g = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_graph(g)
    if args.out:
        FsPath(args.out).write_text(text)
    _emit({"family": args.family, "params": spec.params, "seed": seed,
           "n": g.n, "m": g.m, "out": args.out,
           "edges": None if args.out else [list(e) for e in g.sorted_edges()]})
    return EXIT_OK


def cmd_verify(args):
    g = load_graph(args.graph[0])
    try:
        cert = json.loads(FsPath(args.certificate).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.certificate}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        _emit({"valid": False, "reason": f"certificate is not JSON: {exc}"})
        return EXIT_FAIL
    if not isinstance(cert, dict):
        _emit({"valid": False, "reason": "certificate is not a JSON object"})
        return EXIT_FAIL
    verdict = verify_certificate(g, cert)
    _emit({"valid": verdict.ok, "reason": verdict.reason})
    return EXIT_OK if verdict else EXIT_FAIL


# ---------------------------------------------------------------------------


def _guarded(fn, ref, *extra):
    try:
        return fn(ref, *extra)
    except ProofViolation as exc:
        return {"graph": ref, "error": str(exc), "proof_violation": True}
    except (GraphError, ContractError, UsageError) as exc:
        return {"graph": ref, "error": str(exc)}


def _fan_out(fn, refs, jobs, *extra):
    if len(refs) == 1:
        return [fn(refs[0], *extra)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_guarded, [fn] * len(refs), refs, *[[e] * len(refs) for e in extra]))
    else:
        results = [_guarded(fn, r, *extra) for r in refs]
    for ref, r in zip(refs, results):
        r.setdefault("graph", ref)
        if r.get("proof_violation"):
            raise ProofViolation(f"{r['graph']}: {r['error']}")
    return results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aligned-cycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def graph_arg(p, many=False):
        p.add_argument("--graph", required=True, nargs="+" if many else 1,
                       help="edge-list file or catalog:NAME")

    p = sub.add_parser("check", help="connectivity report")
    graph_arg(p, many=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("aligned-pair", help="aligned internally disjoint x,z and x,y paths")
    graph_arg(p)
    p.add_argument("--path", required=True, help="base path, e.g. 0,1,2,3")
    p.add_argument("--z", required=True, type=int)
    p.set_defaults(func=cmd_aligned_pair)

    p = sub.add_parser("long-cycle", help="cycle of length >= min(n, 2*delta) with certificate")
    graph_arg(p, many=True)
    p.add_argument("--emit-trace", action="store_true")
    p.add_argument("--dot", metavar="OUT")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_long_cycle)

    p = sub.add_parser("oracle", help="exhaustive small-graph oracles")
    p.add_argument("query", choices=["longest-cycle", "aligned-tuple", "max-aligned"])
    graph_arg(p)
    p.add_argument("--path")
    p.add_argument("--terminals")
    p.add_argument("--x", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-millis", type=int, default=60_000)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--params", nargs="+", default=[], help="values in order, or key=value")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="re-check a long-cycle certificate")
    graph_arg(p)
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProofViolation as exc:
        print(f"internal proof violation: {exc}", file=sys.stderr)
        print(json.dumps([_jsonable(t) for t in exc.trace], indent=1), file=sys.stderr)
        _emit({"error": str(exc), "proof_violation": True})
        return EXIT_PROOF
    except (GraphError, ContractError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": str(exc)})
        return EXIT_FAIL


def _jsonable(obj):
    if isinstance(obj, (dict, list, str, int)):
        return obj
    if hasattr(obj, "as_dict"):
        return obj.as_dict()
    if hasattr(obj, "__dataclass_fields__"):
        return {k: getattr(obj, k) for k in obj.__dataclass_fields__}
    return repr(obj)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
