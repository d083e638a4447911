"""sigmagraph command line: analyze, verify, graph, cache.

Exit codes: 0 every prediction agrees (or prediction only), 2 some prediction
disagrees with brute force, 1 operational error (bad input, bounds, I/O).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .cache import cache_clear, cache_info, cached_pair_rows, resolve_cache_dir
from .classifier import CASE_TAGS, ISOLATION_TAGS, classify
from .families import build_from_descriptor, corpus_manifest
from .graphs import (
    components_and_diameters,
    intersection_graph,
    isolated_vertices,
    sigma_graph,
    to_dot,
)
from .groups import (
    DEFAULT_LIMITS,
    BoundExceeded,
    GroupError,
    Limits,
    NotTwoGeneratedError,
    derived_subgroup,
    frattini,
    is_cyclic,
    is_nilpotent,
    is_p_group,
    is_soluble,
    is_two_generated,
    subgroup_table,
)

log = logging.getLogger("sigmagraph")

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2
BRUTE_THRESHOLD = 2000
SCHEMA = "sigmagraph.report/1"


@dataclass(frozen=True)
class RunConfig:
    brute: bool | None = None  # None: automatic, on up to BRUTE_THRESHOLD
    workers: int = 1
    cache_dir: Path | None = None
    limits: Limits = DEFAULT_LIMITS


class DescriptorError(GroupError):
    pass


def load_descriptors(arg: str) -> list[dict]:
    """A JSON file (one descriptor or a list), the word 'builtin', or a builtin group name."""
    if arg == "builtin":
        return corpus_manifest()
    path = Path(arg)
    if path.exists():
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DescriptorError(f"cannot parse descriptor file {path}: {exc}") from exc
        docs = doc if isinstance(doc, list) else [doc]
        for d in docs:
            if not isinstance(d, dict) or "construction" not in d:
                raise DescriptorError(f"{path}: every descriptor needs a 'construction' object")
        return docs
    for d in corpus_manifest():
        if d["name"] == arg:
            return [d]
    raise DescriptorError(f"{arg!r} is neither a file nor a builtin group name")


def _brute_report(G, cfg: RunConfig) -> tuple[dict, float]:
    t0 = time.perf_counter()
    _, hit = cached_pair_rows(G, cfg.cache_dir, cfg.workers)
    g = sigma_graph(G)
    cd = components_and_diameters(g)
    out = {
        "vertices": g.n,
        "edges": g.edge_count,
        "components": cd.count,
        "component_sizes": list(cd.sizes),
        "component_diameters": list(cd.diameters),
        "diameter": cd.diameter_text() if not cd.connected else cd.diameter,
        "connected": cd.connected,
        "isolated_vertices": len(isolated_vertices(g)),
        "cache_hit": hit,
    }
    return out, time.perf_counter() - t0


def agreement(verdict, brute: dict) -> tuple[bool, list[str]]:
    problems = []
    if verdict.predicted_connected is not None and verdict.predicted_connected != brute["connected"]:
        problems.append("connectivity")
    if verdict.predicted_isolated != (brute["isolated_vertices"] > 0):
        problems.append("isolated vertices")
    bound = verdict.predicted_diameter_bound
    if brute["connected"] and bound is not None:
        d = brute["diameter"]
        if d > bound or (verdict.diameter_exact and d != bound):
            problems.append("diameter")
    return not problems, problems


def analyze(desc: dict, cfg: RunConfig = RunConfig()) -> dict:
    """Full report for one descriptor.  Raises GroupError on bad or out-of-scope input."""
    timing = {}
    t0 = time.perf_counter()
    G = build_from_descriptor(desc, cfg.limits)
    timing["build"] = time.perf_counter() - t0
    name = desc.get("name", G.provenance)

    t0 = time.perf_counter()
    two_gen = is_two_generated(G)
    p = is_p_group(G)
    flags = {
        "cyclic": is_cyclic(G),
        "p_group": p is not None,
        "p": p,
        "nilpotent": is_nilpotent(G),
        "soluble": is_soluble(G),
        "derived_subgroup_nilpotent": is_nilpotent(subgroup_table(derived_subgroup(G))[0]),
        "two_generated": two_gen,
    }
    try:
        frat = frattini(G, cfg.limits).order
    except BoundExceeded:
        frat = None
    timing["structure"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    verdict = classify(G, cfg.limits)
    timing["classify"] = time.perf_counter() - t0

    report = {
        "schema": SCHEMA,
        "group": {"name": name, "order": G.order, "hash": G.content_hash()},
        "flags": flags,
        "frattini_order": frat,
        "verdict": verdict.to_json(),
        "brute_force": None,
    }
    run_brute = cfg.brute if cfg.brute is not None else G.order <= BRUTE_THRESHOLD
    if verdict.inconclusive:
        run_brute = True
    if run_brute:
        brute, timing["brute_force"] = _brute_report(G, cfg)
        ok, problems = agreement(verdict, brute)
        report["brute_force"] = brute
        report["agreement"] = ok
        report["disagreements"] = problems
    report["timing"] = {k: round(v, 6) for k, v in timing.items()}
    return report


def report_exit_code(report: dict) -> int:
    return EXIT_DISAGREE if report.get("agreement") is False else EXIT_OK


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args) -> RunConfig:
    limits = DEFAULT_LIMITS
    if getattr(args, "max_lattice_order", None):
        limits = replace(limits, max_lattice_order=args.max_lattice_order)
    return RunConfig(brute=args.brute, workers=args.workers,
                     cache_dir=resolve_cache_dir(args.cache_dir), limits=limits)


def cmd_analyze(args) -> int:
    docs = load_descriptors(args.group)
    if len(docs) != 1:
        raise DescriptorError("analyze takes exactly one descriptor")
    report = analyze(docs[0], _config(args))
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return report_exit_code(report)


def verify_one(desc: dict, cfg: RunConfig) -> dict:
    """One summary row; never raises for per-group problems."""
    name = desc.get("name", "?")
    expect_2gen = desc.get("two_generated", True)
    try:
        report = analyze(desc, cfg)
    except GroupError as exc:
        if isinstance(exc, NotTwoGeneratedError) and not expect_2gen:
            return {"name": name, "status": "pass", "detail": "rejected as not 2-generated"}
        return {"name": name, "status": "error", "detail": f"{type(exc).__name__}: {exc}"}
    except (ValueError, KeyError, TypeError) as exc:
        return {"name": name, "status": "error", "detail": f"{type(exc).__name__}: {exc}"}
    v = report["verdict"]
    row = {"name": name, "order": report["group"]["order"], "case": v["case"],
           "isolated_reason": v["isolated_reason"]}
    if not expect_2gen:
        return {**row, "status": "error", "detail": "expected rejection as not 2-generated"}
    if "agreement" not in report:
        return {**row, "status": "pass", "detail": "prediction only"}
    bf = report["brute_force"]
    row["diameter"] = bf["diameter"]
    if report["agreement"]:
        return {**row, "status": "pass", "detail": ""}
    return {**row, "status": "disagree", "detail": ", ".join(report["disagreements"])}


def _descriptor_order(desc: dict) -> int | None:
    return desc.get("order")


def run_verify(docs: list[dict], cfg: RunConfig, max_order: int | None, workers: int = 1) -> dict:
    if max_order is not None:
        docs = [d for d in docs if (_descriptor_order(d) or 0) <= max_order]
    inner = replace(cfg, workers=1)
    if workers > 1 and len(docs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(verify_one, docs, [inner] * len(docs)))
    else:
        rows = [verify_one(d, inner) for d in docs]
    counts = {s: sum(r["status"] == s for r in rows) for s in ("pass", "disagree", "error")}
    cases = sorted({r["case"] for r in rows if "case" in r})
    reasons = sorted({r["isolated_reason"] for r in rows if "isolated_reason" in r})
    return {
        "rows": rows,
        "counts": counts,
        "cases_seen": cases,
        "reasons_seen": reasons,
        "cases_missing": [c for c in CASE_TAGS if c not in cases and c != "Inconclusive"],
        "reasons_missing": [r for r in ISOLATION_TAGS if r not in reasons],
    }


def verify_exit_code(summary: dict) -> int:
    if summary["counts"]["disagree"]:
        return EXIT_DISAGREE
    if summary["counts"]["error"]:
        return EXIT_ERROR
    return EXIT_OK


def cmd_verify(args) -> int:
    docs = load_descriptors(args.selector)
    summary = run_verify(docs, _config(args), args.max_order, args.workers)
    lines = []
    for r in summary["rows"]:
        extra = f" case={r['case']}" if "case" in r else ""
        if "diameter" in r:
            extra += f" diam={r['diameter']}"
        lines.append(f"{r['status'].upper():8s} {r['name']}{extra} {r['detail']}".rstrip())
    c = summary["counts"]
    n = len(summary["rows"])
    lines.append(f"{n} groups: {c['pass']} pass, {c['disagree']} disagree, {c['error']} error")
    if n:
        lines.append("cases seen: " + " ".join(summary["cases_seen"]))
        lines.append("isolation reasons seen: " + " ".join(summary["reasons_seen"]))
    _emit("\n".join(lines) + "\n", args.out)
    return verify_exit_code(summary)


def cmd_graph(args) -> int:
    docs = load_descriptors(args.group)
    if len(docs) != 1:
        raise DescriptorError("graph takes exactly one descriptor")
    desc = docs[0]
    cfg = _config(args)
    G = build_from_descriptor(desc, cfg.limits)
    name = desc.get("name", G.provenance)
    outputs = []
    if args.intersection:
        outputs.append(("intersection", to_dot(intersection_graph(G, cfg.limits), f"I({name})")))
    else:
        cached_pair_rows(G, cfg.cache_dir, cfg.workers)
        outputs.append(("sigma", to_dot(sigma_graph(G), f"Sigma({name})")))
    if args.dot:
        outdir = Path(args.dot)
        outdir.mkdir(parents=True, exist_ok=True)
        for kind, text in outputs:
            path = outdir / f"{name}.{kind}.dot"
            path.write_text(text)
            print(path)
    else:
        for _, text in outputs:
            sys.stdout.write(text)
    return EXIT_OK


def cmd_cache(args) -> int:
    d = resolve_cache_dir(args.cache_dir)
    if d is None:
        raise DescriptorError("no cache directory: pass --cache-dir or set SIGMAGRAPH_CACHE_DIR")
    if args.action == "info":
        print(json.dumps(cache_info(d), sort_keys=True))
    else:
        print(f"removed {cache_clear(d)} entries from {d}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sigmagraph", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=None, help="cache directory (else $SIGMAGRAPH_CACHE_DIR)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--max-lattice-order", type=int, default=None,
                        help="largest group whose subgroup lattice may be enumerated")
    brute = common.add_mutually_exclusive_group()
    brute.add_argument("--brute", dest="brute", action="store_true", default=None,
                       help="always build Sigma(G) and compare")
    brute.add_argument("--no-brute", dest="brute", action="store_false",
                       help="prediction only (unless the classifier is inconclusive)")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="report on one group")
    a.add_argument("group", help="descriptor JSON file or builtin group name")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="check predictions over a corpus")
    v.add_argument("selector", nargs="?", default="builtin", help="'builtin' or a JSON file of descriptors")
    v.add_argument("--max-order", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("graph", parents=[common], help="DOT export of Sigma(G) or I(G)")
    g.add_argument("group")
    g.add_argument("--dot", default=None, metavar="DIR", help="write <name>.<graph>.dot files into DIR")
    g.add_argument("--intersection", action="store_true", help="export I(G) instead of Sigma(G)")
    g.set_defaults(func=cmd_graph)

    c = sub.add_parser("cache", help="inspect or clear the cache")
    c.add_argument("action", choices=["info", "clear"])
    c.add_argument("--cache-dir", default=None)
    c.set_defaults(func=cmd_cache)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
