"""Command-line interface: detect, construct, search, and verify.

Every subcommand prints a single JSON run report to stdout and keeps all
diagnostics on stderr, so reports can be piped into other tools.  The
report shape is the same everywhere:

    {
      "command":      the argument vector that was run,
      "input_digest": SHA-256 content hash of the inputs,
      "results":      subcommand-specific payload,
      "pass":         overall boolean verdict,
      "wall_time_s":  wall-clock runtime in seconds
    }

For file inputs the digest hashes the parsed content in canonical form
(so formatting changes do not change the digest); for parameter-only
subcommands it hashes the parameter record.

Exit status: 0 when the verdict is pass, 1 when a check fails (for the
detector: a witness was found), 2 on input errors -- malformed files,
out-of-range parameters, unknown names, missing catalogue data.

Worker counts for the scenario evaluators come from --jobs, falling back
to the RTLAB_JOBS environment variable.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from pathlib import Path

from .constructions import ConstructionId, build_construction, expected_count
from .exactmath import (
    lemma21_bound,
    lemma21_oracle,
    scan_constraint_system,
    thresholds,
)
from .graphs import (
    ColoredDigraph,
    GraphInputError,
    count_color,
    dumps_graph,
    graph_digest,
    load_graph,
    save_graph,
)
from .localbounds import (
    CATALOGUE_IDS,
    dumps_scenarios,
    evaluate_scenarios,
    load_catalogue,
    load_scenarios,
)
from .search import SearchObjective, SearchProblem, solve
from .triangles import TrianglePattern, count_rainbow, find_rainbow, witness_is_valid

DEFAULT_SEED = 987654321

# Pattern(s) each construction family is built to avoid.
CONSTRUCTION_PATTERNS = {
    ConstructionId.BIPARTITE_DOUBLE: (
        TrianglePattern.DIRECTED,
        TrianglePattern.TRANSITIVE,
    ),
    ConstructionId.DIRECTED3: (TrianglePattern.DIRECTED,),
    ConstructionId.TRANSITIVE3: (TrianglePattern.TRANSITIVE,),
    ConstructionId.ORIENTED_CYCLIC: (TrianglePattern.TRANSITIVE,),
    ConstructionId.TWO_COLOR_HEAVY: (TrianglePattern.DIRECTED,),
}


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _params_digest(payload: dict) -> str:
    return _sha256(json.dumps(payload, sort_keys=True))


def _emit(echo, digest, results, passed, started) -> int:
    report = {
        "command": list(echo),
        "input_digest": digest,
        "results": results,
        "pass": bool(passed),
        "wall_time_s": round(time.perf_counter() - started, 3),
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if passed else 1


def _resolve_jobs(jobs: int | None) -> int | None:
    if jobs is None:
        env = os.environ.get("RTLAB_JOBS")
        if env is None:
            return None
        try:
            jobs = int(env)
        except ValueError:
            raise GraphInputError(f"RTLAB_JOBS must be an integer, got {env!r}")
    if jobs < 1:
        raise GraphInputError("worker count must be at least 1")
    return jobs


def _catalogue_scenarios(which: str, directory: str | None):
    """Load a shipped catalogue, or the same file from an override directory."""
    if directory is None:
        return load_catalogue(which)
    path = Path(directory) / f"{which}.json"
    if not path.is_file():
        raise GraphInputError(f"missing catalogue file: {path}")
    return load_scenarios(path)


def _entry_summary(entries) -> dict:
    violated = [e.scenario_id for e in entries if e.status == "violated"]
    infeasible = [e.scenario_id for e in entries if e.status == "infeasible"]
    return {
        "scenarios": len(entries),
        "tight": sum(1 for e in entries if e.status == "tight"),
        "verified": sum(1 for e in entries if e.status == "verified"),
        "violated": violated,
        "infeasible": infeasible,
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_detect(args, echo, started) -> int:
    graph = load_graph(args.graph)
    pattern = TrianglePattern(args.pattern)
    witness = find_rainbow(graph, pattern)
    if witness is not None:
        print(f"rainbow {pattern.value} triangle: {witness.to_dict()}", file=sys.stderr)
    results = {
        "graph": str(args.graph),
        "n": graph.n,
        "colors": graph.c,
        "pattern": pattern.value,
        "pattern_free": witness is None,
        "witness": None if witness is None else witness.to_dict(),
    }
    return _emit(echo, graph_digest(graph), results, witness is None, started)


def cmd_construct(args, echo, started) -> int:
    try:
        cid = ConstructionId(args.id)
    except ValueError:
        names = ", ".join(i.value for i in ConstructionId)
        raise GraphInputError(f"unknown construction id {args.id!r}; valid ids: {names}")
    graph = build_construction(cid, args.n, args.c)
    save_graph(graph, args.out)
    per_color = {str(color): count_color(graph, color) for color in range(1, graph.c + 1)}
    expected = {
        str(color): expected_count(cid, args.n, color, args.c)
        for color in range(1, graph.c + 1)
    }
    agree = per_color == expected
    if not agree:
        print("edge counts disagree with the closed form", file=sys.stderr)
    results = {
        "id": cid.value,
        "n": args.n,
        "colors": graph.c,
        "out": str(args.out),
        "per_color": per_color,
        "expected": expected,
        "counts_agree": agree,
    }
    return _emit(echo, graph_digest(graph), results, agree, started)


def cmd_search(args, echo, started) -> int:
    problem = SearchProblem(
        n=args.n,
        c=args.c,
        pattern=TrianglePattern(args.pattern),
        oriented=args.oriented,
        objective=SearchObjective(args.objective),
    )
    result = solve(problem, budget=args.budget)
    results = {
        "n": args.n,
        "colors": args.c,
        "pattern": args.pattern,
        "oriented": args.oriented,
        "objective": args.objective,
        "value": result.value,
        "nodes": result.nodes,
        "exhaustive": result.exhaustive,
        "witness": None
        if result.witness is None
        else json.loads(dumps_graph(result.witness)),
    }
    if not result.exhaustive:
        print("node budget exhausted; the value is only a lower bound", file=sys.stderr)
    digest = _params_digest(
        {
            "n": args.n,
            "c": args.c,
            "pattern": args.pattern,
            "oriented": args.oriented,
            "objective": args.objective,
            "budget": args.budget,
        }
    )
    return _emit(echo, digest, results, result.exhaustive, started)


def cmd_scenario_run(args, echo, started) -> int:
    scenarios = load_scenarios(args.file)
    entries = evaluate_scenarios(scenarios, jobs=_resolve_jobs(args.jobs))
    summary = _entry_summary(entries)
    for sid in summary["violated"]:
        print(f"bound violated: {sid}", file=sys.stderr)
    results = {
        "file": str(args.file),
        **summary,
        "entries": [e.to_dict() for e in entries],
    }
    digest = _sha256(dumps_scenarios(scenarios))
    return _emit(echo, digest, results, not summary["violated"], started)


def cmd_verify_table(args, echo, started) -> int:
    scenarios = _catalogue_scenarios("table10x10", args.catalogue_dir)
    entries = evaluate_scenarios(scenarios, jobs=_resolve_jobs(args.jobs))
    summary = _entry_summary(entries)
    bad = summary["violated"] + summary["infeasible"]
    by_id = {e.scenario_id: e for e in entries}
    for sid in bad:
        e = by_id[sid]
        print(
            f"{e.status}: {sid} (computed {e.computed_max}, bound {e.bound})",
            file=sys.stderr,
        )
    results = {
        "catalogue": "table10x10",
        **summary,
        "entries": [e.to_dict() for e in entries],
    }
    digest = _sha256(dumps_scenarios(scenarios))
    return _emit(echo, digest, results, not bad, started)


def cmd_lemma21(args, echo, started) -> int:
    maximum = lemma21_oracle(args.a, args.b)
    bound = lemma21_bound(args.a, args.b)
    results = {
        "a": args.a,
        "b": args.b,
        "maximum": maximum,
        "bound": bound,
        "gap": bound - maximum,
        "within_bound": maximum <= bound,
    }
    digest = _params_digest({"a": args.a, "b": args.b})
    return _emit(echo, digest, results, maximum <= bound, started)


def cmd_optscan(args, echo, started) -> int:
    if not 0 < args.step <= 0.25:
        raise GraphInputError("step must lie in (0, 0.25]")
    if args.iters < 0:
        raise GraphInputError("iters must be non-negative")
    scan = scan_constraint_system(grid_step=args.step, polish_iters=args.iters)
    results = {
        "step": args.step,
        "iters": args.iters,
        "grid_points": scan.grid_points,
        "grid_value": scan.grid_value,
        "grid_point": list(scan.grid_point),
        "polished_value": scan.polished_value,
        "polished_point": list(scan.polished_point),
        "exact_slacks_at_optimum": [str(s) for s in scan.exact_slacks_at_optimum],
        "optimum_confirmed": scan.optimum_confirmed,
    }
    digest = _params_digest({"step": args.step, "iters": args.iters})
    return _emit(echo, digest, results, scan.optimum_confirmed, started)


def cmd_thresholds(args, echo, started) -> int:
    table = thresholds()
    rows = [
        {
            "name": entry.name,
            "pattern": entry.pattern,
            "colors": entry.colors,
            "quantity": entry.quantity,
            "coefficient": {
                "exact": str(entry.quad),
                "decimal": entry.quad.decimal(6),
            },
            "linear": str(entry.linear),
            "strict": entry.strict,
            "oriented_only": entry.oriented_only,
            "scales_with_colors": entry.scales_with_colors,
            "note": entry.note,
        }
        for entry in table.values()
    ]
    # Internal consistency: each pair-sum coefficient doubles the matching
    # per-color one, and the weakest coefficient prints as 0.2557.
    identities = []
    for pair_name, per_name in (
        ("directed-pair-3", "directed-per-color-3"),
        ("transitive-pair-3", "transitive-per-color-3"),
        ("undirected-pair-3", "undirected-per-color-3"),
    ):
        identities.append(
            {
                "check": f"{pair_name} = 2 * {per_name}",
                "holds": table[pair_name].quad == table[per_name].quad * 2,
            }
        )
    identities.append(
        {
            "check": "undirected-per-color-3 rounds to 0.2557",
            "holds": table["undirected-per-color-3"].quad.decimal(4) == "0.2557",
        }
    )
    passed = all(i["holds"] for i in identities)
    results = {"entries": rows, "identities": identities}
    return _emit(echo, _params_digest({"entries": sorted(table)}), results, passed, started)


def _random_small_graph(rng: random.Random) -> ColoredDigraph:
    n = rng.randint(3, 5)
    c = 3
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for color in range(1, c + 1):
                if rng.random() < 0.3:
                    edges.append((color, u, v))
    return ColoredDigraph.from_edges(n, c, edges)


def cmd_verify_all(args, echo, started) -> int:
    jobs = _resolve_jobs(args.jobs)
    segments = []
    digest_parts: dict = {"seed": args.seed}

    # 1. every shipped bound catalogue
    for which in CATALOGUE_IDS:
        scenarios = _catalogue_scenarios(which, args.catalogue_dir)
        digest_parts[which] = _sha256(dumps_scenarios(scenarios))
        entries = evaluate_scenarios(scenarios, jobs=jobs)
        summary = _entry_summary(entries)
        bad = summary["violated"] + summary["infeasible"]
        by_id = {e.scenario_id: e for e in entries}
        for sid in bad:
            e = by_id[sid]
            print(
                f"{which}: {e.status} at {sid} "
                f"(computed {e.computed_max}, bound {e.bound})",
                file=sys.stderr,
            )
        segments.append({"name": f"catalogue:{which}", "pass": not bad, **summary})

    # 2. two-set edge bound on the full grid a + b <= 7
    lemma_failures = []
    lemma_cases = 0
    for a in range(8):
        for b in range(8 - a):
            maximum = lemma21_oracle(a, b)
            if maximum > lemma21_bound(a, b):
                lemma_failures.append({"a": a, "b": b, "maximum": maximum})
            lemma_cases += 1
    segments.append(
        {
            "name": "two-set-edge-bound",
            "pass": not lemma_failures,
            "cases": lemma_cases,
            "failures": lemma_failures,
        }
    )

    # 3. constraint-system scan at the default resolution
    scan = scan_constraint_system()
    segments.append(
        {
            "name": "constraint-scan",
            "pass": scan.optimum_confirmed,
            "polished_value": scan.polished_value,
            "polished_point": list(scan.polished_point),
        }
    )

    # 4. construction suite: counts and pattern-freeness for n = 3 .. 30
    construction_failures = []
    construction_cases = 0
    for cid, patterns in CONSTRUCTION_PATTERNS.items():
        for n in range(3, 31):
            graph = build_construction(cid, n)
            for color in range(1, graph.c + 1):
                if count_color(graph, color) != expected_count(cid, n, color):
                    construction_failures.append(f"{cid.value} n={n} color {color} count")
            for pattern in patterns:
                if find_rainbow(graph, pattern) is not None:
                    construction_failures.append(
                        f"{cid.value} n={n} rainbow {pattern.value}"
                    )
            construction_cases += 1
    segments.append(
        {
            "name": "constructions",
            "pass": not construction_failures,
            "cases": construction_cases,
            "failures": construction_failures,
        }
    )

    # 5. seeded detector cross-check on random small graphs
    rng = random.Random(args.seed)
    mismatches = 0
    for _ in range(200):
        graph = _random_small_graph(rng)
        for pattern in TrianglePattern:
            witness = find_rainbow(graph, pattern)
            if (witness is None) != (count_rainbow(graph, pattern) == 0):
                mismatches += 1
            if witness is not None and not witness_is_valid(graph, witness):
                mismatches += 1
    segments.append(
        {
            "name": "detector-sanity",
            "pass": mismatches == 0,
            "graphs": 200,
            "seed": args.seed,
            "mismatches": mismatches,
        }
    )

    passed = all(s["pass"] for s in segments)
    failed = [s["name"] for s in segments if not s["pass"]]
    if failed:
        print("failed segments: " + ", ".join(failed), file=sys.stderr)
    results = {"segments": segments, "failed_segments": failed}
    return _emit(echo, _params_digest(digest_parts), results, passed, started)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_jobs(parser) -> None:
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes for scenario evaluation (default: RTLAB_JOBS or 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    patterns = [t.value for t in TrianglePattern]
    parser = argparse.ArgumentParser(
        prog="rtlab",
        description=(
            "colored-digraph toolbox: rainbow-triangle detection, extremal "
            "constructions, exhaustive search, and bound verification"
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("detect", help="scan a graph file for a rainbow triangle")
    p.add_argument("--graph", required=True, help="path to a graph JSON file")
    p.add_argument("--pattern", required=True, choices=patterns)
    p.set_defaults(handler=cmd_detect)

    p = sub.add_parser("construct", help="write a named construction to a graph file")
    p.add_argument("--id", required=True, help="construction name")
    p.add_argument("--n", required=True, type=int, help="number of vertices")
    p.add_argument(
        "--c",
        type=int,
        default=None,
        help="number of colors, where the family allows a choice",
    )
    p.add_argument("--out", required=True, help="output path for the graph JSON")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("search", help="exhaustive optimum over all colorings at small n")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--c", required=True, type=int)
    p.add_argument("--pattern", required=True, choices=patterns)
    p.add_argument(
        "--objective",
        default=SearchObjective.TOTAL.value,
        choices=[o.value for o in SearchObjective],
    )
    p.add_argument("--oriented", action="store_true", help="forbid two-way pairs within a color")
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="node budget; the search reports a lower bound when it runs out",
    )
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("scenario", help="finite local-bound scenarios")
    ssub = p.add_subparsers(dest="scenario_command", required=True)

    q = ssub.add_parser("run", help="evaluate every scenario in a file against its bound")
    q.add_argument("--file", required=True, help="path to a scenario JSON file")
    _add_jobs(q)
    q.set_defaults(handler=cmd_scenario_run)

    q = ssub.add_parser(
        "verify-table",
        help="recompute the 10x10 class-pair table and compare with the shipped bounds",
    )
    _add_jobs(q)
    q.add_argument(
        "--catalogue-dir",
        default=None,
        help="read catalogue JSON from this directory instead of the packaged data",
    )
    q.set_defaults(handler=cmd_verify_table)

    p = sub.add_parser(
        "lemma21",
        help="two-set triangle-free edge bound checked against exhaustive enumeration",
    )
    p.add_argument("--a", required=True, type=int, help="size of the first set")
    p.add_argument("--b", required=True, type=int, help="size of the second set")
    p.set_defaults(handler=cmd_lemma21)

    p = sub.add_parser(
        "optscan",
        help="grid scan plus polish over the four-variable constraint system",
    )
    p.add_argument("--step", type=float, default=0.002, help="grid resolution")
    p.add_argument("--iters", type=int, default=200, help="polish iterations")
    p.set_defaults(handler=cmd_optscan)

    p = sub.add_parser("thresholds", help="print the edge-count threshold table")
    p.set_defaults(handler=cmd_thresholds)

    p = sub.add_parser(
        "verify-all",
        help="run every shipped check: catalogues, edge-bound grid, scan, constructions, detectors",
    )
    _add_jobs(p)
    p.add_argument(
        "--catalogue-dir",
        default=None,
        help="read catalogue JSON from this directory instead of the packaged data",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for the random detector cross-check",
    )
    p.set_defaults(handler=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    echo = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(echo)
    started = time.perf_counter()
    try:
        return args.handler(args, echo, started)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
