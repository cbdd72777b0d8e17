"""Command-line front end.

Commands: check (analyze a tuple file), classify (run a pipeline and gate
its count), normal-form (canonical form of one polytope), cache (stat/gc).
Exit codes: 0 success, 1 reproduction mismatch or counterexample, 2 usage
or parse error, 3 I/O or cache failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache, classify, equiv, mixed, proj, serialize
from .errors import (
    CounterexampleFound,
    CoverageGap,
    DimensionMismatch,
    IoError,
    LowerDimensional,
    MdegError,
    ParseError,
    SeedInvalid,
)

PIPELINES = (
    "exceptional-pairs",
    "multi-exceptional",
    "one-exceptional",
    "spanning",
    "family",
    "cover",
    "dim4-case0",
)


def _emit(payload, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_check(args) -> int:
    tup = serialize.load_tuple(args.input)
    report = mixed.mixed_degree(tup)
    payload = {
        "members": len(tup),
        "ambient_dim": tup.ambient_dim,
        "mixed_degree": report.value,
        "md_witness": list(report.witness) if report.witness else None,
        "common_projection_exact": proj.common_projection(tup, up_to_translates=False)
        is not None,
        "common_projection_translates": proj.common_projection(tup, up_to_translates=True)
        is not None,
    }
    if len(tup) == tup.ambient_dim:
        interior, mv_minus_one, equality, subsums = mixed.soprunov_check(tup)
        payload.update(
            {
                "interior_points_of_sum": interior,
                "mixed_volume": mv_minus_one + 1,
                "bound_equality": equality,
                "all_subsums_hollow": subsums,
            }
        )
    _emit(payload, args.format)
    return 0


def _run_pipeline(args):
    cd = args.cache_dir
    kw = {"cache_dir": cd, "use_cache": not args.no_cache}
    seeds = classify.load_seeds(args.seed_file) if args.seed_file else None
    if args.pipeline == "exceptional-pairs":
        m = classify.exceptional_pairs(seeds=seeds, **kw)
        return {"exceptional-pairs": m.count}, [m]
    if args.pipeline == "multi-exceptional":
        m2, m3 = classify.triples_multi_exceptional(**kw)
        return {"two-exceptional": m2.count, "three-exceptional": m3.count}, [m2, m3]
    if args.pipeline == "one-exceptional":
        m = classify.triples_one_exceptional(**kw)
        return {"one-exceptional": m.count}, [m]
    if args.pipeline == "spanning":
        m = classify.triples_spanning_directions(**kw)
        return {"spanning": m.count}, [m]
    if args.pipeline == "family":
        if args.k is None:
            raise ParseError("--k is required for the family pipeline")
        m = classify.family_subtriples(args.k, **kw)
        key = "family-k0" if args.k == 0 else "family-k"
        return {key: m.count}, [m]
    if args.pipeline == "cover":
        report = classify.maximal_cover_check(**kw)
        return {"cover-classes": report["classes"]}, [report]
    if args.pipeline == "dim4-case0":
        report = classify.dim4_case0_check(**kw)
        return {"dim4-counterexamples": report["counterexamples"]}, [report]
    raise ParseError(f"unknown pipeline {args.pipeline!r}")


def cmd_classify(args) -> int:
    counts, results = _run_pipeline(args)
    if args.output:
        payload = [
            r.to_obj() if isinstance(r, classify.ClassManifest) else r for r in results
        ]
        with open(args.output, "w") as fh:
            json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=1)
    status = 0
    for key, count in counts.items():
        expected = classify.EXPECTED_COUNTS.get(key)
        if key == "cover-classes":
            expected = 252
        if key == "dim4-counterexamples":
            expected = 0
        line = f"{key}: {count}"
        if expected is not None and not args.no_gate:
            if count == expected:
                line += f" (expected {expected}, OK)"
            else:
                line += f" (expected {expected}, MISMATCH)"
                status = 1
        print(line)
    return status


def cmd_normal_form(args) -> int:
    p = serialize.load_polytope(args.input)
    nf = equiv.normal_form(p)
    payload = {
        "vertices": [list(v) for v in p.vertices],
        "canonical_matrix": [list(r) for r in nf.canonical_vertex_matrix],
        "digest": nf.digest,
    }
    _emit(payload, args.format)
    return 0


def cmd_cache(args) -> int:
    if args.action == "stat":
        _emit(cache.stat(args.cache_dir), args.format)
    else:
        removed = cache.gc(args.cache_dir)
        print(f"removed: {removed}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdeg",
        description="Exact lattice-polytope computations: mixed volume, mixed "
        "degree, projections, and the classification pipelines.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="analyze a polytope tuple file")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="run a classification pipeline")
    p.add_argument("--pipeline", required=True, choices=PIPELINES)
    p.add_argument("--k", type=int, default=None, help="family parameter")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--seed-file", default=None)
    p.add_argument("--output", default=None)
    p.add_argument("--no-gate", action="store_true", help="skip the count gate")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("normal-form", help="canonical form of a polytope file")
    p.add_argument("input")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("cache", help="cache maintenance")
    p.add_argument("action", choices=("stat", "gc"))
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, DimensionMismatch, LowerDimensional) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IoError, SeedInvalid) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CounterexampleFound, CoverageGap) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MdegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
