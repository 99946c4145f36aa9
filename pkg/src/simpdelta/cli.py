"""Batch driver: identity sweeps, operation evaluation, homology tables.

Every run is deterministic: identical arguments produce byte-identical
output.  Exit codes: 0 success, 1 a checked relation failed, 2 bad
configuration.  The environment variable SIMPDELTA_THREADS caps the
worker count requested with --threads.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .homology import associated_complex, normalized_complex
from .models import (
    algebra_model,
    boundary_delta_model,
    delta_model,
    sphere_model,
)
from .operations import delta_report
from .relations import check_relation, relation_names
from .transforms import (
    EMTransform,
    boundary_left,
    boundary_right,
    degen0_left,
    degen0_right,
    diagonal_faces,
    diagonal_identity,
    dump_bidegree,
    dwyer_defect,
    face0_left,
    face0_right,
    higher_shuffle,
    identity_transform,
    shuffle_map,
)


class _ConfigError(Exception):
    pass


def _effective_threads(requested: int) -> int:
    if requested < 1:
        raise _ConfigError("--threads must be >= 1")
    cap = os.environ.get("SIMPDELTA_THREADS")
    if cap is None:
        return requested
    try:
        cap_value = int(cap)
    except ValueError:
        raise _ConfigError(f"SIMPDELTA_THREADS must be an integer, got {cap!r}")
    return max(1, min(requested, cap_value))


def _emit(text: str, output: str | None):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


_FAMILIES = ("simp", "dwyer", "lemma3", "chainmap", "all")


def _family_names(family: str, max_k: int) -> list[str]:
    if family == "simp":
        return ["simp0", "simp1", "simp2", "simp3", "simp4", "simp5", "d0-word"]
    if family == "dwyer":
        return [f"dwyer-{k}" for k in range(max_k + 1)]
    if family == "lemma3":
        return [f"recursion-{k}" for k in range(1, max_k + 1)]
    if family == "chainmap":
        return ["D-chain-map", "D-chain-map-numeric"]
    return relation_names(max_k)


def _cmd_verify(args) -> int:
    if args.max_total < 0:
        raise _ConfigError("--max-total must be >= 0")
    if args.max_k < 0:
        raise _ConfigError("--max-k must be >= 0")
    if args.family in ("dwyer", "lemma3", "all") and 2 * args.max_k > args.max_total:
        raise _ConfigError(
            f"the Dwyer window needs 2*max_k <= max_total "
            f"(got max_k={args.max_k}, max_total={args.max_total})"
        )
    names = _family_names(args.family, args.max_k)
    threads = _effective_threads(args.threads)

    def run(name: str):
        return check_relation(name, args.max_total)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, names))
    else:
        results = [run(name) for name in names]
    passed = all(r.passed for r in results)

    if args.format == "json":
        text = _json_text(
            {
                "family": args.family,
                "max_total": args.max_total,
                "max_k": args.max_k,
                "passed": passed,
                "results": [
                    {
                        "name": r.name,
                        "description": r.description,
                        "cases": r.cases,
                        "passed": r.passed,
                        "witness": r.witness,
                    }
                    for r in results
                ],
            }
        )
    elif args.format == "csv":
        text = _csv_text(
            ["name", "cases", "passed", "witness"],
            [[r.name, r.cases, str(r.passed).lower(), r.witness or ""] for r in results],
        )
    else:
        lines = []
        for r in results:
            if r.passed:
                lines.append(f"PASS {r.name} (cases={r.cases})")
            else:
                lines.append(f"FAIL {r.name}: {r.witness}")
        good = sum(1 for r in results if r.passed)
        lines.append(
            f"{good}/{len(results)} relations passed on window "
            f"max_total={args.max_total}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if passed else 1


def _cmd_delta(args) -> int:
    q, i = args.q, args.i
    if q < 1:
        raise _ConfigError("--q must be >= 1")
    if not 1 <= i <= q:
        raise _ConfigError(f"need 1 <= i <= q, got i={i}, q={q}")
    max_degree = args.max_degree if args.max_degree is not None else q + i + 1
    if max_degree < q + i + 1:
        raise _ConfigError(
            f"--max-degree must be at least q+i+1 = {q + i + 1} "
            "for the homology verdict"
        )
    if args.poly < 2:
        raise _ConfigError("--poly must be >= 2 (the operation squares its input)")
    if args.perturbations < 0:
        raise _ConfigError("--perturbations must be >= 0")
    model = algebra_model(q, max_degree, args.poly)
    report = delta_report(
        model,
        model.fundamental_class(),
        i,
        perturbations=args.perturbations,
        seed=args.seed,
    )
    report["model"] = {"n": q, "max_degree": max_degree, "poly_bound": args.poly}
    if "warning" in report:
        print(f"warning: {report['warning']}", file=sys.stderr)

    if args.format == "csv":
        rows = [[k, json.dumps(report[k], sort_keys=True)] for k in sorted(report)]
        text = _csv_text(["field", "value"], rows)
    elif args.format == "text":
        lines = [f"delta_{i} on the degree-{q} fundamental cycle"]
        lines += [f"  term: {a} (x) {b}" for a, b in report["terms"]]
        lines.append(f"  value: {' + '.join(report['value']) or '0'}")
        for key in (
            "is_cycle",
            "equals_theta",
            "homology_class_nonzero",
            "class_stable_under_boundary_perturbations",
            "warning",
        ):
            if key in report:
                lines.append(f"  {key}: {report[key]}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(report)
    _emit(text, args.output)
    return 0


def _build_model(args):
    if args.n < 0:
        raise _ConfigError("--n must be >= 0")
    if args.max_degree < 0:
        raise _ConfigError("--max-degree must be >= 0")
    if args.model == "delta":
        return delta_model(args.n, args.max_degree)
    if args.model == "boundary":
        return boundary_delta_model(args.n, args.max_degree)
    if args.model == "sphere":
        return sphere_model(args.n, args.max_degree)
    if args.poly < 2:
        raise _ConfigError("--poly must be >= 2")
    return algebra_model(args.n, args.max_degree, args.poly)


def _cmd_homology(args) -> int:
    model = _build_model(args)
    assoc = associated_complex(model)
    norm = normalized_complex(model)
    arows = assoc.betti_rows()
    nrows = norm.betti_rows()
    table = []
    for (q, ad, ar, ab), (_, nd, nr, nb) in zip(arows, nrows):
        agree = str(ab == nb).lower()
        table.append(["associated", q, ad, ar, ab, agree])
        table.append(["normalized", q, nd, nr, nb, agree])

    if args.format == "json":
        text = _json_text(
            {
                "model": args.model,
                "n": args.n,
                "max_degree": args.max_degree,
                "rows": [
                    {
                        "complex": c,
                        "degree": q,
                        "dim": d,
                        "rank_d": r,
                        "betti": b,
                        "agree": agree == "true",
                    }
                    for c, q, d, r, b, agree in table
                ],
            }
        )
    elif args.format == "text":
        lines = [f"{args.model}(n={args.n}) homology, degrees 0..{args.max_degree - 1}"]
        for c, q, d, r, b, agree in table:
            lines.append(
                f"  {c:>10} q={q}: dim={d} rank_d={r} betti={b} agree={agree}"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = _csv_text(
            ["complex", "degree", "dim", "rank_d", "betti", "agree"], table
        )
    _emit(text, args.output)
    return 0


_PLAIN_TRANSFORMS = {
    "shuffle": shuffle_map,
    "diagonal-faces": diagonal_faces,
    "boundary-left": boundary_left,
    "boundary-right": boundary_right,
    "face0-left": face0_left,
    "face0-right": face0_right,
    "degen0-left": degen0_left,
    "degen0-right": degen0_right,
    "identity": identity_transform,
}

_INDEXED_TRANSFORMS = {
    "refinement": higher_shuffle,
    "defect": dwyer_defect,
    "diagonal-identity": diagonal_identity,
}


def _cmd_dump(args) -> int:
    if args.name in _PLAIN_TRANSFORMS:
        transform: EMTransform = _PLAIN_TRANSFORMS[args.name]()
    elif args.name in _INDEXED_TRANSFORMS:
        if args.k is None or args.k < 0:
            raise _ConfigError(f"--name {args.name} needs --k >= 0")
        transform = _INDEXED_TRANSFORMS[args.name](args.k)
    else:
        raise _ConfigError(f"unknown transform {args.name!r}")
    if args.i < 0 or args.j < 0:
        raise _ConfigError("--i and --j must be >= 0")
    _emit(_json_text(dump_bidegree(transform, args.i, args.j, args.reduced)), args.output)
    return 0


def _add_common(sub, formats=("json", "csv", "text"), default="json"):
    sub.add_argument("--format", choices=formats, default=default)
    sub.add_argument("--output", default=None, help="write to a file instead of stdout")
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpdelta",
        description="exact mod-2 simplicial transform and operation calculus",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    verify = subs.add_parser("verify", help="run a family of identity sweeps")
    verify.add_argument("family", choices=_FAMILIES)
    verify.add_argument("--max-total", type=int, default=8)
    verify.add_argument("--max-k", type=int, default=4)
    _add_common(verify, default="text")
    verify.set_defaults(handler=_cmd_verify)

    delta = subs.add_parser("delta", help="evaluate delta_i on a fundamental cycle")
    delta.add_argument("--q", type=int, required=True)
    delta.add_argument("--i", type=int, required=True)
    delta.add_argument("--max-degree", type=int, default=None)
    delta.add_argument("--poly", type=int, default=2)
    delta.add_argument("--perturbations", type=int, default=2)
    _add_common(delta)
    delta.set_defaults(handler=_cmd_delta)

    hom = subs.add_parser("homology", help="Betti tables for both chain complexes")
    hom.add_argument(
        "--model",
        choices=("delta", "boundary", "sphere", "sphere-algebra"),
        default="sphere",
    )
    hom.add_argument("--n", type=int, required=True)
    hom.add_argument("--max-degree", type=int, required=True)
    hom.add_argument("--poly", type=int, default=2)
    _add_common(hom, default="csv")
    hom.set_defaults(handler=_cmd_homology)

    dump = subs.add_parser("dump-transform", help="JSON terms of one bidegree")
    dump.add_argument(
        "--name",
        required=True,
        help="one of: "
        + ", ".join(sorted(list(_PLAIN_TRANSFORMS) + list(_INDEXED_TRANSFORMS))),
    )
    dump.add_argument("--k", type=int, default=None)
    dump.add_argument("--i", type=int, required=True)
    dump.add_argument("--j", type=int, required=True)
    dump.add_argument("--reduced", action="store_true")
    dump.add_argument("--output", default=None)
    dump.set_defaults(handler=_cmd_dump)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
