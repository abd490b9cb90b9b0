"""Command-line surface.

Matrices travel as JSON documents {"modulus": l, "size": n, "entries":
[[...]]} or as plain text (a "modulus size" header line, then n rows).
Verdict subcommands use the exit code for the mathematical answer so that
shell pipelines can branch on it: 0 yes, 10 no, 2 bad input or usage,
3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .algfrontend import SkewAlgebraSpec, classify_pair, grmod_witness_as_lambdas
from .census import (
    REFERENCE_TABLES,
    brute_force_census,
    count_eulerian_classes,
    count_switching_classes,
    enumerate_eulerian_representatives,
)
from .errors import ResourceGuardError
from .eulerian import eulerize, row_sum_profile
from .pointcomplex import (
    complexes_isomorphic,
    dimension,
    facets,
    facets_via_isolations,
    variety_components,
)
from .skewmat import AltMatrix, isolate, isomorphic, make, switch, switching_equivalent

__all__ = ["run", "main"]

EXIT_YES = 0
EXIT_NO = 10
EXIT_USAGE = 2
EXIT_GUARD = 3


def _load_matrix(path: str) -> AltMatrix:
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        missing = {"modulus", "size", "entries"} - set(doc)
        if missing:
            raise ValueError(f"{path}: missing keys {sorted(missing)}")
        return make(int(doc["modulus"]), int(doc["size"]), doc["entries"])
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}: header must be 'modulus size', got {lines[0]!r}")
    modulus, size = int(head[0]), int(head[1])
    if len(lines) != size + 1:
        raise ValueError(f"{path}: expected {size} rows, found {len(lines) - 1}")
    return make(modulus, size, [[int(tok) for tok in ln.split()] for ln in lines[1:]])


def _matrix_doc(m: AltMatrix) -> dict:
    return {"modulus": m.modulus, "size": m.size, "entries": [list(row) for row in m.entries]}


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _cmd_switch(args: argparse.Namespace) -> int:
    _emit(_matrix_doc(switch(_load_matrix(args.file), args.vertex)))
    return EXIT_YES


def _cmd_isolate(args: argparse.Namespace) -> int:
    _emit(_matrix_doc(isolate(_load_matrix(args.file), args.vertex)))
    return EXIT_YES


def _cmd_eulerize(args: argparse.Namespace) -> int:
    m = _load_matrix(args.file)
    result, exponents = eulerize(m)
    doc = _matrix_doc(result)
    if args.explain:
        profile = row_sum_profile(m)
        doc["scale"] = pow(m.size, -1, m.modulus)
        doc["row_sums"] = list(profile.sums)
        doc["buckets"] = {str(k): list(vs) for k, vs in enumerate(profile.buckets) if vs}
        doc["exponents"] = list(exponents)
    _emit(doc)
    return EXIT_YES


def _cmd_equiv(args: argparse.Namespace) -> int:
    witness = switching_equivalent(_load_matrix(args.first), _load_matrix(args.second))
    _emit(
        {
            "equivalent": witness is not None,
            "permutation": list(witness.sigma) if witness else None,
            "switch_exponents": list(witness.exponents) if witness else None,
        }
    )
    return EXIT_YES if witness else EXIT_NO


def _cmd_iso(args: argparse.Namespace) -> int:
    sigma = isomorphic(_load_matrix(args.first), _load_matrix(args.second))
    _emit({"isomorphic": sigma is not None, "permutation": list(sigma) if sigma else None})
    return EXIT_YES if sigma else EXIT_NO


def _dot_digraph(m: AltMatrix) -> str:
    # arcs point toward the vertex seeing the smaller exponent, ties broken upward
    lines = ["digraph skew {"]
    lines += [f"  {v};" for v in range(1, m.size + 1)]
    for i in range(m.size):
        for j in range(i + 1, m.size):
            v = m.entries[i][j]
            if v == 0:
                continue
            w = m.entries[j][i]
            if v <= w:
                lines.append(f'  {i + 1} -> {j + 1} [label="{v}"];')
            else:
                lines.append(f'  {j + 1} -> {i + 1} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines)


def _cmd_complex(args: argparse.Namespace) -> int:
    m = _load_matrix(args.file)
    if args.emit_dot:
        print(_dot_digraph(m))
        return EXIT_YES
    cx = facets_via_isolations(m) if args.via == "isolations" else facets(m)
    doc = {
        "size": cx.n,
        "facets": [list(f) for f in cx.facets],
        "dimension": dimension(cx),
    }
    if args.components:
        doc["components"] = [
            {"support": list(c.support), "projective_dimension": c.projective_dimension}
            for c in variety_components(cx)
        ]
    _emit(doc)
    return EXIT_YES


def _cmd_complex_iso(args: argparse.Namespace) -> int:
    ca = facets(_load_matrix(args.first))
    cb = facets(_load_matrix(args.second))
    sigma = complexes_isomorphic(ca, cb)
    _emit(
        {
            "isomorphic": sigma is not None,
            "vertex_bijection": list(sigma) if sigma else None,
            "facets": [[list(f) for f in ca.facets], [list(f) for f in cb.facets]],
        }
    )
    return EXIT_YES if sigma else EXIT_NO


def _cmd_classify(args: argparse.Namespace) -> int:
    a = SkewAlgebraSpec(_load_matrix(args.first))
    b = SkewAlgebraSpec(_load_matrix(args.second))
    report = classify_pair(a, b)
    witness = report.grmod_equivalent
    doc = {
        "modulus": a.modulus,
        "sizes": [a.size, b.size],
        "algebra_isomorphic": list(report.algebra_isomorphic)
        if report.algebra_isomorphic
        else None,
        "grmod_equivalent": {
            "permutation": list(witness.sigma),
            "switch_exponents": list(witness.exponents),
            "lambda_exponents": [list(p) for p in grmod_witness_as_lambdas(witness, a.modulus)],
        }
        if witness
        else None,
        "complexes_isomorphic": list(report.complexes_isomorphic)
        if report.complexes_isomorphic
        else None,
        "facets": [
            [list(f) for f in report.first_facets.facets],
            [list(f) for f in report.second_facets.facets],
        ],
        "dimensions": [report.first_dimension, report.second_dimension],
        "note": report.note,
    }
    _emit(doc)
    return EXIT_YES if witness else EXIT_NO


def _cmd_count(args: argparse.Namespace) -> int:
    counter = count_switching_classes if args.what == "classes" else count_eulerian_classes
    print(counter(args.modulus, args.n))
    return EXIT_YES


def _cmd_census(args: argparse.Namespace) -> int:
    if args.brute_force:
        result = brute_force_census(args.modulus, args.n)
        s, t = result.switching_classes, result.eulerian_classes
        reps = result.representatives if args.list else None
    else:
        s = count_switching_classes(args.modulus, args.n)
        t = count_eulerian_classes(args.modulus, args.n)
        reps = tuple(enumerate_eulerian_representatives(args.modulus, args.n)) if args.list else None
    _emit(
        {
            "modulus": args.modulus,
            "size": args.n,
            "switching_classes": s,
            "eulerian_classes": t,
            "representatives": [[list(row) for row in r.entries] for r in reps]
            if reps is not None
            else None,
        }
    )
    return EXIT_YES


def _cmd_tables(args: argparse.Namespace) -> int:
    mismatched = False
    for (modulus, what), expected in sorted(REFERENCE_TABLES.items()):
        if args.check:
            counter = count_switching_classes if what == "classes" else count_eulerian_classes
            computed = tuple(counter(modulus, n) for n in range(1, len(expected) + 1))
            status = "ok" if computed == expected else "MISMATCH"
            print(f"{what} modulus={modulus} n=1..{len(expected)}: {status}")
            if computed != expected:
                mismatched = True
                print(f"  expected {list(expected)}")
                print(f"  computed {list(computed)}")
        else:
            print(f"{what} modulus={modulus}: {list(expected)}")
    return 1 if mismatched else EXIT_YES


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewswitch",
        description="Switching calculus for skew exponent matrices over Z/lZ.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("switch", help="switch at one vertex")
    p.add_argument("-v", "--vertex", type=int, required=True, help="1-indexed vertex")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_switch)

    p = sub.add_parser("isolate", help="switch so one vertex's row and column vanish")
    p.add_argument("-v", "--vertex", type=int, required=True, help="1-indexed vertex")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_isolate)

    p = sub.add_parser("eulerize", help="the Eulerian matrix in the switching orbit")
    p.add_argument("file")
    p.add_argument("--explain", action="store_true", help="include scale, buckets, exponents")
    p.set_defaults(handler=_cmd_eulerize)

    p = sub.add_parser("equiv", help="decide switching equivalence (exit 0 yes / 10 no)")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("iso", help="decide matrix isomorphism (exit 0 yes / 10 no)")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_iso)

    p = sub.add_parser("complex", help="point complex of a matrix")
    p.add_argument("file")
    p.add_argument("--via", choices=["direct", "isolations"], default="direct")
    p.add_argument("--components", action="store_true", help="list variety components")
    p.add_argument("--emit-dot", action="store_true", help="print the digraph in dot format")
    p.set_defaults(handler=_cmd_complex)

    p = sub.add_parser("complex-iso", help="compare point complexes (exit 0 yes / 10 no)")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_complex_iso)

    p = sub.add_parser("classify", help="all three classification questions for a pair")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("count", help="exact class count")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=["classes", "eulerian"], default="classes")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("census", help="both class counts, optionally with representatives")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute-force", action="store_true", help="count by full enumeration")
    p.add_argument("--list", action="store_true", help="include class representatives")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("tables", help="print or recheck the published count tables")
    p.add_argument("--check", action="store_true", help="recompute and diff")
    p.set_defaults(handler=_cmd_tables)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, dispatch, and map errors to the exit-code contract."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_YES if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
