"""Command-line interface.

Subcommands: charpoly, verify, construct, find-cousins, census.
Exit codes: 0 success (and all-cospectral for verify), 1 a verification
returned a negative answer, 2 input error, 3 precondition or size guard.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .construct import (
    SwapPlan,
    check_hypotheses,
    parse_plan,
    swap_construct,
    verify_similarity,
)
from .cousins import (
    FLAG_NAMES,
    canonical_swap_order,
    enumerate_cousin_pairs,
)
from .exact import BiPoly, UniPoly
from .graphs import (
    Graph,
    PreconditionError,
    VertexMap,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .spectra import (
    MatrixKind,
    cospectral,
    generalized_charpoly,
    normalized_charpoly,
    _kind_charpoly,
)

KIND_BY_NAME = {k.value: k for k in MatrixKind}


def _read_source(value: Optional[str]) -> str:
    """Stdin for None or '-', file content for an existing path, otherwise
    the argument itself as graph text."""
    if value is None or value == "-":
        return sys.stdin.read()
    p = Path(value)
    if p.exists():
        return p.read_text()
    return value


def _parse_graph_text(text: str) -> Graph:
    """Edge list when the input starts with an integer, graph6 otherwise."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        first = line.split()[0]
        if first.lstrip("-").isdigit():
            return parse_edge_list(text)
        return parse_graph6(line)
    raise ValueError("empty graph input")


def _parse_kind(name: str) -> MatrixKind:
    if name not in KIND_BY_NAME:
        raise ValueError(
            f"unknown matrix kind {name!r}; expected one of {', '.join(sorted(KIND_BY_NAME))}"
        )
    return KIND_BY_NAME[name]


def _parse_kinds(spec: str) -> list[MatrixKind]:
    return [_parse_kind(tok.strip()) for tok in spec.split(",") if tok.strip()]


def _rational_json(x) -> object:
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def _format_coeffs_desc(p: UniPoly) -> str:
    if p.is_zero:
        return "0"
    return " ".join(str(c) for c in reversed(p.coeffs))


def _unipoly_key(p: UniPoly) -> str:
    return _format_coeffs_desc(p)


def _bipoly_key(p: BiPoly) -> str:
    terms = []
    for i, row in enumerate(p.grid):
        for j, c in enumerate(row):
            if c:
                terms.append(f"{i},{j}:{c}")
    return ";".join(terms) if terms else "0"


def _graph_poly(g: Graph, kind: MatrixKind):
    if kind is MatrixKind.GENERALIZED:
        return generalized_charpoly(g)
    if kind is MatrixKind.NORMALIZED_LAPLACIAN:
        return normalized_charpoly(g)
    return _kind_charpoly(g, kind)


def cmd_charpoly(args: argparse.Namespace) -> int:
    g = _parse_graph_text(_read_source(args.input))
    kind = _parse_kind(args.matrix)
    poly = _graph_poly(g, kind)
    if isinstance(poly, BiPoly):
        if args.format == "json":
            terms = [
                [i, j, _rational_json(c)]
                for i, row in enumerate(poly.grid)
                for j, c in enumerate(row)
                if c
            ]
            print(json.dumps({"kind": kind.value, "terms": terms}))
        else:
            for i, row in enumerate(poly.grid):
                for j, c in enumerate(row):
                    if c:
                        print(f"{i} {j} {c}")
        return 0
    if args.format == "json":
        coeffs = [_rational_json(c) for c in reversed(poly.coeffs)]
        print(json.dumps({"kind": kind.value, "coefficients": coeffs}))
    else:
        print(_format_coeffs_desc(poly))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g1 = _parse_graph_text(_read_source(args.graph1))
    g2 = _parse_graph_text(_read_source(args.graph2))
    kinds = _parse_kinds(args.matrix)
    if not kinds:
        raise ValueError("no matrix kinds given")
    all_cospectral = True
    for kind in kinds:
        same = cospectral(g1, g2, kind)
        print(f"{kind.value}: {'cospectral' if same else 'different'}")
        all_cospectral = all_cospectral and same
    verified = True
    if args.similarity is not None:
        ordering = tuple(int(tok) for tok in args.similarity.split(",") if tok.strip())
        verified = all(verify_similarity(g1, g2, ordering, kind) for kind in kinds)
        print(f"similarity: {'verified' if verified else 'failed'}")
    return 0 if all_cospectral and verified else 1


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "g6":
        print(to_graph6(g))
    else:
        print(g.n)
        for u, v in sorted(g.edges):
            print(f"{u} {v}")


def cmd_construct(args: argparse.Namespace) -> int:
    plan = parse_plan(_read_source(args.plan))
    g1, g2 = swap_construct(plan)
    _emit_graph(g1, args.emit)
    if args.emit == "edgelist":
        print()
    _emit_graph(g2, args.emit)
    if not args.check:
        return 0
    report = check_hypotheses(plan, g1)
    names = " ".join(k.value for k in report.licensed)
    print(f"licensed: {names if names else '(none)'}")
    ordering = canonical_swap_order(plan.v1, plan.v2, plan.pi_map())
    ok = True
    for kind in report.licensed:
        same = cospectral(g1, g2, kind)
        sim = verify_similarity(g1, g2, ordering, kind)
        print(
            f"{kind.value}: {'cospectral' if same else 'different'} "
            f"similarity={'verified' if sim else 'failed'}"
        )
        ok = ok and same and sim
    return 0 if ok else 1


def cmd_find_cousins(args: argparse.Namespace) -> int:
    g = _parse_graph_text(_read_source(args.input))
    require = args.require.replace("-", "_")
    if require not in FLAG_NAMES:
        raise ValueError(
            f"unknown requirement {args.require!r}; expected one of "
            + ", ".join(name.replace("_", "-") for name in FLAG_NAMES)
        )
    pairs = enumerate_cousin_pairs(g, args.m, require)

    def flag(x) -> str:
        if x is None:
            return "n/a"
        return "yes" if x else "no"

    for v1, v2, c in pairs:
        print(
            f"V1={','.join(map(str, v1))} V2={','.join(map(str, v2))} "
            f"relaxed={flag(c.relaxed)} cousins={flag(c.cousins)} "
            f"co_degree={flag(c.co_degree)} co_transmission={flag(c.co_transmission)}"
        )
    return 0


@dataclass(frozen=True)
class CensusRecord:
    class_id: int
    kind: MatrixKind
    charpoly_key: str
    members: tuple[str, ...]
    explained_by_swap: Optional[bool]


def _strip_intra(g: Graph, v1: Sequence[int], v2: Sequence[int]) -> tuple[frozenset, frozenset]:
    s1, s2 = set(v1), set(v2)
    intra = frozenset(
        e for e in g.edges if (e[0] in s1 and e[1] in s1) or (e[0] in s2 and e[1] in s2)
    )
    return g.edges - intra, intra


def _explain_pair(ga: Graph, gb: Graph, kind: MatrixKind, max_m: int = 3) -> bool:
    """Search for a swap-construction certificate turning ga into gb.

    False means no certificate was found within the m bound, not that none
    exists.
    """
    n = ga.n
    for m in range(1, max_m + 1):
        if 2 * m > n:
            break
        for v1 in itertools.combinations(range(n), m):
            rest = [v for v in range(n) if v not in v1]
            for v2 in itertools.combinations(rest, m):
                if v2 < v1:
                    continue
                base_a, intra_a = _strip_intra(ga, v1, v2)
                base_b, intra_b = _strip_intra(gb, v1, v2)
                if base_a != base_b or len(intra_a) != len(intra_b):
                    continue
                base = Graph(n, base_a)
                union = set(v1) | set(v2)
                cross = {e for e in base_a if e[0] in union and e[1] in union}
                for perm in itertools.permutations(v2):
                    pi = dict(zip(v1, perm))
                    pi.update({w: u for u, w in pi.items()})
                    valid = True
                    for x, y in cross:
                        a, b = pi[x], pi[y]
                        if ((a, b) if a < b else (b, a)) not in cross:
                            valid = False
                            break
                    if not valid:
                        continue
                    image = set()
                    for x, y in intra_a:
                        a, b = pi[x], pi[y]
                        image.add((a, b) if a < b else (b, a))
                    if image != intra_b:
                        continue
                    pos1 = {v: i for i, v in enumerate(v1)}
                    pos2 = {v: i for i, v in enumerate(v2)}
                    h1 = Graph(
                        m,
                        frozenset(
                            tuple(sorted((pos1[x], pos1[y])))
                            for x, y in intra_a
                            if x in pos1 and y in pos1
                        ),
                    )
                    h2 = Graph(
                        m,
                        frozenset(
                            tuple(sorted((pos2[x], pos2[y])))
                            for x, y in intra_a
                            if x in pos2 and y in pos2
                        ),
                    )
                    plan = SwapPlan(
                        base=base,
                        v1=v1,
                        v2=v2,
                        pi=tuple((x, pi[x]) for x in v1),
                        h1=h1,
                        h2=h2,
                        phi1=VertexMap(v1),
                        phi2=VertexMap(v2),
                    )
                    g1c, g2c = swap_construct(plan)
                    assert g1c == ga and g2c == gb
                    if kind in check_hypotheses(plan, ga).licensed:
                        return True
    return False


def cmd_census(args: argparse.Namespace) -> int:
    kind = _parse_kind(args.matrix)
    text = _read_source(args.input)
    classes: dict[str, list[str]] = {}
    parse_errors = 0
    skipped_oversize = 0
    skipped_undefined = 0
    total = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        total += 1
        try:
            g = parse_graph6(line)
        except ValueError:
            parse_errors += 1
            continue
        if g.n > args.max_n:
            skipped_oversize += 1
            continue
        try:
            key = (
                _bipoly_key(_graph_poly(g, kind))
                if kind is MatrixKind.GENERALIZED
                else _unipoly_key(_graph_poly(g, kind))
            )
        except PreconditionError:
            # disconnected graph under a distance kind, or an isolated
            # vertex under the normalized Laplacian
            skipped_undefined += 1
            continue
        classes.setdefault(key, []).append(to_graph6(g))

    records: list[CensusRecord] = []
    for class_id, key in enumerate(sorted(classes)):
        members = tuple(sorted(classes[key]))
        if len(members) < 2 and not args.all:
            continue
        explained: Optional[bool] = None
        if args.explain and len(members) >= 2:
            ga, gb = parse_graph6(members[0]), parse_graph6(members[1])
            if ga.n <= 12:
                explained = _explain_pair(ga, gb, kind, max_m=args.m)
        records.append(
            CensusRecord(
                class_id=class_id,
                kind=kind,
                charpoly_key=key,
                members=members,
                explained_by_swap=explained,
            )
        )

    nontrivial = sum(1 for mem in classes.values() if len(mem) >= 2)
    summary = {
        "graphs": total,
        "classes": len(classes),
        "nontrivial_classes": nontrivial,
        "parse_errors": parse_errors,
        "skipped_oversize": skipped_oversize,
        "skipped_undefined": skipped_undefined,
    }
    if args.json:
        payload = {
            "kind": kind.value,
            "records": [
                {
                    "class_id": r.class_id,
                    "kind": r.kind.value,
                    "charpoly_key": r.charpoly_key,
                    "members": list(r.members),
                    **(
                        {"explained_by_swap": r.explained_by_swap}
                        if r.explained_by_swap is not None
                        else {}
                    ),
                }
                for r in records
            ],
            "summary": summary,
        }
        print(json.dumps(payload))
    else:
        for r in records:
            extra = ""
            if r.explained_by_swap is not None:
                extra = f" explained_by_swap={'yes' if r.explained_by_swap else 'no'}"
            print(f"class {r.class_id}: [{r.charpoly_key}] members: {' '.join(r.members)}{extra}")
        print(
            "summary: "
            + " ".join(f"{k}={v}" for k, v in summary.items())
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cospec",
        description="Construct and verify cospectral graph pairs by cousin edge swaps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomial of one graph")
    p.add_argument("input", nargs="?", help="path, '-' for stdin, or literal graph text")
    p.add_argument("--matrix", default="adjacency", help="matrix kind")
    p.add_argument("--format", choices=("coeffs", "json"), default="coeffs")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="compare two graphs for exact cospectrality")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--matrix", required=True, help="comma-separated matrix kinds")
    p.add_argument(
        "--similarity",
        metavar="ORDER",
        help="comma-separated swap-order vertex ids; checks explicit conjugation",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="run a swap plan and emit both graphs")
    p.add_argument("plan", nargs="?", help="plan file, '-' for stdin")
    p.add_argument("--emit", choices=("g6", "edgelist"), default="g6")
    p.add_argument("--check", action="store_true", help="report licensed kinds and verify them")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("find-cousins", help="enumerate cousin set pairs of one graph")
    p.add_argument("input", nargs="?", help="path, '-' for stdin, or literal graph text")
    p.add_argument("--m", type=int, required=True, help="set size")
    p.add_argument(
        "--require",
        default="relaxed",
        help="flag the pairs must satisfy: relaxed, cousins, co-degree, co-transmission",
    )
    p.set_defaults(func=cmd_find_cousins)

    p = sub.add_parser("census", help="group a graph6 collection into cospectral classes")
    p.add_argument("input", nargs="?", help="graph6 lines; path or stdin")
    p.add_argument("--matrix", default="adjacency", help="matrix kind")
    p.add_argument("--max-n", type=int, default=10, dest="max_n")
    p.add_argument("--m", type=int, default=3, choices=(1, 2, 3), help="set-size bound for --explain")
    p.add_argument("--all", action="store_true", help="include singleton classes")
    p.add_argument(
        "--explain",
        action="store_true",
        help="search for a swap certificate for the first two members of each class",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
