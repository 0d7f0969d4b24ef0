#!/usr/bin/env python3
"""Regenerate the frozen small-graph corpora in fixtures/graphs/.

Every graph on n vertices arises from a graph on n-1 vertices by adding one
vertex with some neighborhood, and every connected graph arises the same
way with a nonempty neighborhood.  Candidates are deduplicated up to
isomorphism using a (degree multiset, adjacency charpoly) fingerprint to
keep the exhaustive isomorphism tests inside small buckets.

Expected class counts, asserted at the end:
  all graphs on 1..6 vertices: 1, 2, 4, 11, 34, 156
  connected graphs on 7 vertices: 853
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cospec import (  # noqa: E402
    Graph,
    MatrixKind,
    build_matrix,
    charpoly,
    degrees,
    is_connected,
    is_isomorphic,
    to_graph6,
)

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
CONNECTED_7 = 853


def fingerprint(g: Graph):
    return (
        tuple(sorted(degrees(g))),
        charpoly(build_matrix(g, MatrixKind.ADJACENCY)).coeffs,
    )


def dedup_insert(buckets: dict, g: Graph) -> bool:
    key = fingerprint(g)
    group = buckets.setdefault(key, [])
    for other in group:
        if is_isomorphic(g, other):
            return False
    group.append(g)
    return True


def extend_all(previous: list[Graph], n: int) -> list[Graph]:
    buckets: dict = {}
    out: list[Graph] = []
    for g in previous:
        for size in range(n):
            for nbrs in itertools.combinations(range(n - 1), size):
                cand = Graph(n, g.edges | {(v, n - 1) for v in nbrs})
                if dedup_insert(buckets, cand):
                    out.append(cand)
    return out


def extend_connected(previous: list[Graph], n: int) -> list[Graph]:
    buckets: dict = {}
    out: list[Graph] = []
    for g in previous:
        for size in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), size):
                cand = Graph(n, g.edges | {(v, n - 1) for v in nbrs})
                if not is_connected(cand):
                    continue
                if dedup_insert(buckets, cand):
                    out.append(cand)
    return out


def main() -> None:
    outdir = Path(__file__).resolve().parent.parent / "fixtures" / "graphs"
    outdir.mkdir(parents=True, exist_ok=True)
    layers = {1: [Graph(1, frozenset())]}
    for n in range(2, 7):
        layers[n] = extend_all(layers[n - 1], n)
    for n in range(1, 7):
        got = len(layers[n])
        assert got == ALL_COUNTS[n], f"n={n}: expected {ALL_COUNTS[n]} graphs, got {got}"
        lines = sorted(to_graph6(g) for g in layers[n])
        (outdir / f"all_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"all_n{n}.g6: {got} graphs")
    connected7 = extend_connected(layers[6], 7)
    got = len(connected7)
    assert got == CONNECTED_7, f"n=7 connected: expected {CONNECTED_7}, got {got}"
    lines = sorted(to_graph6(g) for g in connected7)
    (outdir / "connected_n7.g6").write_text("\n".join(lines) + "\n")
    print(f"connected_n7.g6: {got} graphs")


if __name__ == "__main__":
    main()
