"""Cousin classification of vertex-set pairs and swap involutions.

A pair of disjoint equal-size vertex sets can satisfy four nested
conditions; the stronger distance-based ones are only evaluable on
connected graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .graphs import (
    Graph,
    PreconditionError,
    VertexMap,
    adjacency,
    all_pairs_distances,
)

FLAG_NAMES = ("relaxed", "cousins", "co_degree", "co_transmission")


@dataclass(frozen=True)
class CousinClassification:
    """Flags for one pair of swap sets.

    The flags nest: co_degree refines relaxed and co_transmission refines
    cousins, so neither refinement can hold without its base condition.
    cousins and co_transmission are None when the graph is disconnected.
    witnesses carries one flag-prefixed line for every flag that is False
    or not evaluable; notes carries annotations that are not witnesses.
    """

    m: int
    relaxed: bool
    cousins: Optional[bool]
    co_degree: bool
    co_transmission: Optional[bool]
    witnesses: tuple[str, ...]
    notes: tuple[str, ...]


def _check_sets(g: Graph, set1: Sequence[int], set2: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    v1, v2 = tuple(set1), tuple(set2)
    for v in itertools.chain(v1, v2):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} is outside 0..{g.n - 1}")
    if len(set(v1)) != len(v1) or len(set(v2)) != len(v2):
        raise ValueError("swap sets may not repeat vertices")
    if set(v1) & set(v2):
        raise ValueError(f"swap sets overlap: {sorted(set(v1) & set(v2))}")
    if len(v1) != len(v2):
        raise ValueError(f"swap sets differ in size: {len(v1)} vs {len(v2)}")
    if not v1:
        raise ValueError("swap sets may not be empty")
    return v1, v2


def classify_pair(g: Graph, set1: Sequence[int], set2: Sequence[int]) -> CousinClassification:
    v1, v2 = _check_sets(g, set1, set2)
    m = len(v1)
    union = frozenset(v1) | frozenset(v2)
    outside = tuple(v for v in range(g.n) if v not in union)
    adj = adjacency(g)
    witnesses: list[str] = []
    notes: list[str] = []

    relaxed = True
    for group in (v1, v2):
        anchor = group[0]
        for u in group[1:]:
            diff = (adj[anchor] ^ adj[u]) - union
            if diff:
                relaxed = False
                v = min(diff)
                witnesses.append(
                    f"relaxed: vertices {anchor} and {u} disagree in adjacency at {v}"
                )

    co_degree = relaxed
    if not relaxed:
        witnesses.append("co_degree: not a pair of relaxed cousins")
    else:
        counts = [len(adj[u] - frozenset(v2)) for u in v1] + [
            len(adj[w] - frozenset(v1)) for w in v2
        ]
        if len(set(counts)) > 1:
            co_degree = False
            witnesses.append(
                f"co_degree: outside-degree counts differ across the sets: "
                f"{counts[:m]} vs {counts[m:]}"
            )

    table = all_pairs_distances(g)
    if not table.connected:
        cousins: Optional[bool] = None
        co_transmission: Optional[bool] = None
        witnesses.append("cousins: not evaluable on a disconnected graph")
        witnesses.append("co_transmission: not evaluable on a disconnected graph")
    else:
        cousins = True
        for group in (v1, v2):
            anchor = group[0]
            for u in group[1:]:
                for v in outside:
                    if table.rows[anchor][v] != table.rows[u][v]:
                        cousins = False
                        witnesses.append(
                            f"cousins: vertices {anchor} and {u} disagree in distance at {v}"
                        )
                        break
        if not cousins:
            co_transmission = False
            witnesses.append("co_transmission: not a pair of cousins")
        else:
            sums = [sum(table.rows[x][v] for v in outside) for x in v1 + v2]
            co_transmission = len(set(sums)) <= 1
            if not co_transmission:
                witnesses.append(
                    f"co_transmission: outside-distance sums differ: {sums[:m]} vs {sums[m:]}"
                )

    if relaxed and not any(u in adj[w] for u in v1 for w in v2):
        notes.append("twin sets: no edges between the sets, so both are sets of twins")

    return CousinClassification(
        m=m,
        relaxed=relaxed,
        cousins=cousins,
        co_degree=co_degree,
        co_transmission=co_transmission,
        witnesses=tuple(witnesses),
        notes=tuple(notes),
    )


def enumerate_cousin_pairs(
    g: Graph, m: int, require: str = "relaxed"
) -> list[tuple[tuple[int, ...], tuple[int, ...], CousinClassification]]:
    """All unordered disjoint set pairs of size m whose classification has
    the required flag True, in lexicographic order."""
    if require not in FLAG_NAMES:
        raise ValueError(f"unknown requirement {require!r}, expected one of {FLAG_NAMES}")
    if m < 1 or m > 5:
        raise PreconditionError(f"pair enumeration is limited to 1 <= m <= 5, got {m}")
    if g.n > 16:
        raise PreconditionError(f"pair enumeration is limited to 16 vertices, got {g.n}")
    found = []
    for v1 in itertools.combinations(range(g.n), m):
        rest = [v for v in range(g.n) if v not in v1]
        for v2 in itertools.combinations(rest, m):
            if v2 < v1:
                continue
            c = classify_pair(g, v1, v2)
            if getattr(c, require) is True:
                found.append((v1, v2, c))
    return found


def _induced_cross_edges(g: Graph, union: frozenset[int]) -> frozenset[tuple[int, int]]:
    return frozenset(e for e in g.edges if e[0] in union and e[1] in union)


def find_involution(g: Graph, set1: Sequence[int], set2: Sequence[int]) -> Optional[VertexMap]:
    """First set-swapping involution automorphism of the induced subgraph on
    the two sets, trying images of sorted(set1) in lexicographic order.

    The returned map sends position i to the image of sorted(set1)[i].
    Both sets must induce empty subgraphs.
    """
    v1, v2 = _check_sets(g, set1, set2)
    for group, name in ((v1, "V1"), (v2, "V2")):
        gs = frozenset(group)
        if any(e[0] in gs and e[1] in gs for e in g.edges):
            raise PreconditionError(f"swap set {name} is not independent in the graph")
    sv1, sv2 = sorted(v1), sorted(v2)
    union = frozenset(v1) | frozenset(v2)
    cross = _induced_cross_edges(g, union)
    for perm in itertools.permutations(sv2):
        pi = dict(zip(sv1, perm))
        pi.update({w: u for u, w in pi.items()})
        ok = True
        for x, y in cross:
            a, b = pi[x], pi[y]
            if ((a, b) if a < b else (b, a)) not in cross:
                ok = False
                break
        if ok:
            return VertexMap(tuple(perm))
    return None


def involution_from_pairs(pairs: Iterable[tuple[int, int]]) -> dict[int, int]:
    """Expand (x, y) pairs into a symmetric mapping."""
    pi: dict[int, int] = {}
    for x, y in pairs:
        if x in pi or y in pi:
            raise ValueError(f"vertex repeated in involution pairs at ({x}, {y})")
        pi[x] = y
        pi[y] = x
    return pi


def canonical_swap_order(
    set1: Sequence[int], set2: Sequence[int], pi: Mapping[int, int]
) -> tuple[int, ...]:
    """Vertex order for similarity checks: set1 in caller order, then the
    images of set1 under pi in reverse."""
    v1, v2 = tuple(set1), tuple(set2)
    for x in itertools.chain(v1, v2):
        if x not in pi:
            raise ValueError(f"involution does not cover vertex {x}")
        if pi[pi[x]] != x:
            raise ValueError(f"mapping is not an involution at vertex {x}")
    if {pi[x] for x in v1} != set(v2) or {pi[x] for x in v2} != set(v1):
        raise ValueError("mapping does not swap the two sets")
    return v1 + tuple(pi[x] for x in reversed(v1))
