"""Edge-swap construction of graph pairs and exact verification.

A SwapPlan fixes a base graph, two independent vertex sets, a set-swapping
involution of their induced subgraph, and two graphs to glue in.  The two
constructed graphs differ only in whether the glued edges are placed
directly or through the involution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cousins import (
    CousinClassification,
    classify_pair,
    involution_from_pairs,
)
from .exact import ExactMatrix, conjugate, swap_similarity
from .graphs import (
    Graph,
    PreconditionError,
    VertexMap,
    all_pairs_distances,
    degrees,
    glue,
    induced_subgraph,
    is_regular,
    is_transmission_regular,
    parse_graph6,
)
from .spectra import (
    KIND_ORDER,
    MatrixKind,
    adjacency_matrix,
    build_matrix,
    min_degree,
)


@dataclass(frozen=True)
class SwapPlan:
    """Validated input to the swap construction.

    pi is stored as one (x, pi(x)) pair per vertex of v1.
    """

    base: Graph
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    pi: tuple[tuple[int, int], ...]
    h1: Graph
    h2: Graph
    phi1: VertexMap
    phi2: VertexMap

    def __post_init__(self) -> None:
        base, v1, v2 = self.base, self.v1, self.v2
        m = len(v1)
        for v in itertools.chain(v1, v2):
            if not 0 <= v < base.n:
                raise ValueError(f"swap-set vertex {v} is outside 0..{base.n - 1}")
        if len(set(v1)) != m or len(set(v2)) != len(v2):
            raise ValueError("swap sets may not repeat vertices")
        if len(v2) != m or m == 0:
            raise ValueError(f"swap sets must be equal-size and nonempty: {m} vs {len(v2)}")
        if set(v1) & set(v2):
            raise ValueError(f"swap sets overlap: {sorted(set(v1) & set(v2))}")
        for group, name in ((v1, "V1"), (v2, "V2")):
            gs = set(group)
            if any(a in gs and b in gs for a, b in base.edges):
                raise ValueError(f"swap set {name} is not independent in the base graph")
        if self.h1.n != m or self.h2.n != m:
            raise ValueError(
                f"glued graphs must have {m} vertices, got {self.h1.n} and {self.h2.n}"
            )
        for phi, group, name in ((self.phi1, v1, "phi1"), (self.phi2, v2, "phi2")):
            if phi.m != m or set(phi.images) != set(group):
                raise ValueError(f"{name} must map 0..{m - 1} bijectively onto the swap set")
        pi = involution_from_pairs(self.pi)
        if set(pi) != set(v1) | set(v2):
            raise ValueError("involution pairs must cover exactly the two swap sets")
        if {pi[x] for x in v1} != set(v2):
            raise ValueError("involution must map V1 onto V2")
        union = set(v1) | set(v2)
        cross = {e for e in base.edges if e[0] in union and e[1] in union}
        for x, y in cross:
            a, b = pi[x], pi[y]
            if ((a, b) if a < b else (b, a)) not in cross:
                raise ValueError(
                    f"involution is not an automorphism of the induced subgraph: "
                    f"edge ({x}, {y}) maps to non-edge ({a}, {b})"
                )

    @property
    def m(self) -> int:
        return len(self.v1)

    def pi_map(self) -> dict[int, int]:
        return involution_from_pairs(self.pi)


def swap_construct(plan: SwapPlan) -> tuple[Graph, Graph]:
    """The pair (G1, G2): glued directly, and glued through the involution."""
    g1 = glue(glue(plan.base, plan.h1, plan.phi1), plan.h2, plan.phi2)
    pi = plan.pi_map()
    swapped1 = VertexMap(tuple(pi[v] for v in plan.phi1.images))
    swapped2 = VertexMap(tuple(pi[v] for v in plan.phi2.images))
    g2 = glue(glue(plan.base, plan.h1, swapped1), plan.h2, swapped2)
    return g1, g2


@dataclass(frozen=True)
class HypothesisReport:
    """Which matrix kinds the construction is licensed to preserve."""

    classification: CousinClassification
    g1_induced_regular: bool
    g1_induced_transmission_regular: bool
    licensed: tuple[MatrixKind, ...]


def check_hypotheses(plan: SwapPlan, g1: Graph) -> HypothesisReport:
    """Classify the base pair and read off the licensed kinds.

    Regularity conditions are checked on the induced subgraph of the
    constructed graph, not the base.
    """
    c = classify_pair(plan.base, plan.v1, plan.v2)
    induced = induced_subgraph(g1, plan.v1 + plan.v2)
    regular = is_regular(induced)
    trans_regular = is_transmission_regular(induced)
    licensed = set()
    if c.relaxed and regular:
        licensed.add(MatrixKind.ADJACENCY)
    if c.co_degree:
        licensed.add(MatrixKind.LAPLACIAN)
        if regular:
            licensed.add(MatrixKind.SIGNLESS_LAPLACIAN)
            licensed.add(MatrixKind.NORMALIZED_LAPLACIAN)
            licensed.add(MatrixKind.GENERALIZED)
    if c.cousins is True and trans_regular:
        licensed.add(MatrixKind.DISTANCE)
    if c.co_transmission is True:
        licensed.add(MatrixKind.DISTANCE_LAPLACIAN)
    ordered = tuple(k for k in KIND_ORDER if k in licensed)
    return HypothesisReport(
        classification=c,
        g1_induced_regular=regular,
        g1_induced_transmission_regular=trans_regular,
        licensed=ordered,
    )


def _full_order(n: int, ordering: tuple[int, ...]) -> list[int]:
    if not ordering or len(ordering) % 2:
        raise ValueError(f"ordering must list an even, positive number of vertices, got {len(ordering)}")
    if len(set(ordering)) != len(ordering):
        raise ValueError("ordering may not repeat vertices")
    for v in ordering:
        if not 0 <= v < n:
            raise ValueError(f"ordering vertex {v} is outside 0..{n - 1}")
    return list(ordering) + [v for v in range(n) if v not in set(ordering)]


def verify_similarity(g1: Graph, g2: Graph, ordering: tuple[int, ...], kind: MatrixKind) -> bool:
    """Certify cospectrality by explicit conjugation.

    Under the canonical swap order the block involution must carry the
    matrix of g1 exactly onto the matrix of g2.  A wrong ordering makes the
    conjugation fail, returning False rather than raising.
    """
    if g1.n != g2.n:
        raise ValueError(f"graphs have different vertex counts: {g1.n} vs {g2.n}")
    order = _full_order(g1.n, tuple(ordering))
    m = len(ordering) // 2
    s = swap_similarity(m, g1.n)
    if kind is MatrixKind.GENERALIZED:
        a1 = adjacency_matrix(g1).permuted(order)
        a2 = adjacency_matrix(g2).permuted(order)
        d1 = ExactMatrix.diagonal(degrees(g1)).permuted(order)
        d2 = ExactMatrix.diagonal(degrees(g2)).permuted(order)
        # the pencil A - rD maps onto its counterpart for every r exactly
        # when both coefficient matrices do
        return conjugate(s, a1) == a2 and conjugate(s, d1) == d2
    if kind is MatrixKind.NORMALIZED_LAPLACIAN:
        if min_degree(g1) < 1 or min_degree(g2) < 1:
            raise PreconditionError(
                "normalized Laplacian requires every vertex to have degree at least 1"
            )
        # D^{-1}L is similar to the normalized Laplacian, has rational
        # entries, and is carried to its counterpart by the same conjugation
        # whenever the construction is licensed for this kind.
        m1 = (
            ExactMatrix.diagonal(degrees(g1)).inverse_diagonal()
            @ build_matrix(g1, MatrixKind.LAPLACIAN)
        ).permuted(order)
        m2 = (
            ExactMatrix.diagonal(degrees(g2)).inverse_diagonal()
            @ build_matrix(g2, MatrixKind.LAPLACIAN)
        ).permuted(order)
        return conjugate(s, m1) == m2
    m1 = build_matrix(g1, kind).permuted(order)
    m2 = build_matrix(g2, kind).permuted(order)
    return conjugate(s, m1) == m2


def verify_distance_preservation(g1: Graph, g2: Graph, set1, set2) -> bool:
    """Distances with at least one endpoint outside the swap sets must be
    identical in the two graphs.  Both graphs must be connected."""
    if g1.n != g2.n:
        raise ValueError(f"graphs have different vertex counts: {g1.n} vs {g2.n}")
    t1 = all_pairs_distances(g1)
    t2 = all_pairs_distances(g2)
    if not t1.connected or not t2.connected:
        raise PreconditionError("distance preservation requires both graphs connected")
    inside = set(set1) | set(set2)
    for x in range(g1.n):
        for y in range(x + 1, g1.n):
            if x in inside and y in inside:
                continue
            if t1.rows[x][y] != t2.rows[x][y]:
                return False
    return True


def verify_pi_isomorphism(plan: SwapPlan, g1: Graph, g2: Graph) -> bool:
    """The involution must map the induced edges of g1 onto those of g2."""
    union = set(plan.v1) | set(plan.v2)
    pi = plan.pi_map()
    e1 = {e for e in g1.edges if e[0] in union and e[1] in union}
    e2 = {e for e in g2.edges if e[0] in union and e[1] in union}
    image = set()
    for x, y in e1:
        a, b = pi[x], pi[y]
        image.add((a, b) if a < b else (b, a))
    return image == e2


PLAN_SECTIONS = ("BASE", "V1", "V2", "PI", "H1", "H2", "PHI1", "PHI2")


def _plan_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_plan(text: str) -> SwapPlan:
    """Parse the sectioned plan format.

    Sections are introduced by a header line (BASE, V1, V2, PI, H1, H2,
    PHI1, PHI2), '#' starts a comment, and blank lines are ignored.  BASE
    holds either an edge list (vertex count line, then "u v" lines) or a
    single graph6 line; H1/H2 hold "a b" lines on vertices 0..m-1; V1, V2,
    PHI1 and PHI2 hold whitespace-separated vertex ids.
    """
    sections: dict[str, list[tuple[int, str]]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in PLAN_SECTIONS:
            if line in sections:
                raise ValueError(f"line {lineno}: duplicate section {line}")
            sections[line] = []
            current = line
            continue
        if current is None:
            raise ValueError(f"line {lineno}: content before any section header: {raw!r}")
        sections[current].append((lineno, line))
    missing = [s for s in PLAN_SECTIONS if s not in sections]
    if missing:
        raise ValueError(f"plan is missing sections: {', '.join(missing)}")

    base = _parse_base(sections["BASE"])
    v1 = _parse_ids(sections["V1"])
    v2 = _parse_ids(sections["V2"])
    pairs = []
    for lineno, line in sections["PI"]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected an involution pair 'u v', got {line!r}")
        pairs.append((_plan_int(tokens[0], lineno), _plan_int(tokens[1], lineno)))
    m = len(v1)
    h1 = _parse_glued(sections["H1"], m)
    h2 = _parse_glued(sections["H2"], m)
    phi1 = VertexMap(_parse_ids(sections["PHI1"]))
    phi2 = VertexMap(_parse_ids(sections["PHI2"]))
    return SwapPlan(
        base=base,
        v1=v1,
        v2=v2,
        pi=tuple(pairs),
        h1=h1,
        h2=h2,
        phi1=phi1,
        phi2=phi2,
    )


def _parse_ids(lines: list[tuple[int, str]]) -> tuple[int, ...]:
    ids = []
    for lineno, line in lines:
        ids.extend(_plan_int(tok, lineno) for tok in line.split())
    return tuple(ids)


def _parse_base(lines: list[tuple[int, str]]) -> Graph:
    if not lines:
        raise ValueError("BASE section is empty")
    first_lineno, first = lines[0]
    tokens = first.split()
    if len(tokens) == 1 and not tokens[0].lstrip("-").isdigit():
        if len(lines) > 1:
            raise ValueError(f"line {lines[1][0]}: trailing content after graph6 base")
        try:
            return parse_graph6(tokens[0])
        except ValueError as exc:
            raise ValueError(f"line {first_lineno}: {exc}") from None
    n = _plan_int(tokens[0], first_lineno)
    if len(tokens) != 1:
        raise ValueError(f"line {first_lineno}: expected the vertex count alone, got {first!r}")
    if n < 0:
        raise ValueError(f"line {first_lineno}: vertex count must be nonnegative")
    pairs = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((_plan_int(tokens[0], lineno), _plan_int(tokens[1], lineno)))
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise ValueError(f"BASE section: {exc}") from None


def _parse_glued(lines: list[tuple[int, str]], m: int) -> Graph:
    pairs = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'a b', got {line!r}")
        pairs.append((_plan_int(tokens[0], lineno), _plan_int(tokens[1], lineno)))
    try:
        return Graph.from_edges(m, pairs)
    except ValueError as exc:
        raise ValueError(f"glued-graph section: {exc}") from None
