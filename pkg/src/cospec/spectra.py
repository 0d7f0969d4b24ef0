"""Graph matrices and their exact characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .exact import BiPoly, ExactMatrix, UniPoly, charpoly, uni_slice
from .graphs import (
    Graph,
    PreconditionError,
    all_pairs_distances,
    degrees,
)


class MatrixKind(Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless"
    NORMALIZED_LAPLACIAN = "normalized"
    DISTANCE = "distance"
    DISTANCE_LAPLACIAN = "distance-laplacian"
    GENERALIZED = "generalized"


KIND_ORDER = tuple(MatrixKind)

# Kinds whose matrix entries are graph distances; these require connectivity.
DISTANCE_KINDS = frozenset({MatrixKind.DISTANCE, MatrixKind.DISTANCE_LAPLACIAN})


def adjacency_matrix(g: Graph) -> ExactMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    return ExactMatrix(tuple(tuple(r) for r in rows))


def build_matrix(g: Graph, kind: MatrixKind) -> ExactMatrix:
    """The named matrix of a graph.

    The normalized Laplacian and the generalized characteristic polynomial
    have no single exact integer matrix here; use normalized_charpoly and
    generalized_charpoly for those kinds.
    """
    if kind is MatrixKind.ADJACENCY:
        return adjacency_matrix(g)
    if kind is MatrixKind.LAPLACIAN:
        return ExactMatrix.diagonal(degrees(g)) - adjacency_matrix(g)
    if kind is MatrixKind.SIGNLESS_LAPLACIAN:
        return ExactMatrix.diagonal(degrees(g)) + adjacency_matrix(g)
    if kind in DISTANCE_KINDS:
        table = all_pairs_distances(g)
        if not table.connected:
            raise PreconditionError(f"{kind.value} matrix requires a connected graph")
        dist = ExactMatrix(table.rows)
        if kind is MatrixKind.DISTANCE:
            return dist
        trans = tuple(sum(row) for row in table.rows)
        return ExactMatrix.diagonal(trans) - dist
    raise ValueError(f"no single exact matrix for kind {kind.value!r}")


def _interpolate(points: list[tuple[int, object]]) -> UniPoly:
    """Lagrange interpolation through points with distinct integer abscissas."""
    total = UniPoly(())
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = UniPoly((yi,))
        denom = 1
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = basis * UniPoly((-xj, 1))
            denom *= xi - xj
        total = total + basis.scale(Fraction(1, denom))
    return total


@lru_cache(maxsize=None)
def generalized_charpoly(g: Graph) -> BiPoly:
    """det(lam*I - A + r*D) as an exact bivariate polynomial.

    Computed by evaluating the lam-polynomial at r = 0..n and interpolating
    each lam-coefficient; every interpolated coefficient must come out an
    integer, which is asserted.
    """
    n = g.n
    deg = degrees(g)
    slices = []
    for r0 in range(n + 1):
        rows = [[0] * n for _ in range(n)]
        for u, v in g.edges:
            rows[u][v] = 1
            rows[v][u] = 1
        for i in range(n):
            rows[i][i] = -r0 * deg[i]
        # charpoly of A - r0*D in lam is the slice of the bivariate at r = r0
        slices.append(charpoly(ExactMatrix(tuple(tuple(r) for r in rows))))
    grid = []
    for i in range(n + 1):
        poly_r = _interpolate([(r0, slices[r0].coefficient(i)) for r0 in range(n + 1)])
        for c in poly_r.coeffs:
            assert isinstance(c, int), "generalized charpoly coefficient is not integral"
        grid.append(tuple(poly_r.coefficient(j) for j in range(n + 1)))
    return BiPoly(tuple(grid))


def min_degree(g: Graph) -> int:
    return min(degrees(g), default=0)


@lru_cache(maxsize=None)
def normalized_charpoly(g: Graph) -> UniPoly:
    """Characteristic polynomial of the normalized Laplacian.

    Uses the generalized-charpoly identity with the degree product as the
    exact determinant of D, so no square roots appear.  Requires minimum
    degree at least one.
    """
    if g.n == 0 or min_degree(g) < 1:
        raise PreconditionError(
            "normalized Laplacian requires every vertex to have degree at least 1"
        )
    det_d = 1
    for d in degrees(g):
        det_d *= d
    phi = generalized_charpoly(g)
    in_r = uni_slice(phi, lam=0)
    p = in_r.compose_linear(-1, 1).scale(Fraction((-1) ** g.n, det_d))
    assert not p.is_zero and p.leading == 1, "normalized charpoly did not come out monic"
    return p


@lru_cache(maxsize=None)
def _kind_charpoly(g: Graph, kind: MatrixKind) -> UniPoly:
    return charpoly(build_matrix(g, kind))


def cospectral(g1: Graph, g2: Graph, kind: MatrixKind) -> bool:
    """Exact spectral equality for the given matrix kind."""
    if g1.n != g2.n:
        raise ValueError(f"graphs have different vertex counts: {g1.n} vs {g2.n}")
    if kind is MatrixKind.GENERALIZED:
        return generalized_charpoly(g1) == generalized_charpoly(g2)
    if kind is MatrixKind.NORMALIZED_LAPLACIAN:
        return normalized_charpoly(g1) == normalized_charpoly(g2)
    return _kind_charpoly(g1, kind) == _kind_charpoly(g2, kind)


@dataclass(frozen=True)
class IdentityReport:
    """Whether the slices of the generalized charpoly match the directly
    built matrices.  normalized_ok is None when the graph has an isolated
    vertex (the normalized Laplacian is undefined there)."""

    adjacency_ok: bool
    laplacian_ok: bool
    signless_ok: bool
    normalized_ok: bool | None


def derived_identities_check(g: Graph) -> IdentityReport:
    phi = generalized_charpoly(g)
    adjacency_ok = uni_slice(phi, r=0) == _kind_charpoly(g, MatrixKind.ADJACENCY)
    # The r=1 slice with lam negated equals the Laplacian charpoly up to a
    # sign of (-1)^n; monic normalization absorbs it.
    lap_slice = uni_slice(phi, r=1).negate_variable()
    laplacian_ok = lap_slice.monic() == _kind_charpoly(g, MatrixKind.LAPLACIAN)
    signless_ok = uni_slice(phi, r=-1) == _kind_charpoly(g, MatrixKind.SIGNLESS_LAPLACIAN)
    if g.n == 0 or min_degree(g) < 1:
        normalized_ok: bool | None = None
    else:
        lap = build_matrix(g, MatrixKind.LAPLACIAN)
        dinv = ExactMatrix.diagonal(degrees(g)).inverse_diagonal()
        # D^{-1} L is similar to the normalized Laplacian and rational.
        normalized_ok = normalized_charpoly(g) == charpoly(dinv @ lap)
    return IdentityReport(
        adjacency_ok=adjacency_ok,
        laplacian_ok=laplacian_ok,
        signless_ok=signless_ok,
        normalized_ok=normalized_ok,
    )
