"""Laplacian edge perturbations and edge-pair controllability.

Adding or deleting an edge ij shifts the Laplacian by the rank-one matrix
built from h = e_i - e_j, so the new characteristic polynomial is the old
one corrected by the numerator of h^T (tI-L)^{-1} h.  A vertex pair {i, j}
is controllable relative to the Laplacian when the L-module generated by h
has dimension v-1, the largest it can be given that h stays orthogonal to
the all-ones vector.
"""

from __future__ import annotations

from .control import graph_char_poly
from .errors import InternalConsistencyError
from .graphs import Graph, automorphisms, laplacian, laplacian_rows
from .matrices import (
    ExactMatrix,
    bilinear_numerator_poly,
    char_poly,
    int_rank,
)
from .polys import IntPoly


def edge_difference_matrix(v: int, i: int, j: int) -> ExactMatrix:
    """(e_i - e_j)(e_i - e_j)^T."""
    if i == j:
        raise ValueError("edge endpoints must differ")
    h = [0] * v
    h[i], h[j] = 1, -1
    return ExactMatrix(v, v, [a * b for a in h for b in h])


def _h_vector(g: Graph, i: int, j: int) -> list[int]:
    if i == j:
        raise ValueError("edge endpoints must differ")
    if not (0 <= i < g.v and 0 <= j < g.v):
        raise ValueError("vertex out of range")
    h = [0] * g.v
    h[i], h[j] = 1, -1
    return h


def laplacian_char_poly(g: Graph) -> IntPoly:
    return char_poly(laplacian(g))


def edge_perturbation_polys(
    g: Graph, i: int, j: int, mode: str
) -> tuple[IntPoly, IntPoly]:
    """phi of the perturbed Laplacian, directly and via the rank-one
    correction formula; the two must agree exactly.

    mode "add" requires ij to be a non-edge, "delete" an edge.
    """
    if mode not in ("add", "delete"):
        raise ValueError(f"mode must be 'add' or 'delete', got {mode!r}")
    h = _h_vector(g, i, j)
    present = g.has_edge(i, j)
    if mode == "add" and present:
        raise ValueError(f"edge ({i},{j}) already present")
    if mode == "delete" and not present:
        raise ValueError(f"edge ({i},{j}) not present")
    if mode == "add":
        other = Graph.from_edges(g.v, set(g.edges) | {(min(i, j), max(i, j))})
    else:
        other = Graph.from_edges(g.v, set(g.edges) - {(min(i, j), max(i, j))})
    direct = laplacian_char_poly(other)
    psi = bilinear_numerator_poly(laplacian(g), h, h)
    base = laplacian_char_poly(g)
    formula = base - psi if mode == "add" else base + psi
    if direct != formula:
        raise InternalConsistencyError("Laplacian edge perturbation identity failed")
    return direct, formula


def h_module_dimension(g: Graph, i: int, j: int) -> int:
    """Dimension of the L-module generated by e_i - e_j."""
    h = _h_vector(g, i, j)
    rows = laplacian_rows(g)
    cols = [h]
    for _ in range(g.v - 1):
        prev = cols[-1]
        cols.append(
            [sum(rows[a][b] * prev[b] for b in range(g.v) if rows[a][b]) for a in range(g.v)]
        )
    return int_rank(cols, g.v)


def bordered_rank(g: Graph, i: int, j: int) -> int:
    """Rank of (ones | h | Lh | ... | L^{v-1}h)."""
    h = _h_vector(g, i, j)
    rows = laplacian_rows(g)
    cols = [[1] * g.v, h]
    for _ in range(g.v - 1):
        prev = cols[-1]
        cols.append(
            [sum(rows[a][b] * prev[b] for b in range(g.v) if rows[a][b]) for a in range(g.v)]
        )
    return int_rank(cols, g.v)


def laplacian_pair_controllable(g: Graph, i: int, j: int) -> bool:
    """h-module dimension v-1 (equivalently, bordered rank v: the all-ones
    vector is always orthogonal to the module, so it adds one)."""
    return h_module_dimension(g, i, j) == g.v - 1


def laplacian_pair_automorphism_check(g: Graph, i: int, j: int) -> bool:
    """A Laplacian-controllable pair is fixed setwise only by the identity.

    Checked for v >= 3: on two vertices the sign argument excludes nothing.
    """
    if g.v < 3:
        raise ValueError("automorphism consequence is only claimed for v >= 3")
    if not laplacian_pair_controllable(g, i, j):
        raise ValueError("pair is not Laplacian-controllable")
    pair = {i, j}
    for perm in automorphisms(g):
        if {perm[i], perm[j]} == pair and any(perm[u] != u for u in range(g.v)):
            raise InternalConsistencyError(
                f"non-identity automorphism fixes controllable pair {pair}"
            )
    return True
