"""Exact counts of arborescences, spanning trees and Eulerian tours.

Determinant routes follow the matrix-tree theorems; the ``brute_force_*``
functions enumerate the objects directly and serve as independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial, prod

from . import kernels
from .graphs import (
    DirectedMultigraph,
    UndirectedMultigraph,
    in_degrees,
    is_balanced,
    is_strongly_connected,
    is_tournament,
    laplacian,
    laplacian_undirected,
    out_degrees,
    skew_adjacency,
)
from .linalg import all_ones, char_poly, det, minor_det

BRUTE_FORCE_N_CAP = 10
BRUTE_FORCE_CHOICE_CAP = 10**7


@dataclass(frozen=True)
class CountResult:
    kind: str  # arb-rooted | allarb | arb | sp | euler-tours
    value: int
    method: str  # determinant | charpoly | brute-force


class NotEulerianError(ValueError):
    pass


def arb_rooted(D: DirectedMultigraph, v: int) -> int:
    """Arborescences with every edge pointing toward root ``v``."""
    if not 0 <= v < D.n:
        raise IndexError(f"root {v} outside 0..{D.n - 1}")
    return minor_det(laplacian(D), v, v) if D.n > 1 else 1


def allarb(D: DirectedMultigraph) -> int:
    return kernels.rooted_minor_sum(laplacian(D).rows)


def allarb_via_charpoly(D: DirectedMultigraph) -> int:
    """``(-1)^(n-1)`` times the linear coefficient of the Laplacian char poly."""
    p = char_poly(laplacian(D))
    return (-1) ** (D.n - 1) * p.coeff(1)


def arb_eulerian(D: DirectedMultigraph) -> int:
    """Common rooted count of a balanced digraph; all roots are checked to agree."""
    if not is_balanced(D):
        raise NotEulerianError("digraph is not balanced")
    counts = {arb_rooted(D, v) for v in range(D.n)}
    # Equal rooted counts hold for every balanced digraph; disagreement is a bug.
    assert len(counts) == 1, f"rooted arborescence counts differ: {sorted(counts)}"
    return counts.pop()


def spanning_trees(G: UndirectedMultigraph) -> int:
    if G.n == 1:
        return 1
    return minor_det(laplacian_undirected(G), G.n - 1, G.n - 1)


def eulerian_tours(D: DirectedMultigraph) -> int:
    """Eulerian circuits (edges labeled, circuits up to rotation) by BEST."""
    if not is_balanced(D):
        raise NotEulerianError("digraph is not balanced")
    if D.edge_count == 0 or not is_strongly_connected(D):
        raise NotEulerianError("digraph is not strongly connected")
    return arb_eulerian(D) * prod(factorial(d - 1) for d in out_degrees(D))


def count(D: DirectedMultigraph, kind: str, root: int | None = None) -> CountResult:
    if kind == "arb":
        if root is not None:
            return CountResult("arb-rooted", arb_rooted(D, root), "determinant")
        return CountResult("arb", arb_eulerian(D), "determinant")
    if kind == "allarb":
        return CountResult("allarb", allarb(D), "determinant")
    if kind == "sp":
        return CountResult("sp", spanning_trees(D.underlying()), "determinant")
    if kind == "tours":
        return CountResult("euler-tours", eulerian_tours(D), "determinant")
    raise ValueError(f"unknown quantity {kind!r}")


# ----------------------------------------------------------------------------
# oracles and cross-checks


def brute_force_arb(D: DirectedMultigraph, v: int) -> int:
    """Count arborescences into ``v`` by trying every out-edge choice.

    Each non-root vertex picks one out-neighbour (weighted by multiplicity);
    a choice counts if following the picks from every vertex reaches ``v``.
    """
    n = D.n
    if n > BRUTE_FORCE_N_CAP:
        raise ValueError(f"brute force capped at n={BRUTE_FORCE_N_CAP}")
    if prod(d for u, d in enumerate(out_degrees(D)) if u != v) > BRUTE_FORCE_CHOICE_CAP:
        raise ValueError("too many out-edge choices for brute force")
    others = [u for u in range(n) if u != v]
    options = [[w for w in range(n) if D.mult[u][w]] for u in others]
    total = 0
    for pick in product(*options):
        parent = dict(zip(others, pick))
        ok = True
        for start in others:
            x, steps = start, 0
            while x != v and steps <= n:
                x = parent[x]
                steps += 1
            if x != v:
                ok = False
                break
        if ok:
            total += prod(D.mult[u][w] for u, w in parent.items())
    return total


def brute_force_tours(D: DirectedMultigraph, edge_cap: int = 12) -> int:
    """Count Eulerian circuits by backtracking from one fixed labeled edge."""
    m = D.edge_count
    if m == 0:
        return 0
    if m > edge_cap:
        raise ValueError(f"tour enumeration capped at {edge_cap} edges")
    if out_degrees(D) != in_degrees(D):
        return 0
    remaining = [list(r) for r in D.mult]
    u0, v0, _ = D.edges()[0]
    remaining[u0][v0] -= 1

    def walk(u: int, left: int) -> int:
        if left == 0:
            return 1 if u == u0 else 0
        total = 0
        for w in range(D.n):
            c = remaining[u][w]
            if c:
                remaining[u][w] = c - 1
                total += c * walk(w, left - 1)
                remaining[u][w] = c
        return total

    return walk(v0, m - 1)


def j_perturbation_check(D: DirectedMultigraph, alpha: int) -> bool:
    """``det(L + alpha*J) == n * alpha * allarb``, both sides exact."""
    lhs = det(laplacian(D) + all_ones(D.n).scale(alpha))
    return lhs == D.n * alpha * allarb(D)


def arb_via_skew_charpoly(T: DirectedMultigraph) -> int:
    """arb of a regular tournament from its skew-adjacency char poly at ``n``."""
    n = T.n
    if not is_tournament(T) or n % 2 == 0:
        raise ValueError("needs a regular tournament on an odd number of vertices")
    if any(d != (n - 1) // 2 for d in out_degrees(T)):
        raise ValueError("tournament is not regular")
    value = char_poly(skew_adjacency(T))(n)
    q, r = divmod(value, n * n * 2 ** (n - 1))
    if r:
        raise ArithmeticError(f"char poly value {value} not divisible by n^2 2^(n-1)")
    return q
