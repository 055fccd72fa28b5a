"""Exact evaluation of the arborescence bounds and the structural predicates
that appear in their equality cases.

Inequalities with half-integer exponents are compared after squaring both
sides, so every verdict is an exact integer or rational comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, prod

from . import kernels
from .counting import allarb, spanning_trees
from .graphs import (
    DirectedMultigraph,
    UndirectedMultigraph,
    is_simple,
    is_tournament,
    out_degrees,
    skew_adjacency,
)
from .linalg import IntMatrix, IntPolynomial, char_poly, det_rows

BOUND_IDS = (
    "LB-TOURN",
    "LB-EULER-KN",
    "UB-TRIVIAL",
    "UB-FROB",
    "UB-MAXDEG",
    "UB-HADAMARD",
    "LB-KNM",
    "LB-SPTREE",
)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one bound on one instance.

    When ``squared`` is set the comparison is ``quantity**2`` against
    ``bound``, i.e. ``bound`` holds the square of the stated bound.
    """

    bound_id: str
    instance: str
    quantity: int
    bound: Fraction
    satisfied: bool
    tight: bool
    squared: bool = False
    witness: dict = field(default_factory=dict)


def _check_tournament_degrees(degrees) -> int:
    n = len(degrees)
    if n < 1 or any(d < 0 for d in degrees) or sum(degrees) != n * (n - 1) // 2:
        raise ValueError(f"not a tournament out-degree sequence: {list(degrees)}")
    return n


def lb_tournament(degrees) -> Fraction:
    """``(prod(d+1) + prod(d)) / n`` for a tournament out-degree sequence."""
    n = _check_tournament_degrees(degrees)
    return Fraction(prod(d + 1 for d in degrees) + prod(degrees), n)


def lb_eulerian_tournament(n: int) -> Fraction:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Eulerian tournaments need odd n, got {n}")
    return Fraction(((n + 1) // 2) ** n + ((n - 1) // 2) ** n, n * n)


def ub_trivial(degrees) -> int:
    """Sum over k of the product of all out-degrees except the k-th."""
    return sum(prod(d for j, d in enumerate(degrees) if j != k) for k in range(len(degrees)))


def ub_hadamard(n: int) -> Fraction:
    """``(1/n) (n(n+1)/4)^((n-1)/2)`` for odd ``n``."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"needs odd n, got {n}")
    return Fraction(n * (n + 1), 4) ** ((n - 1) // 2) / n


def lb_knm(n: int, m: int) -> int:
    if n < 2 or m < 2 or n % 2 or m % 2:
        raise ValueError(f"needs even n, m >= 2, got ({n}, {m})")
    return (m // 2) ** (n - 1) * (n // 2) ** (m - 1)


def lb_sptree(G: UndirectedMultigraph) -> Fraction:
    return Fraction(spanning_trees(G), 2 ** (G.n - 1))


def _squared_report(bound_id: str, D: DirectedMultigraph, base: int, scale: int, instance: str) -> BoundReport:
    # allarb <= (base / scale)^((n-1)/2)  <=>  allarb^2 * scale^(n-1) <= base^(n-1)
    n = D.n
    a = allarb(D)
    lhs = a * a * scale ** (n - 1)
    rhs = base ** (n - 1)
    return BoundReport(
        bound_id,
        instance,
        a,
        Fraction(rhs, scale ** (n - 1)),
        lhs <= rhs,
        lhs == rhs,
        squared=True,
        witness={"base": base, "scale": scale},
    )


def ub_frobenius_holds(D: DirectedMultigraph, instance: str = "") -> BoundReport:
    """``allarb(D)^2 (n-1)^(n-1) <= (sum d_i^2 + m)^(n-1)`` for simple ``D``."""
    if not is_simple(D):
        raise ValueError("Frobenius bound needs a simple digraph")
    degs = out_degrees(D)
    base = sum(d * d for d in degs) + D.edge_count
    return _squared_report("UB-FROB", D, base, max(D.n - 1, 1), instance)


def ub_maxdeg_holds(D: DirectedMultigraph, instance: str = "") -> BoundReport:
    """Frobenius bound with every degree replaced by the maximum out-degree."""
    if not is_simple(D):
        raise ValueError("max-degree bound needs a simple digraph")
    dmax = max(out_degrees(D))
    return _squared_report("UB-MAXDEG", D, D.n * (dmax * dmax + dmax), max(D.n - 1, 1), instance)


def averaging_identity_holds(G: UndirectedMultigraph, edge_cap: int = 22) -> bool:
    """Average allarb over all 2^m orientations equals ``n sp(G) / 2^(n-1)``.

    Parallel edges are distinguishable, so a bundle of ``k`` edges with
    ``j`` pointing one way contributes ``comb(k, j)`` orientations.
    """
    m = G.edge_count
    if m > edge_cap:
        raise ValueError(f"orientation enumeration capped at {edge_cap} edges")
    bundles = G.edges()
    total = 0
    for split in product(*[range(k + 1) for _, _, k in bundles]):
        mult = [[0] * G.n for _ in range(G.n)]
        weight = 1
        for (u, v, k), j in zip(bundles, split):
            mult[u][v] = j
            mult[v][u] = k - j
            weight *= comb(k, j)
        total += weight * allarb(DirectedMultigraph(G.n, mult))
    return total * 2 ** (G.n - 1) == G.n * spanning_trees(G) * 2**m


# ----------------------------------------------------------------------------
# structural predicates


def _require_tournament(T: DirectedMultigraph) -> None:
    if not is_tournament(T):
        raise ValueError("input is not a tournament")


def skew4_minor_counts(T: DirectedMultigraph) -> dict[int, int]:
    """Histogram of the 4x4 principal minors of the skew adjacency matrix."""
    return kernels.skew4_det_counts(skew_adjacency(T).rows)


def is_locally_transitive(T: DirectedMultigraph) -> bool:
    """No 4-vertex subtournament is a 3-cycle plus a dominating or dominated vertex.

    Those are exactly the 4-subsets whose skew minor is 9 instead of 1.
    """
    _require_tournament(T)
    return set(skew4_minor_counts(T)) <= {1}


def locally_transitive_charpoly(n: int) -> IntPolynomial:
    """``((x+1)^n + (x-1)^n) / 2``."""
    return IntPolynomial(comb(n, n - k) if (n - k) % 2 == 0 else 0 for k in range(n + 1))


def locally_transitive_charpoly_check(T: DirectedMultigraph) -> bool:
    _require_tournament(T)
    return char_poly(skew_adjacency(T)) == locally_transitive_charpoly(T.n)


def even_minors_all_one(T: DirectedMultigraph, cap: int = 12) -> bool:
    _require_tournament(T)
    if T.n > cap:
        raise ValueError(f"even-minor scan capped at n={cap}")
    M = skew_adjacency(T)
    for k in range(2, T.n + 1, 2):
        for S in combinations(range(T.n), k):
            if det_rows(M.submatrix(S, S)) != 1:
                return False
    return True


def is_hadamard_tournament(T: DirectedMultigraph) -> bool:
    """``A A^T == (n+1)/4 I + (n-3)/4 J`` exactly."""
    _require_tournament(T)
    n = T.n
    if n % 4 != 3:
        return False
    A = IntMatrix(T.mult)
    target = IntMatrix(
        [[(n + 1) // 4 + (n - 3) // 4 if i == j else (n - 3) // 4 for j in range(n)] for i in range(n)]
    )
    return A @ A.T == target


def satisfies_cyclic_interval(T: DirectedMultigraph, order) -> bool:
    """Every edge u -> v has u -> w -> v for all w strictly between them clockwise."""
    n = len(order)
    if sorted(order) != list(range(T.n)):
        return False
    a = T.mult
    for i in range(n):
        for j in range(n):
            u, v = order[i], order[j]
            if i == j or not a[u][v]:
                continue
            k = (i + 1) % n
            while k != j:
                w = order[k]
                if not (a[u][w] and a[w][v]):
                    return False
                k = (k + 1) % n
    return True


def huang_cyclic_order(T: DirectedMultigraph, cap: int = 10) -> list[int] | None:
    """A cyclic vertex order in which every out-neighbourhood is the interval
    right after its vertex, or ``None`` when no such order exists.

    Vertex 0 is fixed first. Extending the order by ``v`` fixes the
    clockwise interval from any placed ``u`` to ``v``, which is checked
    immediately; wrap-around intervals are checked on their known part.
    """
    _require_tournament(T)
    n = T.n
    if n > cap:
        raise ValueError(f"cyclic order search capped at n={cap}")
    a = T.mult
    order = [0]
    used = [False] * n
    used[0] = True

    def consistent(v: int) -> bool:
        j = len(order)
        for i, u in enumerate(order):
            if a[u][v]:
                between = order[i + 1:j]
                if any(not (a[u][w] and a[w][v]) for w in between):
                    return False
            else:
                # v -> u wraps around through the tail and the head up to u.
                if any(not (a[v][w] and a[w][u]) for w in order[:i]):
                    return False
        # v also sits inside every wrap-around interval x -> y already placed.
        for p in range(j):
            x = order[p]
            for q in range(p):
                y = order[q]
                if a[x][y] and not (a[x][v] and a[v][y]):
                    return False
        return True

    def extend() -> bool:
        if len(order) == n:
            return satisfies_cyclic_interval(T, order)
        for v in range(n):
            if not used[v] and consistent(v):
                used[v] = True
                order.append(v)
                if extend():
                    return True
                order.pop()
                used[v] = False
        return False

    if not extend():
        return None
    assert satisfies_cyclic_interval(T, order)
    return list(order)
