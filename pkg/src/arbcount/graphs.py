"""Dense multigraph values and the matrices attached to them.

Vertices are ``0..n-1``. Both graph types store a dense multiplicity matrix
as a tuple of tuples, so values are hashable and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .linalg import IntMatrix

ISO_CAP = 10


def _freeze(mult: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in mult)


@dataclass(frozen=True)
class DirectedMultigraph:
    """A loopless directed multigraph; ``mult[u][v]`` counts edges u -> v."""

    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mult = _freeze(self.mult)
        object.__setattr__(self, "mult", mult)
        if self.n < 1:
            raise ValueError("a digraph needs at least one vertex")
        if len(mult) != self.n or any(len(row) != self.n for row in mult):
            raise ValueError(f"multiplicity matrix must be {self.n}x{self.n}")
        for u in range(self.n):
            if mult[u][u] != 0:
                raise ValueError(f"loop at vertex {u}")
            if any(x < 0 for x in mult[u]):
                raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, ...]]) -> "DirectedMultigraph":
        """Build from ``(u, v)`` or ``(u, v, mult)`` tuples; repeats accumulate."""
        m = [[0] * n for _ in range(n)]
        for e in edges:
            u, v = e[0], e[1]
            k = e[2] if len(e) > 2 else 1
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}->{v} out of range for n={n}")
            m[u][v] += k
        return cls(n, m)

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, k) for u, row in enumerate(self.mult) for v, k in enumerate(row) if k]

    @property
    def edge_count(self) -> int:
        return sum(map(sum, self.mult))

    def adjacency(self) -> IntMatrix:
        return IntMatrix(self.mult)

    def reverse(self) -> "DirectedMultigraph":
        return DirectedMultigraph(self.n, tuple(zip(*self.mult)))

    def relabel(self, perm: Sequence[int]) -> "DirectedMultigraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        n = self.n
        m = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                m[perm[u]][perm[v]] = self.mult[u][v]
        return DirectedMultigraph(n, m)

    def underlying(self) -> "UndirectedMultigraph":
        n = self.n
        return UndirectedMultigraph(
            n, [[self.mult[u][v] + self.mult[v][u] for v in range(n)] for u in range(n)]
        )


@dataclass(frozen=True)
class UndirectedMultigraph:
    """A loopless undirected multigraph with symmetric multiplicities."""

    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mult = _freeze(self.mult)
        object.__setattr__(self, "mult", mult)
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(mult) != self.n or any(len(row) != self.n for row in mult):
            raise ValueError(f"multiplicity matrix must be {self.n}x{self.n}")
        for u in range(self.n):
            if mult[u][u] != 0:
                raise ValueError(f"loop at vertex {u}")
            for v in range(self.n):
                if mult[u][v] < 0:
                    raise ValueError("multiplicities must be nonnegative")
                if mult[u][v] != mult[v][u]:
                    raise ValueError(f"asymmetric multiplicity at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, ...]]) -> "UndirectedMultigraph":
        m = [[0] * n for _ in range(n)]
        for e in edges:
            u, v = e[0], e[1]
            k = e[2] if len(e) > 2 else 1
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            m[u][v] += k
            m[v][u] += k
        return cls(n, m)

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as ``(u, v, mult)`` with ``u < v``, lexicographic."""
        return [
            (u, v, self.mult[u][v])
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.mult[u][v]
        ]

    @property
    def edge_count(self) -> int:
        return sum(k for _, _, k in self.edges())

    def degrees(self) -> list[int]:
        return [sum(row) for row in self.mult]

    def relabel(self, perm: Sequence[int]) -> "UndirectedMultigraph":
        n = self.n
        m = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                m[perm[u]][perm[v]] = self.mult[u][v]
        return UndirectedMultigraph(n, m)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(self.n):
                if self.mult[u][v] and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n


def out_degrees(D: DirectedMultigraph) -> list[int]:
    return [sum(row) for row in D.mult]


def in_degrees(D: DirectedMultigraph) -> list[int]:
    return [sum(col) for col in zip(*D.mult)]


def is_balanced(D: DirectedMultigraph) -> bool:
    return out_degrees(D) == in_degrees(D)


def _reach(n: int, mult, start: int, forward: bool) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in range(n):
            k = mult[u][v] if forward else mult[v][u]
            if k and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_strongly_connected(D: DirectedMultigraph) -> bool:
    n = D.n
    return len(_reach(n, D.mult, 0, True)) == n and len(_reach(n, D.mult, 0, False)) == n


def is_simple(D: DirectedMultigraph) -> bool:
    """True when the underlying undirected graph has no parallel edges."""
    n = D.n
    return all(D.mult[u][v] + D.mult[v][u] <= 1 for u in range(n) for v in range(u + 1, n))


def is_tournament(D: DirectedMultigraph) -> bool:
    n = D.n
    return all(D.mult[u][v] + D.mult[v][u] == 1 for u in range(n) for v in range(u + 1, n))


def laplacian(D: DirectedMultigraph) -> IntMatrix:
    """Out-degree diagonal minus adjacency; every row sums to zero."""
    n = D.n
    rows = []
    for u in range(n):
        d = sum(D.mult[u])
        rows.append([d if u == v else -D.mult[u][v] for v in range(n)])
    return IntMatrix(rows)


def laplacian_undirected(G: UndirectedMultigraph) -> IntMatrix:
    n = G.n
    rows = []
    for u in range(n):
        d = sum(G.mult[u])
        rows.append([d if u == v else -G.mult[u][v] for v in range(n)])
    return IntMatrix(rows)


def skew_adjacency(D: DirectedMultigraph) -> IntMatrix:
    """``A - A^T``; defined only when the underlying graph is simple."""
    if not is_simple(D):
        raise ValueError("skew adjacency needs a simple underlying graph")
    n = D.n
    return IntMatrix([[D.mult[u][v] - D.mult[v][u] for v in range(n)] for u in range(n)])


def induced_subdigraph(D: DirectedMultigraph, S: Sequence[int]) -> DirectedMultigraph:
    """Subdigraph on ``S``; vertex ``S[i]`` becomes ``i``."""
    S = list(S)
    if len(set(S)) != len(S) or any(not 0 <= v < D.n for v in S):
        raise ValueError(f"invalid vertex subset {S}")
    return DirectedMultigraph(len(S), [[D.mult[u][v] for v in S] for u in S])


def _invariant(D: DirectedMultigraph, v: int) -> tuple:
    row = D.mult[v]
    col = [D.mult[u][v] for u in range(D.n)]
    return (sum(row), sum(col), tuple(sorted(row)), tuple(sorted(col)))


def find_isomorphism(
    D1: DirectedMultigraph, D2: DirectedMultigraph, cap: int = ISO_CAP
) -> list[int] | None:
    """Return ``perm`` with ``D1.relabel(perm) == D2``, or ``None``.

    Backtracking over vertex images, restricted to vertices with equal
    degree invariants and checked edge-by-edge against already placed
    vertices.
    """
    n = D1.n
    if n > cap or D2.n > cap:
        raise ValueError(f"isomorphism test capped at n={cap}")
    if n != D2.n or D1.edge_count != D2.edge_count:
        return None
    inv1 = [_invariant(D1, v) for v in range(n)]
    inv2 = [_invariant(D2, v) for v in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    # Place the most constrained vertices first.
    classes = {}
    for v in range(n):
        classes.setdefault(inv1[v], []).append(v)
    order = sorted(range(n), key=lambda v: len(classes[inv1[v]]))
    candidates = [[w for w in range(n) if inv2[w] == inv1[v]] for v in range(n)]
    a, b = D1.mult, D2.mult
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                x = image[u]
                if a[v][u] != b[w][x] or a[u][v] != b[x][w]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return list(image) if extend(0) else None


def digraphs_isomorphic(D1: DirectedMultigraph, D2: DirectedMultigraph, cap: int = ISO_CAP) -> bool:
    return find_isomorphism(D1, D2, cap) is not None


def automorphism_count(D: DirectedMultigraph) -> int:
    """Size of the automorphism group by brute force over all permutations.

    Only meant as an independent check at very small ``n``.
    """
    if D.n > 8:
        raise ValueError("automorphism brute force capped at n=8")
    return sum(1 for p in permutations(range(D.n)) if D.relabel(p) == D)
