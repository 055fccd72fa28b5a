"""Builders for the named graphs and orientations, plus seeded random instances."""

from __future__ import annotations

import random

from .graphs import DirectedMultigraph, UndirectedMultigraph, digraphs_isomorphic

PALEY_CAP = 10**4


def swirl(n: int) -> DirectedMultigraph:
    """Vertex ``i`` beats the next ``(n-1)/2`` vertices cyclically."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"swirl tournament needs odd n, got {n}")
    d = (n - 1) // 2
    return DirectedMultigraph.from_edges(n, [(i, (i + k) % n) for i in range(n) for k in range(1, d + 1)])


def transitive(n: int) -> DirectedMultigraph:
    """``i -> j`` iff ``i < j``; vertex 0 is the source."""
    if n < 1:
        raise ValueError("n must be positive")
    return DirectedMultigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def paley(q: int) -> DirectedMultigraph:
    """``i -> j`` iff ``j - i`` is a nonzero quadratic residue mod ``q``."""
    if not _is_prime(q) or q % 4 != 3:
        raise ValueError(f"Paley tournament needs a prime q = 3 mod 4, got {q}")
    if q > PALEY_CAP:
        raise ValueError(f"q capped at {PALEY_CAP}")
    half = (q - 1) // 2
    residue = [x != 0 and pow(x, half, q) == 1 for x in range(q)]
    return DirectedMultigraph.from_edges(q, [(i, j) for i in range(q) for j in range(q) if residue[(j - i) % q]])


def complete_graph(n: int) -> UndirectedMultigraph:
    return UndirectedMultigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(n: int, m: int) -> UndirectedMultigraph:
    """Sides ``0..n-1`` and ``n..n+m-1``."""
    if n < 1 or m < 1:
        raise ValueError("both sides must be nonempty")
    return UndirectedMultigraph.from_edges(n + m, [(i, n + j) for i in range(n) for j in range(m)])


def cycle_graph(n: int) -> UndirectedMultigraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return UndirectedMultigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> UndirectedMultigraph:
    return UndirectedMultigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def bipartite_blowup_minimizer(n: int, m: int) -> DirectedMultigraph:
    """Oriented 4-cycle X1 -> Y1 -> X2 -> Y2 -> X1 blown up into K_{n,m}.

    X1, X2 are the halves of ``0..n-1``; Y1, Y2 the halves of ``n..n+m-1``.
    """
    if n < 2 or m < 2 or n % 2 or m % 2:
        raise ValueError(f"blow-up needs even n, m >= 2, got ({n}, {m})")
    x1, x2 = range(0, n // 2), range(n // 2, n)
    y1, y2 = range(n, n + m // 2), range(n + m // 2, n + m)
    edges = []
    for src, dst in ((x1, y1), (y1, x2), (x2, y2), (y2, x1)):
        edges += [(u, v) for u in src for v in dst]
    return DirectedMultigraph.from_edges(n + m, edges)


def double(G: UndirectedMultigraph) -> UndirectedMultigraph:
    return UndirectedMultigraph(G.n, [[2 * k for k in row] for row in G.mult])


def symmetric_orientation(G: UndirectedMultigraph) -> DirectedMultigraph:
    """Split every edge bundle evenly between the two directions."""
    if any(k % 2 for row in G.mult for k in row):
        raise ValueError("symmetric orientation needs even multiplicities")
    return DirectedMultigraph(G.n, [[k // 2 for k in row] for row in G.mult])


# ----------------------------------------------------------------------------
# seeded random instances


def random_tournament(n: int, seed: int) -> DirectedMultigraph:
    rng = random.Random(seed)
    edges = [(i, j) if rng.random() < 0.5 else (j, i) for i in range(n) for j in range(i + 1, n)]
    return DirectedMultigraph.from_edges(n, edges)


def random_orientation(G: UndirectedMultigraph, seed: int) -> DirectedMultigraph:
    """Orient each parallel edge independently and uniformly."""
    rng = random.Random(seed)
    m = [[0] * G.n for _ in range(G.n)]
    for u, v, k in G.edges():
        for _ in range(k):
            if rng.random() < 0.5:
                m[u][v] += 1
            else:
                m[v][u] += 1
    return DirectedMultigraph(G.n, m)


def random_graph(n: int, p: float, seed: int, max_mult: int = 1) -> UndirectedMultigraph:
    rng = random.Random(seed)
    edges = [
        (i, j, rng.randint(1, max_mult))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return UndirectedMultigraph.from_edges(n, edges)


def random_even_graph(n: int, p: float, seed: int, max_mult: int = 1) -> UndirectedMultigraph:
    """A random multigraph with every degree even: odd vertices are paired up by extra edges."""
    G = random_graph(n, p, seed, max_mult)
    odd = [v for v, d in enumerate(G.degrees()) if d % 2]
    return UndirectedMultigraph.from_edges(n, G.edges() + list(zip(odd[::2], odd[1::2])))


def random_digraph(n: int, p: float, seed: int, max_mult: int = 1) -> DirectedMultigraph:
    rng = random.Random(seed)
    edges = [
        (i, j, rng.randint(1, max_mult))
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < p
    ]
    return DirectedMultigraph.from_edges(n, edges)


def _euler_circuit_orientation(G: UndirectedMultigraph) -> list[list[int]]:
    n = G.n
    left = [list(r) for r in G.mult]
    out = [[0] * n for _ in range(n)]
    for start in range(n):
        if not any(left[start]):
            continue
        # Hierholzer: every edge walked is oriented along the walk.
        stack = [start]
        while stack:
            u = stack[-1]
            w = next((w for w in range(n) if left[u][w]), None)
            if w is None:
                stack.pop()
                continue
            left[u][w] -= 1
            left[w][u] -= 1
            out[u][w] += 1
            stack.append(w)
    return out


def random_eulerian_orientation(G: UndirectedMultigraph, seed: int) -> DirectedMultigraph:
    """A balanced orientation: orient Euler circuits, then reverse random cycles.

    Every vertex degree must be even. ``10 * |E|`` reversals are applied;
    the result is always balanced, with no claim of uniformity.
    """
    if any(d % 2 for d in G.degrees()):
        raise ValueError("every vertex degree must be even")
    rng = random.Random(seed)
    n = G.n
    out = _euler_circuit_orientation(G)
    for _ in range(10 * G.edge_count):
        starts = [u for u in range(n) if any(out[u])]
        if not starts:
            break
        u = rng.choice(starts)
        pos = {u: 0}
        walk = [u]
        while True:
            nbrs = [w for w in range(n) if out[walk[-1]][w]]
            w = rng.choice(nbrs)  # balanced, so a vertex entered has an exit
            if w in pos:
                cycle = walk[pos[w]:] + [w]
                break
            pos[w] = len(walk)
            walk.append(w)
        for a, b in zip(cycle, cycle[1:]):
            out[a][b] -= 1
            out[b][a] += 1
    return DirectedMultigraph(n, out)


def connected_graphs(max_edges: int) -> list[UndirectedMultigraph]:
    """Connected simple graphs with at most ``max_edges`` edges, one per isomorphism class.

    Grown edge by edge: every connected graph with an edge has a leaf or a
    non-bridge edge, so removing it gives a smaller connected graph.
    """
    def as_digraph(G):
        return DirectedMultigraph(G.n, G.mult)

    level = [UndirectedMultigraph(1, [[0]])]
    out = list(level)
    for _ in range(max_edges):
        buckets: dict[tuple, list[UndirectedMultigraph]] = {}
        nxt = []
        for G in level:
            n = G.n
            grown = [
                UndirectedMultigraph.from_edges(n, G.edges() + [(u, v)])
                for u in range(n)
                for v in range(u + 1, n)
                if not G.mult[u][v]
            ]
            grown += [UndirectedMultigraph.from_edges(n + 1, G.edges() + [(u, n)]) for u in range(n)]
            for H in grown:
                bucket = buckets.setdefault((H.n, tuple(sorted(H.degrees()))), [])
                if not any(digraphs_isomorphic(as_digraph(H), as_digraph(R)) for R in bucket):
                    bucket.append(H)
                    nxt.append(H)
        out += nxt
        level = nxt
    return out
