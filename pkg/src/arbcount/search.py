"""Exhaustive enumeration of orientations and extremal arborescence search.

Orientations of a multigraph are enumerated by deciding, bundle by bundle in
lexicographic ``(u, v)`` order, how many of the ``k`` parallel ``u-v`` edges
point ``u -> v``. Parallel search shards the tree on the first few decisions
and folds shard results in prefix order, so output never depends on
scheduling.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import prod
from typing import Iterator

from . import kernels
from .constructions import complete_graph
from .counting import arb_rooted
from .graphs import ISO_CAP, DirectedMultigraph, UndirectedMultigraph, digraphs_isomorphic, laplacian

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
TOURNAMENT_CAP = 6
OBJECTIVES = ("min-arb", "max-arb", "min-allarb", "max-allarb")


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchResult:
    objective: str
    value: int | None
    witnesses: list[DirectedMultigraph]
    space_size: int
    deduplicated: bool = False
    dedup_skipped: bool = False
    value_counts: dict[int, int] = field(default_factory=dict)


# ----------------------------------------------------------------------------
# enumeration


def _node_bound(bundles) -> int:
    """Node count of the unpruned decision tree."""
    total, width = 1, 1
    for _, _, k in bundles:
        width *= k + 1
        total += width
    return total


def _check_budget(bundles, budget: int) -> None:
    nodes = _node_bound(bundles)
    if nodes > budget:
        raise BudgetExceeded(f"search tree bound {nodes} exceeds budget {budget}")


def _walk(G: UndirectedMultigraph, balanced: bool, prefix=(), depth: int | None = None) -> Iterator[tuple]:
    """Yield decision tuples (full, or truncated at ``depth``) extending ``prefix``."""
    n = G.n
    bundles = G.edges()
    stop = len(bundles) if depth is None else min(depth, len(bundles))
    rem = G.degrees()
    excess = [0] * n
    choice = []

    def place(i: int, j: int) -> bool:
        u, v, k = bundles[i]
        d = 2 * j - k
        excess[u] += d
        excess[v] -= d
        rem[u] -= k
        rem[v] -= k
        choice.append(j)
        return not balanced or (abs(excess[u]) <= rem[u] and abs(excess[v]) <= rem[v])

    def unplace(i: int) -> None:
        u, v, k = bundles[i]
        j = choice.pop()
        d = 2 * j - k
        excess[u] -= d
        excess[v] += d
        rem[u] += k
        rem[v] += k

    for i, j in enumerate(prefix):
        if not place(i, j):
            return

    def rec(i: int) -> Iterator[tuple]:
        if i == stop:
            yield tuple(choice)
            return
        k = bundles[i][2]
        for j in range(k, -1, -1):
            if place(i, j):
                yield from rec(i + 1)
            unplace(i)

    yield from rec(len(prefix))


def _to_digraph(G: UndirectedMultigraph, bundles, decisions) -> DirectedMultigraph:
    m = [[0] * G.n for _ in range(G.n)]
    for (u, v, k), j in zip(bundles, decisions):
        m[u][v] = j
        m[v][u] = k - j
    return DirectedMultigraph(G.n, m)


def enumerate_orientations(
    G: UndirectedMultigraph, eulerian: bool = False, budget: int = DEFAULT_BUDGET
) -> Iterator[DirectedMultigraph]:
    """Every orientation of ``G`` once, as a multiplicity split per bundle."""
    if eulerian and any(d % 2 for d in G.degrees()):
        raise ValueError("Eulerian orientations need every vertex degree even")
    bundles = G.edges()
    _check_budget(bundles, budget)
    for dec in _walk(G, eulerian):
        yield _to_digraph(G, bundles, dec)


def enumerate_eulerian_orientations(
    G: UndirectedMultigraph, budget: int = DEFAULT_BUDGET
) -> Iterator[DirectedMultigraph]:
    return enumerate_orientations(G, eulerian=True, budget=budget)


def enumerate_tournaments(n: int) -> Iterator[DirectedMultigraph]:
    if n > TOURNAMENT_CAP:
        raise ValueError(f"tournament enumeration capped at n={TOURNAMENT_CAP}")
    return enumerate_orientations(complete_graph(n))


def dedup_isomorphic(graphs, cap: int = ISO_CAP) -> list[DirectedMultigraph]:
    reps: list[DirectedMultigraph] = []
    for D in graphs:
        if not any(digraphs_isomorphic(D, R, cap) for R in reps):
            reps.append(D)
    return reps


# ----------------------------------------------------------------------------
# extremal search


def _quantity(D: DirectedMultigraph, which: str) -> int:
    if which == "arb":
        return arb_rooted(D, 0)
    return kernels.rooted_minor_sum(laplacian(D).rows)


def _better(a: int, b: int | None, minimize: bool) -> bool:
    return b is None or (a < b if minimize else a > b)


def _search_shard(G: UndirectedMultigraph, eulerian: bool, prefix: tuple, objective: str):
    minimize = objective.startswith("min")
    which = objective.split("-", 1)[1]
    bundles = G.edges()
    best = None
    witnesses = []
    seen = 0
    counts: dict[int, int] = {}
    for dec in _walk(G, eulerian, prefix):
        D = _to_digraph(G, bundles, dec)
        q = _quantity(D, which)
        seen += 1
        counts[q] = counts.get(q, 0) + 1
        if _better(q, best, minimize):
            best, witnesses = q, [D]
        elif q == best:
            witnesses.append(D)
    return best, witnesses, seen, counts


def _fold(objective: str, parts) -> tuple:
    minimize = objective.startswith("min")
    best, witnesses, seen, counts = None, [], 0, {}
    for b, ws, s, c in parts:
        seen += s
        for q, k in c.items():
            counts[q] = counts.get(q, 0) + k
        if b is None:
            continue
        if _better(b, best, minimize):
            best, witnesses = b, list(ws)
        elif b == best:
            witnesses.extend(ws)
    return best, witnesses, seen, counts


def _extremal(
    G: UndirectedMultigraph,
    eulerian: bool,
    objective: str,
    jobs: int,
    iso_dedup: bool,
    budget: int,
) -> SearchResult:
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if eulerian and any(d % 2 for d in G.degrees()):
        raise ValueError("Eulerian orientations need every vertex degree even")
    if objective.endswith("-arb") and not eulerian:
        raise ValueError("arb is only defined for Eulerian orientations; use allarb")
    bundles = G.edges()
    _check_budget(bundles, budget)

    if jobs <= 1:
        best, witnesses, seen, counts = _search_shard(G, eulerian, (), objective)
    else:
        depth = 0
        while depth < len(bundles) and prod(k + 1 for _, _, k in bundles[:depth]) < 4 * jobs:
            depth += 1
        prefixes = list(_walk(G, eulerian, (), depth))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_search_shard, G, eulerian, p, objective) for p in prefixes]
            parts = [f.result() for f in futures]
        best, witnesses, seen, counts = _fold(objective, parts)

    result = SearchResult(objective, best, witnesses, seen, value_counts=dict(sorted(counts.items())))
    if iso_dedup and witnesses:
        if G.n > ISO_CAP:
            log.warning("n=%d above isomorphism cap; witnesses left labeled", G.n)
            result.dedup_skipped = True
        else:
            result.witnesses = dedup_isomorphic(witnesses)
            result.deduplicated = True
    return result


def extremal_eulerian(
    G: UndirectedMultigraph,
    objective: str = "min-arb",
    jobs: int = 1,
    iso_dedup: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Optimum of arb (or allarb) over all Eulerian orientations of ``G``; all ties kept."""
    return _extremal(G, True, objective, jobs, iso_dedup, budget)


def extremal_orientation(
    G: UndirectedMultigraph,
    objective: str = "max-allarb",
    jobs: int = 1,
    iso_dedup: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Optimum of allarb over every orientation of ``G``."""
    return _extremal(G, False, objective, jobs, iso_dedup, budget)


def extremal_tournament(
    n: int,
    quantity: str = "allarb",
    objective: str = "min",
    jobs: int = 1,
    iso_dedup: bool = True,
) -> SearchResult:
    if quantity != "allarb":
        raise ValueError("tournament search supports allarb only")
    if n > TOURNAMENT_CAP:
        raise ValueError(f"tournament enumeration capped at n={TOURNAMENT_CAP}")
    obj = objective if objective in OBJECTIVES else f"{objective}-{quantity}"
    return _extremal(complete_graph(n), False, obj, jobs, iso_dedup, DEFAULT_BUDGET)
