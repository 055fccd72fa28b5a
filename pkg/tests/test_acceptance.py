"""Acceptance suite: eleven exact checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` or directly with
``python tests/test_acceptance.py``.
"""

import sys
import time
from fractions import Fraction
from itertools import combinations, product
from math import factorial, prod

import pytest

from arbcount import constructions as C
from arbcount.bounds import (
    averaging_identity_holds,
    even_minors_all_one,
    is_hadamard_tournament,
    is_locally_transitive,
    lb_eulerian_tournament,
    lb_knm,
    lb_sptree,
    lb_tournament,
    locally_transitive_charpoly_check,
    skew4_minor_counts,
    ub_frobenius_holds,
    ub_hadamard,
    ub_trivial,
)
from arbcount.counting import (
    allarb,
    allarb_via_charpoly,
    arb_eulerian,
    arb_rooted,
    arb_via_skew_charpoly,
    brute_force_arb,
    brute_force_tours,
    eulerian_tours,
    j_perturbation_check,
)
from arbcount.graphs import (
    DirectedMultigraph,
    digraphs_isomorphic,
    is_balanced,
    is_strongly_connected,
    out_degrees,
)
from arbcount.search import (
    enumerate_tournaments,
    extremal_eulerian,
    extremal_orientation,
    extremal_tournament,
)

BRUTE_ARB_CHOICES = 20000  # per-instance cap on out-edge choices for the arb oracle
TOUR_EDGE_CAP = 8
LINES = []  # shown in the pytest terminal summary


def report(number, title, failures, elapsed, limit, note=""):
    ok = not failures and (limit is None or elapsed < limit)
    timing = f"{elapsed:.2f}s" + (f" < {limit}s" if limit is not None else "")
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} [{timing}]"
    if note:
        line += f" ({note})"
    if failures:
        line += " :: " + "; ".join(failures[:5])
    if limit is not None and elapsed >= limit:
        line += " :: runtime limit exceeded"
    LINES.append(line)
    print(line, flush=True)
    return ok, line


def check(ok, failures, msg):
    if not ok:
        failures.append(msg)


def acceptance_corpus():
    """500 seeded instances with 2 <= n <= 9: digraphs (some with multi-edges) and tournaments."""
    out = []
    for s in range(250):
        n = 2 + s % 8
        p = (0.3, 0.5, 0.8)[s % 3]
        out.append(C.random_digraph(n, p, 1000 + s, max_mult=1 + s % 2))
    out += [C.random_tournament(2 + s % 8, 5000 + s) for s in range(250)]
    return out


def tour_corpus():
    """Connected balanced digraphs with at most 8 edges."""
    out = []
    seed = 0
    while len(out) < 60:
        n = 2 + seed % 4
        G = C.random_even_graph(n, 0.6, 7000 + seed, max_mult=2)
        seed += 1
        if not 0 < G.edge_count <= TOUR_EDGE_CAP or not G.is_connected():
            continue
        D = C.random_eulerian_orientation(G, seed)
        if is_strongly_connected(D):
            out.append(D)
    return out


def swirl_closed_form(n):
    value = Fraction(((n + 1) // 2) ** n + ((n - 1) // 2) ** n, n * n)
    assert value.denominator == 1
    return int(value)


# ----------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    failures = []
    values = []
    for n in (3, 5, 7, 9, 11):
        T = C.swirl(n)
        closed = swirl_closed_form(n)
        by_det = arb_eulerian(T)
        by_skew = arb_via_skew_charpoly(T)
        values.append(by_det)
        check(by_det == closed, failures, f"n={n}: determinant {by_det} != {closed}")
        check(by_skew == closed, failures, f"n={n}: skew route {by_skew} != {closed}")
    check(values == [1, 11, 379, 27349, 3401861], failures, f"values {values}")
    return report(1, f"swirl arb values {values}", failures, time.perf_counter() - t0, 1)


def criterion_2():
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 11):
        T = C.transitive(n)
        check(allarb(T) == factorial(n - 1), failures, f"allarb(TR_{n}) = {allarb(T)}")
        lb = lb_tournament(out_degrees(T))
        check(lb == factorial(n - 1), failures, f"lb(TR_{n}) = {lb}")
    return report(2, "allarb(TR_n) = lb = (n-1)! for n <= 10", failures, time.perf_counter() - t0, 1)


def criterion_3():
    t0 = time.perf_counter()
    failures = []
    K5 = C.complete_graph(5)
    res = extremal_eulerian(K5, "min-arb")
    # independent count: every one of the 2^10 direction assignments, kept if balanced
    edges = [(u, v) for u, v, _ in K5.edges()]
    balanced = [
        DirectedMultigraph.from_edges(5, [(u, v) if b else (v, u) for b, (u, v) in zip(bits, edges)])
        for bits in product((0, 1), repeat=len(edges))
    ]
    balanced = [D for D in balanced if is_balanced(D)]
    check(res.space_size == len(balanced) == 24, failures, f"orientation count {res.space_size} vs oracle {len(balanced)}")
    check(res.value == 11, failures, f"min arb {res.value}")
    check(
        len(res.witnesses) == 1 and digraphs_isomorphic(res.witnesses[0], C.swirl(5)),
        failures,
        "minimizer class is not SW_5",
    )
    check(all(arb_eulerian(D) == 11 for D in balanced), failures, "some Eulerian tournament has arb != 11")
    check(Fraction(11) < ub_hadamard(5) == Fraction(45, 4), failures, "Hadamard bound 45/4 attained")
    return report(
        3,
        "K_5: min arb 11 only at SW_5, every Eulerian tournament has arb 11 < 45/4",
        failures,
        time.perf_counter() - t0,
        10,
        note=f"{len(balanced)} Eulerian orientations, confirmed by 2^10 brute force",
    )


def criterion_4():
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 6):
        for T in enumerate_tournaments(n):
            a = allarb(T)
            lb = lb_tournament(out_degrees(T))
            check(a >= lb, failures, f"n={n}: allarb {a} < lb {lb}")
            check((a == lb) == is_locally_transitive(T), failures, f"n={n}: equality mismatch")
        res = extremal_tournament(n)
        check(res.value == factorial(n - 1), failures, f"n={n}: min allarb {res.value}")
        check(
            len(res.witnesses) == 1 and digraphs_isomorphic(res.witnesses[0], C.transitive(n)),
            failures,
            f"n={n}: minimizer not TR_n",
        )
    return report(4, "tournaments n <= 5: lower bound, equality iff locally transitive, min at TR_n", failures, time.perf_counter() - t0, 30)


def criterion_5():
    t0 = time.perf_counter()
    failures = []
    P, S = C.paley(7), C.swirl(7)
    check(is_hadamard_tournament(P), failures, "Paley 7 not Hadamard")
    check(arb_eulerian(P) == 392 == ub_hadamard(7), failures, f"arb(Paley 7) = {arb_eulerian(P)}")
    check(ub_frobenius_holds(P).tight, failures, "Frobenius bound not tight on Paley 7")
    fs = ub_frobenius_holds(S)
    check(fs.satisfied and not fs.tight, failures, "Frobenius bound tight on SW_7")
    check(arb_eulerian(S) == 379, failures, f"arb(SW_7) = {arb_eulerian(S)}")
    return report(5, "Paley 7 Hadamard with arb 392 = bound, tight; SW_7 arb 379 not tight", failures, time.perf_counter() - t0, 1)


def criterion_6():
    t0 = time.perf_counter()
    failures = []
    K = C.complete_bipartite(2, 4)
    res = extremal_eulerian(K, "min-arb")
    blow = C.bipartite_blowup_minimizer(2, 4)
    check(res.value == 2 == lb_knm(2, 4), failures, f"min arb {res.value}")
    check(len(res.witnesses) == 1 and digraphs_isomorphic(res.witnesses[0], blow), failures, "minimizer class is not the blow-up")
    check(allarb(blow) == 12, failures, f"allarb(blow-up) = {allarb(blow)}")
    mx = extremal_orientation(K, "max-allarb")
    check(mx.space_size == 256 and mx.value == 16, failures, f"max allarb {mx.value} over {mx.space_size}")
    big = arb_eulerian(C.bipartite_blowup_minimizer(4, 6))
    check(big == 864 == lb_knm(4, 6), failures, f"arb blow-up(4,6) = {big}")
    return report(6, "K_{2,4} min arb 2 at blow-up, allarb 12 vs max 16; blow-up(4,6) arb 864", failures, time.perf_counter() - t0, 30)


def criterion_7():
    t0 = time.perf_counter()
    failures = []
    for n, expected in ((3, 3), (4, 16)):
        G = C.double(C.complete_graph(n))
        res = extremal_eulerian(G, "min-arb")
        check(res.value == expected == lb_sptree(G), failures, f"doubled K_{n}: min {res.value}")
        check(
            len(res.witnesses) == 1 and res.witnesses[0] == C.symmetric_orientation(G),
            failures,
            f"doubled K_{n}: minimizer not the unique symmetric orientation",
        )
    return report(7, "doubled K_3, K_4: unique symmetric minimizer, arb 3 and 16 = sp/2^(n-1)", failures, time.perf_counter() - t0, 60)


def criterion_8():
    t0 = time.perf_counter()
    failures = []
    corpus = acceptance_corpus()
    brute_checked = 0
    for i, D in enumerate(corpus):
        a = allarb(D)
        check(a == allarb_via_charpoly(D), failures, f"#{i}: charpoly route")
        for alpha in (1, 2, 3):
            check(j_perturbation_check(D, alpha), failures, f"#{i}: J-perturbation alpha={alpha}")
        for v in range(D.n):
            if prod(d for u, d in enumerate(out_degrees(D)) if u != v) <= BRUTE_ARB_CHOICES:
                brute_checked += 1
                check(arb_rooted(D, v) == brute_force_arb(D, v), failures, f"#{i}: root {v} brute force")
    tours = tour_corpus()
    for i, D in enumerate(tours):
        check(eulerian_tours(D) == brute_force_tours(D, TOUR_EDGE_CAP), failures, f"tour #{i}")
    graphs = C.connected_graphs(6)
    check(len(graphs) == 53, failures, f"{len(graphs)} connected graphs")
    for G in graphs:
        check(averaging_identity_holds(G), failures, f"averaging on {G.edges()}")
    note = f"{len(corpus)} instances, {brute_checked} rooted brute-force checks, {len(tours)} tour checks, {len(graphs)} graphs averaged"
    return report(8, "identity suite", failures, time.perf_counter() - t0, 120, note=note)


def _lt_by_definition(T):
    a = T.mult

    def transitive(vs):
        return not any(
            (a[x][y] and a[y][z] and a[z][x]) or (a[x][z] and a[z][y] and a[y][x]) for x, y, z in combinations(vs, 3)
        )

    return all(
        transitive([w for w in range(T.n) if a[v][w]]) and transitive([w for w in range(T.n) if a[w][v]])
        for v in range(T.n)
    )


def criterion_9():
    t0 = time.perf_counter()
    failures = []
    total = 0
    for n in range(1, 7):
        for T in enumerate_tournaments(n):
            total += 1
            counts = skew4_minor_counts(T)
            check(set(counts) <= {1, 9}, failures, f"n={n}: 4-minors {sorted(counts)}")
            via_minors = set(counts) <= {1}
            views = (via_minors, locally_transitive_charpoly_check(T), even_minors_all_one(T), _lt_by_definition(T))
            check(len(set(views)) == 1, failures, f"n={n}: conditions disagree {views}")
    return report(9, "local transitivity characterisations agree on all tournaments n <= 6", failures, time.perf_counter() - t0, 300, note=f"{total} tournaments")


def criterion_10():
    t0 = time.perf_counter()
    failures = []
    cap = Fraction(106847, 100000)
    worst = Fraction(0)
    for n in range(1, 200, 2):
        r = ub_hadamard(n) / lb_eulerian_tournament(n)
        worst = max(worst, r)
        check(r <= cap, failures, f"n={n}: ratio {float(r):.6f}")
    return report(10, "Hadamard/lower ratio <= 106847/100000 for odd n <= 199", failures, time.perf_counter() - t0, 1, note=f"max {float(worst):.6f}")


def criterion_11():
    t0 = time.perf_counter()
    failures = []
    corpus = acceptance_corpus() + [C.swirl(n) for n in (3, 5, 7, 9)] + [C.paley(7), C.paley(11)]
    for i, D in enumerate(corpus):
        degs = out_degrees(D)
        a, ub = allarb(D), ub_trivial(degs)
        check(a <= ub < prod(d + 1 for d in degs), failures, f"#{i}: {a} <= {ub} < prod(d+1) fails")
    return report(11, "allarb <= trivial bound < prod(d+1) on the corpus", failures, time.perf_counter() - t0, None, note=f"{len(corpus)} instances")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion):
    ok, line = criterion()
    assert ok, line


if __name__ == "__main__":
    results = [c()[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
