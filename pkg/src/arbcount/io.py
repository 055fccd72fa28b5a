"""Edge-list and DOT formats, and the JSON report envelope.

Edge-list format::

    # comment
    digraph 3          (or: graph 3)
    0 1
    1 2 2              (optional multiplicity, default 1)

All integers in reports are decimal strings and rationals are reduced
``{"num", "den"}`` pairs, so no value ever passes through a float.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .graphs import DirectedMultigraph, UndirectedMultigraph

SCHEMA_VERSION = 1


class GraphFormatError(ValueError):
    pass


def parse_graph(text: str) -> DirectedMultigraph | UndirectedMultigraph:
    header = None
    n = 0
    mult: list[list[int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2 or parts[0] not in ("digraph", "graph"):
                raise GraphFormatError(f"line {lineno}: expected 'digraph <n>' or 'graph <n>'")
            header = parts[0]
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            mult = [[0] * n for _ in range(n)]
            continue
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected '<u> <v> [mult]'")
        try:
            u, v = int(parts[0]), int(parts[1])
            k = int(parts[2]) if len(parts) == 3 else 1
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if k < 1:
            raise GraphFormatError(f"line {lineno}: multiplicity must be >= 1")
        if header == "graph":
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise GraphFormatError(f"line {lineno}: pair {pair} listed twice")
            seen_pairs.add(pair)
            mult[v][u] += k
        mult[u][v] += k
    if header is None:
        raise GraphFormatError("missing header line")
    if header == "digraph":
        return DirectedMultigraph(n, mult)
    return UndirectedMultigraph(n, mult)


def format_graph(G: DirectedMultigraph | UndirectedMultigraph) -> str:
    if isinstance(G, DirectedMultigraph):
        lines = [f"digraph {G.n}"]
    else:
        lines = [f"graph {G.n}"]
    for u, v, k in G.edges():
        lines.append(f"{u} {v}" if k == 1 else f"{u} {v} {k}")
    return "\n".join(lines) + "\n"


def format_dot(G: DirectedMultigraph | UndirectedMultigraph) -> str:
    """DOT with one line per edge (parallel edges repeated)."""
    directed = isinstance(G, DirectedMultigraph)
    arrow = "->" if directed else "--"
    lines = [("digraph" if directed else "graph") + " G {"]
    lines += [f"  {v};" for v in range(G.n)]
    for u, v, k in G.edges():
        lines += [f"  {u} {arrow} {v};"] * k
    lines.append("}")
    return "\n".join(lines) + "\n"


def rational(x: Fraction | int) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def result_entry(
    quantity: str,
    value: int | bool | str,
    bound: Fraction | int | None = None,
    satisfied: bool | None = None,
    tight: bool | None = None,
    witnesses=None,
    approx: bool = False,
    **extra: Any,
) -> dict[str, Any]:
    if isinstance(value, bool):
        entry: dict[str, Any] = {"quantity": quantity, "value": "true" if value else "false"}
    else:
        entry = {"quantity": quantity, "value": str(value)}
    if bound is not None:
        entry["bound"] = rational(bound)
        if approx:
            entry["bound_approx"] = f"{float(Fraction(bound)):.6g}"
    if satisfied is not None:
        entry["satisfied"] = satisfied
    if tight is not None:
        entry["tight"] = tight
    if witnesses is not None:
        entry["witnesses"] = [format_graph(w) for w in witnesses]
    entry.update(extra)
    return entry


def make_report(command: str, instance: str, results: list[dict], runtime_ms: float) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "instance": instance,
        "results": results,
        "runtime_ms": round(runtime_ms, 3),
    }


def dumps_report(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2)
