"""Graph file formats: the edge-list ``GraphFile`` and graph6."""

from __future__ import annotations

import networkx as nx

from .errors import InvalidInputError
from .graphs import Graph, make_graph


def parse_graph_file(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines and blank lines are skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise InvalidInputError("empty graph file")
    header = rows[0]
    if len(header) != 2:
        raise InvalidInputError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
        edges = [(int(a), int(b)) for a, b in (r for r in rows[1:] if len(r) == 2)]
    except ValueError as exc:
        raise InvalidInputError(f"non-integer token: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise InvalidInputError("every edge line must hold exactly two endpoints")
    if n < 0 or m < 0:
        raise InvalidInputError("counts must be non-negative")
    if len(edges) != m:
        raise InvalidInputError(f"header announces {m} edges but {len(edges)} were given")
    return make_graph(n, edges)


def format_graph_file(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{G.n} {G.m}")
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """First graph in a graph6 string (``>>graph6<<`` header allowed)."""
    line = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise InvalidInputError("empty graph6 data")
    try:
        g = nx.from_graph6_bytes(line.encode("ascii"))
    except (ValueError, IndexError, UnicodeEncodeError, nx.NetworkXError) as exc:
        raise InvalidInputError(f"bad graph6 data: {exc}") from None
    return make_graph(g.number_of_nodes(), g.edges)


def format_graph6(G: Graph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
