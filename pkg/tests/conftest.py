import random
from itertools import combinations

import pytest

from ngverify import families as fam
from ngverify.graph import Graph, from_edge_list


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def max_clique_bruteforce(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
            best = len(vs)
    return best


def min_vertex_cover_bruteforce(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        for cover in combinations(range(g.n), k):
            s = set(cover)
            if all(u in s or v in s for u, v in edges):
                return k
    raise AssertionError("unreachable")


def family_instances(n_max: int = 10, m_max: int = 4):
    """Every generator at every parameter up to the given bounds."""
    out = []
    for n in range(1, n_max + 1):
        out += [("complete", (n,)), ("empty", (n,)), ("path", (n,))]
        if n >= 2:
            out.append(("fan", (n,)))
        if n >= 3:
            for name in ("cycle", "wheel", "helm", "complete_sun", "sunlet"):
                out.append((name, (n,)))
        for m in range(1, min(m_max, n) + 1):
            out.append(("complete_bipartite", (m, n)))
        if n >= 3:
            for m in range(2, m_max + 1):
                out.append(("armed_crown", (m, n)))
    return [(f"{name}:{','.join(map(str, p))}", fam.build(name, *p)) for name, p in out]


@pytest.fixture(scope="session")
def family_sweep():
    return family_instances()


@pytest.fixture
def rng():
    return random.Random(20261019)


def min_vertex_cover_search(g: Graph) -> int:
    """Exact vertex cover number searched from the cover side.

    Branches on a max-degree vertex v: either v joins the cover or all of its
    live neighbours do.  A greedy matching of the live subgraph is the lower
    bound.  Shares no code with the independence-number solvers.
    """
    masks = g.masks
    best = g.n

    def lower_bound(alive: int) -> int:
        used, size = 0, 0
        for u in range(g.n):
            if not (alive >> u) & 1 or (used >> u) & 1:
                continue
            free = masks[u] & alive & ~used
            if free:
                w = (free & -free).bit_length() - 1
                used |= (1 << u) | (1 << w)
                size += 1
        return size

    def rec(alive: int, size: int) -> None:
        nonlocal best
        pivot, deg = -1, 0
        for v in range(g.n):
            if (alive >> v) & 1:
                d = (masks[v] & alive).bit_count()
                if d > deg:
                    pivot, deg = v, d
        if deg == 0:
            best = min(best, size)
            return
        if size + lower_bound(alive) >= best:
            return
        nb = masks[pivot] & alive
        rec(alive & ~(1 << pivot), size + 1)
        rec(alive & ~nb & ~(1 << pivot), size + nb.bit_count())

    rec((1 << g.n) - 1, 0)
    return best


_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
