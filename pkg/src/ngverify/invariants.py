"""Exact independence, vertex cover and matching numbers.

``alpha_exact`` is a bitmask branch-and-bound; ``alpha_bruteforce`` and
``matching_bruteforce`` are deliberately naive exhaustive searches that act
as independent oracles for it and for the blossom matcher.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any

from .graph import Graph, complement, line_graph

__all__ = [
    "SolverGuardError",
    "BRUTEFORCE_MAX_N",
    "LINE_GRAPH_MAX_EDGES",
    "MATCHING_BRUTEFORCE_MAX_EDGES",
    "alpha_bruteforce",
    "alpha_exact",
    "beta",
    "matching_number",
    "matching_bruteforce",
    "matching_via_line_graph",
    "has_perfect_matching",
    "is_independent",
    "is_matching",
    "InvariantReport",
    "invariant_report",
]

BRUTEFORCE_MAX_N = 25
LINE_GRAPH_MAX_EDGES = 64
MATCHING_BRUTEFORCE_MAX_EDGES = 24


class SolverGuardError(ValueError):
    """An instance exceeds the size guard of an exponential-time routine."""


def is_independent(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(not g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def is_matching(g: Graph, edges) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- independence number ------------------------------------------------------


def alpha_bruteforce(g: Graph) -> tuple[int, list[int]]:
    """Exhaustive maximum independent set, for ``n <= 25``.

    Walks every independent set in include-first label order, so the first
    maximum set encountered is the lexicographically smallest one.
    """
    n = g.n
    if n > BRUTEFORCE_MAX_N:
        raise SolverGuardError(
            f"alpha_bruteforce guard: n <= {BRUTEFORCE_MAX_N}, got n={n}"
        )
    masks = g.masks
    best_size = -1
    best_mask = 0

    def walk(v: int, chosen: int, blocked: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size + (n - v) <= best_size:
            return
        if v == n:
            best_size, best_mask = size, chosen
            return
        if not (blocked >> v) & 1:
            walk(v + 1, chosen | (1 << v), blocked | masks[v], size + 1)
        walk(v + 1, chosen, blocked, size)

    walk(0, 0, 0, 0)
    return best_size, _members(best_mask)


def _clique_cover_bound(masks: tuple[int, ...], cand: int) -> int:
    # Greedy partition of cand into cliques; their number bounds alpha from above.
    commons: list[int] = []
    for v in _members(cand):
        bit = 1 << v
        for k, common in enumerate(commons):
            if common & bit:
                commons[k] = common & masks[v]
                break
        else:
            commons.append(masks[v] & cand)
    return len(commons)


def alpha_exact(g: Graph) -> tuple[int, list[int]]:
    """Maximum independent set by branch and bound.

    Branches on a maximum-degree vertex of the remaining subgraph (smallest
    label on ties), include branch first, and prunes with a greedy clique
    cover bound.  Returns the first optimum found under that order.
    """
    masks = g.masks
    best_size = 0
    best_mask = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _clique_cover_bound(masks, cand) <= best_size:
            return
        pivot, pivot_deg = -1, -1
        for v in _members(cand):
            d = (masks[v] & cand).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if pivot_deg == 0:
            total = size + cand.bit_count()
            if total > best_size:
                best_size, best_mask = total, chosen | cand
            return
        bit = 1 << pivot
        search(cand & ~masks[pivot] & ~bit, chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return best_size, _members(best_mask)


def beta(g: Graph) -> int:
    """Vertex cover number, as ``n - alpha``."""
    return g.n - alpha_exact(g)[0]


# -- matchings ----------------------------------------------------------------


def _blossom_matching(g: Graph) -> list[int]:
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            prev = parent[end]
            nxt = match[prev]
            match[end], match[prev] = prev, end
            end = nxt
    return match


def matching_number(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching via Edmonds' blossom algorithm.

    Returns the size and the matched edges as sorted ``(u, v)`` pairs with
    ``u < v``.
    """
    match = _blossom_matching(g)
    edges = sorted((u, v) for u, v in enumerate(match) if u < v)
    return len(edges), edges


def matching_bruteforce(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Exhaustive maximum matching over edge subsets, for small edge counts."""
    edges = g.edges()
    if len(edges) > MATCHING_BRUTEFORCE_MAX_EDGES:
        raise SolverGuardError(
            f"matching_bruteforce guard: e <= {MATCHING_BRUTEFORCE_MAX_EDGES}, "
            f"got e={len(edges)}"
        )
    best: list[tuple[int, int]] = []

    def walk(i: int, used: int, picked: list[tuple[int, int]]) -> None:
        nonlocal best
        if i == len(edges):
            if len(picked) > len(best):
                best = list(picked)
            return
        u, v = edges[i]
        if not (used >> u) & 1 and not (used >> v) & 1:
            picked.append((u, v))
            walk(i + 1, used | (1 << u) | (1 << v), picked)
            picked.pop()
        walk(i + 1, used, picked)

    walk(0, 0, [])
    return len(best), best


def matching_via_line_graph(g: Graph) -> int:
    """Matching number computed as the independence number of the line graph."""
    if g.edge_count > LINE_GRAPH_MAX_EDGES:
        raise SolverGuardError(
            f"matching_via_line_graph guard: e <= {LINE_GRAPH_MAX_EDGES}, "
            f"got e={g.edge_count}"
        )
    lg, _ = line_graph(g)
    return alpha_exact(lg)[0]


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g)[0] == g.n // 2


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    alpha: int
    beta: int
    nu: int
    alpha_witness: tuple[int, ...]
    nu_witness: tuple[tuple[int, int], ...]
    m_c: int
    alpha_c: int
    beta_c: int
    nu_c: int
    alpha_witness_c: tuple[int, ...]
    nu_witness_c: tuple[tuple[int, int], ...]

    @property
    def ng_sum(self) -> int:
        return self.beta + self.beta_c

    @property
    def ng_product(self) -> int:
        return self.beta * self.beta_c

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "beta": self.beta,
            "nu": self.nu,
            "alpha_witness": list(self.alpha_witness),
            "nu_witness": [list(e) for e in self.nu_witness],
            "m_c": self.m_c,
            "alpha_c": self.alpha_c,
            "beta_c": self.beta_c,
            "nu_c": self.nu_c,
            "alpha_witness_c": list(self.alpha_witness_c),
            "nu_witness_c": [list(e) for e in self.nu_witness_c],
            "ng_sum": self.ng_sum,
            "ng_product": self.ng_product,
        }


def invariant_report(g: Graph) -> InvariantReport:
    gc = complement(g)
    a, a_w = alpha_exact(g)
    nu, nu_w = matching_number(g)
    ac, ac_w = alpha_exact(gc)
    nuc, nuc_w = matching_number(gc)
    return InvariantReport(
        n=g.n,
        m=g.edge_count,
        alpha=a,
        beta=g.n - a,
        nu=nu,
        alpha_witness=tuple(a_w),
        nu_witness=tuple(nu_w),
        m_c=gc.edge_count,
        alpha_c=ac,
        beta_c=gc.n - ac,
        nu_c=nuc,
        alpha_witness_c=tuple(ac_w),
        nu_witness_c=tuple(nuc_w),
    )
