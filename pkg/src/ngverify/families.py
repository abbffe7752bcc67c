"""Generators for the named graph families.

Labeling conventions are fixed so that witness sets stay stable:

* wheel, fan, helm: hub is vertex 0, rim/path is ``1..n``; helm pendant of
  rim vertex ``i`` is ``n + i``.
* complete sun: inner clique ``w_i = i`` for ``i < n``; outer vertex
  ``u_i = n + i`` is adjacent to ``w_i`` and ``w_{(i+1) mod n}``.
* sunlet: cycle ``0..n-1``; pendant of cycle vertex ``i`` is ``n + i``.
* armed crown ``(m, n)``: cycle ``0..n-1``; the arm rooted at cycle vertex
  ``i`` is ``i, n + i(m-1), ..., n + i(m-1) + m - 2`` in path order, so the
  graph has ``m * n`` vertices.
* complete bipartite ``(m, n)``: part A is ``0..m-1``, part B ``m..m+n-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graph import Graph, empty_graph, from_edge_list, join

__all__ = [
    "Family",
    "FamilySpec",
    "parse_family_spec",
    "build",
    "primitive_family",
    "complete",
    "empty",
    "path",
    "cycle",
    "complete_bipartite",
    "wheel",
    "fan",
    "helm",
    "complete_sun",
    "sunlet",
    "armed_crown",
]


class Family(str, Enum):
    COMPLETE = "complete"
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE_BIPARTITE = "complete_bipartite"
    WHEEL = "wheel"
    FAN = "fan"
    HELM = "helm"
    COMPLETE_SUN = "complete_sun"
    SUNLET = "sunlet"
    ARMED_CROWN = "armed_crown"


# family -> minimum value of each parameter, in order
PARAM_MINIMA: dict[Family, tuple[int, ...]] = {
    Family.COMPLETE: (1,),
    Family.EMPTY: (1,),
    Family.PATH: (1,),
    Family.CYCLE: (3,),
    Family.COMPLETE_BIPARTITE: (1, 1),
    Family.WHEEL: (3,),
    Family.FAN: (2,),
    Family.HELM: (3,),
    Family.COMPLETE_SUN: (3,),
    Family.SUNLET: (3,),
    Family.ARMED_CROWN: (2, 3),
}

PARAM_NAMES: dict[Family, tuple[str, ...]] = {
    f: ("m", "n") if len(mins) == 2 else ("n",) for f, mins in PARAM_MINIMA.items()
}

_ALIASES = {
    "bipartite": Family.COMPLETE_BIPARTITE,
    "k": Family.COMPLETE,
    "sun": Family.COMPLETE_SUN,
    "crown": Family.ARMED_CROWN,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        minima = PARAM_MINIMA[self.family]
        if len(self.params) != len(minima):
            raise ValueError(
                f"{self.family.value} takes {len(minima)} parameter(s), "
                f"got {len(self.params)}"
            )
        for name, value, low in zip(PARAM_NAMES[self.family], self.params, minima):
            if value < low:
                raise ValueError(
                    f"{self.family.value} requires {name} >= {low}, got {value}"
                )

    def build(self) -> Graph:
        return _BUILDERS[self.family](*self.params)

    def __str__(self) -> str:
        return f"{self.family.value}:{','.join(map(str, self.params))}"


_SPEC_RE = re.compile(r"^\s*([A-Za-z_]+)\s*:\s*(\d+(?:\s*,\s*\d+)*)\s*$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``name:p1[,p2]`` text such as ``wheel:4`` or ``bipartite:2,3``."""
    match = _SPEC_RE.match(text)
    if not match:
        raise ValueError(f"malformed family spec {text!r}; expected NAME:P[,Q]")
    name = match.group(1).lower()
    try:
        family = _ALIASES.get(name) or Family(name)
    except ValueError:
        known = ", ".join(sorted([f.value for f in Family] + list(_ALIASES)))
        raise ValueError(f"unknown family {name!r}; known: {known}") from None
    params = tuple(int(p) for p in match.group(2).split(","))
    return FamilySpec(family, params)


def build(family: Family | str, *params: int) -> Graph:
    return FamilySpec(Family(family), tuple(params)).build()


def _require(name: str, value: int, low: int) -> None:
    if value < low:
        raise ValueError(f"{name} must be >= {low}, got {value}")


def complete(n: int) -> Graph:
    _require("n", n, 1)
    return from_edge_list(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _require("n", n, 1)
    return empty_graph(n)


def path(n: int) -> Graph:
    _require("n", n, 1)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require("n", n, 3)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    _require("m", m, 1)
    _require("n", n, 1)
    return from_edge_list(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def primitive_family(kind: str, *params: int) -> Graph:
    builders = {
        "complete": complete,
        "empty": empty,
        "path": path,
        "cycle": cycle,
        "complete_bipartite": complete_bipartite,
    }
    if kind not in builders:
        raise ValueError(f"unknown primitive family {kind!r}")
    return builders[kind](*params)


def wheel(n: int) -> Graph:
    """``K_1 + C_n``: ``n + 1`` vertices, ``2n`` edges."""
    _require("n", n, 3)
    return join(complete(1), cycle(n))


def fan(n: int) -> Graph:
    """``K_1 + P_n``: ``n + 1`` vertices, ``2n - 1`` edges."""
    _require("n", n, 2)
    return join(complete(1), path(n))


def helm(n: int) -> Graph:
    _require("n", n, 3)
    edges = list(wheel(n).edges())
    edges += [(i, n + i) for i in range(1, n + 1)]
    return from_edge_list(2 * n + 1, edges)


def complete_sun(n: int) -> Graph:
    _require("n", n, 3)
    edges = list(combinations(range(n), 2))
    for i in range(n):
        edges.append((n + i, i))
        edges.append((n + i, (i + 1) % n))
    return from_edge_list(2 * n, edges)


def sunlet(n: int) -> Graph:
    _require("n", n, 3)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return from_edge_list(2 * n, edges)


def armed_crown(m: int, n: int) -> Graph:
    """Cycle ``C_n`` with a path on ``m`` vertices rooted at every cycle vertex."""
    _require("m", m, 2)
    _require("n", n, 3)
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        arm = [i] + [n + i * (m - 1) + k for k in range(m - 1)]
        edges += list(zip(arm, arm[1:]))
    return from_edge_list(m * n, edges)


_BUILDERS = {
    Family.COMPLETE: complete,
    Family.EMPTY: empty,
    Family.PATH: path,
    Family.CYCLE: cycle,
    Family.COMPLETE_BIPARTITE: complete_bipartite,
    Family.WHEEL: wheel,
    Family.FAN: fan,
    Family.HELM: helm,
    Family.COMPLETE_SUN: complete_sun,
    Family.SUNLET: sunlet,
    Family.ARMED_CROWN: armed_crown,
}
