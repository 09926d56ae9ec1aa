"""The generating graph Gamma_n of D_n and its nontrivial component Delta_n.

Vertices follow the block order used for A(n): all reflections (Omega_2), then
the generating rotations (Omega_1), then the remaining rotations (Omega_3), each
block by ascending exponent. Delta_n is therefore the first n + phi(n) vertices.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .dihedral import (
    DihedralElement,
    b_set,
    enumerate_gen,
    format_element,
    generates_pair,
    omega_partition,
)
from .numtheory import euler_phi

UNREACHABLE = math.inf


@dataclass(frozen=True)
class GraphStructure:
    n: int
    vertices: tuple[DihedralElement, ...]
    adjacency: tuple[tuple[int, ...], ...]
    name: str = "Gamma"
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def index(self, x: DihedralElement) -> int:
        return self._index[x]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def has_edge(self, i: int, j: int) -> bool:
        nb = self.adjacency[i]
        # adjacency lists are sorted
        lo, hi = 0, len(nb)
        while lo < hi:
            mid = (lo + hi) // 2
            if nb[mid] < j:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nb) and nb[lo] == j

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j]

    def neighbors(self, x: DihedralElement) -> set[DihedralElement]:
        return {self.vertices[j] for j in self.adjacency[self.index(x)]}

    def adjacency_matrix(self) -> list[list[int]]:
        m = [[0] * self.order for _ in range(self.order)]
        for i, nb in enumerate(self.adjacency):
            row = m[i]
            for j in nb:
                row[j] = 1
        return m

    def laplacian_matrix(self) -> list[list[int]]:
        m = [[-a for a in row] for row in self.adjacency_matrix()]
        for i, nb in enumerate(self.adjacency):
            m[i][i] = len(nb)
        return m

    def bitsets(self) -> list[int]:
        """Neighbourhoods as int bitmasks, bit j set when j is adjacent."""
        out = []
        for nb in self.adjacency:
            mask = 0
            for j in nb:
                mask |= 1 << j
            out.append(mask)
        return out

    def induced(self, keep: Sequence[int], name: str | None = None) -> GraphStructure:
        keep = list(keep)
        pos = {v: k for k, v in enumerate(keep)}
        adj = tuple(
            tuple(sorted(pos[j] for j in self.adjacency[i] if j in pos)) for i in keep
        )
        return GraphStructure(
            self.n, tuple(self.vertices[i] for i in keep), adj, name or self.name
        )

    def labels(self) -> list[str]:
        return [format_element(v) for v in self.vertices]


def vertex_order(n: int) -> list[DihedralElement]:
    part = omega_partition(n)
    return sorted(part.omega2) + sorted(part.omega1) + sorted(part.omega3)


def _from_pairs(n: int, verts: list[DihedralElement], pairs, name: str) -> GraphStructure:
    idx = {v: i for i, v in enumerate(verts)}
    nbrs: list[set[int]] = [set() for _ in verts]
    for x, y in pairs:
        if x != y:
            nbrs[idx[x]].add(idx[y])
            nbrs[idx[y]].add(idx[x])
    return GraphStructure(n, tuple(verts), tuple(tuple(sorted(s)) for s in nbrs), name)


def build_gamma(n: int, method: str = "decomposition") -> GraphStructure:
    """Gamma_n on all 2n elements.

    ``method="decomposition"`` takes the edges from the closed-form generating
    pair set; ``method="closure"`` tests every pair by subgroup closure (slow,
    quadratic in the group order times the closure cost).
    """
    verts = vertex_order(n)
    if method == "decomposition":
        pairs = enumerate_gen(n)
    elif method == "closure":
        pairs = (
            (verts[i], verts[j])
            for i in range(len(verts))
            for j in range(i + 1, len(verts))
            if generates_pair(verts[i], verts[j], n)
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    return _from_pairs(n, verts, pairs, "Gamma")


def build_delta(n: int, method: str = "decomposition") -> GraphStructure:
    g = build_gamma(n, method)
    return g.induced(range(n + euler_phi(n)), name="Delta")


def closed_form_neighbors(n: int, x: DihedralElement) -> set[DihedralElement]:
    part = omega_partition(n)
    if x in part.omega1:
        return set(part.omega2)
    if x.is_reflection:
        return set(part.omega1) | b_set(n, x.exponent)
    return set()


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    degree_of_omega1: int
    degree_of_omega2: int
    degree_of_omega3: int = 0

    @property
    def degree_sum(self) -> int:
        phi = euler_phi(self.n)
        return (
            phi * self.degree_of_omega1
            + self.n * self.degree_of_omega2
            + (self.n - phi) * self.degree_of_omega3
        )


def degree_summary(n: int) -> DegreeSummary:
    return DegreeSummary(n, n, 2 * euler_phi(n), 0)


def bfs_distances(g: GraphStructure, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def all_pairs_distances(g: GraphStructure) -> list[list[float]]:
    return [bfs_distances(g, s) for s in range(g.order)]


def pairwise_distance(g: GraphStructure, u: DihedralElement, v: DihedralElement) -> float:
    """BFS distance; ``UNREACHABLE`` (infinity) across components."""
    return bfs_distances(g, g.index(u))[g.index(v)]


def closed_form_distance(n: int, x: DihedralElement, y: DihedralElement) -> int:
    """Distance in Delta_n read off the neighbourhood structure, without search."""
    if x == y:
        return 0
    part = omega_partition(n)
    if x in part.omega3 or y in part.omega3:
        raise ValueError("Omega_3 elements are not vertices of Delta_n")
    if x.is_rotation and y.is_rotation:
        return 2
    if x.is_rotation or y.is_rotation:
        return 1
    return 1 if gcd(y.exponent - x.exponent, n) == 1 else 2


def component_labels(g: GraphStructure) -> list[int]:
    label = [-1] * g.order
    count = 0
    for s in range(g.order):
        if label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if label[v] < 0:
                    label[v] = count
                    stack.append(v)
        count += 1
    return label


def connected_components(g: GraphStructure) -> int:
    return max(component_labels(g), default=-1) + 1


def girth(g: GraphStructure) -> float:
    """Shortest cycle length, or infinity for a forest."""
    best = UNREACHABLE
    for s in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def diameter(g: GraphStructure) -> float:
    return max((max(row) for row in all_pairs_distances(g)), default=0)


def to_dot(g: GraphStructure) -> str:
    lines = [f"graph {g.name}_{g.n} {{"]
    for i, lab in enumerate(g.labels()):
        lines.append(f'  v{i} [label="{lab}"];')
    for i, j in g.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: GraphStructure) -> str:
    payload = {"n": g.n, "vertices": g.labels(), "edges": [list(e) for e in g.edges()]}
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> tuple[int, list[str], list[tuple[int, int]]]:
    data = json.loads(text)
    return data["n"], data["vertices"], [tuple(e) for e in data["edges"]]



def square_is_positive(g: GraphStructure) -> bool:
    """A^2 entrywise positive: every pair of vertices, equal or not, has a common neighbour."""
    rows = g.bitsets()
    return all(rows[i] & rows[j] for i in range(g.order) for j in range(i, g.order))
