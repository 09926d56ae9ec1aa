"""Structural invariants of Delta_n: closed forms plus exact exhaustive solvers.

Solvers work on int bitsets (bit j of ``adj[i]`` set iff i ~ j) and search in a
fixed order, so any counterexample they produce is reproducible.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Optional, Sequence

from .dihedral import ref, rot
from .graph import GraphStructure, build_delta
from .numtheory import euler_phi, factorize, is_power_of_two, is_prime, least_prime_factor, units


@dataclass(frozen=True)
class SolverCutoffs:
    """Largest n handed to each exhaustive solver."""

    clique: int = 30
    independence: int = 30
    domination: int = 30
    chromatic: int = 20
    pancyclic: int = 12
    planarity: int = 12

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if value < 2:
                raise ValueError(f"cutoff {name} must be >= 2 (got {value})")


class CutoffExceeded(ValueError):
    pass


@dataclass(frozen=True)
class InvariantReport:
    n: int
    name: str
    closed_form: object
    brute_force: Optional[object] = None

    @property
    def agrees(self) -> Optional[bool]:
        if self.brute_force is None:
            return None
        return self.closed_form == self.brute_force

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "name": self.name,
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "agrees": self.agrees,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2 (got {n})")


# ---------------------------------------------------------------------------
# closed forms


def is_regular(n: int) -> bool:
    _check_n(n)
    return is_power_of_two(n)


def is_eulerian(n: int) -> bool:
    _check_n(n)
    return n % 2 == 0


def planarity_class(n: int) -> bool:
    _check_n(n)
    return n in (2, 3, 4, 6)


def domination_numbers(n: int) -> tuple[int, int]:
    _check_n(n)
    return (1 if is_prime(n) else 2), 2


def clique_number(n: int) -> int:
    _check_n(n)
    return least_prime_factor(n) + 1


def chromatic_number(n: int) -> int:
    return clique_number(n)


def independence_number(n: int) -> int:
    """n/p1 when n has two or more distinct primes, phi(n) otherwise.

    Too small for odd n like 15 and 21, where phi(n) > n/p1; see
    ``independence_number_corrected``.
    """
    _check_n(n)
    if len(factorize(n).factors) > 1:
        return n // least_prime_factor(n)
    return euler_phi(n)


def independence_number_corrected(n: int) -> int:
    # Omega_1 is always independent, so phi(n) is a lower bound even when k > 1
    _check_n(n)
    return max(n // least_prime_factor(n), euler_phi(n))


def witness_clique(n: int) -> list:
    p = least_prime_factor(n)
    if p == n:
        return [ref(i, n) for i in range(n)] + [rot(1, n)]
    return [ref(i, n) for i in range(p)] + [rot(1, n)]


def witness_independent_set(n: int) -> list:
    p = least_prime_factor(n)
    return [ref(i, n) for i in range(0, n, p)]


def hamiltonian_cycle(n: int) -> list:
    """s, then s r^1 .. s r^(n-1) in turn, with r^a slotted in just before s r^a for each unit a.

    Consecutive reflections differ by r^1 (a unit), every generating rotation is
    adjacent to every reflection, and s r^(n-1) closes back to s. The start
    vertex is repeated at the end.
    """
    _check_n(n)
    us = set(units(n))
    walk = [ref(0, n)]
    for i in range(1, n):
        if i in us:
            walk.append(rot(i, n))
        walk.append(ref(i, n))
    walk.append(ref(0, n))
    return walk


def validate_cycle(g: GraphStructure, walk: Sequence) -> bool:
    """A closed walk visiting every vertex of g exactly once along edges."""
    if len(walk) != g.order + 1 or walk[0] != walk[-1]:
        return False
    try:
        idx = [g.index(v) for v in walk]
    except KeyError:
        return False
    if len(set(idx[:-1])) != g.order:
        return False
    return all(g.has_edge(a, b) for a, b in zip(idx, idx[1:]))


# ---------------------------------------------------------------------------
# exhaustive solvers on bitsets


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_clique_bitset(adj: Sequence[int]) -> int:
    """Exact maximum clique by branch and bound with a popcount bound."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + _popcount(cand) <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, (1 << len(adj)) - 1)
    return best


def _complement(adj: Sequence[int]) -> list[int]:
    full = (1 << len(adj)) - 1
    return [full & ~a & ~(1 << i) for i, a in enumerate(adj)]


def max_independent_set_bitset(adj: Sequence[int]) -> int:
    return max_clique_bitset(_complement(adj))


def min_dominating_set_size(adj: Sequence[int], total: bool = False) -> int:
    """Smallest k with a k-subset dominating every vertex.

    Closed neighbourhoods for ordinary domination, open ones for total domination.
    """
    nv = len(adj)
    full = (1 << nv) - 1
    cover = list(adj) if total else [a | (1 << i) for i, a in enumerate(adj)]
    for k in range(1, nv + 1):
        for subset in combinations(range(nv), k):
            acc = 0
            for v in subset:
                acc |= cover[v]
            if acc == full:
                return k
    raise ValueError("graph has an isolated vertex; no total dominating set")


def k_colorable(adj: Sequence[int], k: int) -> bool:
    """Backtracking k-colouring, picking the most saturated vertex next."""
    nv = len(adj)
    color = [-1] * nv
    nbrs = [[j for j in range(nv) if adj[i] >> j & 1] for i in range(nv)]

    def pick() -> int:
        best, key = -1, None
        for v in range(nv):
            if color[v] < 0:
                sat = len({color[u] for u in nbrs[v] if color[u] >= 0})
                cand = (sat, len(nbrs[v]), -v)
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == nv:
            return True
        v = pick()
        taken = {color[u] for u in nbrs[v]}
        # a fresh colour is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if solve(colored + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return solve(0, 0)


def chromatic_number_exact(adj: Sequence[int]) -> int:
    k = max(1, max_clique_bitset(adj))
    while not k_colorable(adj, k):
        k += 1
    return k


def cycle_lengths_through(adj: Sequence[int], start: int, lengths: Sequence[int]) -> set[int]:
    """Which of the given cycle lengths occur on a cycle through ``start``."""
    nv = len(adj)
    wanted = set(lengths)
    found: set[int] = set()
    path = [start]
    on_path = 1 << start

    def dfs(v: int) -> bool:
        nonlocal on_path
        length = len(path)
        if length >= 3 and adj[v] >> start & 1 and length in wanted and length not in found:
            found.add(length)
            if found == wanted:
                return True
        if length >= max(wanted - found, default=0):
            return False
        nxt = adj[v] & ~on_path
        while nxt:
            u = nxt.bit_length() - 1
            nxt &= ~(1 << u)
            path.append(u)
            on_path |= 1 << u
            if dfs(u):
                return True
            path.pop()
            on_path &= ~(1 << u)
        return False

    if nv:
        dfs(start)
    return found


def pancyclic_check(n: int, max_n_for_search: int = SolverCutoffs.pancyclic) -> bool:
    """Cycles through s of every length 3 .. n + phi(n), by search."""
    _check_n(n)
    if n > max_n_for_search:
        raise CutoffExceeded(f"n={n} exceeds the pancyclicity cutoff {max_n_for_search}")
    g = build_delta(n)
    want = range(3, g.order + 1)
    return cycle_lengths_through(g.bitsets(), g.index(ref(0, n)), want) == set(want)


def k33_witness(n: int) -> Optional[tuple[list, list]]:
    """Three generating rotations and three reflections, pairwise adjacent across; None if phi(n) < 3."""
    us = units(n)
    if len(us) < 3:
        return None
    left = [rot(a, n) for a in us[:3]]
    right = [ref(i, n) for i in range(3)]
    g = build_delta(n)
    if all(g.has_edge(g.index(x), g.index(y)) for x in left for y in right):
        return left, right
    return None


def planarity_brute(n: int) -> bool:
    """True planar / False non-planar, from a K_{3,3} witness or an embedding search."""
    if k33_witness(n) is not None:
        return False
    import networkx as nx

    g = build_delta(n)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges())
    planar, _ = nx.check_planarity(nxg)
    return planar


# ---------------------------------------------------------------------------
# reports


def invariant_reports(n: int, cutoffs: SolverCutoffs = SolverCutoffs()) -> list[InvariantReport]:
    _check_n(n)
    g = build_delta(n)
    adj = g.bitsets()
    degs = g.degrees()
    reports = [
        InvariantReport(n, "regular", is_regular(n), len(set(degs)) == 1),
        InvariantReport(n, "eulerian", is_eulerian(n), all(d % 2 == 0 for d in degs)),
        InvariantReport(n, "hamiltonian", True, validate_cycle(g, hamiltonian_cycle(n))),
    ]
    dom, tdom = domination_numbers(n)
    small = {
        "clique": (clique_number(n), cutoffs.clique, lambda: max_clique_bitset(adj)),
        "independence": (
            independence_number(n),
            cutoffs.independence,
            lambda: max_independent_set_bitset(adj),
        ),
        "domination": (dom, cutoffs.domination, lambda: min_dominating_set_size(adj)),
        "total_domination": (
            tdom,
            cutoffs.domination,
            lambda: min_dominating_set_size(adj, total=True),
        ),
        "chromatic": (chromatic_number(n), cutoffs.chromatic, lambda: chromatic_number_exact(adj)),
        "planar": (planarity_class(n), cutoffs.planarity, lambda: planarity_brute(n)),
        "pancyclic": (True, cutoffs.pancyclic, lambda: pancyclic_check(n, cutoffs.pancyclic)),
    }
    for name, (closed, cutoff, solver) in small.items():
        reports.append(InvariantReport(n, name, closed, solver() if n <= cutoff else None))
    return reports
