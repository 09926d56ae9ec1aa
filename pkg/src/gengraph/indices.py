"""Distance- and degree-based topological indices of Delta_n.

Brute force (one all-pairs BFS per n) is ground truth. Closed forms are kept as
hypotheses and compared against it; the known-bad ones surface through
``errata_report``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .graph import all_pairs_distances, build_delta
from .numtheory import euler_phi, is_power_of_two, is_prime

INDEX_NAMES = ("Wiener", "HyperWiener", "ZagrebM1", "ZagrebM2", "SchultzMTI", "Gutman")
CSV_SCHEMA = 1


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2 (got {n})")


@dataclass(frozen=True)
class IndexReport:
    n: int
    index_name: str
    closed_form: Fraction
    brute_force: Fraction
    variant: str = "general"

    @property
    def agrees(self) -> bool:
        return self.closed_form == self.brute_force


@dataclass(frozen=True)
class DistanceClassSums:
    sum_omega1_pairs: int
    sum_cross_pairs: int
    sum_omega2_pairs: int

    @property
    def total(self) -> int:
        return self.sum_omega1_pairs + self.sum_cross_pairs + self.sum_omega2_pairs


def distance_class_sums(n: int) -> DistanceClassSums:
    _check_n(n)
    phi = euler_phi(n)
    return DistanceClassSums(
        phi * (phi - 1),
        n * phi,
        (n * phi + 2 * n * (n - phi - 1)) // 2,
    )


def distance_class_sums_bfs(n: int) -> DistanceClassSums:
    _check_n(n)
    g = build_delta(n)
    dist = all_pairs_distances(g)
    s11 = s12 = s22 = 0
    for i in range(g.order):
        for j in range(i + 1, g.order):
            d = int(dist[i][j])
            ri, rj = g.vertices[i].is_rotation, g.vertices[j].is_rotation
            if ri and rj:
                s11 += d
            elif ri or rj:
                s12 += d
            else:
                s22 += d
    return DistanceClassSums(s11, s12, s22)


@lru_cache(maxsize=256)
def brute_indices(n: int) -> dict[str, Fraction]:
    """All six indices from a single all-pairs BFS on Delta_n."""
    _check_n(n)
    g = build_delta(n)
    dist = all_pairs_distances(g)
    deg = g.degrees()
    w = d2 = mti = gut = 0
    for i in range(g.order):
        row = dist[i]
        for j in range(i + 1, g.order):
            d = int(row[j])
            w += d
            d2 += d * d
            mti += d * (deg[i] + deg[j])
            gut += d * deg[i] * deg[j]
    m1 = sum(x * x for x in deg)
    m2 = sum(deg[i] * deg[j] for i, j in g.edges())
    return {
        "Wiener": Fraction(w),
        "HyperWiener": Fraction(w + d2, 2),
        "ZagrebM1": Fraction(m1),
        "ZagrebM2": Fraction(m2),
        "SchultzMTI": Fraction(mti),
        "Gutman": Fraction(gut),
    }


# closed forms in n and phi = phi(n)

def _general(n: int) -> dict[str, Fraction]:
    f = Fraction(euler_phi(n))
    return {
        "Wiener": f * (f + Fraction(n - 2, 2)) + n * (n - 1),
        "HyperWiener": Fraction(3, 2) * (f * f - f + n * (n - 1)),
        "ZagrebM1": n * n * f + 4 * n * f * f,
        "ZagrebM2": 2 * n * f * f * (n + f),
        "SchultzMTI": n * f * (2 * f + 5 * n - 6),
        "Gutman": n * f * ((7 * n - 6) * f - n),
    }


def _prime(p: int) -> dict[str, Fraction]:
    p = Fraction(p)
    return {
        "Wiener": (5 * p - 4) / 2 * (p - 1),
        "HyperWiener": 3 * (p - 1) ** 2,
        "ZagrebM1": p * (p - 1) * (5 * p - 4),
        "ZagrebM2": 2 * p * (p - 1) ** 2 * (2 * p - 1),
        "SchultzMTI": p * (p - 1) * (7 * p - 8),
        "Gutman": p * (p - 1) * (7 * (p - 1) ** 2 - 1),
    }


def _power_of_two(n: int) -> dict[str, Fraction]:
    a = n.bit_length() - 1
    h = Fraction(2) ** (a - 1)
    return {
        "Wiener": 3 * h * (n - 1),
        "HyperWiener": Fraction(3, 2) * (h * (h - 1) + n * (n - 1)),
        "ZagrebM1": 3 * Fraction(2) ** (3 * a - 1),
        "ZagrebM2": 3 * Fraction(2) ** (2 * (2 * a - 1)),
        "SchultzMTI": Fraction(3 * n * (n - 1)),
        "Gutman": Fraction(n * n * (7 * h - 4)),
    }


def gutman_derived(n: int) -> int:
    """n phi ((7n - 2 phi - 4) phi - n), from summing d deg deg over the three vertex classes."""
    phi = euler_phi(n)
    return n * phi * ((7 * n - 2 * phi - 4) * phi - n)


VARIANTS: dict[str, tuple[Callable[[int], bool], Callable[[int], dict[str, Fraction]]]] = {
    "general": (lambda n: n >= 2, _general),
    "prime": (is_prime, _prime),
    "power_of_two": (lambda n: n >= 2 and is_power_of_two(n), _power_of_two),
}


def closed_forms(n: int, variant: str = "general") -> dict[str, Fraction]:
    _check_n(n)
    applies, fn = VARIANTS[variant]
    if not applies(n):
        raise ValueError(f"the {variant} forms do not apply to n={n}")
    return fn(n)


def index_report(n: int, name: str, variant: str = "general") -> IndexReport:
    if name not in INDEX_NAMES:
        raise ValueError(f"unknown index {name!r}")
    return IndexReport(n, name, closed_forms(n, variant)[name], brute_indices(n)[name], variant)


def wiener(n: int) -> IndexReport:
    return index_report(n, "Wiener")


def hyper_wiener(n: int) -> IndexReport:
    return index_report(n, "HyperWiener")


def zagreb_m1(n: int) -> IndexReport:
    return index_report(n, "ZagrebM1")


def zagreb_m2(n: int) -> IndexReport:
    return index_report(n, "ZagrebM2")


def schultz_mti(n: int) -> IndexReport:
    return index_report(n, "SchultzMTI")


def gutman(n: int) -> IndexReport:
    return index_report(n, "Gutman")


def all_reports(n: int, variants: Iterable[str] = tuple(VARIANTS)) -> list[IndexReport]:
    """Every applicable (variant, index) pair for n, general forms first."""
    out = []
    for variant in variants:
        if VARIANTS[variant][0](n):
            out += [index_report(n, name, variant) for name in INDEX_NAMES]
    return out


def errata_report(
    n_range: Iterable[int],
    names: Iterable[str] = INDEX_NAMES,
    variants: Iterable[str] = tuple(VARIANTS),
) -> list[IndexReport]:
    names, variants = tuple(names), tuple(variants)
    return [
        r
        for n in n_range
        for r in all_reports(n, variants)
        if r.index_name in names and not r.agrees
    ]


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def reports_to_csv(reports: Iterable[IndexReport]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema={CSV_SCHEMA}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "index_name", "variant", "formula_value", "brute_value", "agrees"])
    for r in reports:
        w.writerow([r.n, r.index_name, r.variant, _fmt(r.closed_form), _fmt(r.brute_force), r.agrees])
    return buf.getvalue()
