"""Dihedral group D_n of order 2n: elements, products, subgroup closure, generating pairs.

Elements are stored canonically as (kind, exponent mod n): ``r^i`` has kind 0,
``s*r^i`` has kind 1. Sorting on that pair gives all rotations before all
reflections, each by ascending exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .numtheory import euler_phi, units

ROTATION = 0
REFLECTION = 1


@dataclass(frozen=True, order=True)
class DihedralElement:
    kind: int
    exponent: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if self.kind not in (ROTATION, REFLECTION):
            raise ValueError(f"bad element kind {self.kind!r}")
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def is_rotation(self) -> bool:
        return self.kind == ROTATION

    @property
    def is_reflection(self) -> bool:
        return self.kind == REFLECTION

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_element(self)


def rot(i: int, n: int) -> DihedralElement:
    return DihedralElement(ROTATION, i, n)


def ref(i: int, n: int) -> DihedralElement:
    return DihedralElement(REFLECTION, i, n)


def identity(n: int) -> DihedralElement:
    return rot(0, n)


def elements(n: int) -> Iterator[DihedralElement]:
    for i in range(n):
        yield rot(i, n)
    for i in range(n):
        yield ref(i, n)


def multiply(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    # s r^i = r^{-i} s, so r^i (s r^j) = s r^{j-i} and (s r^i)(s r^j) = r^{j-i}.
    if x.modulus != y.modulus:
        raise ValueError(f"cannot multiply elements of D_{x.modulus} and D_{y.modulus}")
    n = x.modulus
    if x.kind == ROTATION:
        if y.kind == ROTATION:
            return rot(x.exponent + y.exponent, n)
        return ref(y.exponent - x.exponent, n)
    if y.kind == ROTATION:
        return ref(x.exponent + y.exponent, n)
    return rot(y.exponent - x.exponent, n)


def inverse(x: DihedralElement) -> DihedralElement:
    if x.kind == ROTATION:
        return rot(-x.exponent, x.modulus)
    return x


def format_element(x: DihedralElement) -> str:
    """Canonical notation: ``1``, ``r^i``, ``s``, ``s*r^i``."""
    if x.kind == ROTATION:
        return "1" if x.exponent == 0 else f"r^{x.exponent}"
    return "s" if x.exponent == 0 else f"s*r^{x.exponent}"


def parse_element(text: str, n: int) -> DihedralElement:
    t = text.replace(" ", "")
    if t == "1":
        return identity(n)
    if t == "s":
        return ref(0, n)
    if t == "r":
        return rot(1, n)
    if t.startswith("s*r"):
        rest = t[3:]
        return ref(int(rest[1:]) if rest else 1, n)
    if t.startswith("r^"):
        return rot(int(t[2:]), n)
    raise ValueError(f"cannot parse dihedral element {text!r}")


def encode(x: DihedralElement) -> int:
    """Integer code: r^i -> i, s*r^i -> n + i."""
    return x.exponent + x.kind * x.modulus


def decode(code: int, n: int) -> DihedralElement:
    return DihedralElement(code // n, code % n, n)


def _closure_codes(gens: tuple[int, ...], n: int) -> bytearray:
    # worklist closure on integer codes; multiplication inlined from ``multiply``
    seen = bytearray(2 * n)
    seen[0] = 1
    stack = [0]
    while stack:
        a = stack.pop()
        for b in gens:
            if a < n:
                c = (a + b) % n if b < n else n + (b - a) % n
            else:
                c = n + (a + b) % n if b < n else (b - a) % n
            if not seen[c]:
                seen[c] = 1
                stack.append(c)
    return seen


def subgroup_closure(gens: Iterable[DihedralElement], n: int) -> set[DihedralElement]:
    """Smallest subgroup containing gens (the identity alone for no generators)."""
    codes = []
    for g in gens:
        if g.modulus != n:
            raise ValueError(f"generator {g} is not in D_{n}")
        codes.append(encode(g))
    seen = _closure_codes(tuple(codes), n)
    return {decode(c, n) for c in range(2 * n) if seen[c]}


def generates_pair(x: DihedralElement, y: DihedralElement, n: int) -> bool:
    if x.modulus != n or y.modulus != n:
        raise ValueError(f"elements are not in D_{n}")
    return sum(_closure_codes((encode(x), encode(y)), n)) == 2 * n


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2 (got {n})")


@dataclass(frozen=True)
class OmegaPartition:
    n: int
    omega1: frozenset[DihedralElement]
    omega2: frozenset[DihedralElement]
    omega3: frozenset[DihedralElement]

    def block_of(self, x: DihedralElement) -> int:
        if x in self.omega1:
            return 1
        if x in self.omega2:
            return 2
        return 3


def omega_partition(n: int) -> OmegaPartition:
    _check_n(n)
    om1 = frozenset(rot(i, n) for i in range(n) if gcd(i, n) == 1)
    om2 = frozenset(ref(i, n) for i in range(n))
    om3 = frozenset(rot(i, n) for i in range(n) if gcd(i, n) != 1)
    return OmegaPartition(n, om1, om2, om3)


def b_set(n: int, i: int) -> set[DihedralElement]:
    """Reflections s*r^j with j - i a unit mod n."""
    _check_n(n)
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range for n={n}")
    return {ref(a + i, n) for a in units(n)}


def enumerate_gen(n: int) -> set[tuple[DihedralElement, DihedralElement]]:
    """Generating pairs from the decomposition (O1 x O2) u (O2 x O1) u U_i {s r^i} x B_i."""
    _check_n(n)
    part = omega_partition(n)
    pairs = set()
    for x in part.omega1:
        for y in part.omega2:
            pairs.add((x, y))
            pairs.add((y, x))
    for i in range(n):
        x = ref(i, n)
        for y in b_set(n, i):
            pairs.add((x, y))
    return pairs


def brute_force_gen(n: int) -> set[tuple[DihedralElement, DihedralElement]]:
    """Generating pairs by closing every ordered pair; the oracle for enumerate_gen."""
    size = 2 * n
    return {
        (decode(a, n), decode(b, n))
        for a in range(size)
        for b in range(size)
        if sum(_closure_codes((a, b), n)) == size
    }


def generation_probability(n: int) -> Fraction:
    _check_n(n)
    return Fraction(3 * n * euler_phi(n), (2 * n) ** 2)
