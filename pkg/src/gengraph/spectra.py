"""Closed-form spectra of Gamma_n and their exact verification.

Eigenvalues are quadratic surds (a + b*sqrt(D)) / 2 with integer a, b and
square-free D, compared and summed with integer arithmetic only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from math import gcd
from typing import Iterable, Sequence

from . import exactlinalg as xl
from .graph import GraphStructure, build_gamma, connected_components
from .numtheory import (
    divisors,
    euler_phi,
    factorize,
    is_perfect_square,
    mobius,
    radical,
    squarefree_decomposition,
)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_surd(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d), d >= 0."""
    if b == 0 or d == 0:
        return _sign(a)
    sb = _sign(b)
    if a == 0 or _sign(a) == sb:
        return sb
    return _sign(a) * _sign(a * a - b * b * d)


def _sign_two_surds(a: int, b: int, d1: int, c: int, d2: int) -> int:
    """Sign of a + b*sqrt(d1) + c*sqrt(d2)."""
    if d1 == d2:
        return _sign_surd(a, b + c, d1)
    sx = _sign_surd(a, b, d1)
    sy = _sign(c) if d2 else 0
    if sx == 0 or sy == 0 or sx == sy:
        return sx or sy
    # opposite signs: compare squares, (a + b sqrt d1)^2 - c^2 d2
    t = _sign_surd(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)
    if t > 0:
        return sx
    if t < 0:
        return sy
    return 0


@total_ordering
class ExactEigenvalue:
    """The real number (a + b*sqrt(D)) / 2 in canonical form.

    D is square-free and at least 2 when b != 0; integers have b = D = 0.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a: int, b: int = 0, radicand: int = 0):
        c, d = squarefree_decomposition(radicand)
        b *= c
        if d == 1:
            a, b, d = a + b, 0, 0
        if b == 0:
            d = 0
        self.a, self.b, self.D = int(a), int(b), int(d)

    @classmethod
    def integer(cls, m: int) -> ExactEigenvalue:
        return cls(2 * m)

    @classmethod
    def quadratic_roots(cls, s: int, p: int) -> tuple[ExactEigenvalue, ExactEigenvalue]:
        """Roots of t^2 - s t + p, smaller first."""
        disc = s * s - 4 * p
        if disc < 0:
            raise ValueError("complex roots")
        return cls(s, -1, disc), cls(s, 1, disc)

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.a // 2

    def minimal_polynomial(self) -> xl.IntPolynomial:
        if self.b == 0:
            if self.a % 2:
                raise ValueError("half-integers have no monic integer minimal polynomial")
            return xl.IntPolynomial([-self.a // 2, 1])
        num = self.a * self.a - self.b * self.b * self.D
        if num % 4:
            raise ValueError(f"{self} is not an algebraic integer")
        return xl.IntPolynomial([num // 4, -self.a, 1])

    def conjugate(self) -> ExactEigenvalue:
        return ExactEigenvalue(self.a, -self.b, self.D) if self.b else self

    def sign(self) -> int:
        return _sign_surd(self.a, self.b, self.D)

    def __neg__(self) -> ExactEigenvalue:
        out = ExactEigenvalue.__new__(ExactEigenvalue)
        out.a, out.b, out.D = -self.a, -self.b, self.D
        return out

    def __abs__(self) -> ExactEigenvalue:
        return -self if self.sign() < 0 else self

    def __add__(self, other) -> ExactEigenvalue:
        if isinstance(other, int):
            other = ExactEigenvalue.integer(other)
        if self.D and other.D and self.D != other.D:
            raise ValueError("sum of unlike surds is not a quadratic surd")
        d = self.D or other.D
        out = ExactEigenvalue.__new__(ExactEigenvalue)
        out.a, out.b, out.D = self.a + other.a, self.b + other.b, d
        if out.b == 0:
            out.D = 0
        return out

    __radd__ = __add__

    def __sub__(self, other) -> ExactEigenvalue:
        if isinstance(other, int):
            other = ExactEigenvalue.integer(other)
        return self + (-other)

    def __rsub__(self, other) -> ExactEigenvalue:
        return (-self) + other

    def __mul__(self, k: int) -> ExactEigenvalue:
        if not isinstance(k, int):
            return NotImplemented
        out = ExactEigenvalue.__new__(ExactEigenvalue)
        out.a, out.b, out.D = self.a * k, self.b * k, self.D if k else 0
        if out.b == 0:
            out.D = 0
        return out

    __rmul__ = __mul__

    def _key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.D)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ExactEigenvalue.integer(other)
        if not isinstance(other, ExactEigenvalue):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = ExactEigenvalue.integer(other)
        return _sign_two_surds(other.a - self.a, other.b, other.D, -self.b, self.D) > 0

    def __hash__(self) -> int:
        return hash(self._key())

    def __float__(self) -> float:
        return (self.a + self.b * self.D**0.5) / 2

    def __repr__(self) -> str:
        return f"ExactEigenvalue({self.a}, {self.b}, {self.D})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a // 2) if self.a % 2 == 0 else f"{self.a}/2"
        if self.a % 2 == 0 and self.b % 2 == 0:
            head = str(self.a // 2) if self.a else ""
            coef = self.b // 2
            sep = "+" if coef > 0 else "-"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            if not head:
                return f"{'-' if coef < 0 else ''}{mag}sqrt({self.D})"
            return f"{head}{sep}{mag}sqrt({self.D})"
        sep = "+" if self.b > 0 else "-"
        mag = "" if abs(self.b) == 1 else str(abs(self.b))
        return f"({self.a}{sep}{mag}sqrt({self.D}))/2"

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "D": self.D}


def _ev(x) -> ExactEigenvalue:
    return x if isinstance(x, ExactEigenvalue) else ExactEigenvalue.integer(int(x))


@dataclass(frozen=True)
class SpectrumMultiset:
    entries: tuple[tuple[ExactEigenvalue, int], ...]
    dimension: int

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[object, int]]) -> SpectrumMultiset:
        """Merge coincident values; zero multiplicities are dropped."""
        acc: dict[ExactEigenvalue, int] = {}
        for val, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                v = _ev(val)
                acc[v] = acc.get(v, 0) + mult
        entries = tuple(sorted(acc.items(), key=lambda e: e[0]))
        return cls(entries, sum(acc.values()))

    def as_dict(self) -> dict[ExactEigenvalue, int]:
        return dict(self.entries)

    def multiplicity(self, value) -> int:
        return self.as_dict().get(_ev(value), 0)

    def values(self) -> list[ExactEigenvalue]:
        return [v for v, _ in self.entries]

    @property
    def is_integral(self) -> bool:
        return all(v.is_integer for v, _ in self.entries)

    def trace(self) -> ExactEigenvalue:
        total = ExactEigenvalue(0)
        for v, m in self.entries:
            total = total + v * m
        return total

    def energy(self) -> ExactEigenvalue:
        total = ExactEigenvalue(0)
        for v, m in self.entries:
            total = total + abs(v) * m
        return total

    def __str__(self) -> str:
        return "{" + ", ".join(f"{v}:{m}" for v, m in self.entries) + "}"


# ---------------------------------------------------------------------------
# matrices


def adjacency_matrix(n: int) -> list[list[int]]:
    return build_gamma(n).adjacency_matrix()


def laplacian_matrix(n: int) -> list[list[int]]:
    return build_gamma(n).laplacian_matrix()


def quotient_matrix(n: int) -> list[list[int]]:
    """Circulant on the n0 classes: first row a_i = n/n0 if gcd(i, n0) = 1 else 0."""
    n0 = radical(n).n0
    scale = n // n0
    first = [scale if gcd(i, n0) == 1 else 0 for i in range(n0)]
    if n0 == 1:
        first = [0]
    return [[first[(j - i) % n0] for j in range(n0)] for i in range(n0)]


@dataclass(frozen=True)
class EquitablePartition:
    n: int
    cells: tuple[tuple[int, ...], ...]

    @property
    def cell_size(self) -> int:
        return len(self.cells[0])


def equitable_partition(n: int) -> EquitablePartition:
    """Classes [s r^i] = {s r^i, s r^(i+n0), ...}; vertex index of s r^j is j."""
    n0 = radical(n).n0
    return EquitablePartition(n, tuple(tuple(range(i, n, n0)) for i in range(n0)))


def check_equitable(g: GraphStructure, cells: Sequence[Sequence[int]]) -> list[list[int]] | None:
    """Quotient matrix [b_ij] if the cells form an equitable partition of g, else None."""
    where = {}
    for c, cell in enumerate(cells):
        for v in cell:
            where[v] = c
    if sorted(where) != list(range(g.order)):
        return None
    k = len(cells)
    quot: list[list[int] | None] = [None] * k
    for c, cell in enumerate(cells):
        for v in cell:
            row = [0] * k
            for u in g.adjacency[v]:
                row[where[u]] += 1
            if quot[c] is None:
                quot[c] = row
            elif quot[c] != row:
                return None
    return quot  # type: ignore[return-value]


def omega2_subgraph(n: int) -> GraphStructure:
    return build_gamma(n).induced(range(n), name="Omega2")


# ---------------------------------------------------------------------------
# closed-form spectra


def _quotient_pairs(n: int) -> list[tuple[int, int]]:
    # eigenvalue mu(d) phi(n) / phi(d) with multiplicity phi(d), for every d | n0
    phi = euler_phi(n)
    n0 = radical(n).n0
    return [(mobius(d) * phi // euler_phi(d), euler_phi(d)) for d in divisors(n0)]


def quotient_spectrum_closed(n: int) -> SpectrumMultiset:
    return SpectrumMultiset.from_pairs(_quotient_pairs(n))


def quotient_spectrum_ramanujan(n: int) -> SpectrumMultiset:
    """Eigenvalues (n/n0) c_{n0}(j), j = 0..n0-1, of the circulant quotient."""
    from .numtheory import ramanujan_sum

    n0 = radical(n).n0
    return SpectrumMultiset.from_pairs((n // n0 * ramanujan_sum(n0, j), 1) for j in range(n0))


def quotient_charpoly_closed(n: int) -> xl.IntPolynomial:
    out = xl.IntPolynomial([1])
    for val, mult in _quotient_pairs(n):
        out = out * xl.IntPolynomial([-val, 1]) ** mult
    return out


def perron_pair(n: int) -> tuple[ExactEigenvalue, ExactEigenvalue]:
    """Roots of t^2 - phi t - n phi, smaller first."""
    phi = euler_phi(n)
    return ExactEigenvalue.quadratic_roots(phi, -n * phi)


def perron_quadratic(n: int) -> xl.IntPolynomial:
    phi = euler_phi(n)
    return xl.IntPolynomial([-n * phi, -phi, 1])


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2 (got {n})")


def adjacency_spectrum_closed(n: int) -> SpectrumMultiset:
    _check_n(n)
    n0 = radical(n).n0
    pairs: list[tuple[object, int]] = [(0, 2 * n - (n0 + 1))]
    pairs += [(v, m) for v, m in _quotient_pairs(n)[1:]]  # d = 1 gives phi(n), not an eigenvalue of A(n)
    lam2, lam1 = perron_pair(n)
    pairs += [(lam1, 1), (lam2, 1)]
    return SpectrumMultiset.from_pairs(pairs)


def laplacian_spectrum_closed(n: int) -> SpectrumMultiset:
    _check_n(n)
    phi = euler_phi(n)
    n0 = radical(n).n0
    pairs = [(0, n - phi + 1)]
    pairs += [(2 * phi - v, m) for v, m in _quotient_pairs(n)[1:]]
    pairs += [(2 * phi, n - n0), (n, phi - 1), (n + phi, 1)]
    return SpectrumMultiset.from_pairs(pairs)


@dataclass(frozen=True)
class Energy:
    """integer + sqrt(radicand)."""

    integer: int
    radicand: int

    def value(self) -> ExactEigenvalue:
        return ExactEigenvalue(2 * self.integer, 2, self.radicand)

    def __str__(self) -> str:
        return f"{self.integer} + sqrt({self.radicand})"


def adjacency_energy(n: int) -> Energy:
    _check_n(n)
    phi = euler_phi(n)
    k = len(factorize(n).factors)
    return Energy(phi * (2**k - 1), phi * phi + 4 * n * phi)


def laplacian_energy(n: int) -> int:
    _check_n(n)
    return 3 * n * euler_phi(n)


def integrality_check(n: int) -> bool:
    """True iff phi^2 + 4 n phi is a perfect square, i.e. every eigenvalue of A(n) is an integer."""
    _check_n(n)
    return is_perfect_square(adjacency_energy(n).radicand)


# ---------------------------------------------------------------------------
# Kronecker relabelling of the quotient


@dataclass(frozen=True)
class KroneckerFactorization:
    n: int
    scalar: int
    permutation: tuple[int, ...]
    factor_orders: tuple[int, ...]

    def factor_matrix(self) -> list[list[int]]:
        out = [[1]]
        for p in self.factor_orders:
            out = xl.kron(out, xl.j_minus_i(p))
        return [[self.scalar * x for x in row] for row in out]

    def permuted_quotient(self) -> list[list[int]]:
        q = quotient_matrix(self.n)
        perm = self.permutation
        return [[q[a][b] for b in perm] for a in perm]

    def verify(self) -> bool:
        return self.permuted_quotient() == self.factor_matrix()

    def cell_labels(self) -> list[str]:
        return ["[s]" if l == 0 else ("[sr]" if l == 1 else f"[sr^{l}]") for l in self.permutation]


def _subdivide(group: list[int], moduli: list[int], last: int) -> list[int]:
    if not moduli:
        # final block of size `last`: one class per residue mod `last`
        return sorted(group, key=lambda l: l % last)
    m = moduli[0]
    out: list[int] = []
    for i in range(m):
        out += _subdivide([l for l in group if l % m == i], moduli[1:], last)
    return out


def kronecker_relabel(n: int) -> KroneckerFactorization:
    """Reorder the classes [s r^l], 0 <= l < n0, so the quotient becomes a Kronecker product.

    With primes p1 < p2 < ... < pk of n, classes are split by residue mod p1, then
    mod pk, p(k-1), ..., p3, and each final block of p2 classes is listed by
    residue mod p2. The quotient is then (n/n0) (J-I)_{p1} x (J-I)_{pk} x ... x (J-I)_{p2}.
    """
    _check_n(n)
    primes = list(factorize(n).primes)
    n0 = radical(n).n0
    scale = n // n0
    if len(primes) == 1:
        return KroneckerFactorization(n, scale, tuple(range(n0)), (primes[0],))
    p1, p2 = primes[0], primes[1]
    split = [p1] + primes[:1:-1]  # p1, pk, ..., p3
    perm = _subdivide(list(range(n0)), split, p2)
    return KroneckerFactorization(n, scale, tuple(perm), tuple(split + [p2]))


def kronecker_spectrum(f: KroneckerFactorization) -> SpectrumMultiset:
    """Product rule: eigenvalues of a Kronecker product are all products of factor eigenvalues."""
    acc: dict[int, int] = {f.scalar: 1}
    for p in f.factor_orders:
        nxt: dict[int, int] = {}
        for val, mult in acc.items():
            for ev, em in ((p - 1, 1), (-1, p - 1)):
                nxt[val * ev] = nxt.get(val * ev, 0) + mult * em
        acc = nxt
    return SpectrumMultiset.from_pairs(acc.items())


# ---------------------------------------------------------------------------
# verification against the exact oracle


@dataclass
class SpectrumVerification:
    n: int
    matrix: str
    closed_form: SpectrumMultiset
    charpoly: xl.IntPolynomial
    mismatches: list[str]

    @property
    def verified(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        return spectrum_report_json(self.n, self.matrix, self.closed_form, self.verified)


def check_spectrum_against_charpoly(spec: SpectrumMultiset, cp: xl.IntPolynomial) -> list[str]:
    """Every claimed multiplicity must be exact and the claims must exhaust the degree."""
    problems = []
    if spec.dimension != cp.degree:
        problems.append(f"dimension {spec.dimension} != degree {cp.degree}")
    seen_quadratics = set()
    for val, mult in spec.entries:
        if val.is_integer:
            got = xl.root_multiplicity(cp, val.as_int())
        else:
            q = val.minimal_polynomial()
            got = xl.quadratic_factor_multiplicity(cp, q)
            if spec.multiplicity(val.conjugate()) != mult:
                problems.append(f"conjugate of {val} has a different multiplicity")
            seen_quadratics.add(q.coeffs)
        if got != mult:
            problems.append(f"eigenvalue {val}: claimed {mult}, char poly gives {got}")
    return problems


def verify_adjacency_spectrum(n: int, cap: int = xl.DEFAULT_CAP) -> SpectrumVerification:
    spec = adjacency_spectrum_closed(n)
    cp = xl.char_poly(adjacency_matrix(n), cap=cap)
    problems = check_spectrum_against_charpoly(spec, cp)
    if xl.quadratic_factor_multiplicity(cp, perron_quadratic(n)) != 1:
        problems.append("t^2 - phi t - n phi does not divide exactly once")
    return SpectrumVerification(n, "adjacency", spec, cp, problems)


def verify_laplacian_spectrum(n: int, cap: int = xl.DEFAULT_CAP) -> SpectrumVerification:
    spec = laplacian_spectrum_closed(n)
    g = build_gamma(n)
    cp = xl.char_poly(g.laplacian_matrix(), cap=cap)
    problems = check_spectrum_against_charpoly(spec, cp)
    phi = euler_phi(n)
    zero_mult = xl.root_multiplicity(cp, 0)
    if zero_mult != n - phi + 1:
        problems.append(f"0 has multiplicity {zero_mult}, expected {n - phi + 1}")
    if zero_mult != connected_components(g):
        problems.append("multiplicity of 0 differs from the number of components")
    return SpectrumVerification(n, "laplacian", spec, cp, problems)


@dataclass(frozen=True)
class RankScalingReport:
    n: int
    n0: int
    rank_n: int
    rank_n0: int
    quotient_scales: bool
    multiplicities_match: bool

    @property
    def ok(self) -> bool:
        return (
            self.rank_n == self.rank_n0 == self.n0 + 1
            and self.quotient_scales
            and self.multiplicities_match
        )


def rank_scaling_check(n: int) -> RankScalingReport:
    """Compare A(n) with A(n0): equal ranks n0 + 1, quotient eigenvalues scaled by n/n0."""
    _check_n(n)
    n0 = radical(n).n0
    if n == n0:
        raise ValueError(f"n={n} is square-free; the comparison with n0 is vacuous")
    scale = n // n0
    q, q0 = quotient_matrix(n), quotient_matrix(n0)
    scales = q == [[scale * x for x in row] for row in q0]
    cp, cp0 = xl.char_poly(q), xl.char_poly(q0)
    mults = True
    for val, _ in quotient_spectrum_closed(n0).entries:
        lam = val.as_int()
        if lam and xl.root_multiplicity(cp, scale * lam) != xl.root_multiplicity(cp0, lam):
            mults = False
    return RankScalingReport(
        n,
        n0,
        xl.rank_exact(adjacency_matrix(n)),
        xl.rank_exact(adjacency_matrix(n0)),
        scales,
        mults,
    )


def spectrum_report_json(
    n: int, matrix: str, spec: SpectrumMultiset, verified: bool
) -> str:
    payload = {
        "n": n,
        "matrix": matrix,
        "entries": [dict(v.to_dict(), mult=m) for v, m in spec.entries],
        "dimension": spec.dimension,
        "verified": verified,
    }
    return json.dumps(payload, indent=2) + "\n"
