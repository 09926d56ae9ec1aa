"""Exact integer linear algebra: characteristic polynomials, factor multiplicities, rank.

The characteristic polynomial det(tI - M) is computed multimodularly: Hessenberg
reduction over F_p for enough 31-bit primes, then Chinese remaindering with a
rigorous coefficient bound. Reduction over a field is a similarity transform, so
every prime is a good prime and the result is exact.

Before the modular stage the matrix is optionally deflated by two exact
similarity steps that apply to any square matrix:

* a column that is zero off the diagonal splits off the factor (t - M[i][i]);
* two indices i, j whose columns agree outside rows {i, j} and satisfy
  M[i][i] - M[i][j] == M[j][j] - M[j][i] make e_i - e_j an eigenvector with that
  eigenvalue; in the basis where e_j is replaced by e_j - e_i the matrix is block
  triangular, giving the factor (t - lambda) times the char poly of M with row i
  replaced by row i + row j and index j removed.

Graphs with many twin vertices (like the generating graphs here) shrink a lot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

DEFAULT_CAP = 500

_PRIME_CEILING = 2**31


class MatrixTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero or other.is_zero:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_monic(self, q: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Exact long division by a monic integer polynomial."""
        if q.is_zero or q.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dq = q.degree
        if len(rem) - 1 < dq:
            return IntPolynomial([]), self
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                quot[k - dq] = c
                for i, b in enumerate(q.coeffs):
                    rem[k - dq + i] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem[:dq])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mon = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mon and abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}{'*' if mon else ''}{mon}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


# ---------------------------------------------------------------------------
# root and factor multiplicities


def root_multiplicity(p: IntPolynomial, lam) -> int:
    """Largest m with (t - lam)^m | p, for a rational lam, by synthetic division."""
    if p.is_zero:
        raise ValueError("zero polynomial has every root")
    lam = Fraction(lam)
    coeffs = [Fraction(c) for c in p.coeffs]
    m = 0
    while len(coeffs) > 1:
        # synthetic division, high degree first
        acc = Fraction(0)
        quot = []
        for c in reversed(coeffs):
            acc = acc * lam + c
            quot.append(acc)
        if quot[-1] != 0:
            break
        coeffs = list(reversed(quot[:-1]))
        m += 1
    return m


def quadratic_factor_multiplicity(p: IntPolynomial, q: IntPolynomial) -> int:
    if q.degree != 2 or q.coeffs[-1] != 1:
        raise ValueError("expected a monic quadratic")
    if p.is_zero:
        raise ValueError("zero polynomial")
    m = 0
    while p.degree >= 2:
        quot, rem = p.divmod_monic(q)
        if not rem.is_zero:
            break
        p = quot
        m += 1
    return m


# ---------------------------------------------------------------------------
# characteristic polynomial


def _as_int_rows(m: Sequence[Sequence[int]]) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in m]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    """The ``count`` largest primes below 2**31, descending."""
    cand = _PRIMES[-1] - 2 if _PRIMES else _PRIME_CEILING - 1
    while len(_PRIMES) < count:
        if _is_prime(cand):
            _PRIMES.append(cand)
        cand -= 2
    return _PRIMES[:count]


def _matvec_mod(a: np.ndarray, u: np.ndarray, p: int) -> np.ndarray:
    # a, u reduced mod p < 2**31; split u into 16-bit halves so int64 sums cannot overflow
    lo = u & 0xFFFF
    hi = u >> 16
    return ((a @ hi) % p * 65536 + a @ lo) % p


def _charpoly_mod(m: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (ascending) of det(tI - m) over F_p via Hessenberg reduction."""
    h = m % p
    n = h.shape[0]
    for j in range(n - 2):
        nz = np.flatnonzero(h[j + 1 :, j])
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[piv, j + 1], :] = h[[j + 1, piv], :]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        u = h[j + 2 :, j] * pow(int(h[j + 1, j]), p - 2, p) % p
        if not u.any():
            continue
        h[j + 2 :, j:] = (h[j + 2 :, j:] - np.outer(u, h[j + 1, j:]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + _matvec_mod(h[:, j + 2 :], u, p)) % p

    # p_m = (t - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    prods = np.zeros(0, dtype=np.int64)
    for m_ in range(1, n + 1):
        col = m_ - 1
        prev = polys[m_ - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - prev * h[col, col] % p) % p
        if m_ > 1:
            prods = np.append(prods, 1) * h[col, col - 1] % p
            c = h[: col, col] * prods % p
            if c.any():
                cur = (cur - _matvec_mod(polys[: col].T, c, p)) % p
        polys[m_] = cur
    return polys[n]


def _spectral_radius_bound(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    row_norm = max(sum(abs(x) for x in r) for r in rows)
    col_norm = max(sum(abs(r[j]) for r in rows) for j in range(len(rows)))
    return min(row_norm, col_norm)


def _charpoly_multimodular(rows: list[list[int]]) -> IntPolynomial:
    n = len(rows)
    if n == 0:
        return IntPolynomial([1])
    rho = _spectral_radius_bound(rows)
    # |coefficient of t^(n-k)| <= C(n, k) rho^k <= (1 + rho)^n
    bound = (1 + rho) ** n
    primes = []
    modulus = 1
    for p in _primes(bound.bit_length() // 30 + 2):
        if modulus > 2 * bound:
            break
        primes.append(p)
        modulus *= p
    # magnitudes are capped by the bound, so int64 holds M mod p
    mat = np.array([[x for x in r] for r in rows], dtype=object)
    coeffs = [0] * (n + 1)
    acc_mod = 1
    for p in primes:
        mp = np.array((mat % p).tolist(), dtype=np.int64)
        res = _charpoly_mod(mp, p).tolist()
        if acc_mod == 1:
            coeffs = [int(r) for r in res]
        else:
            inv = pow(acc_mod, -1, p)
            coeffs = [a + acc_mod * ((int(r) - a) * inv % p) for a, r in zip(coeffs, res)]
        acc_mod *= p
    half = acc_mod // 2
    return IntPolynomial([c - acc_mod if c > half else c for c in coeffs])


def deflate(m: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]]]:
    """Split off exact linear factors; returns (eigenvalues peeled, remaining matrix).

    det(tI - m) == prod(t - lam for lam in peeled) * det(tI - remaining).
    """
    a = np.array(_as_int_rows(m), dtype=object)
    peeled: list[int] = []
    changed = True
    while changed and a.shape[0] > 0:
        changed = False
        # singleton columns
        off = a.copy()
        np.fill_diagonal(off, 0)
        lone = [i for i in range(a.shape[0]) if not off[:, i].any()]
        if lone:
            peeled.extend(int(a[i, i]) for i in lone)
            lone_set = set(lone)
            keep = [i for i in range(a.shape[0]) if i not in lone_set]
            a = a[np.ix_(keep, keep)]
            changed = True
            continue
        pairs = _twin_pairs(a)
        alive = list(range(a.shape[0]))
        removed: set[int] = set()
        for i, j in pairs:
            if i in removed or j in removed:
                continue
            if not _is_twin(a, i, j):
                continue
            peeled.append(int(a[i, i] - a[i, j]))
            row_j = a[j, :].copy()
            row_j[j] = 0
            a[i, :] = a[i, :] + row_j
            # column j is irrelevant once index j is dropped
            removed.add(j)
            changed = True
        if removed:
            keep = [i for i in alive if i not in removed]
            a = a[np.ix_(keep, keep)]
    return peeled, a.tolist()


def _is_twin(a: np.ndarray, i: int, j: int) -> bool:
    if a[i, i] - a[i, j] != a[j, j] - a[j, i]:
        return False
    diff = a[:, i] - a[:, j]
    diff[i] = 0
    diff[j] = 0
    return not diff.any()


def _twin_pairs(a: np.ndarray) -> list[tuple[int, int]]:
    n = a.shape[0]
    if n < 2:
        return []
    x = np.array(a.tolist(), dtype=np.float64) if _fits_float(a) else None
    out = []
    claimed: set[int] = set()
    for i in range(n - 1):
        if i in claimed:
            continue
        if x is not None:
            d = x[:, i + 1 :] - x[:, [i]]
            d[i, :] = 0
            d[np.arange(i + 1, n), np.arange(n - i - 1)] = 0
            cand = np.flatnonzero(~d.any(axis=0)) + i + 1
        else:
            cand = range(i + 1, n)
        for j in cand:
            j = int(j)
            if j not in claimed and _is_twin(a, i, j):
                out.append((i, j))
                claimed.add(j)
    return out


def _fits_float(a: np.ndarray) -> bool:
    # exact equality tests in float64 need |entries| < 2**52
    return max((abs(int(x)) for x in a.flat), default=0) < 2**50


def char_poly(
    m: Sequence[Sequence[int]], cap: int = DEFAULT_CAP, use_deflation: bool = True
) -> IntPolynomial:
    """det(tI - m) with exact integer coefficients."""
    rows = _as_int_rows(m)
    if len(rows) > cap:
        raise MatrixTooLarge(f"matrix order {len(rows)} exceeds cap {cap}")
    if not use_deflation:
        return _charpoly_multimodular(rows)
    peeled, rest = deflate(rows)
    return IntPolynomial.from_roots(peeled) * _charpoly_multimodular(rest)


# ---------------------------------------------------------------------------
# rank


def rank_exact(m: Sequence[Sequence[int]], cap: int = DEFAULT_CAP) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Duplicate and zero rows and columns are dropped first; neither changes the rank.
    """
    rows = _as_int_rows(m)
    if len(rows) > cap:
        raise MatrixTooLarge(f"matrix order {len(rows)} exceeds cap {cap}")
    uniq_rows = list(dict.fromkeys(tuple(r) for r in rows if any(r)))
    if not uniq_rows:
        return 0
    cols = list(dict.fromkeys(c for c in zip(*uniq_rows) if any(c)))
    a = np.array([list(r) for r in zip(*cols)], dtype=object)
    return _bareiss_rank(a)


def _bareiss_rank(a: np.ndarray) -> int:
    nrows, ncols = a.shape
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = [i for i in range(r, nrows) if a[i, c] != 0]
        if not nz:
            continue
        piv = nz[0]
        if piv != r:
            a[[r, piv], :] = a[[piv, r], :]
        pv = a[r, c]
        if r + 1 < nrows:
            sub = a[r + 1 :, c + 1 :]
            a[r + 1 :, c + 1 :] = (sub * pv - np.outer(a[r + 1 :, c], a[r, c + 1 :])) // prev
            a[r + 1 :, c] = 0
        prev = pv
        r += 1
    return r


def determinant_bareiss(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss elimination."""
    a = np.array(_as_int_rows(m), dtype=object)
    n = a.shape[0]
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k, k] == 0:
            nz = [i for i in range(k + 1, n) if a[i, k] != 0]
            if not nz:
                return 0
            a[[k, nz[0]], :] = a[[nz[0], k], :]
            sign = -sign
        pv = a[k, k]
        a[k + 1 :, k + 1 :] = (
            a[k + 1 :, k + 1 :] * pv - np.outer(a[k + 1 :, k], a[k, k + 1 :])
        ) // prev
        a[k + 1 :, k] = 0
        prev = pv
    return sign * int(a[n - 1, n - 1])


def kron(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    nb = len(b)
    return [
        [a[i // nb][j // nb] * b[i % nb][j % nb] for j in range(len(a) * nb)]
        for i in range(len(a) * nb)
    ]


def j_minus_i(k: int) -> list[list[int]]:
    return [[0 if i == j else 1 for j in range(k)] for i in range(k)]
