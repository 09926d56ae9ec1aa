import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gengraph import exactlinalg as xl
from gengraph import spectra as sp
from gengraph.numtheory import euler_phi, factorize, is_power_of_two, radical

ev = sp.ExactEigenvalue

surds = st.builds(ev, st.integers(-40, 40), st.integers(-6, 6), st.integers(0, 30))


def test_canonical_form():
    assert ev(2, 2, 12)._key() == (2, 4, 3)
    assert ev(2, 1, 16) == ev.integer(3)
    assert ev(5, 0, 7)._key() == (5, 0, 0)
    assert str(ev(2, 2, 13)) == "1+sqrt(13)" and str(ev(1, -1, 5)) == "(1-sqrt(5))/2"


@given(surds, surds)
def test_order_agrees_with_high_precision(x, y):
    from mpmath import mp, mpf, sqrt

    mp.dps = 60

    def val(z):
        return (mpf(z.a) + z.b * sqrt(z.D)) / 2

    if x == y:
        assert val(x) == val(y)
    else:
        assert (x < y) == (val(x) < val(y))


@given(surds)
def test_abs_neg_sign(x):
    assert abs(x).sign() >= 0
    assert -(-x) == x
    assert (x + (-x)) == ev(0)


@given(surds)
def test_minimal_polynomial_vanishes(x):
    if x.a % 2 == 0 and x.b % 2 == 0:
        q = x.minimal_polynomial()
        assert abs(q(float(x))) < 1e-6 * max(1.0, abs(float(x))) ** 2


def test_golden_example_n45():
    assert sp.quotient_matrix(45)[0] == [0, 3, 3, 0, 3, 0, 0, 3, 3, 0, 0, 3, 0, 3, 3]
    spec = sp.quotient_spectrum_closed(45)
    assert spec.as_dict() == {ev.integer(24): 1, ev.integer(3): 8, ev.integer(-6): 4, ev.integer(-12): 2}


def test_quotient_matrix_is_circulant():
    q = sp.quotient_matrix(12)
    assert all(q[i][j] == q[0][(j - i) % 6] for i in range(6) for j in range(6))
    assert sp.quotient_matrix(8) == [[0, 4], [4, 0]]


@pytest.mark.parametrize("n", [2, 3, 4, 6, 9, 12, 30, 45, 60, 64, 105])
def test_quotient_spectrum_three_ways(n):
    closed = sp.quotient_spectrum_closed(n)
    assert closed == sp.quotient_spectrum_ramanujan(n)
    cp = xl.char_poly(sp.quotient_matrix(n))
    assert cp == sp.quotient_charpoly_closed(n)
    assert sp.check_spectrum_against_charpoly(closed, cp) == []


@pytest.mark.parametrize("n", [2, 4, 6, 12, 18, 30, 45, 50, 72])
def test_a11_charpoly_is_shifted_quotient_charpoly(n):
    a11 = sp.omega2_subgraph(n).adjacency_matrix()
    n0 = radical(n).n0
    expected = xl.IntPolynomial([0] * (n - n0) + [1]) * sp.quotient_charpoly_closed(n)
    assert xl.char_poly(a11) == expected


@given(st.integers(2, 80))
def test_equitable_partition(n):
    g = sp.omega2_subgraph(n)
    assert sp.check_equitable(g, sp.equitable_partition(n).cells) == sp.quotient_matrix(n)


def test_non_equitable_partition_rejected():
    g = sp.omega2_subgraph(6)
    assert sp.check_equitable(g, [(0, 1), (2, 3, 4, 5)]) is None


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 12, 15, 30, 36, 45, 60])
def test_adjacency_closed_form_verified(n):
    v = sp.verify_adjacency_spectrum(n)
    assert v.verified, v.mismatches
    assert v.closed_form.dimension == 2 * n


@pytest.mark.parametrize("n", [2, 3, 4, 6, 12, 15, 30, 45])
def test_laplacian_closed_form_verified(n):
    v = sp.verify_laplacian_spectrum(n)
    assert v.verified, v.mismatches


@pytest.mark.parametrize("n", [3, 6, 10, 12])
def test_spectra_against_floating_eigenvalues(n):
    # an independent numeric cross-check of the exact pipeline
    a = np.array(sp.adjacency_matrix(n), dtype=float)
    got = sorted(np.linalg.eigvalsh(a))
    want = sorted(float(v) for v, m in sp.adjacency_spectrum_closed(n).entries for _ in range(m))
    assert np.allclose(got, want, atol=1e-8)


def test_laplacian_n6_example():
    spec = sp.laplacian_spectrum_closed(6)
    assert {v.as_int(): m for v, m in spec.entries} == {0: 5, 3: 2, 5: 2, 6: 2, 8: 1}


@given(st.integers(2, 300))
def test_trace_identities(n):
    phi = euler_phi(n)
    adj = sp.adjacency_spectrum_closed(n)
    lap = sp.laplacian_spectrum_closed(n)
    assert adj.trace() == ev(0)
    assert lap.trace() == ev.integer(3 * n * phi)
    # sum of squares: the surd parts of the conjugate pair cancel
    sq = sum(((v.a * v.a + v.b * v.b * v.D) * m) for v, m in adj.entries)
    assert sq == 4 * 3 * n * phi


@given(st.integers(2, 300))
def test_energies(n):
    assert sp.adjacency_spectrum_closed(n).energy() == sp.adjacency_energy(n).value()
    assert sp.laplacian_spectrum_closed(n).energy() == ev.integer(sp.laplacian_energy(n))


def test_energy_example():
    e = sp.adjacency_energy(45)
    assert (e.integer, e.radicand) == (72, 4896)


def test_integrality_matches_radicand():
    assert sp.integrality_check(8) and sp.integrality_check(2)
    assert not sp.integrality_check(45)
    assert sp.adjacency_spectrum_closed(8).is_integral


def test_integral_graphs_that_are_not_powers_of_two():
    # phi^2 + 4 n phi can be a square away from powers of two
    extra = [n for n in range(2, 400) if sp.integrality_check(n) and not is_power_of_two(n)]
    assert extra[:4] == [30, 60, 90, 120]
    for n in (30, 182):
        v = sp.verify_adjacency_spectrum(n)
        assert v.verified and v.closed_form.is_integral


def test_kronecker_n45():
    f = sp.kronecker_relabel(45)
    assert f.scalar == 3 and f.factor_orders == (3, 5)
    assert f.permutation == (0, 6, 12, 3, 9, 10, 1, 7, 13, 4, 5, 11, 2, 8, 14)
    assert f.cell_labels()[:6] == ["[s]", "[sr^6]", "[sr^12]", "[sr^3]", "[sr^9]", "[sr^10]"]
    assert f.verify()
    assert sp.kronecker_spectrum(f) == sp.quotient_spectrum_closed(45)


def test_kronecker_n6():
    f = sp.kronecker_relabel(6)
    assert f.scalar == 1 and f.factor_orders == (2, 3)
    assert {v.as_int(): m for v, m in sp.kronecker_spectrum(f).entries} == {-2: 1, -1: 2, 1: 2, 2: 1}


@pytest.mark.parametrize("n", [30, 210, 2 * 3 * 5 * 7 * 2, 9 * 25 * 7])
def test_kronecker_many_primes(n):
    f = sp.kronecker_relabel(n)
    assert f.verify()
    assert f.factor_orders[0] == factorize(n).primes[0]
    assert sp.kronecker_spectrum(f) == sp.quotient_spectrum_ramanujan(n)


@pytest.mark.parametrize("n", [4, 12, 18, 45, 50, 72])
def test_rank_scaling(n):
    r = sp.rank_scaling_check(n)
    assert r.ok, r


def test_rank_scaling_rejects_squarefree():
    with pytest.raises(ValueError, match="square-free"):
        sp.rank_scaling_check(15)


def test_spectrum_json():
    import json

    data = json.loads(sp.spectrum_report_json(4, "adjacency", sp.adjacency_spectrum_closed(4), True))
    assert data["dimension"] == 8 and data["verified"]
    assert {(e["a"], e["b"], e["D"], e["mult"]) for e in data["entries"]} == {(-4, 0, 0, 2), (0, 0, 0, 5), (8, 0, 0, 1)}


def test_perron_root_is_largest():
    for n in (5, 12, 45):
        top = sp.adjacency_spectrum_closed(n).values()[-1]
        assert top == sp.perron_pair(n)[1]
        assert math.isclose(float(top), (euler_phi(n) + math.sqrt(euler_phi(n) ** 2 + 4 * n * euler_phi(n))) / 2)


def test_rejects_small_n():
    with pytest.raises(ValueError, match="n must be >= 2"):
        sp.adjacency_spectrum_closed(1)
