import random
from fractions import Fraction

import pytest

from negcurve.herzog_semigroup import herzog_data, triangle
from negcurve.lattice_geom import convex_hull, dilate, lattice_points
from negcurve.laurent_poly import jet, parse
from negcurve.symbolic_power import (
    Support,
    ehrhart_polynomial,
    hilbert_numerator,
    jet_matrix,
    kernel,
    kernel_polynomials,
    lemma_eu_check,
    lemma_eu_reduce,
    matrix_rank,
    nullity,
    symbolic_dim,
)

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
P_PHI2 = convex_hull([(0, 0), (2, 1), (1, 2)])
P_PHI3 = convex_hull([(0, 0), (3, 1), (1, 3)])
P_PHI3P = convex_hull([(0, 0), (3, 1), (2, 3), (1, 2)])


def test_support_normalization():
    S = Support([(1, 0), (0, 0), (1, 0), (0, 1)])
    assert S.points == ((0, 0), (0, 1), (1, 0))
    assert len(S) == 3


def test_jet_matrix_order_one():
    jm = jet_matrix(SQUARE, 1)
    assert jm.rows == [[1, 1, 1, 1]]
    assert nullity(jm) == 3
    with pytest.raises(ValueError):
        jet_matrix(SQUARE, 0)


def test_row_count():
    for r in (1, 2, 3, 5):
        jm = jet_matrix(SQUARE, r)
        assert len(jm.rows) == r * (r + 1) // 2


def test_phi2_kernel():
    jm = jet_matrix(Support(lattice_points(P_PHI2)), 2)
    assert nullity(jm) == 1
    ker = kernel_polynomials(jm)[0]
    phi2 = parse("-v^2*w - vw^2 + 3vw - 1")
    ratios = {ker.terms[e] / phi2.terms[e] for e in phi2.terms}
    assert len(ratios) == 1  # spanned by phi2
    assert jet(ker, 2).is_zero()


def test_phi3p_kernel_both_chars():
    S = Support(lattice_points(P_PHI3P))
    assert len(S) == 7
    assert nullity(jet_matrix(S, 3)) == 1
    for p in (2, 5, 7):
        jm = jet_matrix(S, 3, char=p)
        for ker in kernel_polynomials(jm):
            assert jet(ker, 3).is_zero()
            assert all(isinstance(c, int) for c in ker.terms.values())


def test_symbolic_dim_9_10_13():
    T = triangle(herzog_data(9, 10, 13))
    assert symbolic_dim(T, 100, 3, char=2) == 1
    assert symbolic_dim(T, 100, 3) == 0
    assert symbolic_dim(T, 100, 0) == len(lattice_points(dilate(T, 100)))
    with pytest.raises(ValueError):
        symbolic_dim(T, 0, 1)
    with pytest.raises(ValueError):
        symbolic_dim(T, 1, -1)


def test_symbolic_dim_char0_window():
    # no element of order 3 in any degree small enough to go negative
    T = triangle(herzog_data(9, 10, 13))
    for d in range(1, 103):
        assert symbolic_dim(T, d, 3) == 0


def test_symbolic_dim_monotone():
    T = triangle(herzog_data(9, 10, 13))
    dims = [symbolic_dim(T, 100, r, char=2) for r in range(0, 4)]
    assert dims == sorted(dims, reverse=True)


def test_nullity_lower_bound():
    for r in (1, 2, 3):
        S = Support(lattice_points(dilate(P_PHI3, 2)))
        jm = jet_matrix(S, r)
        assert nullity(jm) >= len(S) - r * (r + 1) // 2


def test_lemma_eu_triangle():
    S = Support([(0, 0), (1, 0), (0, 1)])
    S2 = lemma_eu_reduce(S, ((0, 0), (1, 0)), 2)
    assert S2.points == ((0, 1),)
    assert lemma_eu_check(S, ((0, 0), (1, 0)), 2) == (0, 0)


def test_lemma_eu_tetragon():
    S = Support(lattice_points(P_PHI3P))
    for line in (((0, 0), (1, 1)), ((1, 1), (2, 1)), ((2, 1), (2, 2))):
        n1, n2 = lemma_eu_check(S, line, 3)
        assert n1 == n2 == 1


def test_lemma_eu_errors():
    S = Support([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        lemma_eu_reduce(S, ((0, 0), (0, 0)), 2)
    with pytest.raises(ValueError):
        lemma_eu_reduce(S, ((0, 0), (1, 0)), 3)


def test_lemma_eu_random_supports():
    rng = random.Random(31)
    done = 0
    while done < 8:
        on_line = {(x, 0) for x in rng.sample(range(-3, 6), 3)}
        off = {(rng.randint(-3, 5), rng.randint(1, 4)) for _ in range(5)}
        if len(off) != 5:
            continue
        S = Support(on_line | off)
        if len(S) != 8:
            continue
        done += 1
        n1, n2 = lemma_eu_check(S, ((0, 0), (1, 0)), 3)
        assert n1 == n2


def test_ehrhart_polynomial():
    assert ehrhart_polynomial(convex_hull(SQUARE)) == (1, 2, 1)
    assert ehrhart_polynomial(P_PHI3) == (4, 2, 1)
    assert ehrhart_polynomial(P_PHI3P) == (4, 2, 1)
    c2, c1, c0 = ehrhart_polynomial(P_PHI2)
    assert (c2, c1, c0) == (Fraction(3, 2), Fraction(3, 2), 1)
    for n in range(1, 6):
        assert c2 * n * n + c1 * n + c0 == len(lattice_points(dilate(P_PHI2, n)))
    assert ehrhart_polynomial(P_PHI3P)[0] * 1 + 2 + 1 == 7  # L(1) is the count
    with pytest.raises(ValueError):
        ehrhart_polynomial(convex_hull([(0, 0), (2, 2)]))
    with pytest.raises(ValueError):
        ehrhart_polynomial(triangle(herzog_data(2, 3, 5)))


def test_hilbert_numerator():
    assert hilbert_numerator(convex_hull(SQUARE)) == [1, 1]
    f = hilbert_numerator(P_PHI2)
    assert sum(f) == 3 and all(c >= 0 for c in f)
    f = hilbert_numerator(P_PHI3)
    assert sum(f) == 8 and all(c >= 0 for c in f)
    with pytest.raises(ValueError):
        hilbert_numerator(P_PHI3, N=1)


def test_matrix_rank_prefilter_agrees():
    # the shortcut path and the exact path must settle on the same rank
    S = Support(lattice_points(dilate(P_PHI2, 3)))
    jm = jet_matrix(S, 2)
    from negcurve.exact_arith import rational_rank
    assert matrix_rank(jm) == rational_rank(jm.rows)
