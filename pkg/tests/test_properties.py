"""Randomized invariant checks tying the modules against each other."""

import functools

from hypothesis import assume, given, settings, strategies as st

from negcurve.exact_arith import (binomial, mat_mul, rank_mod_p,
                                  rational_rank, smith_normal_form)
from negcurve.lattice_geom import (area2, convex_hull, max_collinear,
                                   normalize, omega_contains, pick_counts,
                                   sqrt_sum_leq)
from negcurve.laurent_poly import (LaurentPoly, multiplicity_at_one, multiply,
                                   newton_polygon)
from negcurve.nct_catalog import classify, ggk_prime_family, is_nct, phi_family
from negcurve.symbolic_power import (Support, jet_matrix, kernel_polynomials,
                                     lemma_eu_check, nullity)
from negcurve.toric_surface import (IMPLICATIONS, divisor_square,
                                    k2_via_refinement, normal_fan,
                                    thm36_report)

points = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@st.composite
def polygons(draw):
    P = convex_hull(draw(st.sets(points, min_size=3, max_size=10)))
    assume(P.dim == 2)
    return P


def laurent(char):
    coeff = st.integers(-9, 9).filter(lambda c: c and (char == 0 or c % char))
    pts = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
    return st.dictionaries(pts, coeff, min_size=1, max_size=6).map(
        lambda d: LaurentPoly(d, char))


@given(polygons())
def test_pick_identity(P):
    B, I = pick_counts(P)
    assert area2(P) == 2 * I + B - 2


@given(polygons(), polygons())
def test_brunn_minkowski(P, Q):
    total = convex_hull([(p[0] + q[0], p[1] + q[1])
                         for p in P.vertices for q in Q.vertices])
    assert sqrt_sum_leq(area2(P), area2(Q), area2(total))


@st.composite
def poly_pairs(draw):
    char = draw(st.sampled_from((0, 2, 5)))
    return draw(laurent(char)), draw(laurent(char))


@given(poly_pairs())
def test_product_newton_polygon_is_minkowski_sum(pair):
    f, g = pair
    lhs = newton_polygon(multiply(f, g))
    rhs = convex_hull([(p[0] + q[0], p[1] + q[1])
                       for p in f.support() for q in g.support()])
    assert lhs.vertices == rhs.vertices


@given(poly_pairs())
def test_multiplicity_additive_in_products(pair):
    f, g = pair
    assert multiplicity_at_one(multiply(f, g)) \
        == multiplicity_at_one(f) + multiplicity_at_one(g)


@given(st.sets(points, min_size=1, max_size=10), st.integers(1, 3),
       st.sampled_from((0, 2, 5)))
def test_jet_kernel_round_trip(pts, r, char):
    S = Support(pts)
    jm = jet_matrix(S, r, char)
    polys = kernel_polynomials(jm)
    assert len(polys) == nullity(jm)
    for phi in polys:
        assert phi.char == char
        assert set(phi.support()) <= set(S.points)
        assert multiplicity_at_one(phi) >= r


@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3),
                min_size=1, max_size=5),
       st.sampled_from((2, 3, 5, 7)))
def test_modular_rank_never_exceeds_rational(rows, p):
    assert rank_mod_p(rows, p) <= rational_rank(rows)


@st.composite
def line_reductions(draw):
    r = draw(st.integers(1, 3))
    base = draw(points)
    d = draw(st.sampled_from(((1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2))))
    on = [(base[0] + k * d[0], base[1] + k * d[1]) for k in range(r)]
    off = {p for p in draw(st.sets(points, max_size=8))
           if d[0] * (p[1] - base[1]) != d[1] * (p[0] - base[0])}
    line = (base, (base[0] + d[0], base[1] + d[1]))
    return Support(set(on) | off), line, r


@settings(max_examples=100)
@given(line_reductions())
def test_line_reduction_preserves_nullity(case):
    S, line, r = case
    n1, n2 = lemma_eu_check(S, line, r)
    assert n1 == n2


@given(st.integers(-20, 20), st.integers(1, 12))
def test_pascal_rule(a, k):
    assert binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k)


@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3),
                min_size=2, max_size=4),
       st.randoms(use_true_random=False))
def test_smith_form_invariants(rows, rng):
    diag, U, V = smith_normal_form(rows)
    for i in range(len(diag) - 1):
        assert diag[i + 1] % diag[i] == 0 if diag[i] else diag[i + 1] == 0
    prod = mat_mul(mat_mul(U, rows), V)
    for i, row in enumerate(prod):
        for j, x in enumerate(row):
            assert x == (diag[i] if i == j and i < len(diag) else 0)
    shuffled = [row[:] for row in rows]
    rng.shuffle(shuffled)
    assert smith_normal_form(shuffled)[0] == diag


@given(polygons())
def test_normalize_preserves_lattice_invariants(P):
    r = 1
    while r * r <= area2(P):
        r += 1
    Q, f = normalize(P, r)
    assert area2(Q) == area2(P)
    assert pick_counts(Q) == pick_counts(P)
    assert max_collinear(Q) == max_collinear(P)
    assert f.apply_polygon(P).vertices == Q.vertices
    for v in Q.vertices:
        assert omega_contains(v, r)


@given(polygons())
def test_selfintersection_matches_refinement(P):
    fan = normal_fan(P)
    assert divisor_square(fan, (1,) * len(fan.rays)) == k2_via_refinement(fan)


@functools.lru_cache(maxsize=1)
def _nct_pool():
    pool = [(phi_family(r), r) for r in range(1, 5)]
    pool += [(ggk_prime_family(r), r) for r in range(3, 7)]
    pool += [(rep, 2) for rep in classify(2)]
    pool += [(rep, 2) for rep in classify(2, char=5)]
    return pool


def _closure():
    reach = {p: {q for s, q in IMPLICATIONS if s == p} for p in range(1, 12)}
    changed = True
    while changed:
        changed = False
        for p in reach:
            grown = set().union(*(reach[q] for q in reach[p])) | reach[p]
            if grown != reach[p]:
                reach[p] = grown
                changed = True
    return reach


def test_condition_diagram_consistent_on_pool():
    reach = _closure()
    assert 9 in reach[4] and 9 in reach[7]
    violations = []
    for phi, r in _nct_pool():
        if r < 2:
            continue  # the diagram only speaks about r >= 2
        rep = thm36_report(phi, r)
        for p, targets in reach.items():
            if rep.conditions[p][0] is not True:
                continue
            for q in targets:
                if rep.conditions[q][0] is False:
                    violations.append((phi.to_text(), p, q))
    assert violations == []


def test_pool_members_are_ncts():
    for phi, r in _nct_pool():
        rep = is_nct(phi, r)
        assert rep.accepted or rep.status == "conditionally accepted"
        assert rep.multiplicity == multiplicity_at_one(phi) == r
        assert rep.area2 == area2(newton_polygon(phi)) < r * r
