"""Graded pieces of symbolic powers as kernels of jet matrices.

A Laurent polynomial supported on S lies in (v-1, w-1)^r exactly when the
r(r+1)/2 jet entries of order below r vanish; each is a linear form in the
coefficients with entry C(a, i) * C(b, j) at the support point (a, b).  The
dimension of the degree-d piece is then |dP| minus the rank of that system.
Ehrhart counting of the dilations gives the other side of the ledger.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Matrix, binomial, nullspace, rank_mod_p, rational_rank
from .lattice_geom import IntegralPolygon, area2, boundary_count, dilate, lattice_points
from .laurent_poly import LaurentPoly

# fixed stock of 30-bit primes for the modular rank prefilter
_PRIMES = (634227673, 637935209, 689122289, 735148451, 736773397, 740776679,
           862645547, 1016396681, 1022022193, 1022609759, 1036858913,
           1047717799)

_RNG = random.Random(0x5eed)


class Support:
    """Lattice points in a fixed lex order, the column index set."""

    __slots__ = ("points",)

    def __init__(self, points):
        self.points = tuple(sorted({(int(x), int(y)) for x, y in points}))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, Support) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return "Support(%r)" % (list(self.points),)


@dataclass
class JetMatrix:
    r: int
    char: int
    support: Support
    rows: list


def jet_matrix(S, r, char=0):
    """Rows (i, j) with i+j < r; entry C(a, i)*C(b, j) at column (a, b)."""
    if r < 1:
        raise ValueError("jet order must be at least 1")
    if not isinstance(S, Support):
        S = Support(S)
    rows = []
    for i in range(r):
        for j in range(r - i):
            row = []
            for a, b in S.points:
                e = binomial(a, i) * binomial(b, j)
                row.append(e % char if char else e)
            rows.append(row)
    return JetMatrix(r, char, S, rows)


def kernel(jm):
    """Kernel basis as plain coefficient vectors, one per basis element."""
    return [[s.val for s in vec] for vec in nullspace(Matrix(jm.rows, jm.char))]


def kernel_polynomials(jm):
    """Kernel vectors reinterpreted as Laurent polynomials on the support."""
    out = []
    for vec in kernel(jm):
        out.append(LaurentPoly(
            {pt: c for pt, c in zip(jm.support.points, vec) if c}, jm.char))
    return out


def matrix_rank(jm, rng=None):
    """Rank of the jet matrix; in char 0 a modular prefilter may settle it."""
    m, n = len(jm.rows), len(jm.support)
    if n == 0 or m == 0:
        return 0
    if jm.char:
        return rank_mod_p(jm.rows, jm.char)
    full = min(m, n)
    for p in (rng or _RNG).sample(_PRIMES, 2):
        # rank can only drop mod p, so hitting the ceiling is conclusive
        if rank_mod_p(jm.rows, p) == full:
            return full
    return rational_rank(jm.rows)


def nullity(jm, rng=None):
    return len(jm.support) - matrix_rank(jm, rng)


def symbolic_dim(P, d, r, char=0):
    """dim of the degree-d piece vanishing to order r at the torus point."""
    if d < 1:
        raise ValueError("degree must be positive")
    if r < 0:
        raise ValueError("vanishing order must be nonnegative")
    S = Support(lattice_points(dilate(P, d)))
    if r == 0:
        return len(S)
    return nullity(jet_matrix(S, r, char))


def lemma_eu_reduce(S, line, r):
    """Drop the r support points on the given line (two lattice points).

    The resulting support carries the order-(r-1) system; the dimension
    equality backing this reduction is a characteristic-0 statement.
    """
    (x1, y1), (x2, y2) = line
    if (x1, y1) == (x2, y2):
        raise ValueError("line needs two distinct points")
    on = [p for p in S.points
          if (x2 - x1) * (p[1] - y1) == (y2 - y1) * (p[0] - x1)]
    if len(on) != r:
        raise ValueError("line meets the support in %d points, not %d"
                         % (len(on), r))
    return Support(set(S.points) - set(on))


def lemma_eu_check(S, line, r, char=0):
    """Nullity before and after reducing; the pair agrees in char 0."""
    S2 = lemma_eu_reduce(S, line, r)
    n1 = nullity(jet_matrix(S, r, char))
    n2 = len(S2) if r == 1 else nullity(jet_matrix(S2, r - 1, char))
    return n1, n2


def ehrhart_polynomial(P):
    """Coefficients (area, B/2, 1) of the count of n*P lattice points."""
    if not isinstance(P, IntegralPolygon):
        raise ValueError("need an integral polygon")
    A = area2(P)
    if A == 0:
        raise ValueError("polygon is degenerate")
    return (Fraction(A, 2), Fraction(boundary_count(P), 2), Fraction(1))


def hilbert_numerator(P, N=8):
    """Numerator f with sum_n L(n) s^n = f(s) / (1-s)^3, from direct counts.

    The true numerator of a polygon has degree 2, so the default window
    leaves plenty of slack; a nonzero final coefficient means N was too
    small to see the tail vanish.
    """
    if not isinstance(P, IntegralPolygon):
        raise ValueError("need an integral polygon")
    if area2(P) == 0:
        raise ValueError("polygon is degenerate")
    counts = [1] + [len(lattice_points(dilate(P, n))) for n in range(1, N + 1)]
    f = []
    for k in range(N + 1):
        v = counts[k]
        for i, sign in ((1, -3), (2, 3), (3, -1)):
            if k - i >= 0:
                v += sign * counts[k - i]
        f.append(v)
    if f[-1] != 0:
        raise ValueError("truncation too small")
    while f and f[-1] == 0:
        f.pop()
    return f
