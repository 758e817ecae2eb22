"""Exact 2D lattice and rational convex geometry.

Points are plain (x, y) tuples of ints (lattice) or Fractions (rational).
Polygons store a minimal counterclockwise vertex list plus a dimension flag
(0 point, 1 segment, 2 polygon); degenerate hulls are first-class values and
the operations that need dimension 2 raise DegeneratePolygonError.
"""

from fractions import Fraction
from math import gcd

from .exact_arith import det2


class DegeneratePolygonError(ValueError):
    """Operation needs a 2-dimensional polygon."""


class EmptyRegionError(ValueError):
    """Half-plane intersection is empty."""


class UnboundedRegionError(ValueError):
    """Half-plane intersection is unbounded."""


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_vertices(points):
    """Monotone chain; returns (ccw vertex list, dim), collinear points dropped."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty point set")
    if len(pts) == 1:
        return pts, 0
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    if len(lower) == 2 and len(upper) == 2:
        return [pts[0], pts[-1]], 1
    verts = lower[:-1] + upper[:-1]
    i = min(range(len(verts)), key=lambda k: verts[k])
    return verts[i:] + verts[:i], 2


class Polygon:
    """Shared guts of IntegralPolygon and RationalPolygon."""

    __slots__ = ("vertices", "dim")

    def __init__(self, points):
        verts, dim = _hull_vertices(list(points))
        self.vertices = tuple(tuple(p) for p in verts)
        self.dim = dim

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.dim == other.dim \
            and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, list(self.vertices))


class IntegralPolygon(Polygon):
    def __init__(self, points):
        pts = [(int(x), int(y)) for x, y in points]
        for (x, y), (ox, oy) in zip(pts, points):
            if x != ox or y != oy:
                raise ValueError("non-integral vertex %s" % ((ox, oy),))
        super().__init__(pts)


class RationalPolygon(Polygon):
    def __init__(self, points):
        super().__init__([(Fraction(x), Fraction(y)) for x, y in points])


def convex_hull(points):
    """Hull of a set of lattice points, as an IntegralPolygon."""
    return IntegralPolygon(points)


def area2(P):
    """Twice the (positive) area; 0 for degenerate polygons."""
    if P.dim < 2:
        return 0
    vs = P.vertices
    s = 0
    for i in range(len(vs)):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % len(vs)]
        s += x0 * y1 - x1 * y0
    return s


def edges(P):
    if P.dim < 2:
        raise DegeneratePolygonError("polygon has dimension %d" % P.dim)
    vs = P.vertices
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _primitive(v):
    """Primitive integer vector parallel to v (v integer or rational, nonzero)."""
    x, y = Fraction(v[0]), Fraction(v[1])
    den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    a, b = int(x * den), int(y * den)
    g = gcd(abs(a), abs(b))
    return (a // g, b // g)


def inward_normals(P):
    """[(normal, bound)] with the polygon equal to {x : <x,n> >= bound}.

    Normals are primitive integer vectors; bounds are exact rationals.
    """
    out = []
    for (a, b) in edges(P):
        d = (b[0] - a[0], b[1] - a[1])
        n = _primitive((-d[1], d[0]))
        out.append((n, n[0] * a[0] + n[1] * a[1]))
    return out


def polygon_contains(P, pt):
    """Exact membership test, boundary inclusive."""
    if P.dim == 0:
        return tuple(pt) == P.vertices[0]
    if P.dim == 1:
        a, b = P.vertices
        if _cross(a, b, pt) != 0:
            return False
        return min(a, b) <= tuple(pt) <= max(a, b)
    return all(n[0] * pt[0] + n[1] * pt[1] >= bound for n, bound in inward_normals(P))


def _ceil(x):
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


def _floor(x):
    x = Fraction(x)
    return x.numerator // x.denominator


def _line_lattice_points(a, b):
    """Lattice points on the closed segment [a, b] with rational endpoints."""
    # integer line equation <n, p> = gamma through a and b
    d = (Fraction(b[0]) - Fraction(a[0]), Fraction(b[1]) - Fraction(a[1]))
    if d == (0, 0):
        x, y = Fraction(a[0]), Fraction(a[1])
        return [(int(x), int(y))] if x.denominator == 1 and y.denominator == 1 else []
    n = _primitive((-d[1], d[0]))
    gamma = Fraction(a[0]) * n[0] + Fraction(a[1]) * n[1]
    if gamma.denominator != 1:
        return []
    g, x0, y0 = _ext_gcd(n[0], n[1])
    base = (x0 * int(gamma), y0 * int(gamma))  # g == 1 for a primitive normal
    step = _primitive(d)
    # base + k*step runs over all integer solutions; clamp k to the segment
    def param(p):
        if step[0]:
            return (Fraction(p[0]) - base[0]) / step[0]
        return (Fraction(p[1]) - base[1]) / step[1]
    t0, t1 = sorted((param(a), param(b)))
    return [(base[0] + k * step[0], base[1] + k * step[1])
            for k in range(_ceil(t0), _floor(t1) + 1)]


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_points(P):
    """All lattice points of P, sorted lex."""
    if P.dim == 0:
        return _line_lattice_points(P.vertices[0], P.vertices[0])
    if P.dim == 1:
        return sorted(_line_lattice_points(*P.vertices))
    ys = [Fraction(v[1]) for v in P.vertices]
    out = []
    es = edges(P)
    for y in range(_ceil(min(ys)), _floor(max(ys)) + 1):
        xs = []
        for (a, b) in es:
            ay, by = Fraction(a[1]), Fraction(b[1])
            if ay == by:
                if ay == y:
                    xs.append(Fraction(a[0]))
                    xs.append(Fraction(b[0]))
                continue
            if min(ay, by) <= y <= max(ay, by):
                t = Fraction(y - ay, by - ay)
                xs.append(Fraction(a[0]) + t * (Fraction(b[0]) - Fraction(a[0])))
        if not xs:
            continue
        out.extend((x, y) for x in range(_ceil(min(xs)), _floor(max(xs)) + 1))
    return sorted(out)


def boundary_count(P):
    """Number of lattice points on the boundary (all points if dim < 2)."""
    if P.dim < 2:
        return len(lattice_points(P))
    pts = set()
    for a, c in edges(P):
        pts.update(_line_lattice_points(a, c))
    return len(pts)


def pick_counts(P):
    """(B, I): boundary and interior lattice point counts."""
    B = boundary_count(P)
    return B, len(lattice_points(P)) - B


def interior_count(P):
    return pick_counts(P)[1]


def dilate(P, d):
    """Vertices scaled by the positive integer d."""
    if d <= 0:
        raise ValueError("dilation factor must be positive")
    cls = IntegralPolygon if isinstance(P, IntegralPolygon) else RationalPolygon
    return cls([(d * x, d * y) for x, y in P.vertices])


def _angle_key(v):
    """Total order on nonzero integer directions: angle in [0, 2pi) from (1,0)."""
    x, y = v
    half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
    return (half, 0 if y == 0 else 1, Fraction(-x, y) if y else Fraction(0))


def _sort_by_angle(vecs):
    return sorted(vecs, key=_angle_key)


def halfplane_polygon(constraints):
    """Intersection of half-planes {x : <x, n> >= bound} as a RationalPolygon.

    Raises UnboundedRegionError / EmptyRegionError; a bounded region of lower
    dimension comes back as a degenerate polygon.
    """
    cons = [((Fraction(n[0]), Fraction(n[1])), Fraction(b)) for n, b in constraints]
    if any(n == (0, 0) for n, _ in cons):
        raise ValueError("zero normal vector")
    dirs = sorted(set(_primitive(n) for n, _ in cons), key=_angle_key)
    if len(dirs) < 3:
        raise UnboundedRegionError("normals do not positively span the plane")
    for i in range(len(dirs)):
        if det2(dirs[i], dirs[(i + 1) % len(dirs)]) <= 0:
            raise UnboundedRegionError("normals do not positively span the plane")
    candidates = set()
    m = len(cons)
    for i in range(m):
        (ni, bi) = cons[i]
        for j in range(i + 1, m):
            (nj, bj) = cons[j]
            D = ni[0] * nj[1] - ni[1] * nj[0]
            if D == 0:
                continue
            x = (bi * nj[1] - bj * ni[1]) / D
            y = (ni[0] * bj - nj[0] * bi) / D
            if all(n[0] * x + n[1] * y >= b for n, b in cons):
                candidates.add((x, y))
    if not candidates:
        raise EmptyRegionError("no feasible vertex")
    return RationalPolygon(candidates)


def max_collinear(P):
    """Maximum number of lattice points of P on one affine line."""
    pts = lattice_points(P)
    if P.dim < 2 or len(pts) < 2:
        return len(pts)
    lines = {}
    n = len(pts)
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            d = _primitive((pts[j][0] - xi, pts[j][1] - yi))
            if d < (0, 0) or (d[0] < 0 and d[1] == 0):
                d = (-d[0], -d[1])
            key = (d, d[0] * yi - d[1] * xi)
            lines.setdefault(key, set()).update((i, j))
    return max(len(s) for s in lines.values())


class UnimodularAffineMap:
    """p -> p*M + t with M in GL(2, Z), acting on exponent row vectors."""

    __slots__ = ("m", "t")

    def __init__(self, m, t=(0, 0)):
        self.m = ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))
        self.t = (int(t[0]), int(t[1]))
        if abs(self.det()) != 1:
            raise ValueError("matrix is not unimodular")

    def det(self):
        return self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]

    def apply(self, p):
        x, y = p
        return (x * self.m[0][0] + y * self.m[1][0] + self.t[0],
                x * self.m[0][1] + y * self.m[1][1] + self.t[1])

    def apply_polygon(self, P):
        cls = IntegralPolygon if isinstance(P, IntegralPolygon) else Polygon
        return cls([self.apply(v) for v in P.vertices])

    def compose(self, other):
        """self followed by other."""
        a, b = self.m, other.m
        m = ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
             (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))
        return UnimodularAffineMap(m, other.apply(self.t))

    def inverse(self):
        d = self.det()
        (m11, m12), (m21, m22) = self.m
        inv = ((m22 * d, -m12 * d), (-m21 * d, m11 * d))
        w = UnimodularAffineMap(inv)
        return UnimodularAffineMap(inv, (-w.apply(self.t)[0], -w.apply(self.t)[1]))

    @staticmethod
    def identity():
        return UnimodularAffineMap(((1, 0), (0, 1)))

    def __eq__(self, other):
        return isinstance(other, UnimodularAffineMap) and self.m == other.m and self.t == other.t

    def __hash__(self):
        return hash((self.m, self.t))

    def __repr__(self):
        return "UnimodularAffineMap(m=%s, t=%s)" % (self.m, self.t)


def omega_contains(pt, r):
    """Exact membership in the bounding region Omega for multiplicity r.

    Omega is the hull of (0,0), (sqrt2 r^2, 0), ((sqrt2+1) r^2, r^2), (0, r^2);
    the irrational edge is tested via the squared comparison.
    """
    x, y = pt
    r2 = r * r
    if x < 0 or y < 0 or y > r2:
        return False
    if x <= y:
        return True
    return (x - y) ** 2 <= 2 * r2 * r2


def _base_maps(P):
    """All 2n (vertex, adjacent edge) normalizing maps for a 2-dim polygon."""
    vs = P.vertices
    n = len(vs)
    maps = []
    flip = ((1, 0), (0, -1))
    for i in range(n):
        V = vs[i]
        for other in (vs[(i + 1) % n], vs[(i - 1) % n]):
            third = vs[(i - 1) % n] if other == vs[(i + 1) % n] else vs[(i + 1) % n]
            e = _primitive((other[0] - V[0], other[1] - V[1]))
            g, fx, fy = _ext_gcd(e[0], e[1])
            assert g == 1
            # e*m0 = (1, 0): m0 inverts the unimodular matrix with rows e, (-fy, fx)
            m0 = ((fx, -e[1]), (fy, e[0]))
            d = (third[0] - V[0], third[1] - V[1])
            dm = (d[0] * m0[0][0] + d[1] * m0[1][0], d[0] * m0[0][1] + d[1] * m0[1][1])
            if dm[1] < 0:
                m0 = ((m0[0][0], -m0[0][1]), (m0[1][0], -m0[1][1]))
                dm = (dm[0], -dm[1])
            a2, b2 = _primitive(dm)
            k = -(a2 // b2)
            shear = ((1, 0), (k, 1))
            m = ((m0[0][0] + m0[0][1] * k, m0[0][1]),
                 (m0[1][0] + m0[1][1] * k, m0[1][1]))
            t = (-(V[0] * m[0][0] + V[1] * m[1][0]), -(V[0] * m[0][1] + V[1] * m[1][1]))
            maps.append(UnimodularAffineMap(m, t))
    return maps


def normalized_maps(P, r):
    """(canonical polygon, all base maps achieving it), for area2(P) < r^2."""
    if P.dim < 2:
        raise DegeneratePolygonError("normalize needs a 2-dimensional polygon")
    if not area2(P) < r * r:
        raise ValueError("normalize needs area2 < r^2")
    best = None
    winners = []
    for f in _base_maps(P):
        Q = IntegralPolygon([f.apply(v) for v in P.vertices])
        assert all(omega_contains(v, r) for v in Q.vertices), "image escapes Omega"
        if best is None or Q.vertices < best.vertices:
            best = Q
            winners = [f]
        elif Q.vertices == best.vertices:
            winners.append(f)
    return best, winners


def normalize(P, r):
    """Unimodular-affine image of P with the canonical base position inside Omega."""
    Q, winners = normalized_maps(P, r)
    return Q, winners[0]


def _walk(edge_vectors):
    """Close an edge-vector multiset into a polygon (translated to lex-min 0)."""
    vecs = _sort_by_angle(edge_vectors)
    pts = [(0, 0)]
    for v in vecs:
        pts.append((pts[-1][0] + v[0], pts[-1][1] + v[1]))
    assert pts[-1] == (0, 0), "edge multiset does not close up"
    base = min(pts)
    return IntegralPolygon([(x - base[0], y - base[1]) for x, y in pts[:-1]])


def minkowski_decompositions(P):
    """All splittings P = Q1 + Q2 up to swap and translation.

    Enumerates per-direction counts of the primitive edge multiset; each valid
    zero-sum proper sub-multiset closes into one summand, the complement into
    the other.  Empty list means Minkowski-indecomposable.
    """
    if P.dim < 2:
        raise DegeneratePolygonError("decomposition needs a 2-dimensional polygon")
    prim = []
    counts = []
    for (a, b) in edges(P):
        d = (b[0] - a[0], b[1] - a[1])
        g = gcd(abs(d[0]), abs(d[1]))
        prim.append((d[0] // g, d[1] // g))
        counts.append(g)
    m = len(prim)
    found = {}
    stack = [(0, 0, 0, [])]
    while stack:
        i, sx, sy, chosen = stack.pop()
        if i == m:
            if (sx, sy) != (0, 0):
                continue
            t = chosen
            if all(c == 0 for c in t) or all(c == g for c, g in zip(t, counts)):
                continue
            e1 = [v for v, c in zip(prim, t) for _ in range(c)]
            e2 = [v for v, c, g in zip(prim, t, counts) for _ in range(g - c)]
            q1, q2 = _walk(e1), _walk(e2)
            key = frozenset((q1.vertices, q2.vertices))
            found.setdefault(key, (q1, q2))
            continue
        # remaining edges bound how far the partial sum can still travel
        rx = sum(abs(prim[j][0]) * counts[j] for j in range(i, m))
        ry = sum(abs(prim[j][1]) * counts[j] for j in range(i, m))
        if abs(sx) > rx or abs(sy) > ry:
            continue
        for c in range(counts[i] + 1):
            stack.append((i + 1, sx + c * prim[i][0], sy + c * prim[i][1], chosen + [c]))
    return [found[k] for k in sorted(found, key=lambda fs: sorted(fs))]


def sqrt_sum_leq(a1, a2, a):
    """Exact test of sqrt(a1) + sqrt(a2) <= sqrt(a) for nonnegative rationals."""
    s = Fraction(a) - Fraction(a1) - Fraction(a2)
    return s >= 0 and 4 * Fraction(a1) * Fraction(a2) <= s * s


def polygon_to_json(P):
    from .exact_arith import rat_str
    out = []
    for x, y in P.vertices:
        fx, fy = Fraction(x), Fraction(y)
        if fx.denominator == 1 and fy.denominator == 1:
            out.append([int(fx), int(fy)])
        else:
            out.append([rat_str(fx), rat_str(fy)])
    return {"vertices": out}


def polygon_from_json(doc):
    from .exact_arith import parse_rat
    verts = [(parse_rat(x), parse_rat(y)) for x, y in doc["vertices"]]
    if all(v[0].denominator == 1 and v[1].denominator == 1 for v in verts):
        return IntegralPolygon([(int(x), int(y)) for x, y in verts])
    return RationalPolygon(verts)
