"""Herzog's presentation data for p_{a,b,c} and the rational triangle it cuts out.

For pairwise coprime weights the kernel of k[x,y,z] -> k[l^a, l^b, l^c] is
generated by the 2x2 minors of a matrix whose exponents (s2, s3, t1, t3, u1,
u2) satisfy the linear identities below.  Those exponents pin down a rational
triangle of area 1/(2abc) whose dilations count the graded pieces of the
semigroup ring, and its normal fan is the toric model everything downstream
lives on.
"""

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .exact_arith import rat_str
from .lattice_geom import area2, dilate, halfplane_polygon, lattice_points
from .toric_surface import Fan2D


@dataclass
class HerzogData:
    a: int
    b: int
    c: int
    s: int
    s2: int
    s3: int
    t: int
    t1: int
    t3: int
    u: int
    u1: int
    u2: int
    i0: int
    j0: int
    permutation: tuple


def _holds(a, b, c, s, s2, s3, t, t1, t3, u, u1, u2):
    """All of the presentation identities, plus the positivity we rely on."""
    return (s == s2 + s3 and t == t1 + t3 and u == u1 + u2
            and s * a == t1 * b + u1 * c
            and t * b == s2 * a + u2 * c
            and u * c == s3 * a + t3 * b
            and a == t * u - t3 * u2
            and b == s2 * u + s3 * u2
            and s3 > 0 and t3 > 0 and u > 0
            and min(s2, t1, u1, u2) >= 0)


def _decompositions(n, p, q):
    """All (x, y) >= 0 with x*p + y*q = n."""
    out = []
    for y in range(n // q + 1):
        r = n - y * q
        if r % p == 0:
            out.append((r // p, y))
    return out


def _minimal_multiple(a, b, c):
    """Least n > 0 with n*a in N0*b + N0*c, with every decomposition."""
    n = 1
    while True:
        decs = _decompositions(n * a, b, c)
        if decs:
            return n, decs
        n += 1


def _classic(a, b, c):
    # s, t, u all minimal; search the decompositions for a compatible combo
    s, s_decs = _minimal_multiple(a, b, c)
    t, t_decs = _minimal_multiple(b, a, c)
    u, u_decs = _minimal_multiple(c, a, b)
    for t1, u1 in s_decs:
        for s2, u2 in t_decs:
            for s3, t3 in u_decs:
                if _holds(a, b, c, s, s2, s3, t, t1, t3, u, u1, u2):
                    return s, s2, s3, t, t1, t3, u, u1, u2
    return None


def _completion(a, b, c):
    # complete-intersection fallback: keep u minimal among decompositions of
    # u*c with both parts positive, then solve s and t from the identities.
    # n*c - a - b >= (a-1)(b-1) is always representable, hence the cap.
    for n in range(1, a * b // c + 3):
        u_decs = [(x, y) for x, y in _decompositions(n * c, a, b) if x and y]
        if u_decs:
            u = n
            break
    else:
        return None
    for s3, t3 in u_decs:
        for u2 in range(u + 1):
            if (a + t3 * u2) % u or (b - s3 * u2) % u:
                continue
            t = (a + t3 * u2) // u
            s2 = (b - s3 * u2) // u
            t1 = t - t3
            if t1 < 0 or s2 < 0:
                continue
            cand = (s2 + s3, s2, s3, t, t1, t3, u, u - u2, u2)
            if _holds(a, b, c, *cand):
                return cand
    return None


def herzog_data(a, b, c):
    """Presentation data for the weights (a, b, c), permuting them if needed."""
    for w in (a, b, c):
        if not isinstance(w, int) or w < 1:
            raise ValueError("weights must be positive integers")
    if gcd(a, b) > 1 or gcd(b, c) > 1 or gcd(a, c) > 1:
        raise ValueError("weights must be pairwise coprime")
    triple = (a, b, c)
    for perm in permutations(range(3)):
        pa, pb, pc = (triple[i] for i in perm)
        found = _classic(pa, pb, pc)
        if found is None:
            found = _completion(pa, pb, pc)
        if found is not None:
            s, s2, s3, t, t1, t3, u, u1, u2 = found
            i0 = pow(pa, -1, pb) if pb > 1 else 0
            j0 = (1 - i0 * pa) // pb
            return HerzogData(pa, pb, pc, s, s2, s3, t, t1, t3, u, u1, u2,
                              i0, j0, perm)
    raise ValueError("no permutation admits presentation data")


def triangle(data):
    """The rational triangle cut out by the three presentation half-planes."""
    d = data
    return halfplane_polygon([
        ((d.s2, d.s3), -d.i0),
        ((-d.t, d.t3), -d.j0),
        ((d.u2, -d.u), 0),
    ])


def graded_dimension(data, d):
    """Number of lattice points of d * triangle(data)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    return len(lattice_points(dilate(triangle(data), d)))


def fan_rays(data):
    """The three ray generators, each as (primitive vector, divided gcd)."""
    raw = [(data.s2, data.s3), (-data.t, data.t3), (data.u2, -data.u)]
    out = []
    for x, y in raw:
        g = gcd(x, y)
        out.append(((x // g, y // g), g))
    return out


def fan(data):
    """Normal fan of the triangle, rays counterclockwise."""
    return Fan2D([ray for ray, _ in fan_rays(data)])


def herzog_to_json(data):
    """JSON-ready report of the data and the triangle vertices."""
    keys = ("a", "b", "c", "s", "s2", "s3", "t", "t1", "t3", "u", "u1", "u2",
            "i0", "j0")
    doc = {k: getattr(data, k) for k in keys}
    doc["permutation"] = list(data.permutation)
    P = triangle(data)
    doc["triangle"] = [[rat_str(x), rat_str(y)] for x, y in P.vertices]
    doc["area2"] = rat_str(area2(P))
    return doc
