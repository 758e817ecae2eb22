"""Verification, families, canonical forms, and small-r classification of ncts."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .irreducibility import IrreducibilityCertificate, cert_to_json, certify
from .lattice_geom import (
    DegeneratePolygonError,
    IntegralPolygon,
    _angle_key,
    _ext_gcd,
    _primitive,
    area2,
    convex_hull,
    lattice_points,
    max_collinear,
    normalized_maps,
    omega_contains,
    pick_counts,
)
from .laurent_poly import (
    LaurentPoly,
    apply_gl2z,
    monomial,
    multiplicity_at_one,
    multiply,
    newton_polygon,
    parse,
    serialize,
    unit_multiply,
)
from .symbolic_power import Support, jet_matrix, kernel_polynomials, nullity


@dataclass
class NctReport:
    """Outcome of the sanity battery for a candidate r-nct."""

    r: int
    area2: int
    B: int
    I: int
    lattice_count: int
    multiplicity: int
    certificate: IrreducibilityCertificate
    checks: list = field(default_factory=list)

    @property
    def accepted(self):
        return all(ok for _, ok in self.checks)

    @property
    def status(self):
        if not self.accepted:
            return "rejected"
        if self.certificate.verdict == "Inconclusive":
            return "conditionally accepted"
        return "accepted"


def is_nct(phi, r):
    """Run every defining check on phi at multiplicity r."""
    if not phi:
        raise ValueError("zero polynomial")
    if r < 1:
        raise ValueError("r must be positive")
    P = newton_polygon(phi)
    pts = lattice_points(P)
    if len(phi.terms) == 1:
        cert = IrreducibilityCertificate("Inconclusive", "unit input")
    else:
        cert = certify(phi)
    if P.dim == 2:
        B, I = pick_counts(P)
        A = area2(P)
    else:
        B, I, A = len(pts), 0, 0
    checks = [
        ("multiplicity", multiplicity_at_one(phi) == r),
        ("irreducible", cert.verdict != "Factored"),
        ("area", A < r * r),
        ("lattice_count", len(pts) <= r * (r + 1) // 2 + 1),
    ]
    if r >= 2:
        checks.append(("collinear", max_collinear(P) <= r))
    checks.append(("kernel", nullity(jet_matrix(Support(pts), r, phi.char)) == 1))
    return NctReport(r, A, B, I, len(pts), multiplicity_at_one(phi), cert, checks)


def nct_to_json(report):
    return {
        "r": report.r,
        "area2": report.area2,
        "B": report.B,
        "I": report.I,
        "lattice_count": report.lattice_count,
        "multiplicity": report.multiplicity,
        "status": report.status,
        "certificate": cert_to_json(report.certificate),
        "checks": [[name, bool(ok)] for name, ok in report.checks],
    }


def phi_family(r):
    """Family over the (1, 2, 3) triple: phi_1 = vw - 1, then a two-term recursion."""
    if r < 1:
        raise ValueError("r must be positive")
    cur = parse("vw - 1")
    vm1 = parse("v - 1")
    wm1 = parse("w - 1")
    for k in range(2, r + 1):
        tail = monomial(1, 0)
        for _ in range(k):
            tail = multiply(tail, wm1)
        sign = 1 if k % 2 else -1
        cur = -multiply(cur, vm1) + sign * tail
    return cur


def _ggk_vertices(r):
    if r % 2:
        return [(-1, -1), (r - 1, 0), ((r - 1) // 2, r - 1), ((r - 3) // 2, r - 2)]
    return [(-1, -1), (r - 1, 0), (r // 2, r - 2), ((r - 2) // 2, r - 1)]


def _int_primitive(phi):
    """Integer coefficients with content 1, negative at the least support point."""
    den = 1
    for c in phi.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in phi.terms.values():
        num = gcd(num, (c * den).numerator)
    c0 = phi.terms[min(phi.terms)]
    scale = Fraction(den, num)
    if c0 * scale > 0:
        scale = -scale
    return unit_multiply(phi, scale)


def ggk_prime_family(r):
    """Jet-kernel generator on the tetragon with a vertex at (-1, -1), char 0."""
    if r < 3:
        raise ValueError("the family starts at r = 3")
    P = convex_hull(_ggk_vertices(r))
    if len(P.vertices) != 4:
        raise RuntimeError("tetragon degenerated at r = %d" % r)
    pts = lattice_points(P)
    if len(pts) != r * (r + 1) // 2 + 1:
        raise RuntimeError("lattice count %d is off at r = %d" % (len(pts), r))
    jm = jet_matrix(Support(pts), r)
    if nullity(jm) != 1:
        raise RuntimeError("jet kernel dimension is not 1 at r = %d" % r)
    psi = kernel_polynomials(jm)[0]
    # nonzero vertex coefficients pin the newton polygon to the full tetragon
    for v in P.vertices:
        if not psi.terms.get(v):
            raise RuntimeError("vertex coefficient vanishes at %s" % (v,))
    return _int_primitive(psi)


def _scaled(phi):
    """Unit scaling that puts coefficient -1 at the least support point."""
    c0 = phi.terms[min(phi.terms)]
    if phi.char:
        return unit_multiply(phi, -pow(c0, -1, phi.char))
    return unit_multiply(phi, Fraction(-1) / c0)


def _rep_key(phi):
    sup = phi.support()
    return tuple(sup), tuple(phi.terms[e] for e in sup)


def _segment_forms(phi, P):
    # one endpoint to the origin, the primitive direction to (1, 0)
    forms = []
    ends = P.vertices if len(P.vertices) == 2 else [P.vertices[0]] * 2
    for V, W in (ends, ends[::-1]):
        if V == W:
            m = ((1, 0), (0, 1))
        else:
            d = _primitive((W[0] - V[0], W[1] - V[1]))
            g, fx, fy = _ext_gcd(d[0], d[1])
            m = ((fx, -d[1]), (fy, d[0]))
        t = (-(V[0] * m[0][0] + V[1] * m[1][0]), -(V[0] * m[0][1] + V[1] * m[1][1]))
        forms.append(_scaled(unit_multiply(apply_gl2z(phi, m), 1, t[0], t[1])))
    return forms


def canonical_form(phi, r):
    """Least (support, coefficients) representative of the equivalence class."""
    if not phi:
        raise ValueError("zero polynomial")
    P = newton_polygon(phi)
    if P.dim < 2:
        if r >= 2:
            raise DegeneratePolygonError("no canonical form on a segment for r >= 2")
        cands = _segment_forms(phi, P)
    else:
        _, winners = normalized_maps(P, r)
        cands = [_scaled(unit_multiply(apply_gl2z(phi, f.m), 1, f.t[0], f.t[1]))
                 for f in winners]
    return min(cands, key=_rep_key)


def _xp(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _normalized_polygons(r):
    """Convex lattice polygons in base position inside Omega, r-pruned."""
    r2 = r * r
    bound = r * (r + 1) // 2 + 1
    grid = [(x, y) for y in range(1, r2) for x in range(0, 3 * r2 + 1)
            if omega_contains((x, y), r)]
    out = []

    def fits(chain):
        hull = convex_hull(chain)
        if area2(hull) >= r2:
            return False
        if len(lattice_points(hull)) > bound:
            return False
        return not (r >= 2 and max_collinear(hull) > r)

    def rec(chain, last_key):
        vk = chain[-1]
        ek = (vk[0] - chain[-2][0], vk[1] - chain[-2][1])
        if vk[1] > vk[0] >= 0 and _xp(ek, (-vk[0], -vk[1])) > 0:
            out.append(IntegralPolygon(chain))
        for w in grid:
            e = (w[0] - vk[0], w[1] - vk[1])
            if e == (0, 0) or _xp(ek, e) <= 0 or _angle_key(e) <= last_key:
                continue
            nxt = chain + [w]
            if fits(nxt):
                rec(nxt, _angle_key(e))

    # base edge (0,0)-(a,0) carries a+1 collinear lattice points
    for a in range(1, max(2, r)):
        for w in grid:
            chain = [(0, 0), (a, 0), w]
            if fits(chain):
                rec(chain, _angle_key((w[0] - a, w[1])))
    return out


def _polygon_class(P, r, char):
    """Kernel generator on the lattice points of P when the kernel is a line."""
    jm = jet_matrix(Support(lattice_points(P)), r, char)
    if nullity(jm) != 1:
        return None
    return kernel_polynomials(jm)[0]


def _chain_worker(args):
    verts, r, char = args
    psi = _polygon_class(IntegralPolygon(verts), r, char)
    return None if psi is None else dict(psi.terms)


def catalog(r, char=0, experimental=False, jobs=None):
    """Canonical representatives with reports, exhaustively for r <= 2 (3 gated)."""
    if r < 1:
        raise ValueError("r must be positive")
    if r == 3 and not experimental:
        raise ValueError("r = 3 needs experimental=True")
    if r > 3:
        raise ValueError("no enumeration beyond r = 3")
    psis = []
    if r == 1:
        # only the primitive segment fits the 2-point budget; no polygon has area2 < 1
        S = Support([(0, 0), (1, 0)])
        psis.append(kernel_polynomials(jet_matrix(S, 1, char))[0])
    else:
        polys = _normalized_polygons(r)
        if jobs and jobs > 1:
            from multiprocessing import Pool

            with Pool(jobs) as pool:
                hits = pool.map(_chain_worker, [(P.vertices, r, char) for P in polys])
            psis = [LaurentPoly(t, char) for t in hits if t is not None]
        else:
            psis = [p for p in (_polygon_class(P, r, char) for P in polys)
                    if p is not None]
    entries = {}
    for psi in psis:
        rep = canonical_form(psi, r)
        key = _rep_key(rep)
        if key in entries:
            continue
        report = is_nct(rep, r)
        if report.accepted:
            entries[key] = (rep, report)
    return [entries[k] for k in sorted(entries)]


def classify(r, char=0, experimental=False, jobs=None):
    """The canonical representative of every class found at multiplicity r."""
    return [rep for rep, _ in catalog(r, char, experimental, jobs)]


def catalog_to_json(r, char=0, experimental=False, jobs=None):
    return {
        "r": r,
        "char": char,
        "classes": [
            {"representative": serialize(rep), "report": nct_to_json(report)}
            for rep, report in catalog(r, char, experimental, jobs)
        ],
    }
