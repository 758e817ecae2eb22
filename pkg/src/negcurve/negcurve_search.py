"""Search for negative curves in symbolic powers of the three-variable primes."""

from dataclasses import dataclass
from math import isqrt

from .herzog_semigroup import herzog_data, triangle
from .lattice_geom import convex_hull, dilate, edges, lattice_points, pick_counts
from .laurent_poly import serialize
from .nct_catalog import is_nct, nct_to_json
from .symbolic_power import Support, jet_matrix, kernel_polynomials, nullity


def is_negative_pair(a, b, c, r, d):
    """d/r below sqrt(abc), compared exactly."""
    return d * d < a * b * c * r * r


@dataclass
class NegativeCurveReport:
    """A candidate curve in the d-th graded piece of the r-th symbolic power."""

    triple: tuple
    char: int
    r: int
    d: int
    phi: object
    checks: list
    nct: object
    genus: int

    @property
    def accepted(self):
        return all(ok for _, ok in self.checks)

    @property
    def status(self):
        if not self.accepted:
            return "rejected"
        if self.nct.certificate.verdict == "Inconclusive":
            return "conditionally accepted"
        return "accepted"


def negcurve_to_json(report):
    return {
        "triple": list(report.triple),
        "char": report.char,
        "r": report.r,
        "d": report.d,
        "phi": serialize(report.phi),
        "status": report.status,
        "checks": [[name, bool(ok)] for name, ok in report.checks],
        "nct": nct_to_json(report.nct),
        "genus": report.genus,
    }


def _on_edge(A, B, p):
    ux, uy = B[0] - A[0], B[1] - A[1]
    px, py = p[0] - A[0], p[1] - A[1]
    if ux * py - uy * px != 0:
        return False
    lo, hi = min(A[0], B[0]), max(A[0], B[0])
    if not lo <= p[0] <= hi:
        return False
    lo, hi = min(A[1], B[1]), max(A[1], B[1])
    return lo <= p[1] <= hi


def _interior_of_hull(pts):
    if len(pts) < 3:
        return 0
    return pick_counts(convex_hull(pts))[1]


def genus_payload(a, b, c, r, d):
    """Arithmetic genus from the interior count of the degree-d slice."""
    pts = lattice_points(dilate(triangle(herzog_data(a, b, c)), d))
    p_a = _interior_of_hull(pts) - r * (r - 1) // 2
    if p_a < 0:
        raise ValueError("interior count falls below r(r-1)/2")
    return p_a


def _report(triple, char, r, d, phi, dP):
    a, b, c = triple
    nct = is_nct(phi, r)
    edge_ok = all(any(_on_edge(A, B, p) for p in phi.support())
                  for A, B in edges(dP))
    checks = [
        ("irreducible", nct.certificate.verdict != "Factored"),
        ("edge_touching", edge_ok),
        ("jet_membership", True),  # kernel element by construction
        ("area", is_negative_pair(a, b, c, r, d)),
    ]
    genus = _interior_of_hull(lattice_points(dP)) - r * (r - 1) // 2
    return NegativeCurveReport(triple, char, r, d, phi, checks, nct, genus)


def find(a, b, c, char, r, d):
    """First kernel generator at (r, d) passing the four curve conditions."""
    dP = dilate(triangle(herzog_data(a, b, c)), d)
    pts = lattice_points(dP)
    if not pts:
        return None
    jm = jet_matrix(Support(pts), r, char)
    # nullity runs the two-prime modular prefilter before any rational kernel
    if nullity(jm) == 0:
        return None
    for phi in kernel_polynomials(jm):
        report = _report((a, b, c), char, r, d, phi, dP)
        if report.accepted:
            return phi, report
    return None


def _cell_worker(args):
    a, b, c, char, r, d = args
    hit = find(a, b, c, char, r, d)
    return None if hit is None else (r, d, hit[1])


def scan(a, b, c, char, r_max, d_filter=None, jobs=None, progress=None):
    """All hits with r up to r_max and d below the negativity threshold."""
    if r_max < 1:
        raise ValueError("r_max must be positive")
    cells = []
    for r in range(1, r_max + 1):
        for d in range(1, isqrt(a * b * c * r * r - 1) + 1):
            if d_filter is None or d in d_filter:
                cells.append((a, b, c, char, r, d))
    if jobs and jobs > 1:
        from multiprocessing import Pool

        out = []
        with Pool(jobs) as pool:
            for cell, hit in zip(cells, pool.imap(_cell_worker, cells)):
                if progress:
                    progress(cell[4], cell[5])
                if hit is not None:
                    out.append(hit)
        return out
    out = []
    for cell in cells:
        if progress:
            progress(cell[4], cell[5])
        hit = _cell_worker(cell)
        if hit is not None:
            out.append(hit)
    return out
