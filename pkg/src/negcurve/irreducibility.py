"""Irreducibility certificates for Laurent polynomials.

Three mechanisms, cheapest first: an indecomposable Newton polygon certifies
irreducibility over every field, reduction mod p certifies it over the
rationals, and an actual factorization refutes it.  The outcome is always a
typed certificate; when every mechanism is exhausted the verdict is an honest
Inconclusive, never a guess.  Factoring over F_p goes through the Kronecker
substitution w = v^M, sympy's univariate factorization, and recombination of
factor subsets constrained by Minkowski summands of the Newton polygon.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

import sympy

from .lattice_geom import (
    DegeneratePolygonError,
    minkowski_decompositions,
)
from .laurent_poly import LaurentPoly, newton_polygon, serialize


class FactorBudgetError(RuntimeError):
    """Recombination or division work exceeded the desk-scale budget."""


@dataclass
class IrreducibilityCertificate:
    verdict: str  # IrreduciblePolytope | IrreducibleModP | Factored | Inconclusive
    details: str
    p: int = 0
    factors: list = field(default_factory=list)
    unit: LaurentPoly = None

    def is_irreducible(self):
        return self.verdict in ("IrreduciblePolytope", "IrreducibleModP")


def cert_to_json(cert):
    doc = {"verdict": cert.verdict, "details": cert.details}
    if cert.verdict == "IrreducibleModP":
        doc["p"] = cert.p
    if cert.verdict == "Factored":
        doc["factors"] = [serialize(f) for f in cert.factors]
        doc["unit"] = serialize(cert.unit)
    return doc


def _shift(phi, da, db):
    return LaurentPoly({(a + da, b + db): c for (a, b), c in phi.terms.items()},
                       phi.char)


def _to_origin(phi):
    """Translate so both exponent minima are zero; returns (poly, shift)."""
    a0 = min(a for a, _ in phi.terms)
    b0 = min(b for _, b in phi.terms)
    return _shift(phi, -a0, -b0), (a0, b0)


def _div_coeff(c1, c2, char):
    if char == 0:
        return Fraction(c1) / c2
    return c1 * pow(c2, -1, char) % char


def exact_divide(f, g, max_steps=20000):
    """Quotient f / g in the Laurent ring, or None when not divisible."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.char != g.char:
        raise ValueError("characteristic mismatch")
    if not f:
        return LaurentPoly({}, f.char)
    fq, (fa, fb) = _to_origin(f)
    gq, (ga, gb) = _to_origin(g)
    rem = dict(fq.terms)
    eg = max(gq.terms)
    q = {}
    for _ in range(max_steps):
        if not rem:
            return _shift(LaurentPoly(q, f.char), fa - ga, fb - gb)
        ef = max(rem)
        da, db = ef[0] - eg[0], ef[1] - eg[1]
        if da < 0 or db < 0:
            return None
        c = _div_coeff(rem[ef], gq.terms[eg], f.char)
        q[(da, db)] = c
        for (a, b), gc in gq.terms.items():
            key = (a + da, b + db)
            val = rem.get(key, 0) - c * gc
            if f.char:
                val %= f.char
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return None


def _primes():
    n = 2
    while True:
        if all(n % d for d in range(2, int(n ** 0.5) + 1)):
            yield n
        n += 1


def _segment_length(P):
    """Lattice length when the hull is a segment, else None."""
    if len(P.vertices) != 2:
        return None
    (x1, y1), (x2, y2) = P.vertices
    return gcd(abs(x2 - x1), abs(y2 - y1))


def _translated_summands(P):
    """Newton polygons a proper factor may have, translated to the origin."""
    try:
        decs = minkowski_decompositions(P)
    except DegeneratePolygonError:
        return None  # segment: no pruning
    allowed = set()
    for Q1, Q2 in decs:
        for Q in (Q1, Q2):
            xs = [x for x, _ in Q.vertices]
            ys = [y for _, y in Q.vertices]
            allowed.add(tuple(sorted((x - min(xs), y - min(ys))
                                     for x, y in Q.vertices)))
    return allowed


def _fits(psi, allowed):
    if allowed is None:
        return True
    P = newton_polygon(psi)
    xs = [x for x, _ in P.vertices]
    ys = [y for _, y in P.vertices]
    key = tuple(sorted((x - min(xs), y - min(ys)) for x, y in P.vertices))
    return key in allowed


def _univariate_factors(phi, M):
    """Kronecker image factored over F_p, t-power and scalar dropped."""
    p = phi.char
    enc = {}
    for (a, b), c in phi.terms.items():
        enc[a + M * b] = (enc.get(a + M * b, 0) + c) % p
    t = sympy.Symbol("t")
    _, facs = sympy.Poly.from_dict({(e,): c for e, c in enc.items()},
                                   t, modulus=p).factor_list()
    out = []
    for f, mult in facs:
        d = {e[0]: c % p for e, c in f.as_dict().items()}
        if len(d) == 1:
            continue  # power of t, a unit after decoding
        out.extend([tuple(sorted(d.items()))] * mult)
    return sorted(out, key=lambda f: (max(e for e, _ in f), f))


def _decode(enc, M, p):
    """Invert e = a + M*b, unwrapping v-exponents across the largest gap."""
    residues = sorted({e % M for e, _ in enc})
    k = len(residues)
    if k > 1:
        gaps = [(residues[(i + 1) % k] - residues[i]) % M for i in range(k)]
        start = residues[(gaps.index(max(gaps)) + 1) % k]
    else:
        start = residues[0]
    terms = {}
    for e, c in enc:
        a = start + (e - start) % M
        terms[(a, (e - a) // M)] = c
    return LaurentPoly(terms, p)


def _mul_univariate(fs, p):
    prod = {0: 1}
    for f in fs:
        nxt = {}
        for e1, c1 in prod.items():
            for e2, c2 in dict(f).items():
                key = e1 + e2
                nxt[key] = (nxt.get(key, 0) + c1 * c2) % p
        prod = {e: c for e, c in nxt.items() if c}
    return tuple(sorted(prod.items()))


def factor_mod_p(phi, budget=2 ** 14):
    """Complete factorization over F_p, up to a unit."""
    if phi.char == 0:
        raise ValueError("factor_mod_p needs positive characteristic")
    if not phi:
        raise ValueError("zero polynomial")
    cur, _ = _to_origin(phi)
    if len(cur.terms) == 1:
        return []
    spread_a = max(a for a, _ in cur.terms)
    spread_b = max(b for _, b in cur.terms)
    M = 1 + 2 * max(spread_a, spread_b)
    univ = _univariate_factors(cur, M)
    factors = []
    work = 0
    while len(cur.terms) > 1:
        allowed = _translated_summands(newton_polygon(cur))
        if allowed is not None and not allowed:
            break  # indecomposable polygon: cur is the last factor
        hit = None
        seen = set()
        for size in range(1, len(univ)):
            for idx in combinations(range(len(univ)), size):
                key = tuple(univ[i] for i in idx)
                if key in seen:
                    continue
                seen.add(key)
                work += 1
                if work > budget:
                    raise FactorBudgetError("recombination budget exhausted")
                cand = _decode(_mul_univariate(key, phi.char), M, phi.char)
                if not _fits(cand, allowed):
                    continue
                q = exact_divide(cur, cand)
                if q is not None:
                    hit = (idx, cand, q)
                    break
            if hit:
                break
        if hit is None:
            break
        idx, cand, cur = hit[0], hit[1], hit[2]
        factors.append(_to_origin(cand)[0])
        univ = [f for i, f in enumerate(univ) if i not in idx]
    if len(cur.terms) > 1:
        factors.append(_to_origin(cur)[0])
    return factors


def certify(phi, budget=2 ** 14):
    """Typed irreducibility certificate for a nonzero nonunit phi."""
    if not phi:
        raise ValueError("zero polynomial")
    if len(phi.terms) == 1:
        raise ValueError("units are neither reducible nor irreducible here")
    body, _ = _to_origin(phi)
    P = newton_polygon(body)
    seg = _segment_length(P)
    if seg == 1:
        return IrreducibilityCertificate(
            "IrreduciblePolytope", "newton segment is primitive")
    if seg is None:
        try:
            if not minkowski_decompositions(P):
                return IrreducibilityCertificate(
                    "IrreduciblePolytope",
                    "newton polygon has no proper summand")
        except DegeneratePolygonError:
            pass
    if phi.char:
        try:
            facs = factor_mod_p(body, budget)
        except FactorBudgetError as e:
            return IrreducibilityCertificate("Inconclusive", str(e))
        if len(facs) == 1:
            return IrreducibilityCertificate(
                "IrreducibleModP", "no splitting over the ground field",
                p=phi.char)
        return _factored(phi, facs)
    return _certify_char0(phi, body, budget)


def _certify_char0(phi, body, budget):
    coeffs = list(body.terms.values())
    good = []
    gen = _primes()
    while len(good) < 10:
        p = next(gen)
        if all(c.numerator % p and c.denominator % p for c in coeffs):
            good.append(p)
    tried = []
    for p in good:
        try:
            facs = factor_mod_p(body.reduce_mod(p), budget)
        except FactorBudgetError:
            continue
        if len(facs) == 1:
            return IrreducibilityCertificate(
                "IrreducibleModP",
                "irreducible after reduction, support preserved", p=p)
        tried.append((p, facs))
    # trial rational lift of the modular factors
    for p, facs in tried:
        found = _lift_split(body, facs, p)
        if found:
            return _factored(phi, found, note="via mod %d lift" % p)
    return IrreducibilityCertificate(
        "Inconclusive", "no polytope, modular, or lifted certificate")


def _lift_split(body, facs, p):
    """Greedy division by symmetric lifts of mod-p factors, all scalings."""
    cur = body
    found = []
    for g in facs:
        if len(cur.terms) == 1:
            break
        for lam in range(1, p):
            lifted = LaurentPoly({
                e: Fraction(v if v <= p // 2 else v - p)
                for e, v in ((e, c * lam % p) for e, c in g.terms.items())}, 0)
            q = exact_divide(cur, lifted)
            if q is not None and len(lifted.terms) > 1:
                cur = q
                found.append(lifted)
                break
    if found and len(cur.terms) > 1:
        found.append(cur)
    return found if len(found) > 1 else None


def _factored(phi, facs, note=""):
    prod = LaurentPoly({(0, 0): 1}, phi.char)
    for f in facs:
        prod = prod * f
    unit = exact_divide(phi, prod)
    assert unit is not None and len(unit.terms) == 1
    details = "split into %d factors" % len(facs)
    if note:
        details += " " + note
    return IrreducibilityCertificate("Factored", details,
                                     factors=facs, unit=unit)
