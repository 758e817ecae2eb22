"""Find the char-2 negative curve over (9,10,13) and show char 0 stays empty."""

import time

from negcurve.laurent_poly import parse, to_text
from negcurve.nct_catalog import canonical_form
from negcurve.negcurve_search import scan

PHI3P = "-1 + 5*v*w - 3*v^2*w + v^3*w - 2*v*w^2 - v^2*w^2 + v^2*w^3"


def main():
    t0 = time.monotonic()
    hits = scan(9, 10, 13, 2, 3)
    print("char 2, r <= 3: hits at", [(r, d) for r, d, _ in hits],
          "(%.1fs)" % (time.monotonic() - t0))
    assert [(r, d) for r, d, _ in hits] == [(3, 100)]

    rep = hits[0][2]
    print("  curve:", to_text(rep.phi))
    print("  genus payload:", rep.genus, " status:", rep.status)
    same = canonical_form(rep.phi, 3) == canonical_form(parse(PHI3P).reduce_mod(2), 3)
    print("  canonical form matches the catalog 3-nct mod 2:", same)
    assert same

    t0 = time.monotonic()
    empty = scan(9, 10, 13, 0, 3)
    print("char 0, r <= 3: hits at", [(r, d) for r, d, _ in empty],
          "(%.1fs)" % (time.monotonic() - t0))
    assert empty == []
    print("ok")


if __name__ == "__main__":
    main()
