import pytest

from negcurve.herzog_semigroup import herzog_data, triangle
from negcurve.lattice_geom import dilate, lattice_points, pick_counts
from negcurve.laurent_poly import newton_polygon, parse
from negcurve.nct_catalog import canonical_form
from negcurve.negcurve_search import (
    find,
    genus_payload,
    is_negative_pair,
    negcurve_to_json,
    scan,
)
from negcurve.symbolic_power import symbolic_dim


def test_is_negative_pair():
    assert is_negative_pair(9, 10, 13, 3, 100)
    assert not is_negative_pair(9, 10, 13, 3, 103)
    assert is_negative_pair(2, 3, 5, 1, 0)


def test_find_char2_curve():
    phi, rep = find(9, 10, 13, 2, 3, 100)
    assert rep.accepted and rep.status == "accepted"
    assert rep.nct.accepted
    assert rep.genus == 0
    phi3p = parse("-1 + 5vw - 3v^2*w + v^3*w - 2vw^2 - v^2*w^2 + v^2*w^3", char=2)
    assert canonical_form(phi, 3) == canonical_form(phi3p, 3)


def test_find_char0_has_nothing():
    for d in (98, 99, 100, 101, 102):
        assert find(9, 10, 13, 0, 3, d) is None


def test_find_pentagon():
    phi, rep = find(8, 15, 43, 0, 9, 645)
    P = newton_polygon(phi)
    assert len(P.vertices) == 5
    assert pick_counts(P) == (9, 36)
    assert len(lattice_points(P)) == 45
    assert rep.accepted and rep.genus == 0


def test_found_dim_is_one():
    # the negative curve spans the whole graded piece
    T = triangle(herzog_data(9, 10, 13))
    assert symbolic_dim(T, 100, 3, char=2) == 1
    T = triangle(herzog_data(8, 15, 43))
    assert symbolic_dim(T, 645, 9) == 1


def test_scan_9_10_13():
    hits = scan(9, 10, 13, 2, 3)
    assert [(r, d) for r, d, _ in hits] == [(3, 100)]
    assert scan(9, 10, 13, 0, 3) == []


def test_scan_3_7_8():
    hits = scan(3, 7, 8, 0, 2)
    assert hits and hits[0][0] <= 2
    r, d, rep = hits[0]
    assert rep.accepted
    assert d * d < 168 * r * r


def test_scan_d_filter_and_order():
    hits = scan(9, 10, 13, 2, 3, d_filter={100})
    assert [(r, d) for r, d, _ in hits] == [(3, 100)]
    assert scan(9, 10, 13, 2, 3, d_filter={99}) == []
    with pytest.raises(ValueError):
        scan(9, 10, 13, 2, 0)


def test_scan_parallel_agrees():
    serial = scan(9, 10, 13, 2, 3, d_filter=set(range(90, 103)))
    par = scan(9, 10, 13, 2, 3, d_filter=set(range(90, 103)), jobs=2)
    assert [(r, d) for r, d, _ in serial] == [(r, d) for r, d, _ in par]


def test_scan_progress():
    seen = []
    scan(9, 10, 13, 2, 1, d_filter={10, 20}, progress=lambda r, d: seen.append((r, d)))
    assert seen == [(1, 10), (1, 20)]


def test_genus_payload():
    assert genus_payload(8, 15, 43, 9, 645) == 0
    assert genus_payload(9, 10, 13, 3, 100) == 0
    assert genus_payload(3, 7, 8, 2, 24) == 0
    for d in (3, 4, 5):
        assert genus_payload(2, 3, 5, 1, d) == 0
    # no curve at these cells; the count formula signals it by going negative
    with pytest.raises(ValueError):
        genus_payload(9, 10, 13, 5, 100)
    with pytest.raises(ValueError):
        genus_payload(3, 7, 8, 2, 25)


def test_report_json():
    _, rep = find(9, 10, 13, 2, 3, 100)
    doc = negcurve_to_json(rep)
    assert doc["triple"] == [9, 10, 13] and doc["char"] == 2
    assert (doc["r"], doc["d"]) == (3, 100)
    assert doc["status"] == "accepted" and doc["genus"] == 0
    assert ["edge_touching", True] in doc["checks"]


@pytest.mark.long
def test_find_5_33_49():
    phi, rep = find(5, 33, 49, 0, 18, 1617)
    assert rep.accepted
    assert pick_counts(newton_polygon(phi))[1] == 153
