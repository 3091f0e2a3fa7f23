import pytest

import katospec


Z6 = [[(a * b) % 6 for b in range(6)] for a in range(6)]


def test_spec_of_z6():
    s = katospec.spec(6, 1, Z6)
    assert s["points"] == [[], [0, 3], [0, 2, 4], [0, 2, 3, 4]]
    # diamond: empty prime at the bottom, union of the two middle primes on top
    assert s["order"]["below"] == [[0], [0, 1], [0, 2], [0, 1, 2, 3]]


def test_spec_rejects_bad_table():
    with pytest.raises(ValueError, match="NotAssociative"):
        katospec.spec(3, 0, [[0, 1, 2], [1, 2, 1], [2, 1, 1]])


def test_exponential_of_based_point():
    e = katospec.exponential(1, [[], [0]])
    assert [c["filter"] for c in e["classes"]] == [[1], [0, 1]]
    assert [c["rep"] for c in e["classes"]] == [[0], []]
    assert e["i"] == [0]


def test_check_sierpinski():
    r = katospec.check(2, [[0], [0, 1]])
    assert r["verdict"] is True
    assert r["brenner"]["blob_base"] is True
    assert r["hochster"]["verdict"] is True
    assert r["expchar"]["agree"] is True


def test_check_discrete_pair_fails():
    r = katospec.check(2, [[0], [1]])
    assert r["verdict"] is False
    assert r["brenner"]["intersections_ok"] is False
    # the empty intersection is not a point closure: no generic point
    assert r["brenner"]["intersections_failure"] == []


def test_realize_roundtrip_witness():
    r = katospec.realize(2, [[0], [0, 1]])
    assert r["is_spectrum"] is True
    w = r["witness_monoid"]
    s = katospec.spec(w["order"], w["unit"], w["table"])
    assert len(s["points"]) == 2


def test_soberify_diamond_is_fixed():
    out = katospec.soberify(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert out["size"] == 4
    assert len(out["opens"]) == 6


def test_ring_spec_z30():
    r = katospec.ring_spec([30])
    assert r["primes"] == [
        [0, 5, 10, 15, 20, 25],
        [0, 3, 6, 9, 12, 15, 18, 21, 24, 27],
        [0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28],
    ]
    assert r["unions_of_primes"] is True
    assert r["exp_example"] is True


def test_enumeration_counts():
    assert len(katospec.enumerate_monoids(4)) == 19
    assert len(katospec.enumerate_posets(4)) == 16


def test_suite_small_passes_and_is_deterministic():
    a = katospec.suite(max_order=3, max_size=3, seed=7)
    b = katospec.suite(max_order=3, max_size=3, seed=7)
    assert a == b
    assert a["all_pass"] is True
