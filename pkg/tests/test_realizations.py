from math import comb

import pytest

from hurwitz_dessins.branch_data import family_data, make_family_datum
from hurwitz_dessins.closed_form import nu, nu_g1_h2, nu_g1_h3, nu_g2_h4
from hurwitz_dessins.realizations import (
    G2_FAMILY_NAMES,
    RealizationDescriptor as R,
    compositions,
    family_counts,
    iter_realizations_g2,
    realizations,
    realizations_g0h2,
    realizations_g1,
    realizations_g2,
    sort_descriptors,
)


def D(text):
    return R.parse(text)


@pytest.mark.parametrize(
    "k, pi, expected",
    [
        (6, (7, 3, 2), {"I(1,3,2)", "II(3,1,2)"}),
        (7, (6, 5, 3), {"II(1,1,5)", "II(1,3,3)", "II(2,2,3)"}),
        (6, (4, 4, 4), set()),
        (6, (5, 4, 3), {"II(1,1,4)", "II(2,1,3)", "II(1,2,3)"}),
        (4, (5, 2, 1), {"I(1,2,1)", "II(2,1,1)"}),
    ],
)
def test_g0h2_examples(k, pi, expected):
    assert realizations_g0h2(k, pi) == {D(s) for s in expected}


def test_descriptor_parse_and_str():
    d = D("II.5(1,2,3,4,5)")
    assert d.family == "II.5" and d.decorations == (1, 2, 3, 4, 5)
    assert str(d) == "II.5(1,2,3,4,5)"
    with pytest.raises(ValueError):
        D("II 1,2")


def test_decorations_sum_to_k_and_arity():
    for k in range(3, 12):
        for fd in family_data(0, 2, k):
            for d in realizations_g0h2(k, fd.pi):
                assert len(d.decorations) == 3 and sum(d.decorations) == k
    for d in realizations_g1(6, 3, 5):
        assert len(d.decorations) == 4 and sum(d.decorations) == 6
    for d in realizations_g2(7):
        assert len(d.decorations) == 5 and sum(d.decorations) == 7


def test_g1_examples():
    assert realizations_g1(3, 2) == {D("g1-h2(1,1,1)")}
    assert realizations_g1(4, 3, 1) == {D("V(1,1,1,1)"), D("VI(1,1,1,1)"), D("VII(1,1,1,1)")}
    assert len(realizations_g1(6, 3, 5)) == 9 == nu_g1_h3(6, 5)


@pytest.mark.parametrize("k, h, p", [(2, 2, None), (3, 3, 1), (5, 3, None), (5, 4, 1)])
def test_g1_range_errors(k, h, p):
    with pytest.raises(ValueError):
        realizations_g1(k, h, p)


def test_g2_examples():
    r5 = realizations_g2(5)
    assert len(r5) == 13
    assert {d.family for d in r5} == set(G2_FAMILY_NAMES)
    assert {d for d in r5 if d.family == "I.1"} == {D("I.1(1,1,1,1,1)")}
    assert len(realizations_g2(6)) == 55
    with pytest.raises(ValueError):
        realizations_g2(4)


def test_g2_per_family_counts():
    for k in range(5, 16):
        counts = family_counts(realizations_g2(k))
        for name in G2_FAMILY_NAMES:
            if name in ("I.1", "I.3", "II.1", "II.5", "IV"):
                continue
            assert counts[name] == comb(k - 1, 4)
        sym = {counts[n] for n in ("I.1", "I.3", "II.1", "II.5", "IV")}
        assert len(sym) == 1


def test_g2_generator_has_no_duplicates():
    for k in range(5, 12):
        listed = list(iter_realizations_g2(k))
        assert len(listed) == len(set(listed))


def test_canonical_form_is_orbit_maximum():
    # I(a,b,c) ~ I(a,c,b): listed with b >= c, as in the printed tables
    for k in range(3, 10):
        for fd in family_data(0, 2, k):
            for d in realizations_g0h2(k, fd.pi):
                if d.family == "I":
                    assert d.decorations[1] >= d.decorations[2]
    for d in realizations_g2(9):
        a, b, c, dd, e = d.decorations
        if d.family == "I.1":
            assert d.decorations >= (b, a, dd, c, e)
        if d.family in ("I.3", "II.1", "II.5", "IV"):
            assert d.decorations >= (dd, c, b, a, e)


def test_counts_equal_nu_g0h2():
    for k in range(3, 31):
        for fd in family_data(0, 2, k):
            assert len(realizations_g0h2(k, fd.pi)) == nu(fd), fd


def test_counts_equal_nu_g1():
    for k in range(3, 31):
        assert len(realizations_g1(k, 2)) == nu_g1_h2(k)
        if k >= 4:
            for p in range(1, k + 1):
                assert len(realizations_g1(k, 3, p)) == nu_g1_h3(k, p), (k, p)


def test_g1h3_per_family_closed_forms():
    for k in range(4, 31):
        for p in range(1, k):
            c = family_counts(realizations_g1(k, 3, p))
            hp = p // 2
            assert c.get("I", 0) == (p - 1) ** 2 // 4
            assert c.get("II", 0) == hp * (hp - 1)
            assert c.get("III", 0) == (p - 1) * (k - p - 1)
            iv = (k - 1 - hp) ** 2 // 4 - (k - p) ** 2 // 4 + ((p - 1) // 2) ** 2 // 4
            assert c.get("IV", 0) == iv
            assert c.get("V", 0) == (k - p - 1) ** 2 // 4
            assert c.get("VI", 0) == comb(k - p - 1, 2)
            assert c.get("VII", 0) == comb(k - p - 1, 2)
        c = family_counts(realizations_g1(k, 3, k))
        hk = k // 2
        assert c.get("II", 0) == hk * (hk - 1) // 2
        assert c.get("IV", 0) == ((k - 1) // 2) ** 2 // 4
        assert set(c) <= {"II", "IV"}


def test_g1h3_iv_sum_form():
    """IV as the two parameter ranges of the proof, before simplification."""
    for k in range(4, 25):
        for p in range(1, k):
            # c = p - 2d forces a + b = k - p + d
            first = sum((k - p + d) // 2 for d in range(1, (p - 1) // 2 + 1))
            second = sum((p - k + d) // 2 for d in range(k - p + 2, k - 1 - p // 2 + 1))
            assert family_counts(realizations_g1(k, 3, p)).get("IV", 0) == first + second


def test_counts_equal_nu_g2():
    for k in range(5, 41):
        assert sum(1 for _ in iter_realizations_g2(k)) == nu_g2_h4(k), k


def test_realizations_dispatch():
    fd = make_family_datum(1, 3, 4, (7, 1))
    assert realizations(fd) == realizations_g1(4, 3, 1)
    with pytest.raises(ValueError):
        realizations(make_family_datum(0, 1, 4, (5, 3)))


def test_sort_descriptors_orders_families():
    items = [D("II(1,1,4)"), D("I(3,2,1)"), D("III.1(1,1,1,1,1)"), D("I.2(1,1,1,1,1)")]
    assert [str(d) for d in sort_descriptors(items)] == ["I(3,2,1)", "I.2(1,1,1,1,1)", "II(1,1,4)", "III.1(1,1,1,1,1)"]


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 4)) == []
    assert sum(1 for _ in compositions(12, 5)) == comb(11, 4)
