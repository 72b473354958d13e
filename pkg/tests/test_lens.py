from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergeknots.errors import DegenerateSurgery, NotCoprime
from bergeknots.knots import StandardParam
from bergeknots.lens import (
    LensSpace,
    berge_params_with_p,
    gw_cable_lens,
    identify_from_lens,
    identify_from_pg,
    inverse_mod,
    lens_equivalent,
    lens_from_Amn,
    lens_from_berge,
    map_F,
    moser_lens,
    surgery_coefficient,
)
from oracles import oracle_all_params, oracle_lens_class

S = StandardParam


def test_lens_space_validation():
    assert LensSpace(7, 11).q == 4
    assert str(LensSpace(19, 7)) == "L(19,7)"
    with pytest.raises(NotCoprime):
        LensSpace(9, 3)
    with pytest.raises(ValueError):
        LensSpace(1, 0)
    assert inverse_mod(3, 19) == 13
    with pytest.raises(NotCoprime):
        inverse_mod(3, 9)


def test_surgery_coefficient_examples():
    assert surgery_coefficient(S(1, 2, 3)) == 19
    assert surgery_coefficient(S(-1, 1, 3)) == 19
    assert surgery_coefficient(S(1, 7, 18)) == 499


def test_lens_from_berge_examples():
    assert lens_from_berge(S(1, 1, 2)) == LensSpace(7, 4)
    assert lens_from_berge(S(1, 2, 3)) == LensSpace(19, 7)
    assert lens_from_berge(S(-1, 1, 2)) == LensSpace(11, 6)


def test_lens_from_Amn_examples():
    res = lens_from_Amn(2, 3, 1)
    assert res.lens.p == 19 and res.reversed
    # the positive presentation L(19, 2/3) reversed
    assert res.lens == LensSpace(19, -2 * 13)
    res5 = lens_from_Amn(2, 3, 5)
    assert res5.lens == LensSpace(5, 2 * pow(3, -1, 5)) and not res5.reversed
    assert lens_from_Amn(1, 2, 6).lens.p == 3
    with pytest.raises(DegenerateSurgery):
        lens_from_Amn(1, 2, 5)  # 10 - 9 = 1


def test_lens_from_Amn_r_plus_minus_one_are_the_berge_surgeries():
    # r = -1 gives -(m+n)^2 - mn, r = +1 gives mn - (m+n)^2: the two Berge lens spaces reversed
    for m, n in [(2, 3), (3, 5), (4, 7)]:
        for sign, r in ((1, 1), (-1, -1)):
            res = lens_from_Amn(m, n, r)
            assert res.reversed
            assert lens_equivalent(res.lens, lens_from_berge(S(sign, m, n)))


def test_lens_equivalent_examples():
    assert lens_equivalent(LensSpace(7, 4), LensSpace(7, 2), oriented=True)
    assert not lens_equivalent(LensSpace(7, 3), LensSpace(7, 4), oriented=True)
    assert lens_equivalent(LensSpace(7, 3), LensSpace(7, 4))
    assert not lens_equivalent(LensSpace(5, 1), LensSpace(7, 1))
    assert not lens_equivalent(LensSpace(5, 1), LensSpace(7, 1), oriented=True)


@given(st.integers(2, 300), st.data())
def test_lens_equivalence_matches_classification(p, data):
    units = [q for q in range(1, p) if gcd(q, p) == 1] or [1]
    q1 = data.draw(st.sampled_from(units))
    q2 = data.draw(st.sampled_from(units))
    a, b = LensSpace(p, q1), LensSpace(p, q2)
    assert lens_equivalent(a, b) == ((q2 % p) in oracle_lens_class(p, q1))
    qi = pow(q1, -1, p) if p > 1 else 0
    assert lens_equivalent(a, b, oriented=True) == ((q2 - q1) % p == 0 or (q2 - qi) % p == 0)


def test_map_F_examples():
    assert map_F(S(1, 2, 3)) == (19, 10)
    assert map_F(S(-1, 9, 11)) == (499, 460)
    assert map_F(S(1, 1, 1)) == (3, 0)


def test_identify_from_pg_examples():
    assert identify_from_pg(19, 10) == S(1, 2, 3)
    assert identify_from_pg(499, 450) == S(1, 7, 18)
    assert identify_from_pg(19, 11) is None
    assert identify_from_pg(23, 10) is None


def test_F_round_trip_and_odd_p():
    for sign, m, n, p in oracle_all_params(3000, include_unknot=True):
        par = S(sign, m, n)
        p_, two_g = map_F(par)
        assert p_ == p and p % 2 == 1
        assert p - two_g == 2 * (m + n) - 1
        assert identify_from_pg(p, two_g) == par


def test_torus_pairs_share_genus_with_p_two_apart():
    for n in range(2, 40):
        (p1, g1), (p2, g2) = map_F(S(1, 1, n)), map_F(S(-1, 1, n - 1))
        assert g1 == g2 and p1 - p2 == 2


def test_berge_params_with_p_is_exhaustive():
    by_p: dict[int, list] = {}
    for sign, m, n, p in oracle_all_params(2000, include_unknot=True):
        by_p.setdefault(p, []).append(S(sign, m, n))
    for p in range(2, 2001):
        assert sorted(berge_params_with_p(p)) == sorted(by_p.get(p, []))


def test_identify_from_lens_examples():
    assert identify_from_lens(LensSpace(19, 7)) == [S(1, 2, 3)]
    assert identify_from_lens(LensSpace(19, 4)) == []
    found = identify_from_lens(LensSpace(19, 13))
    assert found == [S(-1, 1, 3)] and found[0].is_trivial
    assert identify_from_lens(LensSpace(23, 7)) == []
    # every presentation of the same lens space finds the same knot
    for q in (7, -7, 11, -11):
        assert identify_from_lens(LensSpace(19, q)) == [S(1, 2, 3)]


def test_identify_from_lens_bound():
    assert identify_from_lens(LensSpace(19, 7), bound=4) == []
    assert identify_from_lens(LensSpace(19, 7), bound=5) == [S(1, 2, 3)]


def test_moser_examples():
    assert moser_lens(2, 3, 7, 1) == LensSpace(7, 3)
    assert moser_lens(2, 3, 6, 1) is None
    assert moser_lens(3, 4, 13, 1) == LensSpace(13, 4)
    with pytest.raises(NotCoprime):
        moser_lens(2, 4, 7, 1)


def test_moser_matches_trivial_berge_knots():
    # b^+(1, n) = T(n, n+1) and its p-surgery is Moser's lens space
    for n in range(2, 30):
        par = S(1, 1, n)
        r, s = par.torus_type()
        p = surgery_coefficient(par)
        assert lens_equivalent(moser_lens(r, s, p, 1), lens_from_berge(par))


def test_gw_cable_examples():
    assert gw_cable_lens(2, 3, "+") == (25, LensSpace(25, 9))
    assert gw_cable_lens(2, 3, "-") == (23, LensSpace(23, 16))
    assert gw_cable_lens(2, 5, 1) == (41, LensSpace(41, 25))
    with pytest.raises(ValueError):
        gw_cable_lens(3, 2, 1)
