from fractions import Fraction

import pytest

from dahaknot.rootsys import (UnsupportedRootSystem, build_root_system,
                              cominuscule_poincare, rho_pairing)


def test_orders_and_lattice_constants():
    a1 = build_root_system("A", 1)
    assert a1.weyl_order == 2
    d5 = build_root_system("D", 5)
    assert d5.m == 4
    assert len(d5.weyl_orbit(d5.fund_weights[0])) == 10
    e6 = build_root_system("E6", 6)
    assert e6.weyl_order == 51840
    assert len(e6.positive_roots) == 36
    assert len(e6.weyl_orbit(e6.fund_weights[0])) == 27


def test_unsupported():
    with pytest.raises(UnsupportedRootSystem):
        build_root_system("B", 3)
    with pytest.raises(UnsupportedRootSystem):
        build_root_system("D", 3)


def test_minuscule_indices():
    assert set(build_root_system("A", 4).minuscule_indices) == {1, 2, 3, 4}
    assert set(build_root_system("E6", 6).minuscule_indices) == {1, 6}
    assert set(build_root_system("D", 5).minuscule_indices) == {1, 4, 5}


def test_rho_pairings():
    a1 = build_root_system("A", 1)
    assert rho_pairing(a1, (1,)) == Fraction(1, 2)
    e6 = build_root_system("E6", 6)
    assert rho_pairing(e6, e6.fund_weights[0]) == 8
    assert rho_pairing(e6, (0,) * 6) == 0


def test_cominuscule_poincare_e6():
    coeffs = cominuscule_poincare(build_root_system("E6", 6), 1)
    assert coeffs == [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1]
    assert sum(coeffs) == 27
    assert coeffs == coeffs[::-1]  # palindromic


def test_cominuscule_type_a():
    for n in (1, 2, 3):
        rs = build_root_system("A", n)
        assert cominuscule_poincare(rs, 1) == [1] * (n + 1)


def test_reflections_square_and_braid():
    for spec in (("A", 2), ("D", 4), ("E6", 6)):
        rs = build_root_system(*spec)
        probe = tuple(range(1, rs.rank + 1))  # a regular-ish weight
        for i in range(rs.rank):
            assert rs.reflect(i, rs.reflect(i, probe)) == probe
        for i in range(rs.rank):
            for j in range(i + 1, rs.rank):
                m = 3 if rs.cartan[i][j] else 2
                w = probe
                for _ in range(m):
                    w = rs.reflect(i, w)
                    w = rs.reflect(j, w)
                assert w == probe  # (s_i s_j)^m = 1


def test_translation_words():
    a1 = build_root_system("A", 1)
    assert a1.translation_word(1) == (1, (1,))
    assert a1.translation_word(0) == (0, ())
    e6 = build_root_system("E6", 6)
    pi, letters = e6.translation_word(1)
    assert len(letters) == 16  # 2 * (omega_1, rho)
    assert pi == 1


def test_orbit_sizes():
    assert len(build_root_system("A", 3).weyl_orbit((1, 0, 0))) == 4
    assert len(build_root_system("D", 4).weyl_orbit((1, 0, 0, 0))) == 8


def test_describe_stable():
    rs = build_root_system("A", 2)
    d1 = rs.describe()
    d2 = build_root_system("A", 2).describe()
    assert d1 == d2
    assert "weyl order 6" in d1
