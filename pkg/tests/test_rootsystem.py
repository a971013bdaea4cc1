from __future__ import annotations

import pytest
import sympy

from coxblock.polynomial import IntPolynomial, cyclotomic
from coxblock.rootsystem import (
    CartanType,
    CartanTypeError,
    build_root_system,
    char_poly,
    coxeter_element,
    coxeter_number,
    identify_component,
    identity_element,
    is_positive,
    permutes_roots,
    phi_orbits,
    phi_stable_subsets,
    reflection_matrix,
    root_phi_map,
    subcoxeter_element,
    subsystem_components,
    torus_order,
    twisted_char_poly,
    twisted_coxeter_order,
    weyl_element,
)
from helpers import ALL, SPLIT, TWISTED, VERY_TWISTED, root_count

x = sympy.Symbol("x")


def rs_of(name):
    return build_root_system(CartanType.parse(name))


@pytest.mark.parametrize("text,expected", [("A3", "A3"), ("^2E_6", "2E6"), ("²G2", "2G2"), ("3d4", "3D4")])
def test_parse(text, expected):
    assert str(CartanType.parse(text)) == expected


@pytest.mark.parametrize("bad", ["E9", "D3", "F5", "2B3", "3D5", "2E7", "X2", "A0", "4A3"])
def test_parse_rejects(bad):
    with pytest.raises(CartanTypeError):
        CartanType.parse(bad)


def test_very_twisted_flags():
    assert [CartanType.parse(t).very_twisted for t in ("2B2", "2G2", "2F4", "2A3", "2E6")] == [
        True, True, True, False, False,
    ]


@pytest.mark.parametrize("name", ALL)
def test_root_count_is_rank_times_h(name):
    t = CartanType.parse(name)
    rs = build_root_system(t)
    h = coxeter_number(t.untwisted).h
    assert len(rs.roots) == root_count(t) == t.rank * h


@pytest.mark.parametrize("name", SPLIT)
def test_root_closure(name):
    rs = rs_of(name)
    roots = set(rs.roots)
    assert all(tuple(-c for c in r) in roots for r in rs.roots)
    assert all(is_positive(r) or is_positive(tuple(-c for c in r)) for r in rs.roots)
    for i in rs.simple_roots:
        assert {rs.reflect(i, r) for r in rs.roots} == roots


def test_small_examples():
    a2 = rs_of("A2")
    assert len(a2.roots) == 6 and len(a2.positive_roots) == 3
    assert len(rs_of("E8").roots) == 240
    assert rs_of("2A2").phi == (1, 0)
    assert coxeter_number(CartanType.parse("2A2")).delta == 2


@pytest.mark.parametrize(
    "name,orbits",
    [("A3", [(1,), (2,), (3,)]), ("2A3", [(1, 3), (2,)]), ("3D4", [(1, 3, 4), (2,)]), ("2G2", [(1, 2)])],
)
def test_phi_orbits(name, orbits):
    assert sorted(phi_orbits(rs_of(name))) == sorted(orbits)


def test_phi_stable_subsets():
    assert len(phi_stable_subsets(rs_of("A2"))) == 4
    assert set(phi_stable_subsets(rs_of("2A3"))) == {frozenset(), frozenset({2}), frozenset({1, 3}), frozenset({1, 2, 3})}
    assert len(phi_stable_subsets(rs_of("2E6"))) == 16
    assert len(phi_stable_subsets(rs_of("2E6"), proper=True)) == 15


@pytest.mark.parametrize("name", TWISTED + VERY_TWISTED)
def test_phi_preserves_roots(name):
    rs = rs_of(name)
    pm = root_phi_map(rs)
    assert set(pm.values()) == set(rs.roots)
    assert all(is_positive(pm[r]) == is_positive(r) for r in rs.roots)


@pytest.mark.parametrize("name", TWISTED)
def test_phi_is_a_cartan_automorphism(name):
    rs = rs_of(name)
    n = rs.rank
    assert all(rs.cartan[rs.phi[i]][rs.phi[j]] == rs.cartan[i][j] for i in range(n) for j in range(n))


def test_coxeter_words():
    assert coxeter_element(rs_of("A1")).matrix == ((-1,),)
    f4 = coxeter_element(rs_of("F4"))
    assert len(f4.word) == 4
    assert coxeter_number(CartanType.parse("F4")).h == 12
    assert len(coxeter_element(rs_of("2A3")).word) == 2


@pytest.mark.parametrize("name", ALL)
def test_weyl_elements_permute_roots(name):
    rs = rs_of(name)
    c = coxeter_element(rs)
    assert permutes_roots(rs, c)
    assert len(c.word) == len(phi_orbits(rs))
    product = identity_element(rs).array
    for i in c.word:
        product = product @ reflection_matrix(rs, i)
    assert c.matrix == tuple(tuple(int(v) for v in row) for row in product)


@pytest.mark.parametrize("name", SPLIT)
def test_char_poly_against_sympy(name):
    c = coxeter_element(rs_of(name))
    expected = sympy.Poly(sympy.Matrix(c.matrix).charpoly(x).as_expr(), x).all_coeffs()
    assert char_poly(c).coeffs == tuple(int(v) for v in reversed(expected))


@pytest.mark.parametrize("name", SPLIT + TWISTED)
def test_phi_h_divides_char_poly(name):
    rs = rs_of(name)
    h = coxeter_number(rs.cartan_type).h
    assert cyclotomic(h).divides(twisted_char_poly(rs, coxeter_element(rs)))


def test_identity_char_poly():
    rs = rs_of("D5")
    assert char_poly(identity_element(rs)) == IntPolynomial((-1, 1)) ** 5


def test_known_char_polys():
    assert char_poly(coxeter_element(rs_of("F4"))) == cyclotomic(12)
    assert char_poly(coxeter_element(rs_of("E8"))) == cyclotomic(30)
    assert char_poly(coxeter_element(rs_of("A3"))) == cyclotomic(4) * cyclotomic(2)


@pytest.mark.parametrize(
    "name,h",
    [("A4", 5), ("B3", 6), ("C4", 8), ("D5", 8), ("E6", 12), ("E7", 18), ("G2", 6),
     ("2A2", 6), ("2A3", 6), ("2A4", 10), ("2D4", 8), ("3D4", 12), ("2E6", 18)],
)
def test_coxeter_numbers(name, h):
    assert coxeter_number(CartanType.parse(name)).h == h


@pytest.mark.parametrize("name,order", [("2B2", 8), ("2G2", 12), ("2F4", 24)])
def test_very_twisted_sentinel(name, order):
    t = CartanType.parse(name)
    ch = coxeter_number(t)
    assert ch.h is None and ch.very_twisted and ch.delta == 2
    assert twisted_coxeter_order(build_root_system(t)) == order


def test_representative_choice_is_immaterial():
    for name, reps in (("3D4", (3, 2)), ("2A5", (5, 4, 3)), ("2E6", (6, 5, 4, 2))):
        rs = rs_of(name)
        a = coxeter_element(rs)
        b = coxeter_element(rs, reps)
        assert a.word != b.word
        assert twisted_char_poly(rs, a) == twisted_char_poly(rs, b)
        assert torus_order(rs, a) == torus_order(rs, b)


def test_torus_orders():
    a1 = rs_of("A1")
    assert torus_order(a1, coxeter_element(a1)).coeffs == (1, 1)
    f4 = rs_of("F4")
    assert torus_order(f4, coxeter_element(f4)) == cyclotomic(12)
    g = rs_of("2G2")
    t = torus_order(g, coxeter_element(g))
    assert t.radicand == 3 and t.format("q") == "q^2 - √3q + 1"
    b = rs_of("2B2")
    assert torus_order(b, coxeter_element(b)).format("q") == "q^2 - √2q + 1"
    assert torus_order(rs_of("3D4"), coxeter_element(rs_of("3D4"))) == cyclotomic(12)
    assert torus_order(rs_of("2E6"), coxeter_element(rs_of("2E6"))) == cyclotomic(18)


def test_subcoxeter():
    rs = rs_of("A3")
    c = coxeter_element(rs)
    assert subcoxeter_element(rs, c, {1, 2, 3}) == c
    assert subcoxeter_element(rs, c, set()) == identity_element(rs)
    assert subcoxeter_element(rs, c, {1, 3}).word == (1, 3)
    with pytest.raises(ValueError):
        subcoxeter_element(rs_of("2A3"), coxeter_element(rs_of("2A3")), {1})


@pytest.mark.parametrize("name,I", [("E7", {1, 2, 3, 4, 5, 6}), ("F4", {2, 3}), ("D6", {1, 2, 3, 5}), ("E8", {2, 3, 4, 5, 7, 8})])
def test_subcoxeter_matches_levi(name, I):
    rs = rs_of(name)
    sub = subcoxeter_element(rs, coxeter_element(rs), I)
    expected = IntPolynomial((-1, 1)) ** (rs.rank - len(I))
    for comp in subsystem_components(rs, I):
        expected = expected * char_poly(coxeter_element(build_root_system(comp.cartan_type)))
    assert char_poly(sub) == expected


def test_identify_component():
    e8 = rs_of("E8")
    assert str(identify_component(e8, (2, 3, 4, 5)).cartan_type) == "D4"
    assert identify_component(e8, (2, 3, 4, 5)).nodes[1] == 4
    f4 = rs_of("F4")
    assert str(identify_component(f4, (2, 3)).cartan_type) == "B2"


def test_weyl_element_rejects_bad_index():
    with pytest.raises(ValueError):
        weyl_element(rs_of("A2"), (3,))
