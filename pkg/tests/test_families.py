"""Parametrized cover families, named graphs and their explicit symmetries."""

import pytest

from tricirc.families import (
    FamilyParams,
    family_automorphism,
    family_connected,
    gp,
    moebius,
    prism,
    r_star,
    t1,
    t2,
    t3,
    t4,
    torus_cycle_decomposition,
    x_graph,
    y_graph,
)
from tricirc.symmetry import (
    are_isomorphic,
    girth,
    group_order,
    automorphism_group,
    is_vertex_transitive,
)
from tricirc.voltage import NonSimpleCover, NotAutomorphism


def test_family_orders():
    assert t1(9, 6, 1).n == 54
    assert t2(9, 2, 1).n == 54
    assert t3(9, 2).n == 54
    assert t4(5, 1, 2).n == 30


def test_family_connectivity_criterion():
    assert family_connected(1, 9, 6, 1)
    assert not family_connected(1, 9, 6, 3)
    assert family_connected(3, 9, 2)
    assert not family_connected(3, 9, 3)
    assert t1(9, 6, 3).is_connected() is False
    assert t3(9, 3).is_connected() is False


def test_family_params_object():
    p = FamilyParams(1, 9, 6, 1)
    assert p.n == 18 and p.order == 54
    assert p.connected
    assert p.build().n == 54
    assert FamilyParams(3, 9, 2).build().n == 54
    with pytest.raises(ValueError):
        FamilyParams(5, 9, 2, 1)
    with pytest.raises(ValueError):
        FamilyParams(1, 0, 1, 1)


def test_r_star_values():
    assert r_star(9) == 6
    assert r_star(11) == 18
    assert r_star(13) == 8
    assert r_star(15) == 24
    assert r_star(21) == 12
    for k in range(9, 32, 2):
        r = r_star(k)
        assert r % 2 == 0
        assert (3 - 2 * r + k) % (2 * k) == 0
    with pytest.raises(ValueError):
        r_star(8)


def test_x_graph_basics():
    for k in (9, 11, 13):
        g = x_graph(k)
        assert g.n == 6 * k
        assert girth(g) >= 5
        assert is_vertex_transitive(g)


def test_y_graph_basics():
    for k in (9, 11):
        g = y_graph(k)
        assert g.n == 6 * k
        assert is_vertex_transitive(g)
        assert girth(g) == 6


def test_gp_construction():
    pet = gp(5, 2)
    assert pet.n == 10 and pet.edge_count() == 15
    assert girth(pet) == 5
    assert gp(9, 2).n == 18
    # m is taken mod n and folded to min(m, n-m)
    assert set(gp(7, 5).edges()) == set(gp(7, 2).edges())
    with pytest.raises(ValueError):
        gp(6, 3)    # 2m = n collapses the inner rim
    with pytest.raises(ValueError):
        gp(5, 0)


def test_prism_and_moebius():
    assert prism(3).n == 6
    assert are_isomorphic(prism(4), gp(4, 1))
    m3 = moebius(3)
    assert are_isomorphic(m3, t3(1, 1))          # K_{3,3}
    assert girth(moebius(4)) == 4
    assert prism(6).is_bipartite()
    assert not prism(5).is_bipartite()
    # the twist makes the ladder bipartite exactly for an odd rung count
    assert moebius(5).is_bipartite()
    assert not moebius(4).is_bipartite()
    with pytest.raises(ValueError):
        prism(2)


def test_t3_gives_prisms_and_moebius_ladders():
    """Odd shift twists the ladder, even shift leaves it straight."""
    for k in range(9, 21):
        for r in range(2 * k):
            if not family_connected(3, k, r):
                continue
            g = t3(k, r)
            want = moebius(3 * k) if r % 2 else prism(3 * k)
            assert are_isomorphic(g, want), (k, r)


def test_x_graph_is_generalized_petersen():
    # inner skip read off the two phi-orbit cycles: k+1 when k = 1 mod 3,
    # k-1 when k = 2 mod 3
    assert are_isomorphic(x_graph(7), gp(21, 8))
    assert are_isomorphic(x_graph(11), gp(33, 10))
    assert are_isomorphic(x_graph(13), gp(39, 14))
    assert not are_isomorphic(x_graph(11), gp(33, 12))
    assert not are_isomorphic(x_graph(13), gp(39, 12))


def test_parameter_isomorphism_identities():
    for k in (5, 7, 9):
        n = 2 * k
        # swapping the two parallel edges
        assert are_isomorphic(t1(k, 2, 1), t1(k, 1, 2))
        # unit rescaling of the voltages
        for a in (3, 5):
            if a % 2 == 0 or n % a == 0:
                continue
            try:
                g = t1(k, 2, 1)
                h = t1(k, (2 * a) % n, a % n)
            except NonSimpleCover:
                continue
            assert are_isomorphic(g, h), (k, a)
        # global negation
        assert are_isomorphic(t2(k, 2, 1), t2(k, n - 2, n - 1))
        assert are_isomorphic(t4(k, 1, 2), t4(k, n - 1, n - 2))
        # loop swap
        assert are_isomorphic(t4(k, 1, 2), t4(k, 2, 1))
        assert are_isomorphic(t3(k, 2), t3(k, n - 2))


def test_rho_is_the_deck_translation():
    rho = family_automorphism("rho", 9, r=6, s=1)
    assert rho.order() == 18
    assert rho.is_semiregular()
    assert len(rho.orbits()) == 3


def test_phi_x_has_order_three():
    for k in (9, 11, 13):
        phi = family_automorphism("phi_x", k, r=r_star(k), s=1)
        assert phi.order() == 3


def test_phi_t1_bic_orbit_structure():
    for k in (7, 11, 13):        # 3 does not divide k
        phi = family_automorphism("phi_t1_bic", k, r=r_star(k), s=1)
        sizes = sorted(len(o) for o in phi.orbits())
        assert sizes == [3 * k, 3 * k]


def test_phi_y_orbit_structure():
    phi9 = family_automorphism("phi_y", 9)
    assert sorted(len(o) for o in phi9.orbits()) == [9] * 6
    phi11 = family_automorphism("phi_y", 11)
    assert sorted(len(o) for o in phi11.orbits()) == [33, 33]


def test_family_automorphism_rejects_bad_maps():
    with pytest.raises(NotAutomorphism):
        family_automorphism("phi_t1_bic", 9, r=2, s=1)  # wrong parameters
    with pytest.raises(ValueError):
        family_automorphism("nope", 9)


def test_torus_cycle_decomposition():
    for k in (9, 11, 13):
        g = y_graph(k)
        dec = torus_cycle_decomposition(g, k)
        assert [len(c) for c in dec.cycles] == [2 * k] * 3
        covered = set()
        for c in dec.cycles:
            covered.update(c)
        assert len(covered) == g.n
        assert len(dec.matching) == g.n // 2
        matched = {v for e in dec.matching for v in e}
        assert len(matched) == g.n
        for a, b in dec.matching:
            assert g.has_edge(a, b)


def test_torus_decomposition_rejects_non_y_graphs():
    with pytest.raises(ValueError):
        torus_cycle_decomposition(x_graph(9), 9)


def test_y_graph_arc_transitive_exception():
    # order 54 is the one arc-transitive member of the family
    g = y_graph(9)
    assert group_order(g.n, automorphism_group(g)) == 324
