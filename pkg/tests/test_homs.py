import itertools

import pytest

from woundcheck import corpus
from woundcheck.groups import AffineLine
from woundcheck.homs import (EnumerationBudgetError, PPolyMap, canonical_form,
                             compose_maps, derive_hom_constraints, identity_map,
                             landing_identity, solve_homs_bounded, verify_hom,
                             verify_mutual_inverse)
from woundcheck.oracle import random_point_oracle
from woundcheck.parser import parse_poly
from woundcheck.polyring import is_identically_zero


def k3():
    return corpus.base_field(3)


def poly_elements(field, max_deg):
    """All elements with polynomial representative of degree <= max_deg."""
    out = []
    for coeffs in itertools.product(range(field.spec.q), repeat=max_deg + 1):
        out.append(field.elem(coeffs))
    return sorted(set(out), key=lambda x: (x.den, x.num))


def test_canonical_form_examples():
    k = k3()
    va = corpus.group_va(k)
    a = k.base_gen()
    m = PPolyMap("t", va, AffineLine(), (corpus._pp(k, 2, (0, 2, k.one())),))
    cf = canonical_form(m)
    assert cf.coords[0] == corpus._pp(k, 2, (0, 0, k.one()), (1, 2, -a))
    ident = identity_map(corpus.group_wa(k))
    assert canonical_form(ident).coords == ident.coords
    mzero = PPolyMap("z", va, AffineLine(), (va.f,))
    assert canonical_form(mzero).coords[0].is_zero()


def test_canonical_form_morphism_equality():
    k = k3()
    va = corpus.group_va(k)
    a = k.base_gen()
    m = PPolyMap("t", va, AffineLine(), (corpus._pp(k, 2, (0, 1, a), (1, 0, a + 1)),))
    shifted = PPolyMap("t2", va, AffineLine(),
                       (m.coords[0] + va.f.frob_power(1).scale(a ** 2),))
    assert canonical_form(m).coords == canonical_form(shifted).coords


def test_verify_hom_identity_and_phi_b():
    k = k3()
    assert verify_hom(identity_map(corpus.group_wa(k)))
    m = corpus.phi_b_map(k)
    assert verify_hom(m)


def test_phi_b_at_p5():
    assert verify_hom(corpus.phi_b_map(corpus.base_field(5)))


def test_b2_induced_map_p2():
    k = corpus.base_field(2)
    m = corpus.b2_induced_map(k)
    assert verify_hom(m)


def test_landing_identity_oracle_agreement():
    k = k3()
    m = corpus.phi_b_map(k)
    poly, rset = landing_identity(m)
    assert is_identically_zero(poly, rset)
    assert random_point_oracle(poly, rset, seed=5, trials=20)


def test_hom_composition_closure():
    k = k3()
    wa = corpus.group_wa(k)
    f = corpus.relative_frobenius(wa, 1)
    g = corpus.relative_frobenius(f.target, 2)
    gf = canonical_form(compose_maps(g, f))
    assert verify_hom(gf)


def test_derive_constraints_match_worked_equations():
    k = k3()
    cs = derive_hom_constraints(corpus.group_va(k), corpus.group_u(k),
                                names=corpus.paper_names_hom_vu())
    names = cs.ring.names
    # the worked equations (1), (2) and the coefficient equations of (3),
    # one per surviving (variable, exponent) slot, J = 3
    full = [
        "d^3 + a*f^3 - c",
        "c^3 + a*e^3 - d",
        "-f0",
        "f0^3 - f1 + a*g0^3",
        "f1^3 - f2 + a*g1^3 - a*d^3 - a^2*f^3",
        "f2^3 - f3 + a*g2^3",
        "f3^3 + a*g3^3",
    ]
    got = {p.monic() for p in cs.polys()}
    want = {parse_poly(t, k, names).monic() for t in full}
    assert got == want
    assert len(cs.constraints) == 7


def test_derive_line_target_is_unconstrained():
    k = k3()
    cs = derive_hom_constraints(corpus.group_va(k), AffineLine())
    assert cs.constraints == ()
    cs2 = derive_hom_constraints(corpus.split_line(k), AffineLine())
    assert cs2.constraints == ()


def test_derive_pivot_cap_enforced():
    k = k3()
    with pytest.raises(ValueError):
        derive_hom_constraints(corpus.group_va(k), corpus.group_u(k), caps={0: 5})


def test_solve_ga_ga_nine_maps():
    k = k3()
    src = corpus.split_line(k)
    cs = derive_hom_constraints(src, AffineLine(), caps={0: 1})
    sols = solve_homs_bounded(cs, [k.from_int(i) for i in range(3)])
    assert len(sols) == 9
    for s in sols:
        assert verify_hom(s.map)
    # closed under addition
    maps = {s.map.coords for s in sols}
    for s1, s2 in itertools.product(sols, repeat=2):
        summed = canonical_form(PPolyMap("sum", src, AffineLine(),
                                         (s1.map.coords[0] + s2.map.coords[0],)))
        assert summed.coords in maps


def test_solve_hom_vu_matches_w_points():
    k = k3()
    cs = derive_hom_constraints(corpus.group_va(k), corpus.group_u(k),
                                names=corpus.paper_names_hom_vu())
    domain = poly_elements(k, 1)
    sols = solve_homs_bounded(cs, domain)
    for s in sols:
        assert verify_hom(s.map)
    # enumerate W-points (d, e) over the same domain
    fw = corpus.group_w(k).f
    wpoints = [(d, e) for d in domain for e in domain
               if fw.evaluate((d, e)).is_zero()]
    assert len(wpoints) == len(sols) == 3
    expected = set()
    for d, e in wpoints:
        c1 = corpus._pp(k, 2, (0, 0, d.frobenius(1)), (0, 1, d))
        c2 = corpus._pp(k, 2, (0, 0, e), (1, 1, d))
        expected.add((c1, c2))
    assert {s.map.coords for s in sols} == expected
    # solutions are closed under addition (the target is commutative)
    maps = {s.map.coords for s in sols}
    for s1, s2 in itertools.product(sols, repeat=2):
        summed = canonical_form(PPolyMap(
            "sum", cs.source, cs.target,
            tuple(a + b for a, b in zip(s1.map.coords, s2.map.coords))))
        assert summed.coords in maps


def test_contradictory_system_is_empty():
    k = k3()
    cs = derive_hom_constraints(corpus.group_va(k), corpus.group_u(k))
    from woundcheck.homs import ConstraintSystem
    from woundcheck.polyring import Poly
    one = Poly.constant(k, len(cs.ring.names), k.one())
    cs_bad = ConstraintSystem(cs.source, cs.target, cs.ring, cs.slots, cs.ansatz,
                              cs.constraints + (((0, 0), one),))
    assert solve_homs_bounded(cs_bad, [k.zero(), k.one()]) == []


def test_enumeration_budget_guard():
    k = k3()
    cs = derive_hom_constraints(corpus.split_line(k), AffineLine(), caps={0: 3})
    with pytest.raises(EnumerationBudgetError):
        solve_homs_bounded(cs, poly_elements(k, 1), max_nodes=10)


def test_mutual_inverse_identity():
    k = k3()
    wa = corpus.group_wa(k)
    ident = identity_map(wa)
    assert verify_mutual_inverse(ident, ident)
