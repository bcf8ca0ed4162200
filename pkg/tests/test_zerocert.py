import random

import pytest

from helpers import field_fpa, ppoly, rand_elem, rand_principal_part, va_poly, wa_poly
from woundcheck.ppoly import PPoly
from woundcheck.zerocert import decide_no_nontrivial_zero, exhaustive_poly_search


def test_wa_principal_no_zero_certificate():
    k = field_fpa(3)
    P = wa_poly(k).principal_part()  # X^3 + a Y^3
    d = decide_no_nontrivial_zero(P)
    assert d.verdict == "no_zero" and d.stage == "equal_exponent"
    assert d.rank == 2
    # expansion rows over the basis {1, a, a^2}: (1,0,0) and (0,1,0)
    one, zero = k.one(), k.zero()
    assert d.columns == (0, 1)
    assert d.matrix == ((one, zero), (zero, one))


def test_zero_with_witness():
    k = field_fpa(3)
    a = k.base_gen()
    P = ppoly(k, 2, (0, 1, 1), (1, 1, a ** 3))  # X^3 + a^3 Y^3
    d = decide_no_nontrivial_zero(P)
    assert d.verdict == "zero" and d.stage == "equal_exponent"
    assert d.witness == (-a, k.one())
    assert P.evaluate(d.witness).is_zero()


def test_absent_variable_is_refuted():
    k = field_fpa(3)
    P = ppoly(k, 2, (1, 0, 1))  # the split line {Y = 0}
    d = decide_no_nontrivial_zero(P)
    assert d.verdict == "zero"
    assert d.witness == (k.one(), k.zero())


def test_mixed_relaxation_certifies():
    k = field_fpa(3)
    a = k.base_gen()
    P = ppoly(k, 2, (0, 1, 1), (1, 2, a))  # X^3 + a Y^9
    d = decide_no_nontrivial_zero(P)
    assert d.verdict == "no_zero" and d.stage == "relaxation"
    assert exhaustive_poly_search(P, 3) is None


def test_mixed_exponent_search_finds_witness():
    k = field_fpa(3)
    a = k.base_gen()
    P = ppoly(k, 2, (0, 1, 1), (1, 2, a ** 3))  # X^3 + a^3 Y^9: zero at (-a, 1)
    d = decide_no_nontrivial_zero(P)
    assert d.verdict == "zero" and d.stage == "search"
    assert P.evaluate(d.witness).is_zero()


def test_mixed_exponent_unknown_is_honest():
    # the p = 2 hom-scheme group: wound per the source, but the relaxation
    # has a zero and no witness exists, so the verdict stays unknown
    k = field_fpa(2)
    a = k.base_gen()
    P = ppoly(k, 3, (0, 2, 1), (1, 1, a), (2, 3, a * a))
    d = decide_no_nontrivial_zero(P, search_bound=1, search_budget=20_000)
    assert d.verdict == "unknown"
    assert d.search_bound == 1


def test_scale_invariance():
    k = field_fpa(3)
    rng = random.Random(17)
    for _ in range(40):
        P = rand_principal_part(k, rng, nvars=rng.randrange(1, 4), equal=True)
        c = rand_elem(k, rng, rational=True)
        while c.is_zero():
            c = rand_elem(k, rng, rational=True)
        assert decide_no_nontrivial_zero(P.scale(c)).verdict == decide_no_nontrivial_zero(P).verdict


def test_decision_vs_exhaustive_search_random():
    k = field_fpa(3)
    rng = random.Random(23)
    unknowns = 0
    for _ in range(60):
        P = rand_principal_part(k, rng, nvars=rng.randrange(1, 4), equal=True)
        d = decide_no_nontrivial_zero(P)
        assert d.verdict in ("no_zero", "zero")
        if d.verdict == "no_zero":
            assert exhaustive_poly_search(P, 2) is None
        else:
            assert P.evaluate(d.witness).is_zero()
            assert any(not w.is_zero() for w in d.witness)
    assert unknowns == 0


def test_separable_extension_stability():
    # certified instances stay zero-free over k(s), one more transcendental
    k = field_fpa(3)
    a = k.base_gen()
    for P in (wa_poly(k).principal_part(), va_poly(k).principal_part(),
              ppoly(k, 2, (0, 1, 1), (1, 1, a))):
        assert decide_no_nontrivial_zero(P).verdict == "no_zero"
        assert exhaustive_poly_search(P, 1, extra_gens=1) is None


def test_exhaustive_search_finds_bivariate_zero():
    k = field_fpa(3)
    a = k.base_gen()
    P = ppoly(k, 2, (0, 1, 1), (1, 1, a ** 3))
    w = exhaustive_poly_search(P, 1, extra_gens=1)
    assert w is not None


def test_params_rejected():
    from woundcheck.params import ParamRing
    k = field_fpa(3)
    ring = ParamRing(k, ("t",))
    P = PPoly(ring, 1, {(0, 1): ring.param("t")})
    with pytest.raises(ValueError):
        decide_no_nontrivial_zero(P)


def test_non_principal_rejected():
    k = field_fpa(3)
    with pytest.raises(ValueError):
        decide_no_nontrivial_zero(wa_poly(k))
