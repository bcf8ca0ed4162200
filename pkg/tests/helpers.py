"""Shared builders for the test suite: fields, corpus polynomials, random
instances for the division and decision property suites."""

from woundcheck.field import Field, FieldSpec
from woundcheck.ppoly import PPoly


def field_fpa(p=3, depth=0, e=1):
    return Field(FieldSpec(p, e, "a", depth))


def ppoly(field, nvars, *terms):
    """terms: (var, exp, coeff-as-int-or-elem)."""
    out = {}
    for i, e, c in terms:
        c = field.coerce(c)
        out[(i, e)] = out.get((i, e), field.zero()) + c
    return PPoly(field, nvars, out)


def wa_poly(field):
    """X + X^p + aY^p."""
    a = field.base_gen()
    return ppoly(field, 2, (0, 0, 1), (0, 1, 1), (1, 1, a))


def va_poly(field):
    """X^(p^2) - X + aY^(p^2)."""
    a = field.base_gen()
    return ppoly(field, 2, (0, 2, 1), (0, 0, -field.one()), (1, 2, a))


def u_poly(field):
    """X^p - X + aY^p."""
    a = field.base_gen()
    return ppoly(field, 2, (0, 1, 1), (0, 0, -field.one()), (1, 1, a))


def w_poly(field):
    """X^(p^2) - X + aY^p."""
    a = field.base_gen()
    return ppoly(field, 2, (0, 2, 1), (0, 0, -field.one()), (1, 1, a))


def w2_poly(field):
    """X^(p^2) + X + aY^p + a^2 Z^(p^3), the p = 2 hom-scheme group."""
    a = field.base_gen()
    return ppoly(field, 3, (0, 2, 1), (0, 0, 1), (1, 1, a), (2, 3, a * a))


def rand_elem(field, rng, deg=2, rational=False):
    q = field.spec.q
    num = tuple(rng.randrange(q) for _ in range(rng.randrange(deg + 1) + 1))
    if rational and rng.random() < 0.3:
        den = tuple(rng.randrange(q) for _ in range(rng.randrange(deg) + 1)) + (1,)
        return field.elem(num, den)
    return field.elem(num)


def rand_ppoly(field, rng, nvars, max_exp=3, deg=2, density=0.6):
    terms = {}
    for i in range(nvars):
        for e in range(max_exp + 1):
            if rng.random() < density:
                c = rand_elem(field, rng, deg)
                if not c.is_zero():
                    terms[(i, e)] = c
    return PPoly(field, nvars, terms)


def rand_division_pair(field, rng, nvars=3, max_exp=3, deg=2):
    """A divisor with a unit pivot coefficient, a dividend, and the pivot."""
    while True:
        f = rand_ppoly(field, rng, nvars, max_exp, deg)
        pivots = [i for i in f.vars_present()]
        if pivots and not f.is_zero():
            pivot = rng.choice(pivots)
            h = rand_ppoly(field, rng, nvars, max_exp, deg)
            if not h.is_zero():
                return h, f, pivot


def rand_principal_part(field, rng, nvars=3, max_exp=2, deg=2, equal=True):
    exp = rng.randrange(max_exp + 1)
    terms = {}
    for i in range(nvars):
        e = exp if equal else rng.randrange(max_exp + 1)
        while True:
            c = rand_elem(field, rng, deg)
            if not c.is_zero():
                break
        terms[(i, e)] = c
    return PPoly(field, nvars, terms)
