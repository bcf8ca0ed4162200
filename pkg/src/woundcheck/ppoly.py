"""Multivariate additive (p-) polynomials and the division algorithm.

A PPoly represents sum(c[i,e] * X_i^(p^e)): a finite map from pairs
(variable index, Frobenius exponent) to nonzero coefficients.  Every such
polynomial defines an additive map on points, and composition, principal
parts, Frobenius twists and division against a pivoted p-polynomial all
stay inside this class of objects.

Coefficients are FieldElem values or elements of a parameter ring; the
code only relies on the shared coefficient protocol (ring operations plus
``frobenius``/``inverse``/``is_zero``/``is_unit``).  The canonical term
order is (variable, exponent) ascending.

``reduce_mod`` implements division with remainder against a p-polynomial
whose leading pivot coefficient is a unit, returning a replayable trace:
the remainder plus the exact multiples of the divisor that were
subtracted.  On p-polynomial input the remainder is again a p-polynomial.
"""

from dataclasses import dataclass

from .field import Field
from .polyring import Poly


def join_dom(d1, d2):
    if d1 is d2 or d1 == d2:
        return d1
    if isinstance(d1, Field) and not isinstance(d2, Field):
        return d2
    if isinstance(d2, Field) and not isinstance(d1, Field):
        return d1
    raise ValueError("incompatible coefficient domains")


class PPoly:
    __slots__ = ("dom", "nvars", "terms")

    def __init__(self, dom, nvars, terms):
        self.dom = dom
        self.nvars = nvars
        clean = {}
        for (i, e), c in terms.items():
            if i < 0 or i >= nvars or e < 0:
                raise ValueError(f"bad term position ({i}, {e})")
            if not c.is_zero():
                clean[(i, e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, dom, nvars, terms):
        self = object.__new__(cls)
        self.dom = dom
        self.nvars = nvars
        self.terms = terms
        return self

    @classmethod
    def zero(cls, dom, nvars):
        return cls._raw(dom, nvars, {})

    @classmethod
    def variable(cls, dom, nvars, i, e=0):
        return cls(dom, nvars, {(i, e): dom.one()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        from .parser import render_ppoly
        return f"<ppoly {render_ppoly(self)}>"

    # -- ring-module structure --------------------------------------------

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return PPoly._raw(join_dom(self.dom, other.dom), self.nvars, out)

    def __neg__(self):
        return PPoly._raw(self.dom, self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c.is_zero():
            return PPoly.zero(self.dom, self.nvars)
        return PPoly._raw(self.dom, self.nvars, {k: c * x for k, x in self.terms.items()})

    # -- structure queries ---------------------------------------------------

    def vars_present(self):
        return sorted({i for i, _ in self.terms})

    def max_exp(self, i):
        """Top Frobenius exponent of variable i, or None when absent."""
        exps = [e for j, e in self.terms if j == i]
        return max(exps) if exps else None

    def coeff(self, i, e):
        return self.terms.get((i, e))

    # -- the operations of the calculus ---------------------------------------

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        acc = None
        for (i, e), c in self.terms.items():
            v = c * point[i].frobenius(e)
            acc = v if acc is None else acc + v
        if acc is None:
            return self.dom.zero()
        return acc

    def compose(self, maps):
        """self(maps[0], ..., maps[n-1]), again a p-polynomial."""
        if len(maps) != self.nvars:
            raise ValueError(f"expected {self.nvars} inner maps, got {len(maps)}")
        if not maps:
            return self
        nv = maps[0].nvars
        dom = self.dom
        for m in maps:
            if m.nvars != nv:
                raise ValueError("inner maps disagree on variable count")
            dom = join_dom(dom, m.dom)
        out = {}
        for (i, e), c in self.terms.items():
            for (j, f), b in maps[i].terms.items():
                k = (j, f + e)
                v = c * b.frobenius(e)
                s = out.get(k)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return PPoly._raw(dom, nv, out)

    def principal_part(self):
        """Keep, for each variable present, only its top-exponent term."""
        out = {}
        for i in {j for j, _ in self.terms}:
            e = self.max_exp(i)
            out[(i, e)] = self.terms[(i, e)]
        return PPoly._raw(self.dom, self.nvars, out)

    def linear_part(self):
        return PPoly._raw(self.dom, self.nvars,
                          {k: c for k, c in self.terms.items() if k[1] == 0})

    def frobenius_twist(self, n):
        """Raise every coefficient to the p^n power; exponents unchanged."""
        if n == 0:
            return self
        return PPoly._raw(self.dom, self.nvars,
                          {k: c.frobenius(n) for k, c in self.terms.items()})

    def frob_power(self, n):
        """self ** (p^n): coefficients powered and exponents shifted."""
        if n == 0:
            return self
        return PPoly._raw(self.dom, self.nvars,
                          {(i, e + n): c.frobenius(n) for (i, e), c in self.terms.items()})

    def to_poly(self):
        """Flatten to an ordinary Poly (field coefficients only)."""
        if not isinstance(self.dom, Field):
            raise TypeError("parameter coefficients need an explicit variable layout")
        p = self.dom.p
        terms = {}
        for (i, e), c in self.terms.items():
            m = [0] * self.nvars
            m[i] = p ** e
            terms[tuple(m)] = c
        return Poly._raw(self.dom, self.nvars, terms)


def is_smooth(f):
    """Nonvanishing linear part: the hypersurface f = 0 is smooth."""
    return not f.linear_part().is_zero()


def to_relation(f, pivot):
    """Compile f = 0, pivoted at a unit-leading variable, into the rewrite
    rule X_pivot^(p^N) -> rhs used by the normal-form engine."""
    from .field import FieldElem
    from .polyring import Relation

    n0 = f.max_exp(pivot)
    if n0 is None:
        raise ValueError("pivot does not occur in the relation")
    u = f.terms[(pivot, n0)]
    if not (isinstance(u, FieldElem) and u.is_unit()):
        raise ValueError("relation pivot leading coefficient is not a unit")
    uinv = u.inverse()
    p = f.dom.p
    rhs_terms = {}
    for (i, e), c in f.terms.items():
        if (i, e) == (pivot, n0):
            continue
        m = [0] * f.nvars
        m[i] = p ** e
        rhs_terms[tuple(m)] = -(uinv * c)
    rhs = Poly(f.dom, f.nvars, rhs_terms)
    return Relation(pivot, p ** n0, rhs, source=f)


@dataclass(frozen=True)
class ReductionTrace:
    """Replayable record of division by a pivoted p-polynomial.

    Each step is (multiplier, j) and contributed multiplier * (u^-1 F)^(p^j)
    to the subtracted part, u being the divisor's leading pivot coefficient.
    For p-polynomial input the multipliers are coefficients and j >= 0; for
    general polynomial input they are monomial terms (as Poly) with j = 0
    and u^-1 already folded in.
    """
    divisor: PPoly
    pivot: int
    steps: tuple
    remainder: object

    def replay(self):
        """Reconstruct the dividend exactly from remainder and steps."""
        f = self.divisor
        if isinstance(self.remainder, PPoly):
            u = f.terms[(self.pivot, f.max_exp(self.pivot))]
            uinv_f = f.scale(u.inverse())
            acc = self.remainder
            for c, j in self.steps:
                acc = acc + uinv_f.frob_power(j).scale(c)
            return acc
        fpoly = f.to_poly()
        acc = self.remainder
        for mult, _ in self.steps:
            acc = acc + mult * fpoly
        return acc


def reduce_mod(h, f, pivot):
    """Division with remainder against f, pivoted at the given variable.

    Returns a ReductionTrace whose remainder h' satisfies
    deg_pivot(h') < p^(n_pivot) and h = (sum of traced multiples of f) + h'.
    The remainder is unique for (f, pivot), so reduction is idempotent and
    insensitive to adding explicit multiples of f to h.
    """
    n0 = f.max_exp(pivot)
    if n0 is None:
        raise ValueError("pivot variable does not appear in the divisor")
    u = f.terms[(pivot, n0)]
    if not u.is_unit():
        raise ValueError("leading pivot coefficient is not a unit")
    if isinstance(h, PPoly):
        return _reduce_ppoly(h, f, pivot, n0, u)
    return _reduce_poly(h, f, pivot, n0, u)


def _reduce_ppoly(h, f, pivot, n0, u):
    uinv = u.inverse()
    rem = dict(h.terms)
    dom = join_dom(h.dom, f.dom)
    steps = []
    while True:
        top = max((e for i, e in rem if i == pivot and e >= n0), default=None)
        if top is None:
            break
        c = rem.pop((pivot, top))
        j = top - n0
        steps.append((c, j))
        for (i, e), b in f.terms.items():
            if (i, e) == (pivot, n0):
                continue
            k = (i, e + j)
            v = c * (uinv * b).frobenius(j)
            s = rem.get(k)
            s = -v if s is None else s - v
            if s.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = s
    return ReductionTrace(f, pivot, tuple(steps), PPoly._raw(dom, h.nvars, rem))


def _reduce_poly(h, f, pivot, n0, u):
    if not isinstance(h.field, Field) or not isinstance(f.dom, Field):
        raise TypeError("general polynomial division requires field coefficients")
    bound = f.dom.p ** n0
    fpoly = f.to_poly()
    uinv = u.inverse()
    rem = dict(h.terms)
    steps = []
    while True:
        cand = [m for m in rem if m[pivot] >= bound]
        if not cand:
            break
        m = max(cand, key=lambda t: t[pivot])
        c = rem[m]
        lowered = list(m)
        lowered[pivot] -= bound
        mult = Poly._raw(h.field, h.nvars, {tuple(lowered): -(c * uinv)})
        steps.append((-mult, 0))
        for rm, rc in (mult * fpoly).terms.items():
            s = rem.get(rm)
            s = rc if s is None else s + rc
            if s.is_zero():
                rem.pop(rm, None)
            else:
                rem[rm] = s
    return ReductionTrace(f, pivot, tuple(steps), Poly._raw(h.field, h.nvars, rem))
