"""Exact arithmetic in towers F_q(a^(1/p^m)).

A FieldSpec fixes the prime p, the constant-field degree e (q = p^e), the
name of the transcendental generator, and the purely inseparable depth m.
The working generator is b = a^(1/p^m); every element is a reduced
rational function in b over F_q:

    FieldElem = num(b) / den(b),  den monic, gcd(num, den) = 1, 0 = 0/1.

That normal form is canonical, so equality is tuple equality.  All values
are immutable; every operation returns a fresh normalized element.
"""

from dataclasses import dataclass

from . import fqpoly as fq
from .gfq import GFq, is_prime


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int = 1
    gen: str = "a"
    depth: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise ValueError("e must be >= 1")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if not self.gen.isidentifier():
            raise ValueError(f"bad generator name {self.gen!r}")

    @property
    def q(self):
        return self.p ** self.e


class Field:
    """A tower level: wraps a FieldSpec and builds its elements."""

    __slots__ = ("spec", "gf")

    def __init__(self, spec):
        self.spec = spec
        self.gf = GFq(spec.p, spec.e)

    @property
    def p(self):
        return self.spec.p

    def __repr__(self):
        return f"Field({self.spec})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    # -- element constructors -------------------------------------------

    def elem(self, num, den=fq.ONE):
        return FieldElem(self, fq.norm(num), fq.norm(den))

    def zero(self):
        return FieldElem._raw(self, (), fq.ONE)

    def one(self):
        return FieldElem._raw(self, fq.ONE, fq.ONE)

    def from_int(self, n):
        c = n % self.p  # prime-subfield constants encode as themselves
        return FieldElem._raw(self, (c,) if c else (), fq.ONE)

    def gen_elem(self):
        """The working generator b = a^(1/p^depth)."""
        return FieldElem._raw(self, (0, 1), fq.ONE)

    def base_gen(self):
        """The named generator a itself: b^(p^depth)."""
        return FieldElem._raw(self, fq.shift(fq.ONE, self.p ** self.spec.depth), fq.ONE)

    def coerce(self, x):
        if isinstance(x, FieldElem):
            if x.field.spec != self.spec:
                raise ValueError("element from a different field")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    # -- tower extension -------------------------------------------------

    def extend(self, depth):
        """The tower level k(a^(1/p^depth)); depth may not shrink."""
        if depth < self.spec.depth:
            raise ValueError("cannot shrink a purely inseparable tower")
        if depth == self.spec.depth:
            return self
        s = self.spec
        return Field(FieldSpec(s.p, s.e, s.gen, depth))

    def embed(self, x, deeper):
        """Image of x under k(a^(1/p^m)) -> k(a^(1/p^m')), m' >= m."""
        if x.field.spec != self.spec:
            raise ValueError("element does not belong to this field")
        if (deeper.spec.p, deeper.spec.e, deeper.spec.gen) != (self.spec.p, self.spec.e, self.spec.gen):
            raise ValueError("incompatible tower")
        if deeper.spec.depth < self.spec.depth:
            raise ValueError("target tower is shallower")
        k = self.p ** (deeper.spec.depth - self.spec.depth)
        return FieldElem._raw(deeper, fq.spread(x.num, k), fq.spread(x.den, k))


class FieldElem:
    """A reduced rational function in the working generator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        gf = field.gf
        if not num:
            den = fq.ONE
        else:
            g = fq.gcd(gf, num, den)
            if len(g) > 1:
                num = fq.divmod_(gf, num, g)[0]
                den = fq.divmod_(gf, den, g)[0]
            den, lead = fq.monic(gf, den)
            if lead != 1:
                num = fq.smul(gf, gf.inv(lead), num)
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, field, num, den):
        # trusted constructor: num/den already canonical
        self = object.__new__(cls)
        self.field = field
        self.num = num
        self.den = den
        return self

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == fq.ONE and self.den == fq.ONE

    def is_unit(self):
        return bool(self.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return (self.field.spec == other.field.spec
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        f, gf = self.field, self.field.gf
        if self.den == fq.ONE and other.den == fq.ONE:
            return FieldElem._raw(f, fq.add(gf, self.num, other.num), fq.ONE)
        num = fq.add(gf, fq.mul(gf, self.num, other.den), fq.mul(gf, other.num, self.den))
        return FieldElem(f, num, fq.mul(gf, self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(self.field, fq.neg(self.field.gf, self.num), self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        f, gf = self.field, self.field.gf
        if not self.num or not other.num:
            return f.zero()
        if self.den == fq.ONE and other.den == fq.ONE:
            return FieldElem._raw(f, fq.mul(gf, self.num, other.num), fq.ONE)
        return FieldElem(f, fq.mul(gf, self.num, other.num), fq.mul(gf, self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        num, lead = fq.monic(self.field.gf, self.num)
        den = fq.smul(self.field.gf, self.field.gf.inv(lead), self.den)
        return FieldElem._raw(self.field, den, num)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.field.one()
        x = self
        while n:
            if n & 1:
                r = r * x
            x = x * x
            n >>= 1
        return r

    # -- Frobenius structure ------------------------------------------------

    def frobenius(self, n=1):
        """self ** (p^n), computed by digit spreading (no convolution)."""
        if n == 0 or not self.num:
            return self
        gf = self.field.gf
        return FieldElem._raw(self.field, fq.frob(gf, self.num, n), fq.frob(gf, self.den, n))

    def pth_root(self):
        """The y with y^p = self, or None.

        Membership in k^p is decided by a vanishing formal derivative with
        respect to the working generator (valid since F_q is perfect).
        """
        gf = self.field.gf
        if fq.deriv(gf, self.num) or fq.deriv(gf, self.den):
            return None
        num = fq.proot(gf, self.num)
        den = fq.proot(gf, self.den)
        if num is None or den is None:
            return None
        return FieldElem._raw(self.field, num, den)

    def __repr__(self):
        from .parser import render_elem
        return f"<{render_elem(self)}>"
