"""Text grammar for elements, p-polynomials and general polynomials.

Field elements serialize as ``<poly in gen>/<poly in gen>`` with integer
literals reduced mod p and the denominator omitted when it is 1.  Inside a
tower of depth m the working generator is printed in terms of the named
generator: ``a``, ``a^3``, ``a^(1/p^2)``, ``a^(5/p^1)`` and so on.

p-polynomials are sums of ``<coef>*<VAR>^(p^<e>)`` in canonical (variable,
exponent) order; general polynomials are sums of ``<coef>*V1^n1*V2^n2``
in descending graded-lex order.  Parsing accepts any term order, bare
variables (meaning exponent p^0 resp. 1), and parenthesized coefficients,
so every rendered form round-trips.
"""

import re

from . import fqpoly as fq
from .field import FieldElem
from .polyring import Poly, grlex_key
from .ppoly import PPoly

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*'*)"
                       r"|(?P<op>->|[-+*/^(),:;=]))")


class ParseError(ValueError):
    pass


def tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"bad character at {text[pos:]!r}")
            break
        pos = m.end()
        if m.lastgroup == "int":
            out.append(("int", int(m.group("int"))))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


class _Stream:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None)

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def accept(self, kind, value=None):
        k, v = self.peek()
        if k == kind and (value is None or v == value):
            self.i += 1
            return v
        return None

    def expect(self, kind, value=None):
        v = self.accept(kind, value)
        if v is None:
            raise ParseError(f"expected {value or kind}, got {self.peek()!r}")
        return v

    def done(self):
        return self.i >= len(self.toks)


# ---------------------------------------------------------------------------
# field elements


def _gen_power(field, stream):
    """A factor `a`, `a^k`, or `a^(u/p^j)` as a FieldElem."""
    spec = field.spec
    stream.expect("name", spec.gen)
    scale = field.p ** spec.depth  # b-exponent of a itself
    if not stream.accept("op", "^"):
        return field.elem(fq.shift(fq.ONE, scale))
    if stream.accept("op", "("):
        u = stream.expect("int")
        stream.expect("op", "/")
        stream.expect("name", "p")
        j = stream.expect("int") if stream.accept("op", "^") else 1
        stream.expect("op", ")")
        if j > spec.depth:
            raise ParseError(f"{spec.gen}^({u}/p^{j}) needs tower depth >= {j}")
        return field.elem(fq.shift(fq.ONE, u * field.p ** (spec.depth - j)))
    k = stream.expect("int")
    return field.elem(fq.shift(fq.ONE, k * scale))


def _scalar_term(field, stream, ring=None):
    """Product of integer literals, generator powers and parameter powers."""
    acc = ring.one() if ring is not None else field.one()
    first = True
    while True:
        kind, val = stream.peek()
        if kind == "int":
            stream.next()
            acc = acc * field.from_int(val)
        elif kind == "op" and val == "(":
            stream.next()
            acc = acc * _scalar_sum(field, ring, stream)
            stream.expect("op", ")")
        elif kind == "name" and val == field.spec.gen:
            acc = acc * _gen_power(field, stream)
        elif kind == "name" and ring is not None and val in ring.names:
            stream.next()
            e = stream.expect("int") if stream.accept("op", "^") else 1
            acc = acc * _param_power(ring, val, e)
        else:
            if first:
                raise ParseError(f"expected a scalar, got {stream.peek()!r}")
            break
        first = False
        if not stream.accept("op", "*"):
            break
    return acc


def _param_power(ring, name, e):
    x = ring.param(name)
    acc = ring.one()
    for _ in range(e):
        acc = acc * x
    return acc


def _poly_in_gen(field, stream):
    acc = field.zero()
    sign = 1
    if stream.accept("op", "-"):
        sign = -1
    while True:
        term = _scalar_term(field, stream)
        acc = acc + (term if sign == 1 else -term)
        if stream.accept("op", "+"):
            sign = 1
        elif stream.accept("op", "-"):
            sign = -1
        else:
            return acc


def parse_element(field, text):
    """Parse `<poly in gen>` or `<poly in gen>/<poly in gen>`."""
    stream = _Stream(tokenize(text))
    num = _poly_in_gen(field, stream)
    if stream.accept("op", "/"):
        den = _poly_in_gen(field, stream)
        if den.is_zero():
            raise ParseError("zero denominator")
        num = num / den
    if not stream.done():
        raise ParseError(f"trailing input at {stream.peek()!r}")
    return num


def render_elem(x):
    num = _render_gen_poly(x.field, x.num)
    if x.den == fq.ONE:
        return num
    den = _render_gen_poly(x.field, x.den)
    if "+" in num:
        num = f"({num})"
    if "+" in den:
        den = f"({den})"
    return f"{num}/{den}"


def _render_gen_exp(field, i):
    """The printed form of b^i in terms of the named generator."""
    spec = field.spec
    u, j = i, spec.depth
    while j > 0 and u % field.p == 0:
        u //= field.p
        j -= 1
    if j == 0:
        return spec.gen if u == 1 else f"{spec.gen}^{u}"
    return f"{spec.gen}^({u}/p^{j})"


def _render_gen_poly(field, coeffs):
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(_render_gen_exp(field, i))
        else:
            parts.append(f"{c}*{_render_gen_exp(field, i)}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# p-polynomials


def parse_ppoly(text, dom, var_names, nvars=None):
    """Parse a p-polynomial over the given coefficient domain.

    dom is a Field or a ParamRing; var_names maps names to variable slots.
    """
    from .params import ParamRing

    ring = dom if isinstance(dom, ParamRing) else None
    field = ring.base if ring is not None else dom
    if nvars is None:
        nvars = len(var_names)
    index = {n: i for i, n in enumerate(var_names)}
    stream = _Stream(tokenize(text))
    terms = {}
    if stream.accept("int", 0) and stream.done():
        return PPoly(dom, nvars, {})
    stream.i = 0
    sign = 1
    if stream.accept("op", "-"):
        sign = -1
    while True:
        coef, slot = _ppoly_term(field, ring, index, stream)
        if sign == -1:
            coef = -coef
        if slot in terms:
            terms[slot] = terms[slot] + coef
        else:
            terms[slot] = coef
        if stream.accept("op", "+"):
            sign = 1
        elif stream.accept("op", "-"):
            sign = -1
        else:
            break
    if not stream.done():
        raise ParseError(f"trailing input at {stream.peek()!r}")
    return PPoly(dom, nvars, terms)


def _ppoly_term(field, ring, index, stream):
    coef = ring.one() if ring is not None else field.one()
    slot = None
    first = True
    while True:
        kind, val = stream.peek()
        if kind == "int":
            stream.next()
            coef = coef * field.from_int(val)
        elif kind == "op" and val == "(":
            stream.next()
            coef = coef * _scalar_sum(field, ring, stream)
            stream.expect("op", ")")
        elif kind == "name" and val in index:
            stream.next()
            e = 0
            if stream.accept("op", "^"):
                stream.expect("op", "(")
                stream.expect("name", "p")
                e = stream.expect("int") if stream.accept("op", "^") else 1
                stream.expect("op", ")")
            if slot is not None:
                raise ParseError("two variables in one p-polynomial term")
            slot = (index[val], e)
        elif kind == "name" and val == field.spec.gen:
            coef = coef * _gen_power(field, stream)
        elif kind == "name" and ring is not None and val in ring.names:
            stream.next()
            e = stream.expect("int") if stream.accept("op", "^") else 1
            coef = coef * _param_power(ring, val, e)
        else:
            if first:
                raise ParseError(f"unexpected token {stream.peek()!r} in p-polynomial")
            break
        first = False
        if not stream.accept("op", "*"):
            break
    if slot is None:
        raise ParseError("p-polynomial term lacks a variable")
    return coef, slot


def _scalar_sum(field, ring, stream):
    """Sum of scalar terms with an optional `/<sum>`, for coefficients."""
    acc = _scalar_sum_nodiv(field, ring, stream)
    if stream.accept("op", "/"):
        den = _scalar_sum_nodiv(field, None, stream)
        acc = acc * den.inverse()
    return acc


def _scalar_sum_nodiv(field, ring, stream):
    acc = None
    sign = 1
    if stream.accept("op", "-"):
        sign = -1
    while True:
        t = _scalar_term(field, stream, ring)
        t = t if sign == 1 else -t
        acc = t if acc is None else acc + t
        if stream.accept("op", "+"):
            sign = 1
        elif stream.accept("op", "-"):
            sign = -1
        else:
            return acc


def render_coef(c, param_names=None):
    if isinstance(c, FieldElem):
        s = render_elem(c)
        if "+" in s or "-" in s or "/" in s:
            return f"({s})"
        return s
    return f"({render_poly(c.poly, c.ring.names)})"


def render_ppoly(f, var_names=None):
    if not f.terms:
        return "0"
    if var_names is None:
        var_names = [f"X{i}" for i in range(f.nvars)]
    parts = []
    for (i, e), c in f.sorted_terms():
        parts.append(f"{render_coef(c)}*{var_names[i]}^(p^{e})")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# general polynomials


def parse_poly(text, field, var_names, nvars=None):
    if nvars is None:
        nvars = len(var_names)
    index = {n: i for i, n in enumerate(var_names)}
    stream = _Stream(tokenize(text))
    acc = Poly.zero(field, nvars)
    if stream.accept("int", 0) and stream.done():
        return acc
    stream.i = 0
    sign = 1
    if stream.accept("op", "-"):
        sign = -1
    while True:
        coef = field.one()
        exps = [0] * nvars
        first = True
        while True:
            kind, val = stream.peek()
            if kind == "int":
                stream.next()
                coef = coef * field.from_int(val)
            elif kind == "op" and val == "(":
                stream.next()
                coef = coef * _scalar_sum(field, None, stream)
                stream.expect("op", ")")
            elif kind == "name" and val in index:
                stream.next()
                n = stream.expect("int") if stream.accept("op", "^") else 1
                exps[index[val]] += n
            elif kind == "name" and val == field.spec.gen:
                coef = coef * _gen_power(field, stream)
            else:
                if first:
                    raise ParseError(f"unexpected token {stream.peek()!r} in polynomial")
                break
            first = False
            if not stream.accept("op", "*"):
                break
        if sign == -1:
            coef = -coef
        acc = acc + Poly(field, nvars, {tuple(exps): coef})
        if stream.accept("op", "+"):
            sign = 1
        elif stream.accept("op", "-"):
            sign = -1
        else:
            break
    if not stream.done():
        raise ParseError(f"trailing input at {stream.peek()!r}")
    return acc


def render_poly(f, var_names=None):
    if f.is_zero():
        return "0"
    if var_names is None:
        var_names = [f"X{i}" for i in range(f.nvars)]
    parts = []
    for m, c in sorted(f.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True):
        factors = [render_coef(c)]
        for i, e in enumerate(m):
            if e == 1:
                factors.append(var_names[i])
            elif e:
                factors.append(f"{var_names[i]}^{e}")
        if len(factors) > 1 and factors[0] == "1":
            factors = factors[1:]
        parts.append("*".join(factors))
    return " + ".join(parts)
