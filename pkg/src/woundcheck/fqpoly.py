"""Dense univariate polynomials over a GFq handle.

A polynomial is a tuple of field elements (ints), lowest degree first,
with no trailing zeros; () is the zero polynomial.  All functions take
the field handle as first argument and return canonical tuples.

Multiplication over prime fields uses Kronecker substitution: pack the
coefficients into one big integer, multiply natively, and unpack digits.
"""

import numpy as np

ONE = (1,)


def norm(v):
    n = len(v)
    while n and v[n - 1] == 0:
        n -= 1
    return tuple(v[:n])


def degree(f):
    """Degree, with -1 for the zero polynomial."""
    return len(f) - 1


def add(gf, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = gf.add(out[i], c)
    return norm(out)


def neg(gf, f):
    return tuple(gf.neg(c) for c in f)


def sub(gf, f, g):
    return add(gf, f, neg(gf, g))


def smul(gf, c, f):
    if c == 0:
        return ()
    if c == 1:
        return f
    return tuple(gf.mul(c, x) for x in f)


def mul(gf, f, g):
    if not f or not g:
        return ()
    if gf.e == 1 and min(len(f), len(g)) > 4:
        return _mul_kronecker(gf.p, f, g)
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = gf.add(out[i + j], gf.mul(a, b))
    return norm(out)


def _mul_kronecker(p, f, g):
    # coefficient bound fixes the digit width
    bound = (p - 1) * (p - 1) * min(len(f), len(g))
    for width, dtype in ((2, "<u2"), (4, "<u4"), (8, "<u8")):
        if bound < 1 << (8 * width):
            break
    fi = int.from_bytes(np.asarray(f, dtype=dtype).tobytes(), "little")
    gi = int.from_bytes(np.asarray(g, dtype=dtype).tobytes(), "little")
    nout = len(f) + len(g) - 1
    raw = (fi * gi).to_bytes(nout * width, "little")
    digits = np.frombuffer(raw, dtype=dtype) % p
    return norm(digits.tolist())


def divmod_(gf, f, g):
    """Quotient and remainder; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return (), f
    inv_lead = gf.inv(g[-1])
    rem = list(f)
    quo = [0] * (len(f) - len(g) + 1)
    for k in range(len(f) - len(g), -1, -1):
        c = gf.mul(rem[k + len(g) - 1], inv_lead)
        if c:
            quo[k] = c
            for i, gc in enumerate(g):
                rem[k + i] = gf.sub(rem[k + i], gf.mul(c, gc))
    return norm(quo), norm(rem)


def rem(gf, f, g):
    return divmod_(gf, f, g)[1]


def gcd(gf, f, g):
    """Monic gcd; gcd(0, 0) = 0."""
    while g:
        f, g = g, rem(gf, f, g)
    return monic(gf, f)[0]


def monic(gf, f):
    """(f / lead, lead) with the first part monic; zero maps to ((), 1)."""
    if not f:
        return (), 1
    lead = f[-1]
    if lead == 1:
        return f, 1
    return smul(gf, gf.inv(lead), f), lead


def frob(gf, f, n):
    """f ** (p^n): spread exponents by p^n and power the coefficients."""
    if n == 0 or not f:
        return f
    k = gf.p ** n
    out = [0] * ((len(f) - 1) * k + 1)
    for i, c in enumerate(f):
        if c:
            out[i * k] = gf.frob_n(c, n)
    return tuple(out)


def spread(f, k):
    """f(x) -> f(x^k), coefficients untouched (tower embedding)."""
    if k == 1 or not f:
        return f
    out = [0] * ((len(f) - 1) * k + 1)
    for i, c in enumerate(f):
        if c:
            out[i * k] = c
    return tuple(out)


def proot(gf, f, n=1):
    """The p^n-th root, or None when f is not a p^n-th power."""
    if not f:
        return ()
    k = gf.p ** n
    if (len(f) - 1) % k:
        return None
    out = [0] * ((len(f) - 1) // k + 1)
    for i, c in enumerate(f):
        if c:
            if i % k:
                return None
            out[i // k] = gf.proot_n(c, n)
    return tuple(out)


def deriv(gf, f):
    return norm([gf.mul(i % gf.p, c) for i, c in enumerate(f)][1:])


def shift(f, k):
    """Multiply by x^k."""
    if not f:
        return f
    return (0,) * k + tuple(f)
