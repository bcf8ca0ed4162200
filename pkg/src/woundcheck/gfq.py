"""Small finite fields F_q, q = p^e.

Elements are integers 0 <= x < q.  The integer sum(d_i * p**i) stands for
the residue class sum(d_i * t**i) modulo a fixed monic irreducible f(t) of
degree e over F_p; for e = 1 this is plain arithmetic mod p.  The modulus
is chosen deterministically from (p, e): the lexicographically smallest
monic irreducible of degree e, scanning coefficient vectors low-to-high.

Field handles are cached by (p, e).  Elements carry no field pointer, so
callers must keep operands inside one field.
"""

import functools

_TABLE_LIMIT = 4096  # largest q for which e > 1 lookup tables are built


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@functools.cache
def GFq(p, e=1):
    return _GFq(p, e)


class _GFq:
    __slots__ = ("p", "e", "q", "modulus", "_exp", "_log")

    def __init__(self, p, e):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            self.modulus = None
            self._exp = self._log = None
        else:
            if self.q > _TABLE_LIMIT:
                raise ValueError(f"q = {self.q} too large for table-based extension field")
            self.modulus = _smallest_irreducible(p, e)
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    # -- digit helpers (e > 1) ------------------------------------------

    def _digits(self, x):
        p, out = self.p, []
        for _ in range(self.e):
            out.append(x % p)
            x //= p
        return out

    def _undigits(self, ds):
        x = 0
        for d in reversed(ds):
            x = x * self.p + d
        return x

    def _mul_raw(self, a, b):
        # polynomial product of digit vectors reduced mod self.modulus
        p, e = self.p, self.e
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self._digits(self.modulus) + [1]
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return self._undigits(prod[:e])

    def _build_tables(self):
        # discrete-log tables over a primitive element, found by scanning
        q = self.q
        order = q - 1
        factors = _prime_factors(order)
        g = None
        for cand in range(2, q):
            if all(self._pow_raw(cand, order // f) != 1 for f in factors):
                g = cand
                break
        exp = [1] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log

    def _pow_raw(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            n >>= 1
        return r

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        p = self.p
        if self.e == 1:
            return (a + b) % p
        x, y, out, mult = a, b, 0, 1
        for _ in range(self.e):
            out += ((x + y) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, a):
        p = self.p
        if self.e == 1:
            return (-a) % p
        x, out, mult = a, 0, 1
        for _ in range(self.e):
            out += ((-x) % p) * mult
            x //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1) - self._log[a]]

    def pow_(self, a, n):
        if self.e == 1:
            return pow(a, n, self.p) if a else (0 if n else 1)
        if a == 0:
            return 0 if n else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frob(self, a):
        """a ** p (identity on prime fields)."""
        if self.e == 1:
            return a
        return self.pow_(a, self.p)

    def frob_n(self, a, n):
        if self.e == 1 or a == 0:
            return a
        return self.pow_(a, pow(self.p, n % self.e, self.q - 1))

    def proot(self, a):
        """The unique p-th root (Frobenius is bijective on F_q)."""
        if self.e == 1:
            return a
        return self.pow_(a, self.p ** (self.e - 1))

    def proot_n(self, a, n):
        for _ in range(n % self.e if self.e > 1 else 0):
            a = self.proot(a)
        return a


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _smallest_irreducible(p, e):
    """Integer code of the smallest monic irreducible of degree e over F_p."""
    # low-degree irreducibles first, for trial division
    small = []
    for deg in range(1, e // 2 + 1):
        for code in range(p ** deg, 2 * p ** deg):
            poly = _decode(code, p)
            if len(poly) != deg + 1 or poly[-1] != 1:
                continue
            if all(not _poly_divides(q, poly, p) for q in small):
                small.append(poly)
    for code in range(p ** e, 2 * p ** e):
        poly = _decode(code, p)
        if len(poly) != e + 1 or poly[-1] != 1:
            continue
        if all(not _poly_divides(q, poly, p) for q in small):
            return code - p ** e  # store only the sub-leading digits
    raise RuntimeError("no irreducible found")  # unreachable


def _decode(code, p):
    out = []
    while code:
        out.append(code % p)
        code //= p
    return out


def _poly_divides(d, n, p):
    n = list(n)
    inv_lead = pow(d[-1], p - 2, p)
    while len(n) >= len(d):
        c = (n[-1] * inv_lead) % p
        for i in range(len(d)):
            n[len(n) - len(d) + i] = (n[len(n) - len(d) + i] - c * d[i]) % p
        while n and n[-1] == 0:
            n.pop()
        if not n:
            return True
    return False
