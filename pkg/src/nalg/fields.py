"""Exact scalar arithmetic over the rationals and over prime fields.

Rational scalars are plain ``fractions.Fraction`` objects, which already
carry a canonical reduced form (gcd 1, positive denominator).  Prime field
scalars are ``Mod`` instances holding a reduced residue.  Both kinds support
the usual arithmetic operators, so code that manipulates matrices and
structure constants never needs to know which field it is working over.

A field object (``Rationals`` or ``PrimeField``) coerces integers and
strings into scalars and owns the canonical string form used by the JSON
file format.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def _egcd(a, b):
    # returns (g, s, t) with g = gcd(a, b) = s*a + t*b
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


class Mod:
    """Residue in a prime field, reduced to the range [0, p)."""

    __slots__ = ("r", "p")

    def __init__(self, r, p):
        self.r = r % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(
                    "cannot mix residues mod %d and mod %d" % (self.p, other.p)
                )
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.r + o.r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.r - o.r, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(o.r - self.r, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.r * o.r, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return Mod(-self.r, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.r, n, self.p), self.p)

    def inverse(self):
        if self.r == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        g, s, _ = _egcd(self.r, self.p)
        assert g == 1
        return Mod(s, self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.r == other.r
        if isinstance(other, int):
            return self.r == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.p))

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return "Mod(%d, %d)" % (self.r, self.p)


class Rationals:
    """The rational field; scalars are Fraction objects."""

    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def parse(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("bad rational literal %r" % s) from exc

    def format(self, x):
        return str(x)

    @property
    def sqrt_minus_one(self):
        return None

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field of p elements; scalars are Mod residues.

    ``i`` optionally names a square root of -1, needed by the graded
    constructions.  When requested and not supplied it is found by
    scanning 1..p-1; for p = 3 (mod 4) none exists and asking is an error.
    """

    def __init__(self, p, i=None):
        if not is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        self.p = p
        self.char = p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)
        if i is not None:
            i = self.of(i)
            if i * i != self.of(-1):
                raise ValueError("%r squared is not -1 mod %d" % (i.r, p))
        self._i = i

    def of(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError("residue mod %d is not in F_%d" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Mod(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(
                    "denominator of %s vanishes in F_%d" % (x, self.p)
                )
            return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def parse(self, s):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return self.of(int(num)) / self.of(int(den))
            return self.of(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ZeroDivisionError):
                raise
            raise ValueError("bad F_%d literal %r" % (self.p, s)) from exc

    def format(self, x):
        return str(self.of(x).r)

    @property
    def sqrt_minus_one(self):
        if self._i is None:
            self._i = self.find_sqrt_minus_one()
        return self._i

    def find_sqrt_minus_one(self):
        minus_one = self.of(-1)
        for k in range(1, self.p):
            cand = Mod(k, self.p)
            if cand * cand == minus_one:
                return cand
        raise ValueError("F_%d has no square root of -1 (p = 3 mod 4)" % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "F_%d" % self.p


QQ = Rationals()


def GF(p, i=None):
    return PrimeField(p, i=i)
