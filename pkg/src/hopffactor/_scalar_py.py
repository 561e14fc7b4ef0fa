"""Pure-Python Gaussian-rational scalars.

A scalar is a + (b)i with a, b reduced big-integer fractions.  This is the
reference implementation of the arithmetic kernel; `hopffactor._scalar_cy`
is a compiled twin with the identical interface and canonical forms, and
`hopffactor.scalar` picks between them at import time.

Canonical form invariants: denominators strictly positive, numerator and
denominator coprime, zero stored as 0/1.  Equality is therefore structural
and scalars hash consistently.
"""

from math import gcd

from hopffactor._scalarfmt import parse_gaussian, render_gaussian


def _red(n, d):
    # reduce n/d to canonical form with d > 0; zero is 0/1
    if d == 0:
        raise ZeroDivisionError("scalar with zero denominator")
    if n == 0:
        return 0, 1
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


class Scalar:
    """An exact element of Q(i)."""

    __slots__ = ("rn", "rd", "imn", "imd")

    def __init__(self, rn=0, rd=1, imn=0, imd=1):
        a, b = _red(rn, rd)
        c, d = _red(imn, imd)
        self.rn = a
        self.rd = b
        self.imn = c
        self.imd = d

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_json(cls, data):
        if not (isinstance(data, (list, tuple)) and len(data) == 4):
            raise ValueError(f"bad scalar payload: {data!r}")
        return cls(int(data[0]), int(data[1]), int(data[2]), int(data[3]))

    @classmethod
    def parse(cls, text):
        return cls(*parse_gaussian(text))

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.rn == 0 and self.imn == 0

    def is_one(self):
        return self.rn == 1 and self.rd == 1 and self.imn == 0

    def is_real(self):
        return self.imn == 0

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(
            self.rn * other.rd + other.rn * self.rd,
            self.rd * other.rd,
            self.imn * other.imd + other.imn * self.imd,
            self.imd * other.imd,
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.rn, self.rd, -self.imn, self.imd)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(
            self.rn * other.rd - other.rn * self.rd,
            self.rd * other.rd,
            self.imn * other.imd - other.imn * self.imd,
            self.imd * other.imd,
        )

    def __rsub__(self, other):
        if isinstance(other, int):
            return Scalar(other).__sub__(self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        if self.imn == 0 and other.imn == 0:
            return Scalar(self.rn * other.rn, self.rd * other.rd)
        # (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        a, b = self.rn, self.rd
        c, d = self.imn, self.imd
        e, f = other.rn, other.rd
        g, h = other.imn, other.imd
        return Scalar(
            a * e * d * h - c * g * b * f,
            b * f * d * h,
            a * g * d * f + c * e * b * h,
            b * h * d * f,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return Scalar(other).__truediv__(self)
        return NotImplemented

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.imn == 0:
            return Scalar(self.rd, self.rn)
        # 1/(a+bi) = (a-bi)/(a^2+b^2)
        nn = self.rn * self.rn * self.imd * self.imd + self.imn * self.imn * self.rd * self.rd
        dd = self.rd * self.rd * self.imd * self.imd
        # conj / norm, with norm = nn/dd
        return Scalar(
            self.rn * self.rd * dd, nn * self.rd * self.rd,
            -self.imn * self.imd * dd, nn * self.imd * self.imd,
        )

    def conj(self):
        return Scalar(self.rn, self.rd, -self.imn, self.imd)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison & hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.rd == 1 and self.rn == other and self.imn == 0
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.rn == other.rn
            and self.rd == other.rd
            and self.imn == other.imn
            and self.imd == other.imd
        )

    def __hash__(self):
        if self.rd == 1 and self.imn == 0:
            return hash(self.rn)
        return hash((self.rn, self.rd, self.imn, self.imd))

    def sort_key(self):
        return (self.rn, self.rd, self.imn, self.imd)

    # -- formats -------------------------------------------------------------

    def to_json(self):
        return [self.rn, self.rd, self.imn, self.imd]

    def __str__(self):
        return render_gaussian(self.rn, self.rd, self.imn, self.imd)

    def __repr__(self):
        return f"Scalar({self})"
