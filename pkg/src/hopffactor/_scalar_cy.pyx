# cython: language_level=3
# cython: binding=True
"""Compiled Gaussian-rational scalars.

Twin of `hopffactor._scalar_py` with the identical interface and canonical
forms; the numerators/denominators stay arbitrary-precision Python ints,
the speedup comes from compiled attribute access and dispatch in the hot
arithmetic paths.
"""

from math import gcd

from hopffactor._scalarfmt import parse_gaussian, render_gaussian


cdef tuple _red(object n, object d):
    if d == 0:
        raise ZeroDivisionError("scalar with zero denominator")
    if n == 0:
        return (0, 1)
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return (n, d)


cdef class Scalar:
    """An exact element of Q(i)."""

    cdef readonly object rn
    cdef readonly object rd
    cdef readonly object imn
    cdef readonly object imd

    def __init__(self, rn=0, rd=1, imn=0, imd=1):
        cdef tuple re_part = _red(rn, rd)
        cdef tuple im_part = _red(imn, imd)
        self.rn = re_part[0]
        self.rd = re_part[1]
        self.imn = im_part[0]
        self.imd = im_part[1]

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_json(cls, data):
        if not (isinstance(data, (list, tuple)) and len(data) == 4):
            raise ValueError(f"bad scalar payload: {data!r}")
        return cls(int(data[0]), int(data[1]), int(data[2]), int(data[3]))

    @classmethod
    def parse(cls, text):
        parts = parse_gaussian(text)
        return cls(parts[0], parts[1], parts[2], parts[3])

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.rn == 0 and self.imn == 0

    def is_one(self):
        return self.rn == 1 and self.rd == 1 and self.imn == 0

    def is_real(self):
        return self.imn == 0

    def __bool__(self):
        return not (self.rn == 0 and self.imn == 0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        cdef Scalar a
        cdef Scalar b
        if isinstance(other, Scalar):
            b = <Scalar> other
        elif isinstance(other, int):
            b = Scalar(other)
        else:
            return NotImplemented
        if isinstance(self, Scalar):
            a = <Scalar> self
        else:
            a = Scalar(self)
        return Scalar(
            a.rn * b.rd + b.rn * a.rd,
            a.rd * b.rd,
            a.imn * b.imd + b.imn * a.imd,
            a.imd * b.imd,
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Scalar(-self.rn, self.rd, -self.imn, self.imd)

    def __sub__(self, other):
        cdef Scalar a
        cdef Scalar b
        if isinstance(other, Scalar):
            b = <Scalar> other
        elif isinstance(other, int):
            b = Scalar(other)
        else:
            return NotImplemented
        a = <Scalar> self
        return Scalar(
            a.rn * b.rd - b.rn * a.rd,
            a.rd * b.rd,
            a.imn * b.imd - b.imn * a.imd,
            a.imd * b.imd,
        )

    def __rsub__(self, other):
        if isinstance(other, int):
            return Scalar(other).__sub__(self)
        return NotImplemented

    def __mul__(self, other):
        cdef Scalar a
        cdef Scalar b
        if isinstance(other, Scalar):
            b = <Scalar> other
        elif isinstance(other, int):
            b = Scalar(other)
        else:
            return NotImplemented
        if isinstance(self, Scalar):
            a = <Scalar> self
        else:
            a = Scalar(self)
        if a.imn == 0 and b.imn == 0:
            return Scalar(a.rn * b.rn, a.rd * b.rd)
        return Scalar(
            a.rn * b.rn * a.imd * b.imd - a.imn * b.imn * a.rd * b.rd,
            a.rd * b.rd * a.imd * b.imd,
            a.rn * b.imn * a.imd * b.rd + a.imn * b.rn * a.rd * b.imd,
            a.rd * b.imd * a.imd * b.rd,
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        cdef Scalar b
        if isinstance(other, Scalar):
            b = <Scalar> other
        elif isinstance(other, int):
            b = Scalar(other)
        else:
            return NotImplemented
        return self.__mul__(b.inv())

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return Scalar(other).__truediv__(self)
        return NotImplemented

    def inv(self):
        if self.rn == 0 and self.imn == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.imn == 0:
            return Scalar(self.rd, self.rn)
        nn = self.rn * self.rn * self.imd * self.imd + self.imn * self.imn * self.rd * self.rd
        dd = self.rd * self.rd * self.imd * self.imd
        return Scalar(
            self.rn * self.rd * dd, nn * self.rd * self.rd,
            -self.imn * self.imd * dd, nn * self.imd * self.imd,
        )

    def conj(self):
        return Scalar(self.rn, self.rd, -self.imn, self.imd)

    def __pow__(self, k, mod):
        if mod is not None or not isinstance(k, int):
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

    def __richcmp__(self, other, int op):
        if op != 2 and op != 3:
            return NotImplemented
        cdef Scalar a = <Scalar> self
        cdef bint eq
        if isinstance(other, Scalar):
            b = <Scalar> other
            eq = (
                a.rn == (<Scalar> b).rn
                and a.rd == (<Scalar> b).rd
                and a.imn == (<Scalar> b).imn
                and a.imd == (<Scalar> b).imd
            )
        elif isinstance(other, int):
            eq = a.rd == 1 and a.rn == other and a.imn == 0
        else:
            return NotImplemented
        return eq if op == 2 else not eq

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
