"""Exact arithmetic in Q(sqrt 11), enough to compare bounds that involve r.

Every value is ``p + q*sqrt(11)`` with rational ``p, q``.  Signs are decided by
squaring, so no floating point ever enters a comparison.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from functools import total_ordering

RADICAND = 11


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int or Fraction")
    return Fraction(x)


@total_ordering
class Surd:
    __slots__ = ("p", "q")

    def __init__(self, p=0, q=0):
        self.p = _frac(p)
        self.q = _frac(q)

    @staticmethod
    def lift(x) -> "Surd":
        return x if isinstance(x, Surd) else Surd(x, 0)

    def sign(self) -> int:
        p, q = self.p, self.q
        sp = (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: whichever magnitude wins
        lhs, rhs = p * p, RADICAND * q * q
        if lhs == rhs:
            return 0
        return sp if lhs > rhs else sq

    def __add__(self, other):
        o = Surd.lift(other)
        return Surd(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.p, -self.q)

    def __sub__(self, other):
        return self + (-Surd.lift(other))

    def __rsub__(self, other):
        return Surd.lift(other) - self

    def __mul__(self, other):
        o = Surd.lift(other)
        return Surd(self.p * o.p + RADICAND * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Surd.lift(other)
        den = o.p * o.p - RADICAND * o.q * o.q
        if den == 0:
            raise ZeroDivisionError("division by zero surd")
        conj = Surd(o.p / den, -o.q / den)
        return self * conj

    def __rtruediv__(self, other):
        return Surd.lift(other) / self

    def __eq__(self, other):
        try:
            o = Surd.lift(other)
        except TypeError:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __lt__(self, other):
        return (self - Surd.lift(other)).sign() < 0

    def __hash__(self):
        return hash((self.p, self.q))

    def __float__(self):
        return float(self.p) + float(self.q) * RADICAND ** 0.5

    def to_decimal(self, places: int = 3) -> Decimal:
        """Round half-up to ``places`` decimals, computed with 50 guard digits."""
        with localcontext() as ctx:
            ctx.prec = 60
            root = Decimal(RADICAND).sqrt()
            val = Decimal(self.p.numerator) / Decimal(self.p.denominator)
            val += Decimal(self.q.numerator) / Decimal(self.q.denominator) * root
            return val.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)

    def __repr__(self):
        return f"Surd({self.p}, {self.q})"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        sign = "-" if self.q < 0 else "+"
        return f"{self.p} {sign} {abs(self.q)}*sqrt({RADICAND})"


def as_surd(x) -> Surd:
    return Surd.lift(x)


# r = (9 - sqrt 11)/7, the smaller root of 7x^2 - 18x + 10
R = Surd(Fraction(9, 7), Fraction(-1, 7))
FOUR_FIFTHS = Surd(Fraction(4, 5))
FIVE_SIXTHS = Surd(Fraction(5, 6))

# branch threshold used by the k >= 11 algorithm
BRANCH_THRESHOLD = (2 - 2 * R) / R


def geq(a, b) -> bool:
    return Surd.lift(a) >= Surd.lift(b)
