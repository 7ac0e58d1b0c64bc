"""Exact Gaussian-rational scalars, the coefficient field for all series.

A Gaussian rational is a complex number a + b*i with rational a, b.  Both
parts are stored as arbitrary-precision rationals, automatically in lowest
terms with positive denominators, so arithmetic is exact and canonical:
re-running any computation reproduces bit-identical values.

When gmpy2 is installed its ``mpq`` type is used for the parts (roughly an
order of magnitude faster); otherwise ``fractions.Fraction``.  Both print
identically ("p/q" or "p"), so serialized output does not depend on the
backend.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _Q = Fraction

_QZERO = _Q(0)
_QONE = _Q(1)


def _to_q(x):
    if isinstance(x, (int, str)):
        return _Q(x)
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    # already an mpq (or Fraction when that is the backend)
    return _Q(x)


class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_q(re)
        self.im = _to_q(im)

    @classmethod
    def _raw(cls, re, im):
        # fast path: parts are already backend rationals
        self = object.__new__(cls)
        self.re = re
        self.im = im
        return self

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.re and not self.im

    def is_real(self):
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b:
            if d:
                return GaussianRational._raw(a * c - b * d, a * d + b * c)
            return GaussianRational._raw(a * c, b * c)
        if d:
            return GaussianRational._raw(a * c, a * d)
        return GaussianRational._raw(a * c, _QZERO)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        n = a * a + b * b
        return GaussianRational._raw(a / n, -b / n)

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- conversion / display -------------------------------------------

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def as_fractions(self):
        """Return (re, im) as ``fractions.Fraction`` regardless of backend."""
        return (Fraction(self.re.numerator, self.re.denominator),
                Fraction(self.im.numerator, self.im.denominator))

    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return str(re)
        if im == _QONE:
            im_part = "i"
        elif im == -_QONE:
            im_part = "-i"
        else:
            im_part = f"{im}*i"
        if not re:
            return im_part
        sign = "-" if im_part.startswith("-") else "+"
        return f"{re}{sign}{im_part.lstrip('-')}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, type(_QZERO)):
        return GaussianRational._raw(_Q(x), _QZERO)
    return NotImplemented


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions, or "p/q" strings."""
    return GaussianRational(re, im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
I = GaussianRational(0, 1)
TWO_I = GaussianRational(0, 2)
HALF = GaussianRational(Fraction(1, 2))
