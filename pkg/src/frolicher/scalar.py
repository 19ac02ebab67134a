"""Exact Gaussian rationals a + b*i with a, b in Q.

Rationals are gmpy2 ``mpq`` when gmpy2 is importable (set FROLICHER_NOGMPY
to force the pure Python backend), otherwise :class:`fractions.Fraction`.
Both keep values in lowest terms with a positive denominator.
"""

import os
import re
from fractions import Fraction

BACKEND = "python"
MPQ = Fraction

if "FROLICHER_NOGMPY" not in os.environ:
    try:
        import gmpy2

        MPQ = gmpy2.mpq
        BACKEND = "gmpy"
    except ImportError:
        pass

_ZERO = MPQ(0)
_ONE = MPQ(1)


def _q(x):
    if isinstance(x, str):
        return MPQ(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or string")
    return MPQ(x)


class Scalar:
    """An immutable Gaussian rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is MPQ else _q(re))
        object.__setattr__(self, "im", im if type(im) is MPQ else _q(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                         Fraction(int(self.im.numerator), int(self.im.denominator))))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("complex floats are not exact")
        if isinstance(x, str):
            return parse_scalar(x)
        return cls(x, 0)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is not Scalar:
            other = Scalar.coerce(other)
        return _mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = Scalar.coerce(other)
        return _mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = Scalar.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _mk(a * c, _ZERO)
        return _mk(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = Scalar.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("Scalar division by zero")
            return _mk(_ONE / a, _ZERO)
        n = a * a + b * b
        return _mk(a / n, -b / n)

    def conjugate(self):
        return _mk(self.re, -self.im)

    # comparison -----------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((str(self.re), str(self.im)))

    def is_real(self):
        return not self.im

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"


def _mk(re, im):
    s = object.__new__(Scalar)
    object.__setattr__(s, "re", re)
    object.__setattr__(s, "im", im)
    return s


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def _fmt_q(x):
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"


def format_scalar(s):
    """Serialize as ``a/b+c/d*i`` omitting zero parts, e.g. ``1``, ``-i``, ``1/2+3*i``."""
    re_, im_ = s.re, s.im
    if not im_:
        return _fmt_q(re_)
    if abs(im_) == 1:
        imag = "i"
    else:
        imag = _fmt_q(abs(im_)) + "*i"
    sign = "-" if im_ < 0 else "+"
    if not re_:
        return ("-" if im_ < 0 else "") + imag
    return _fmt_q(re_) + sign + imag


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_RAT})(?=$|[+-]))?"
    rf"(?:(?P<isign>[+-])?(?:(?P<imag>{_RAT})\*)?i)?$"
)


def parse_scalar(text):
    """Parse the serialized form written by :func:`format_scalar`.

    >>> parse_scalar("1/2+3*i")
    Scalar('1/2+3*i')
    >>> parse_scalar("-i")
    Scalar('-i')
    """
    t = text.strip().replace(" ", "")
    m = _SCALAR_RE.match(t)
    if not t or m is None or (m.group("re") is None and not t.endswith("i")):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    try:
        re_part = MPQ(m.group("re")) if m.group("re") else _ZERO
        mag = MPQ(m.group("imag")) if m.group("imag") else _ONE
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    if not t.endswith("i"):
        return _mk(re_part, _ZERO)
    if m.group("re") is not None and m.group("isign") is None:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    im_part = -mag if m.group("isign") == "-" else mag
    return _mk(re_part, im_part)
