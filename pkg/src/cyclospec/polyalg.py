"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored ascending by degree: ``coeffs[i]`` multiplies ``a**i``.
The zero polynomial stores no coefficients and has degree -1.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd
from numbers import Rational


class NonIntegerQuotientError(ArithmeticError):
    """Raised when an integer-exact division would produce fractional coefficients."""


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, IntPoly):
            coeffs = coeffs.coeffs
        self.coeffs = _strip([operator.index(c) for c in coeffs])
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,) * degree + (coeff,))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, IntPoly):
            return other
        try:
            return cls((operator.index(other),))
        except TypeError:
            return NotImplemented

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPoly", self.coeffs))
        return self._hash

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return divrem(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return self.format()

    def format(self, var="a"):
        """Human-readable form, highest degree first, e.g. ``a^3 - 3*a - 2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def add(p, q):
    """Return ``p + q``."""
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(out)


def mul(p, q):
    """Return the exact product ``p * q`` (schoolbook)."""
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return IntPoly(out)


def _synthetic_divrem(p, q):
    # q monic or anti-monic: stays in the integers
    lc = q.leading
    dq = q.degree
    rem = list(p.coeffs)
    quo = [0] * (p.degree - dq + 1)
    for i in range(p.degree - dq, -1, -1):
        c = rem[i + dq] * lc  # lc is +-1, so this is the exact quotient digit
        quo[i] = c
        if c:
            for j, qc in enumerate(q.coeffs):
                rem[i + j] -= c * qc
    return IntPoly(quo), IntPoly(rem[:dq])


def _rational_divrem(p, q):
    lc = Fraction(q.leading)
    dq = q.degree
    rem = [Fraction(c) for c in p.coeffs]
    quo = [Fraction(0)] * (p.degree - dq + 1)
    for i in range(p.degree - dq, -1, -1):
        c = rem[i + dq] / lc
        quo[i] = c
        if c:
            for j, qc in enumerate(q.coeffs):
                rem[i + j] -= c * qc
    return quo, rem[:dq]


def _as_int_poly(fracs):
    if any(f.denominator != 1 for f in fracs):
        raise NonIntegerQuotientError("division leaves non-integer coefficients")
    return IntPoly(f.numerator for f in fracs)


def divrem(p, q):
    """Divide ``p`` by ``q`` returning ``(quotient, remainder)``.

    Monic (or leading coefficient -1) divisors use integer synthetic division.
    Other divisors are handled over the rationals and the result must be
    integral, otherwise :class:`NonIntegerQuotientError` is raised.
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.degree < q.degree:
        return ZERO, p
    if q.leading in (1, -1):
        return _synthetic_divrem(p, q)
    quo, rem = _rational_divrem(p, q)
    return _as_int_poly(quo), _as_int_poly(rem)


def exact_div(p, q):
    """Return ``p / q``, requiring zero remainder and an integral quotient."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.degree < q.degree:
        if p.is_zero():
            return ZERO
        raise NonIntegerQuotientError("divisor does not divide dividend")
    quo, rem = _rational_divrem(p, q)
    if any(rem):
        raise NonIntegerQuotientError("divisor does not divide dividend")
    return _as_int_poly(quo)


def divides(q, p):
    """True if ``q`` divides ``p`` over the rationals."""
    if q.is_zero():
        return p.is_zero()
    if p.degree < q.degree:
        return p.is_zero()
    return not any(_rational_divrem(p, q)[1])


def pseudo_remainder(p, q):
    """Remainder of ``lc(q)**(deg p - deg q + 1) * p`` divided by ``q``; integral."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.degree < q.degree:
        return p
    lc = q.leading
    dq = q.degree
    rem = list(p.coeffs)
    for i in range(p.degree - dq, -1, -1):
        c = rem[i + dq]
        rem = [lc * r for r in rem]
        if c:
            for j, qc in enumerate(q.coeffs):
                rem[i + j] -= c * qc
    return IntPoly(rem[:dq])


def compose(p, q):
    """Return ``p(q(a))``."""
    result = ZERO
    for c in reversed(p.coeffs):
        result = add(mul(result, q), IntPoly((c,)))
    return result


def evaluate(p, x):
    """Horner evaluation. Exact for ints and Fractions, float arithmetic for floats."""
    result = 0
    for c in reversed(p.coeffs):
        result = result * x + c
    if isinstance(x, Rational) and not isinstance(x, int):
        return Fraction(result)
    return result


def derivative(p):
    return IntPoly(i * c for i, c in enumerate(p.coeffs) if i)


def content(p):
    """Signed content: gcd of coefficients carrying the sign of the leading one."""
    if p.is_zero():
        return 0
    g = 0
    for c in p.coeffs:
        g = gcd(g, c)
    return g if p.leading > 0 else -g


def primitive_part(p):
    """``p / content(p)``; positive leading coefficient, coefficient gcd 1."""
    if p.is_zero():
        return ZERO
    c = content(p)
    return IntPoly(x // c for x in p.coeffs)


def gcd_primitive(p, q):
    """Greatest common divisor over Q, returned primitive with positive leading coefficient."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = primitive_part(p), primitive_part(q)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, primitive_part(r)
    return primitive_part(a)


def squarefree_decomposition(p):
    """Yun's square-free decomposition.

    Returns ``[(factor, multiplicity), ...]`` with ascending multiplicities and
    primitive, positive-leading, pairwise coprime square-free factors, so that
    ``p == content(p) * prod(f**m)``. Constants decompose to an empty list.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    f = primitive_part(p)
    if f.degree < 1:
        return []
    df = derivative(f)
    g = gcd_primitive(f, df)
    b = exact_div(f, g)
    d = exact_div(df, g) - derivative(b)
    out = []
    i = 1
    while b.degree >= 1:
        a = gcd_primitive(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b = exact_div(b, a)
        d = exact_div(d, a) - derivative(b)
        i += 1
    return out


def root_multiplicity(p, root):
    """Multiplicity of the integer ``root`` as a root of ``p`` (nonzero)."""
    if p.is_zero():
        raise ValueError("every value is a root of the zero polynomial")
    lin = IntPoly((-root, 1))
    count = 0
    while True:
        quo, rem = divrem(p, lin)
        if rem:
            return count
        p = quo
        count += 1
