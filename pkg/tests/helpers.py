import sympy

from cyclospec.polyalg import IntPoly

a = sympy.Symbol("a")


def to_sympy(p):
    return sum((c * a**i for i, c in enumerate(p.coeffs)), sympy.Integer(0))


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), a)
    return IntPoly(int(c) for c in reversed(poly.all_coeffs()))


def P(*coeffs):
    """Polynomial from ascending coefficients."""
    return IntPoly(coeffs)
