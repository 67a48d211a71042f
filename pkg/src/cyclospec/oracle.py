"""Ground truth that does not go through the recurrences.

``charpoly_exact`` gets the characteristic polynomial of an integer matrix by
evaluating determinants at integer points (fraction-free Bareiss elimination)
and interpolating.  ``eig_numeric`` is a cyclic Jacobi eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cayley import IntMatrix
from .polyalg import IntPoly, compose


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class CharPoly:
    in_lambda: IntPoly  # det(lambda*I - M)
    in_a: IntPoly       # (-1)^n * in_lambda(2 - a), monic in a


def _as_rows(m):
    if isinstance(m, IntMatrix):
        return [list(r) for r in m.entries]
    rows = [list(map(int, r)) for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def bareiss_det(rows):
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _points(count):
    # 0, 1, -1, 2, -2, ... keeps magnitudes small
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def interpolate(xs, ys):
    """Coefficients (ascending, Fractions) of the polynomial through the points, via Newton form."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out[:-1]
        out = [s - xs[i] * o for s, o in zip(shifted, out)]
        out[0] += coef[i]
    return out


def charpoly_exact(m):
    """Exact characteristic polynomial of an integer matrix, in lambda and in a = 2 - lambda."""
    rows = _as_rows(m)
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix has no characteristic polynomial")
    xs = _points(n + 1)
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        ys.append(bareiss_det(shifted))
    coeffs = interpolate(xs, ys)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated characteristic polynomial is not integral")
    in_lambda = IntPoly(c.numerator for c in coeffs)
    if in_lambda.degree != n or not in_lambda.is_monic():
        raise ArithmeticError("characteristic polynomial must be monic of full degree")
    in_a = compose(in_lambda, IntPoly((2, -1)))
    if n % 2:
        in_a = -in_a
    return CharPoly(in_lambda, in_a)


def _round_robin(n):
    """Rounds of disjoint index pairs covering every pair once (circle method)."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        rounds.append([(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n])
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def eig_numeric(m, tol=1e-12, max_sweeps=100):
    """Eigenvalues of a real symmetric matrix, ascending.

    Cyclic Jacobi in round-robin order: each round annihilates a set of
    disjoint off-diagonal pairs at once.  Iterates until the off-diagonal
    Frobenius norm drops below ``tol`` (or to the rounding floor).
    """
    if isinstance(m, IntMatrix):
        a = m.to_numpy()
    else:
        a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("eig_numeric requires a symmetric matrix")
    n = a.shape[0]
    if n <= 1:
        return [float(x) for x in np.diag(a)]

    floor = 8 * np.finfo(float).eps * max(np.linalg.norm(a), 1.0)
    rounds = [np.array(r, dtype=int).reshape(-1, 2) for r in _round_robin(n)]

    def off(x):
        return np.linalg.norm(x - np.diag(np.diag(x)))

    for _ in range(max_sweeps):
        if off(a) < max(tol, floor):
            return sorted(float(x) for x in np.diag(a))
        for pairs in rounds:
            p, q = pairs[:, 0], pairs[:, 1]
            apq = a[p, q]
            active = np.abs(apq) > 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(n)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            a = 0.5 * (a + a.T)
    if off(a) < max(tol, floor):
        return sorted(float(x) for x in np.diag(a))
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
