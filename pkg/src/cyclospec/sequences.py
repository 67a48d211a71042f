"""The path-determinant sequence L_n and cycle characteristic polynomials A_n.

Both live in the variable ``a = 2 - lambda``.  ``L_n`` is the determinant of the
n x n tridiagonal matrix with ``a`` on the diagonal and -1 beside it; ``A_n`` is
the determinant of the corresponding cyclic (circulant) matrix.  Each ``check_*``
function verifies one polynomial identity between them by exact arithmetic and
returns a :class:`VerificationReport`.
"""

from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, NamedTuple, Optional

from .polyalg import ONE, X, ZERO, IntPoly, compose, divrem

TWO = IntPoly.constant(2)

# Coefficient rows ascending from the constant term, used by ``tables --check``.
REFERENCE_L_TABLE = {
    1: (0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (-1, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    3: (0, -2, 0, 1, 0, 0, 0, 0, 0, 0),
    4: (1, 0, -3, 0, 1, 0, 0, 0, 0, 0),
    5: (0, 3, 0, -4, 0, 1, 0, 0, 0, 0),
    6: (-1, 0, 6, 0, -5, 0, 1, 0, 0, 0),
    7: (0, -4, 0, 10, 0, -6, 0, 1, 0, 0),
    8: (1, 0, -10, 0, 15, 0, -7, 0, 1, 0),
    9: (0, 5, 0, -20, 0, 21, 0, -8, 0, 1),
}

REFERENCE_A_TABLE = {
    3: (-2, -3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    4: (0, 0, -4, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    5: (-2, 5, 0, -5, 0, 1, 0, 0, 0, 0, 0, 0),
    6: (-4, 0, 9, 0, -6, 0, 1, 0, 0, 0, 0, 0),
    7: (-2, -7, 0, 14, 0, -7, 0, 1, 0, 0, 0, 0),
    8: (0, 0, -16, 0, 20, 0, -8, 0, 1, 0, 0, 0),
    9: (-2, 9, 0, -30, 0, 27, 0, -9, 0, 1, 0, 0),
    10: (-4, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1, 0),
    11: (-2, -11, 0, 55, 0, -77, 0, 44, 0, -11, 0, 1),
}


class SequenceCache:
    """Memoized L_n (n >= -1) and A_n (n >= 1).

    Extension is guarded by a lock, so one cache may be shared by a thread
    pool running a sweep.  Cached values are never replaced.
    """

    def __init__(self):
        self._L = [ZERO, ONE]  # L_{-1}, L_0
        self._A = {}
        self._A3 = [None, X - TWO, X * X - 4]  # three-term route, A_1 and A_2 seeded
        self._lock = threading.Lock()

    def L(self, n):
        if n < -1:
            raise IndexError(f"L_n is defined for n >= -1, got {n}")
        if n + 1 >= len(self._L):
            with self._lock:
                seq = self._L
                while len(seq) <= n + 1:
                    seq.append(X * seq[-1] - seq[-2])
        return self._L[n + 1]

    def A(self, n):
        if n < 1:
            raise IndexError(f"A_n is defined for n >= 1, got {n}")
        try:
            return self._A[n]
        except KeyError:
            pass
        value = X * self.L(n - 1) - 2 * self.L(n - 2) - TWO
        with self._lock:
            return self._A.setdefault(n, value)

    def A_three_term(self, n):
        if n < 1:
            raise IndexError(f"A_n is defined for n >= 1, got {n}")
        if n >= len(self._A3):
            with self._lock:
                seq = self._A3
                twice_a1 = 2 * seq[1]
                while len(seq) <= n:
                    seq.append(X * seq[-1] - seq[-2] + twice_a1)
        return self._A3[n]


_default_cache = SequenceCache()


def default_cache():
    return _default_cache


def L(n, cache=None):
    """L_n with L_{-1} = 0, L_0 = 1 and L_n = a*L_{n-1} - L_{n-2}."""
    return (cache or _default_cache).L(n)


def A(n, cache=None):
    """A_n = a*L_{n-1} - 2*L_{n-2} - 2 for n >= 1."""
    return (cache or _default_cache).A(n)


def A_via_three_term(n, cache=None):
    """A_n built only from A_1 = a - 2, A_2 = a^2 - 4 and
    A_n = a*A_{n-1} - A_{n-2} + 2*A_1."""
    return (cache or _default_cache).A_three_term(n)


class Counterexample(NamedTuple):
    parameters: tuple
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    parameters: tuple
    passed: bool
    counterexample: Optional[Counterexample] = None
    notes: tuple = field(default=())

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a report passes exactly when it has no counterexample")


def _report(identity_id, params, comparisons, notes=()):
    for lhs, rhs in comparisons:
        if lhs != rhs:
            return VerificationReport(
                identity_id, (params,), False, Counterexample(params, lhs, rhs), tuple(notes)
            )
    return VerificationReport(identity_id, (params,), True, None, tuple(notes))


def _require(cond, message):
    if not cond:
        raise ValueError(message)


def merge_reports(identity_id, reports):
    """Fold per-tuple reports into one, keeping the first counterexample."""
    params, notes = [], []
    failure = None
    for r in reports:
        params.extend(r.parameters)
        notes.extend(r.notes)
        if failure is None and not r.passed:
            failure = r.counterexample
    return VerificationReport(identity_id, tuple(params), failure is None, failure, tuple(notes))


def thread_count():
    try:
        return max(1, int(os.environ.get("CYCLOSPEC_THREADS", "1")))
    except ValueError:
        return 1


def sweep(identity_id, check: Callable[..., VerificationReport], param_tuples: Iterable[tuple], threads=None):
    """Run ``check(*params)`` for every tuple; output order follows the input order."""
    param_tuples = list(param_tuples)
    threads = threads or thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda t: check(*t), param_tuples))
    else:
        reports = [check(*t) for t in param_tuples]
    return merge_reports(identity_id, reports)


def check_L_product(n, k, cache=None):
    _require(1 <= k <= n, f"need 1 <= k <= n, got n={n}, k={k}")
    c = cache or _default_cache
    lhs = c.L(n)
    rhs = c.L(n - k) * c.L(k) - c.L(n - k - 1) * c.L(k - 1)
    return _report("L-product", (n, k), [(lhs, rhs)])


def check_L_square(n, cache=None):
    """L_{n-1}^2 = L_{n-2} L_n + 1 together with
    L_{n-1}^2 + L_{n-2}^2 - 1 = a L_{n-1} L_{n-2}."""
    _require(n >= 2, f"need n >= 2, got {n}")
    c = cache or _default_cache
    l0, l1, l2 = c.L(n - 2), c.L(n - 1), c.L(n)
    sq = l1 * l1
    return _report(
        "L-square",
        (n,),
        [(sq, l0 * l2 + 1), (sq + l0 * l0 - 1, X * l1 * l0)],
    )


def check_three_term(n, cache=None):
    """A_n from the defining formula, the three-term recurrence and L_n - L_{n-2} - 2 agree."""
    _require(n >= 1, f"need n >= 1, got {n}")
    c = cache or _default_cache
    a = c.A(n)
    return _report(
        "three-term",
        (n,),
        [(a, c.A_three_term(n)), (a, c.L(n) - c.L(n - 2) - TWO)],
    )


def check_doubling(n, cache=None):
    _require(n >= 1, f"need n >= 1, got {n}")
    c = cache or _default_cache
    an = c.A(n)
    return _report("doubling", (n,), [(c.A(2 * n), an * (an + 4))])


def check_divisibility(n, k, cache=None):
    """A_n divides A_{kn}; for k >= 2 also
    A_{kn} = (A_n + 2) A_{(k-1)n} + 2 A_n - A_{(k-2)n}."""
    _require(n >= 1 and k >= 1, f"need n, k >= 1, got n={n}, k={k}")
    c = cache or _default_cache
    an = c.A(n)
    _, rem = divrem(c.A(k * n), an)
    comparisons = [(rem, ZERO)]
    if k >= 2:
        # A_0 would be the zero polynomial, which makes k = 2 the doubling law
        prev2 = c.A((k - 2) * n) if k >= 3 else ZERO
        step = (an + 2) * c.A((k - 1) * n) + 2 * an - prev2
        comparisons.append((c.A(k * n), step))
    return _report("divisibility", (n, k), comparisons)


def check_addition(n, p, cache=None):
    """A_{n+p} = A_n (A_p + 2) + 2 A_p - A_{n-p} for 1 <= p < n."""
    _require(1 <= p < n, f"need 1 <= p < n, got n={n}, p={p}")
    c = cache or _default_cache
    ap = c.A(p)
    rhs = c.A(n) * (ap + 2) + 2 * ap - c.A(n - p)
    return _report("addition", (n, p), [(c.A(n + p), rhs)])


def check_shifted_addition(k, n, p, cache=None):
    """A_{kn+p} = (A_p + 2) A_{kn} + 2 A_p - A_{kn-p}."""
    _require(
        k >= 1 and n >= 2 and 1 <= p < n and k * n - p >= 1,
        f"need k >= 1, n >= 2, 1 <= p < n, got k={k}, n={n}, p={p}",
    )
    c = cache or _default_cache
    ap = c.A(p)
    kn = k * n
    rhs = (ap + 2) * c.A(kn) + 2 * ap - c.A(kn - p)
    return _report("shifted-addition", (k, n, p), [(c.A(kn + p), rhs)])


def check_composition(k, n, cache=None):
    """A_{kn} = A_k(A_n + 2)."""
    _require(k >= 1 and n >= 1, f"need k, n >= 1, got k={k}, n={n}")
    c = cache or _default_cache
    return _report("composition", (k, n), [(c.A(k * n), compose(c.A(k), c.A(n) + 2))])


def coefficient_table(which, max_n, cache=None):
    """Rows ``(label, coefficients)`` for L_1..L_max (or A_3..A_max).

    Coefficients ascend from the constant term and are zero padded to
    ``max_n + 1`` columns.
    """
    c = cache or _default_cache
    if which == "L":
        _require(max_n >= 1, f"L table needs max_n >= 1, got {max_n}")
        start, fn = 1, c.L
    elif which == "A":
        _require(max_n >= 3, f"A table needs max_n >= 3, got {max_n}")
        start, fn = 3, c.A
    else:
        raise ValueError(f"unknown table {which!r}; expected 'L' or 'A'")
    width = max_n + 1
    rows = []
    for n in range(start, max_n + 1):
        coeffs = fn(n).coeffs
        rows.append((f"{which}_{n}", tuple(coeffs) + (0,) * (width - len(coeffs))))
    return rows


def format_table(rows):
    """Tab separated rows: label then ascending coefficients."""
    return "\n".join("\t".join([label, *map(str, coeffs)]) for label, coeffs in rows)


def table_mismatches(which, rows):
    """Cells differing from the reference table; only reference rows are compared."""
    reference = REFERENCE_L_TABLE if which == "L" else REFERENCE_A_TABLE
    by_n = {int(label.split("_")[1]): coeffs for label, coeffs in rows}
    bad = []
    for n, expected in reference.items():
        got = by_n.get(n)
        if got is None:
            bad.append((n, None, expected))
            continue
        padded = tuple(got) + (0,) * max(0, len(expected) - len(got))
        if padded[: len(expected)] != expected or any(padded[len(expected):]):
            bad.append((n, tuple(got), expected))
    return bad
