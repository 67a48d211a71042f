"""Spectra of cycle Laplacians and the theorems relating them.

An eigenvalue of a cycle is stored exactly as a rotation ``x`` (a reduced
fraction) with value ``2 - 2*cos(2*pi*x)``.  Rotations ``x`` and ``1 - x``
give the same eigenvalue, so comparisons use the folded form in [0, 1/2].
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

import numpy as np

from . import sequences
from .cayley import GroupSpec, cayley_graph, complement, cycle_graph, isomorphic_small, laplacian_of
from .oracle import eig_numeric
from .polyalg import evaluate, root_multiplicity, squarefree_decomposition
from .sequences import VerificationReport, _report, _require

NUMERIC_TOL = 1e-9

ZERO_ROT = Fraction(0)
QUARTER = Fraction(1, 4)  # lambda = 2
HALF = Fraction(1, 2)     # lambda = 4


def fold(x):
    """Canonical rotation in [0, 1/2] for the class of ``x`` modulo 1 and sign."""
    x = Fraction(x) % 1
    return min(x, 1 - x)


def rotation_value(x):
    return 2.0 - 2.0 * math.cos(2.0 * math.pi * float(x))


class SpectrumEntry(NamedTuple):
    k: int
    rotation: Fraction
    value: float


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    entries: tuple

    def rotations(self):
        """Multiset of folded rotations."""
        return Counter(fold(e.rotation) for e in self.entries)

    def values(self):
        return sorted(e.value for e in self.entries)

    def grouped(self):
        """``[(folded rotation, value, multiplicity)]`` ascending by value."""
        counts = self.rotations()
        return [(r, rotation_value(r), counts[r]) for r in sorted(counts)]


def cycle_spectrum(n):
    """Spectrum of the Cayley graph of Z_n with generator 1.

    For n >= 3 entry k has rotation k/n.  Z_1 is a single vertex ({0}) and Z_2
    a single edge ({0, 2}); the lambda = 2 eigenvalue of Z_2 is encoded by its
    rotation 1/4.
    """
    _require(n >= 1, f"need n >= 1, got {n}")
    if n == 1:
        return CycleSpectrum(1, (SpectrumEntry(0, ZERO_ROT, 0.0),))
    if n == 2:
        return CycleSpectrum(2, (SpectrumEntry(0, ZERO_ROT, 0.0), SpectrumEntry(1, QUARTER, 2.0)))
    entries = tuple(
        SpectrumEntry(k, Fraction(k, n), rotation_value(Fraction(k, n))) for k in range(n)
    )
    return CycleSpectrum(n, entries)


def multiplicity(n, rotation):
    """Number of k in [0, n) with k/n equivalent to ``rotation``."""
    _require(n >= 3, f"need n >= 3, got {n}")
    target = fold(rotation)
    return sum(1 for k in range(n) if fold(Fraction(k, n)) == target)


def spectral_map(m, lam):
    """The polynomial map lambda -> -A_m(2 - lambda); exact for ints/Fractions."""
    _require(m >= 1, f"need m >= 1, got {m}")
    return -evaluate(sequences.A(m), 2 - lam)


def map_rotation(m, x):
    """Rotation-level form of ``spectral_map``: x -> m*x mod 1, folded."""
    _require(m >= 1, f"need m >= 1, got {m}")
    return fold(m * Fraction(x))


def formal_root_rotations(d):
    """Folded rotations of the roots of A_d under lambda = 2 - a (roots j/d).

    Differs from the true spectrum only for d = 2, where A_2 = a^2 - 4 gives
    {0, 4} instead of {0, 2}.
    """
    return {fold(Fraction(j, d)) for j in range(d)}


def check_subgroup_closure(n, k):
    """Every eigenvalue of Z_n is an eigenvalue of Z_kn with the same multiplicity."""
    _require(n >= 3 and k >= 1, f"need n >= 3, k >= 1, got n={n}, k={k}")
    small = cycle_spectrum(n).rotations()
    big = cycle_spectrum(k * n).rotations()
    comparisons = [((r, small[r]), (r, big[r])) for r in sorted(small)]
    return _report("subgroup", (n, k), comparisons)


def check_gcd_theorem(n, m):
    """Shared eigenvalues of Z_n and Z_m other than 2 are roots of A_gcd(n,m).

    For gcd >= 3 that is the spectrum of Z_gcd; for gcd <= 2 the formal root
    set of A_1 / A_2 is used (see ``formal_root_rotations``).
    """
    _require(n >= 3 and m >= 3, f"need n, m >= 3, got n={n}, m={m}")
    d = gcd(n, m)
    sn, sm = set(cycle_spectrum(n).rotations()), set(cycle_spectrum(m).rotations())
    shared = sn & sm
    target = set(cycle_spectrum(d).rotations()) if d >= 3 else formal_root_rotations(d)
    comparisons = [((r, r in target), (r, True)) for r in sorted(shared - {QUARTER})]
    notes = []
    if QUARTER in shared and QUARTER not in target:
        notes.append(f"lambda=2 shared by Z_{n} and Z_{m} but absent from gcd {d}")
    return _report("gcd", (n, m), comparisons, notes)


def check_lambda2_lambda4(n):
    """4 in spec(Z_n) iff n even and n >= 4 (multiplicity 1); 2 in spec(Z_n) iff
    4 | n (multiplicity 2) or n = 2 (multiplicity 1).  For n >= 3 the exact
    root multiplicities of A_n at a = 0 and a = -2 are checked as well."""
    _require(n >= 2, f"need n >= 2, got {n}")
    counts = cycle_spectrum(n).rotations()
    want4 = 1 if (n % 2 == 0 and n >= 4) else 0
    want2 = 2 if n % 4 == 0 else (1 if n == 2 else 0)
    comparisons = [(("lambda=4", counts[HALF]), ("lambda=4", want4)),
                   (("lambda=2", counts[QUARTER]), ("lambda=2", want2))]
    if n >= 3:
        an = sequences.A(n)
        comparisons.append((("a=-2", root_multiplicity(an, -2)), ("a=-2", want4)))
        comparisons.append((("a=0", root_multiplicity(an, 0)), ("a=0", want2)))
    return _report("lambda24", (n,), comparisons)


def check_interval(n):
    """Every eigenvalue of Z_n lies in [0, 4]: folded rotation in [0, 1/2], value in [0, 4]."""
    _require(n >= 1, f"need n >= 1, got {n}")
    comparisons = []
    for e in cycle_spectrum(n).entries:
        r = fold(e.rotation)
        comparisons.append(((e.k, ZERO_ROT <= r <= HALF and 0.0 <= e.value <= 4.0), (e.k, True)))
        # the value of P_2(lambda) = lambda*(4 - lambda) is itself an eigenvalue, hence >= 0
        p2 = spectral_map(2, Fraction(e.value))
        comparisons.append(((e.k, p2 >= -NUMERIC_TOL), (e.k, True)))
    return _report("interval", (n,), comparisons)


def _near(value, values, tol=NUMERIC_TOL):
    return any(abs(value - v) <= tol for v in values)


def check_spectral_map_closure(n, m):
    """P_m maps spec(Z_n) into spec(Z_n): exactly on rotations and numerically at 1e-9."""
    _require(n >= 3 and m >= 1, f"need n >= 3, m >= 1, got n={n}, m={m}")
    spec = cycle_spectrum(n)
    rots = set(spec.rotations())
    values = spec.values()
    comparisons = []
    for e in spec.entries:
        image = map_rotation(m, e.rotation)
        comparisons.append(((e.k, image in rots), (e.k, True)))
        comparisons.append(((e.k, _near(spectral_map(m, e.value), values)), (e.k, True)))
    return _report("spectral-map", (n, m), comparisons)


def check_iff_corollary(n, k):
    """x in spec(Z_kn) iff P_k(x) in spec(Z_n), over all rotations j/(4kn).

    The quantification domain is four times finer than Z_kn so the reverse
    direction meets genuine non-eigenvalues (e.g. lambda = 2 for odd kn).
    """
    _require(n >= 3 and k >= 1, f"need n >= 3, k >= 1, got n={n}, k={k}")
    big = set(cycle_spectrum(k * n).rotations())
    small = set(cycle_spectrum(n).rotations())
    small_values = cycle_spectrum(n).values()
    denom = 4 * k * n
    comparisons = []
    for j in range(denom // 2 + 1):
        x = Fraction(j, denom)
        image = map_rotation(k, x)
        comparisons.append(((x, x in big), (x, image in small)))
        # float realization of the image agrees with the polynomial map
        mapped = spectral_map(k, rotation_value(x))
        comparisons.append(((x, abs(mapped - rotation_value(image)) <= NUMERIC_TOL), (x, True)))
        if image in small:
            comparisons.append(((x, _near(mapped, small_values)), (x, True)))
    return _report("iff", (n, k), comparisons)


@dataclass(frozen=True)
class SpectrumMultiset:
    entries: tuple  # ((value, multiplicity), ...) ascending

    @classmethod
    def from_values(cls, values, tol=NUMERIC_TOL):
        """Merge sorted values closer than ``tol`` into one entry."""
        merged = []
        for v in sorted(float(x) for x in values):
            if merged and abs(v - merged[-1][0]) <= tol:
                val, mult = merged[-1]
                merged[-1] = (val, mult + 1)
            else:
                merged.append((v, 1))
        return cls(tuple(merged))

    @property
    def vertex_count(self):
        return sum(m for _, m in self.entries)

    def values(self):
        return [v for v, _ in self.entries]

    def expanded(self):
        return [v for v, m in self.entries for _ in range(m)]

    def multiplicity_of(self, value, tol=NUMERIC_TOL):
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def contains(self, value, tol=NUMERIC_TOL):
        return self.multiplicity_of(value, tol) > 0

    def matches(self, other, tol=NUMERIC_TOL):
        a, b = self.expanded(), other.expanded()
        return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def graph_spectrum(graph):
    return SpectrumMultiset.from_values(eig_numeric(laplacian_of(graph)))


def group_spectrum(group, gens=None):
    return graph_spectrum(cayley_graph(group, gens))


def complement_spectrum(s, n):
    """Laplacian spectrum of the complement of an n-vertex graph with spectrum ``s``.

    One zero stays zero and every other eigenvalue (including further zeros)
    maps to n - lambda.
    """
    if s.vertex_count != n:
        raise ValueError(f"spectrum has {s.vertex_count} eigenvalues, expected {n}")
    values = s.expanded()
    zeros = [v for v in values if abs(v) <= NUMERIC_TOL]
    if not zeros:
        raise ValueError("a Laplacian spectrum always contains 0")
    rest = list(values)
    rest.remove(zeros[0])
    return SpectrumMultiset.from_values([0.0] + [n - v for v in rest])


@dataclass(frozen=True)
class SpectrumComparison:
    equal: bool
    spectrum1: SpectrumMultiset
    spectrum2: SpectrumMultiset
    witnesses: tuple  # values whose multiplicities differ, ascending

    @property
    def witness(self) -> Optional[float]:
        """A value occurring in exactly one spectrum, preferring one missing from the first."""
        only2 = [w for w in self.witnesses if not self.spectrum1.contains(w) and self.spectrum2.contains(w)]
        only1 = [w for w in self.witnesses if self.spectrum1.contains(w) and not self.spectrum2.contains(w)]
        for group in (only2, only1, list(self.witnesses)):
            if group:
                return group[0]
        return None


def compare_spectra(s1, s2, tol=NUMERIC_TOL):
    candidates = SpectrumMultiset.from_values(s1.values() + s2.values(), tol).values()
    witnesses = tuple(
        v for v in candidates if s1.multiplicity_of(v, tol) != s2.multiplicity_of(v, tol)
    )
    return SpectrumComparison(s1.matches(s2, tol) and not witnesses, s1, s2, witnesses)


def compare_group_spectra(g1, g2):
    """Compare Laplacian spectra of two Cayley graphs given as ``(GroupSpec, GeneratorSet)``."""
    (grp1, gens1), (grp2, gens2) = g1, g2
    if grp1.size != grp2.size:
        raise ValueError(f"group orders differ: {grp1.size} vs {grp2.size}")
    return compare_spectra(group_spectrum(grp1, gens1), group_spectrum(grp2, gens2))


def cycle_multiset(n):
    return SpectrumMultiset.from_values(cycle_spectrum(n).values())


def check_complement_example():
    """Z_2 x Z_3 has eigenvalue 2, Z_6 does not, and the former is the complement spectrum of the latter."""
    z6 = GroupSpec((6,))
    prism = GroupSpec((2, 3))
    s6 = group_spectrum(z6)
    sp = group_spectrum(prism)
    cmp_ = compare_group_spectra((z6, z6.default_generators()), (prism, prism.default_generators()))
    comparisons = [
        (("2 in spec(Z2xZ3)", sp.contains(2.0)), ("2 in spec(Z2xZ3)", True)),
        (("2 in spec(Z6)", s6.contains(2.0)), ("2 in spec(Z6)", False)),
        (("complement rule", complement_spectrum(s6, 6).matches(sp)), ("complement rule", True)),
        (("witness", cmp_.witness is not None and abs(cmp_.witness - 2.0) <= NUMERIC_TOL), ("witness", True)),
        (("isomorphic to complement", isomorphic_small(complement(cycle_graph(6)), cayley_graph(prism))),
         ("isomorphic to complement", True)),
    ]
    return _report("complement-example", (), comparisons)


def polynomial_spectrum(n):
    """Numeric eigenvalues of Z_n from the roots of A_n (lambda = 2 - a), ascending.

    Roots are taken per square-free factor so repeated roots are not smeared,
    then polished by Newton steps on that factor.
    """
    _require(n >= 1, f"need n >= 1, got {n}")
    values = []
    for factor, mult in squarefree_decomposition(sequences.A(n)):
        coeffs = [float(c) for c in factor.coeffs]
        if factor.degree == 1:
            roots = [-coeffs[0] / coeffs[1]]
        else:
            roots = np.roots(coeffs[::-1])
        dfactor = [i * c for i, c in enumerate(coeffs)][1:]
        for r in roots:
            r = float(np.real(r))
            for _ in range(3):
                d = evaluate_float(dfactor, r)
                if d == 0.0:
                    break
                r -= evaluate_float(coeffs, r) / d
            values.extend([2.0 - r] * mult)
    return sorted(values)


def evaluate_float(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def spectrum_records(n):
    """JSON-ready rows ``{rotation, lambda, multiplicity}`` for Z_n."""
    return [
        {"rotation": f"{r.numerator}/{r.denominator}", "lambda": value, "multiplicity": mult}
        for r, value, mult in cycle_spectrum(n).grouped()
    ]


def multiset_records(s):
    return [{"rotation": None, "lambda": v, "multiplicity": m} for v, m in s.entries]


__all__ = [
    "CycleSpectrum", "SpectrumEntry", "SpectrumMultiset", "SpectrumComparison",
    "cycle_spectrum", "multiplicity", "spectral_map", "map_rotation", "fold",
    "check_subgroup_closure", "check_gcd_theorem", "check_lambda2_lambda4",
    "check_interval", "check_spectral_map_closure", "check_iff_corollary",
    "check_complement_example", "complement_spectrum", "compare_group_spectra",
    "compare_spectra", "group_spectrum", "graph_spectrum", "polynomial_spectrum",
    "VerificationReport",
]
