import math
from fractions import Fraction

import numpy as np
import pytest

from cyclospec.cayley import GeneratorSet, GroupSpec, cayley_graph, complete_graph, cycle_graph, laplacian_of
from cyclospec.oracle import eig_numeric
from cyclospec.polyalg import squarefree_decomposition
from cyclospec.sequences import A
from cyclospec.spectra import (
    SpectrumMultiset,
    check_complement_example,
    check_gcd_theorem,
    check_iff_corollary,
    check_interval,
    check_lambda2_lambda4,
    check_spectral_map_closure,
    check_subgroup_closure,
    compare_group_spectra,
    complement_spectrum,
    cycle_multiset,
    cycle_spectrum,
    fold,
    graph_spectrum,
    map_rotation,
    multiplicity,
    polynomial_spectrum,
    spectral_map,
    spectrum_records,
)


def circulant_values(n):
    """Independent oracle: eigenvalues of the circulant [2, -1, 0, ..., 0, -1] via its DFT."""
    first_row = np.zeros(n)
    first_row[0] = 2
    first_row[1] -= 1
    first_row[-1] -= 1
    return sorted(np.fft.fft(first_row).real)


def test_cycle_spectrum_examples():
    assert cycle_spectrum(2).values() == [0.0, 2.0]
    assert cycle_spectrum(1).values() == [0.0]
    np.testing.assert_allclose(cycle_spectrum(4).values(), [0, 2, 2, 4], atol=1e-12)
    np.testing.assert_allclose(cycle_spectrum(6).values(), [0, 1, 1, 3, 3, 4], atol=1e-12)
    with pytest.raises(ValueError):
        cycle_spectrum(0)


@pytest.mark.parametrize("n", [3, 4, 5, 10, 17, 40])
def test_cycle_spectrum_matches_dft(n):
    np.testing.assert_allclose(cycle_spectrum(n).values(), circulant_values(n), atol=1e-12)


def test_cycle_spectrum_invariants():
    for n in range(3, 50):
        spec = cycle_spectrum(n)
        assert len(spec.entries) == n
        for e in spec.entries:
            assert 0 <= e.value <= 4
            mirror = spec.entries[(n - e.k) % n]
            assert e.value == pytest.approx(mirror.value, abs=1e-12)
            assert fold(e.rotation) == fold(mirror.rotation)
        assert spec.entries[0].value == 0
        if n % 2 == 0:
            assert spec.entries[n // 2].value == 4


def test_multiplicity_examples():
    assert multiplicity(4, Fraction(1, 4)) == 2
    assert multiplicity(6, Fraction(1, 2)) == 1
    assert multiplicity(6, Fraction(1, 4)) == 0
    assert multiplicity(9, Fraction(0)) == 1
    assert multiplicity(9, Fraction(2, 9)) == 2
    assert multiplicity(9, Fraction(7, 9)) == 2
    with pytest.raises(ValueError):
        multiplicity(2, Fraction(0))


def test_spectral_map_examples():
    assert [spectral_map(2, lam) for lam in range(5)] == [0, 3, 4, 3, 0]
    for lam in (0, 1.5, Fraction(7, 3)):
        assert spectral_map(1, lam) == lam
    assert map_rotation(3, Fraction(1, 3)) == 0
    assert spectral_map(3, 3) == 0


def test_spectral_map_agrees_with_rotation_map():
    # the polynomial map and the rotation map agree through 2 - 2 cos(2 pi x)
    for m in range(1, 12):
        for x in [Fraction(j, 17) for j in range(17)]:
            lam = 2 - 2 * math.cos(2 * math.pi * x)
            image = map_rotation(m, x)
            assert spectral_map(m, lam) == pytest.approx(2 - 2 * math.cos(2 * math.pi * image), abs=1e-9)


def test_subgroup_closure_examples():
    assert check_subgroup_closure(3, 2).passed
    assert check_subgroup_closure(4, 3).passed
    assert check_subgroup_closure(7, 1).passed
    counts = cycle_spectrum(12).rotations()
    assert counts[Fraction(1, 4)] == 2


def test_gcd_examples():
    for n, m in [(4, 6), (6, 9), (5, 7)]:
        assert check_gcd_theorem(n, m).passed
    shared = set(cycle_spectrum(6).rotations()) & set(cycle_spectrum(9).rotations())
    assert shared == {Fraction(0), Fraction(1, 3)}
    shared = set(cycle_spectrum(5).rotations()) & set(cycle_spectrum(7).rotations())
    assert shared == {Fraction(0)}


def test_gcd_uses_formal_roots_for_small_gcd():
    # 4 is shared by Z_4 and Z_6 but is not in the true spectrum {0, 2} of Z_2;
    # it is a root of A_2 = a^2 - 4 (a = -2).
    shared = set(cycle_spectrum(4).rotations()) & set(cycle_spectrum(6).rotations())
    assert Fraction(1, 2) in shared
    assert Fraction(1, 2) not in cycle_spectrum(2).rotations()


def test_lambda24_examples():
    assert check_lambda2_lambda4(8).passed
    assert check_lambda2_lambda4(10).passed
    assert check_lambda2_lambda4(2).passed
    assert cycle_spectrum(2).rotations()[Fraction(1, 4)] == 1
    with pytest.raises(ValueError):
        check_lambda2_lambda4(1)


def test_interval_examples():
    for n in (1, 2, 3, 100):
        assert check_interval(n).passed


def test_spectral_map_closure_examples():
    assert check_spectral_map_closure(3, 2).passed
    assert check_spectral_map_closure(6, 5).passed
    assert check_spectral_map_closure(9, 1).passed


def test_iff_examples():
    assert check_iff_corollary(3, 2).passed
    assert check_iff_corollary(5, 1).passed
    # lambda = 1 in spec(Z6), P_2(1) = 3 in spec(Z3)
    assert spectral_map(2, 1) == 3
    # lambda = 2 not in spec(Z6), P_2(2) = 4 not in spec(Z3)
    assert Fraction(1, 4) not in cycle_spectrum(6).rotations()
    assert spectral_map(2, 2) == 4
    assert Fraction(1, 2) not in cycle_spectrum(3).rotations()


def test_range_errors():
    for check, args in [
        (check_subgroup_closure, (2, 1)),
        (check_gcd_theorem, (2, 5)),
        (check_interval, (0,)),
        (check_spectral_map_closure, (3, 0)),
        (check_iff_corollary, (2, 2)),
    ]:
        with pytest.raises(ValueError):
            check(*args)


def test_multiset_merge():
    s = SpectrumMultiset.from_values([1.0, 0.0, 1.0 + 1e-12, 3.0])
    assert s.entries == ((0.0, 1), (1.0, 2), (3.0, 1))
    assert s.vertex_count == 4
    assert s.contains(1.0) and not s.contains(2.0)


def test_complement_spectrum_examples():
    s6 = cycle_multiset(6)
    np.testing.assert_allclose(complement_spectrum(s6, 6).expanded(), [0, 2, 3, 3, 5, 5], atol=1e-9)
    k2 = graph_spectrum(complete_graph(2))
    assert complement_spectrum(k2, 2).entries == ((0.0, 2),)
    # edgeless graph on 4 vertices: its complement is K_4 with spectrum {0, 4, 4, 4}
    empty = SpectrumMultiset.from_values([0.0] * 4)
    assert complement_spectrum(empty, 4).entries == ((0.0, 1), (4.0, 3))
    with pytest.raises(ValueError):
        complement_spectrum(SpectrumMultiset.from_values([1.0, 2.0]), 2)
    with pytest.raises(ValueError):
        complement_spectrum(s6, 5)


def test_compare_examples():
    z6 = (GroupSpec((6,)), GroupSpec((6,)).default_generators())
    prism = (GroupSpec((2, 3)), GroupSpec((2, 3)).default_generators())
    r = compare_group_spectra(z6, prism)
    assert not r.equal and r.witness == pytest.approx(2.0)
    assert set(np.round(r.witnesses, 9)) == {1.0, 2.0, 4.0, 5.0}
    z4 = (GroupSpec((4,)), GeneratorSet({(1,)}))
    klein = (GroupSpec((2, 2)), GroupSpec((2, 2)).default_generators())
    assert compare_group_spectra(z4, klein).equal
    assert compare_group_spectra(z6, z6).equal
    assert compare_group_spectra(z6, z6).witness is None
    with pytest.raises(ValueError):
        compare_group_spectra(z6, z4)


def test_complement_example_report():
    assert check_complement_example().passed


def test_polynomial_roots_reproduce_spectrum():
    for n in range(3, 33):
        np.testing.assert_allclose(polynomial_spectrum(n), cycle_spectrum(n).values(), atol=1e-6)


def test_multiplicity_of_lambda2_from_algebra():
    for n in range(3, 33):
        factors = squarefree_decomposition(A(n))
        a_mult = sum(m for f, m in factors if f.coeffs[0] == 0)
        assert a_mult == multiplicity(n, Fraction(1, 4))


def test_zero_multiplicity_one_for_connected():
    for orders, gens in [((7,), None), ((2, 3), None), ((8,), [(3,)]), ((4, 4), None)]:
        s = graph_spectrum(cayley_graph(GroupSpec(orders), gens))
        assert s.multiplicity_of(0.0) == 1


def test_numeric_agreement_with_jacobi():
    for n in range(1, 25):
        ev = eig_numeric(laplacian_of(cycle_graph(n)))
        np.testing.assert_allclose(ev, cycle_spectrum(n).values(), atol=1e-9)


def test_spectrum_records():
    recs = spectrum_records(6)
    assert [(r["rotation"], r["multiplicity"]) for r in recs] == [("0/1", 1), ("1/6", 2), ("1/3", 2), ("1/2", 1)]
    assert recs[-1]["lambda"] == 4.0
