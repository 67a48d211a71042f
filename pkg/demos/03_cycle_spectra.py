"""Explore cycle spectra through rotation indices k/n and the polynomial maps between them."""

from fractions import Fraction

from cyclospec.spectra import (
    check_gcd_theorem,
    cycle_spectrum,
    map_rotation,
    multiplicity,
    spectral_map,
)

# %% A rotation x stands for the eigenvalue 2 - 2cos(2 pi x); x and 1 - x give the same value.
spec = cycle_spectrum(12)
for rotation, count in sorted(spec.rotations().items()):
    print(f"rotation {rotation}: multiplicity {count}")

# %% lambda = 2 (rotation 1/4) occurs exactly when 4 divides n, and then twice.
print({n: multiplicity(n, Fraction(1, 4)) for n in range(3, 17)})

# %% Z_6 and Z_9 share exactly the spectrum of Z_3.
shared = set(cycle_spectrum(6).rotations()) & set(cycle_spectrum(9).rotations())
print("shared rotations of Z_6 and Z_9:", [str(x) for x in sorted(shared)])
print("gcd check:", check_gcd_theorem(6, 9).passed)

# %% P_m(lambda) = -A_m(2 - lambda) multiplies rotations by m, so it sends spec(Z_n) into itself.
for x in sorted(cycle_spectrum(10).rotations()):
    print(f"{x} -> {map_rotation(3, x)}")
print("P_2 on 0..4:", [spectral_map(2, lam) for lam in range(5)])
