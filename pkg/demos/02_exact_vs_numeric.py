"""Compare the recurrence polynomial with an exact determinant, then with a Jacobi eigensolver."""

import numpy as np

from cyclospec import A
from cyclospec.cayley import cycle_graph, laplacian_of
from cyclospec.oracle import charpoly_exact, eig_numeric
from cyclospec.spectra import cycle_spectrum, polynomial_spectrum

# %% Fraction-free determinant + interpolation gives det(L - lambda I) exactly.
lap = laplacian_of(cycle_graph(8))
print(np.array(lap.entries))
cp = charpoly_exact(lap)
print("in lambda:", cp.in_lambda.format("lambda"))
print("in a:     ", cp.in_a.format())
print("equals A_8:", cp.in_a == A(8))

# %% Numeric eigenvalues from the cyclic Jacobi method versus the closed form 2 - 2cos(2 pi k / n).
errors = []
for n in range(3, 41):
    jac = np.array(eig_numeric(laplacian_of(cycle_graph(n))))
    errors.append(np.max(np.abs(jac - cycle_spectrum(n).values())))
print(f"max |Jacobi - exact| over n = 3..40: {max(errors):.2e}")

# %% Roots of A_n mapped back through lambda = 2 - a land on the same values.
roots = polynomial_spectrum(12)
print("roots of A_12 as lambda:", np.round(roots, 6))
print("exact spectrum of Z_12:   ", np.round(cycle_spectrum(12).values(), 6))
