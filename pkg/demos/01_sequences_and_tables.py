"""Walk through the path-determinant and cycle polynomials, then print their coefficient tables."""

from cyclospec import A, L
from cyclospec.polyalg import evaluate
from cyclospec.sequences import check_doubling, coefficient_table, format_table, table_mismatches

# %% The path sequence L_n obeys L_n = a L_{n-1} - L_{n-2} with L_{-1} = 0 and L_0 = 1.
for n in range(0, 6):
    print(f"L_{n} = {L(n).format()}")

# %% The cycle polynomial A_n is det(aI - adjacency) for the n-cycle, in the variable a = 2 - lambda.
for n in range(1, 7):
    print(f"A_{n} = {A(n).format()}")

# Every A_n vanishes at a = 2, because lambda = 0 is always a Laplacian eigenvalue.
print("A_n(2) for n = 1..10:", [evaluate(A(n), 2) for n in range(1, 11)])

# %% Identities hold as exact polynomial equalities.
report = check_doubling(7)
print("A_14 == A_7 (A_7 + 4):", report.passed)

# %% Coefficient tables, constant term first.
rows = coefficient_table("A", 11)
print(format_table(rows))
print("mismatches against the reference table:", table_mismatches("A", rows))
