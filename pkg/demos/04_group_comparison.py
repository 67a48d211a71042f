"""Compare Cayley graphs of cyclic groups with those of products of smaller cyclic groups."""

import numpy as np

from cyclospec.cayley import cayley_graph, complement, cycle_graph, isomorphic_small, parse_group
from cyclospec.spectra import (
    complement_spectrum,
    compare_group_spectra,
    cycle_multiset,
    graph_spectrum,
)

# %% Z_6 against Z_2 x Z_3, each with the standard generators.
z6 = parse_group("Z6")
prism = parse_group("Z2xZ3")
result = compare_group_spectra(z6, prism)
print("equal spectra:", result.equal)
print("witness eigenvalue:", result.witness)

# The product graph is the triangular prism, which is the complement of the hexagon.
hexagon = cycle_graph(6)
print("prism == complement(hexagon):", isomorphic_small(complement(hexagon), cayley_graph(*prism)))
print("complement rule:", np.round(complement_spectrum(cycle_multiset(6), 6).expanded(), 9) + 0.0)
print("prism spectrum: ", np.round(graph_spectrum(cayley_graph(*prism)).expanded(), 9) + 0.0)

# %% Z_4 and Z_2 x Z_2 both give the 4-cycle.
z4, klein = parse_group("Z4"), parse_group("Z2xZ2")
print("Z4 vs Z2xZ2 equal:", compare_group_spectra(z4, klein).equal)
print("isomorphic:", isomorphic_small(cayley_graph(*z4), cayley_graph(*klein)))
