"""Exact characteristic polynomials and spectra of Laplacians of cyclic-group Cayley graphs."""

from .cayley import (
    GeneratorSet,
    Graph,
    GroupSpec,
    IntMatrix,
    cayley_graph,
    complement,
    isomorphic_small,
    laplacian_of,
    parse_group,
)
from .oracle import CharPoly, charpoly_exact, eig_numeric
from .polyalg import (
    IntPoly,
    NonIntegerQuotientError,
    compose,
    derivative,
    divrem,
    evaluate,
    gcd_primitive,
    squarefree_decomposition,
)
from .sequences import A, L, A_via_three_term, SequenceCache, VerificationReport, coefficient_table
from .spectra import (
    CycleSpectrum,
    SpectrumMultiset,
    compare_group_spectra,
    complement_spectrum,
    cycle_spectrum,
    multiplicity,
    spectral_map,
)

__version__ = "0.1.0"
