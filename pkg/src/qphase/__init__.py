"""Discrete quantum phase space for odd-dimensional Hilbert spaces.

Schwinger clock/shift operators, the phase-point operator basis, operator
representatives, discrete Wigner functions, and the Cartesian and angular
continuum limits.
"""
from .basis import BasisSet, build_all, build_g, kernel_table, triple_product_kernel
from .mapping import (
    commutator_representative,
    map_operator,
    product_representative,
    reconstruct,
    symbol,
    trace_pair,
)
from .schwinger import (
    Dimension,
    build_u,
    build_v,
    finite_fourier,
    labels,
    mod_delta,
    modular_phase,
)
from .wigner import (
    characteristic_grid,
    marginals,
    purity_sum,
    support_count,
    wigner_density,
    wigner_fast,
    wigner_pure,
)

__version__ = "0.1.0"
