"""Exact distance spectra, distance energy and Wiener index of integral
circulant graphs ICG_n(D)."""

from .closed_forms import (
    classify_ucg,
    common_neighbors,
    eigen_abs_sum,
    family_2pq,
    family_3p,
    lehmer_check,
    nullity,
    ucg_distance_energy,
    ucg_distance_spectrum,
)
from .distance_spectra import (
    diameter,
    distance_classes,
    distance_energy,
    distance_first_row,
    distance_spectrum,
    spectral_radius,
    wiener_index,
)
from .icg_core import (
    IcgSpec,
    IndexedSpectrum,
    adjacency_matrix,
    adjacency_spectrum,
    degree,
    gcd_class,
    is_connected,
    recognize_integral_symbol,
    symbol_set,
    validate,
)

__version__ = "0.1.0"
