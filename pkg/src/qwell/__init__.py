"""Exact-arithmetic analysis of probability plateaux in the suddenly
expanded 1D infinite well at fractional times."""

from .cyclotomic import CycInt, IntPoly, cyclotomic_poly, embed, galois_conjugate
from .gauss import (
    CoeffKind,
    GaussCoefficient,
    GaussPhase,
    coefficient_c,
    gauss_abs,
    gauss_abs_sq,
    gauss_sum_direct,
    phase_alpha,
)
from .plateau import (
    Cell,
    PlateauInterval,
    PlateauReport,
    detect_plateaux,
    plateau_level,
    singular_points,
    window_sums,
)
from .predictors import (
    FragmentationLayout,
    PlateauPrediction,
    ScanRecord,
    conjecture_scan,
    fragmentation_layout,
    has_fragmentation,
    nonfrag_prediction,
    peak_count,
)
from .rationals import Rational, bezout, dist_nearest_int, mod_inverse
from .wavefield import (
    WellParams,
    density_p,
    initial_g,
    interval_I,
    psi_fractional,
    series_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "CycInt",
    "IntPoly",
    "cyclotomic_poly",
    "embed",
    "galois_conjugate",
    "CoeffKind",
    "GaussCoefficient",
    "GaussPhase",
    "coefficient_c",
    "gauss_abs",
    "gauss_abs_sq",
    "gauss_sum_direct",
    "phase_alpha",
    "Cell",
    "PlateauInterval",
    "PlateauReport",
    "detect_plateaux",
    "plateau_level",
    "singular_points",
    "window_sums",
    "FragmentationLayout",
    "PlateauPrediction",
    "ScanRecord",
    "conjecture_scan",
    "fragmentation_layout",
    "has_fragmentation",
    "nonfrag_prediction",
    "peak_count",
    "Rational",
    "bezout",
    "dist_nearest_int",
    "mod_inverse",
    "WellParams",
    "density_p",
    "initial_g",
    "interval_I",
    "psi_fractional",
    "series_oracle",
]
