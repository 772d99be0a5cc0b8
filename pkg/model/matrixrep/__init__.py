"""Matrixrep package: threshold certificates and elimination matrices M_nu"""

from .builder import ColumnTag, MatrixRep, UncertifiedDegreeError, build_rep, specialize
from .codec import decode, encode
from .thresholds import (InconsistentOverrideError, Setting, ThresholdCertificate, ValidityRegion,
                         certify, curve_threshold_value, morphism_lower_bound, multigraded_shape,
                         threshold_curve, threshold_morphism, threshold_multigraded,
                         threshold_surface)

__all__ = [
    "Setting", "ValidityRegion", "ThresholdCertificate", "InconsistentOverrideError",
    "threshold_curve", "threshold_morphism", "threshold_surface", "threshold_multigraded",
    "curve_threshold_value", "morphism_lower_bound", "multigraded_shape", "certify",
    "ColumnTag", "MatrixRep", "UncertifiedDegreeError", "build_rep", "specialize",
    "encode", "decode",
]
