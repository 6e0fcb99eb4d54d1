"""Exception types raised by qphase."""


class PhaseSpaceError(ValueError):
    """Base class for all qphase validation errors."""


class DimensionError(PhaseSpaceError):
    """Hilbert space dimension is not a positive odd integer."""


class LabelError(PhaseSpaceError):
    """Phase-space label outside the symmetric range [-h, h]."""


class ShapeError(PhaseSpaceError):
    """Array shapes do not match the dimension they are used with."""


class NormalizationError(PhaseSpaceError):
    """State vector is not unit normalized."""


class DensityError(PhaseSpaceError):
    """Matrix is not a valid density operator."""


class ScalingError(PhaseSpaceError):
    """Invalid continuum scaling parameters."""


class ResolutionError(PhaseSpaceError):
    """Grid is too coarse or too narrow for the requested state."""


class EmbeddingError(PhaseSpaceError):
    """Angular momentum amplitudes do not fit in the discrete space."""


class ReferenceAngleError(PhaseSpaceError):
    """Reference angle is not an integer multiple of 2*pi/N."""


class InputError(PhaseSpaceError):
    """Malformed user input (state files, presets, coefficient lists)."""
