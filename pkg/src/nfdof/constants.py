"""Physical constants and unit helpers."""

# Propagation speed used throughout (m/s). The round value keeps the
# textbook identity lambda = 1 cm at 30 GHz exact, which all reference
# figures rely on.
SPEED_OF_LIGHT = 3.0e8


def wavelength_from_frequency(frequency_hz):
    """Free-space wavelength in meters for a carrier frequency in Hz."""
    if frequency_hz <= 0:
        raise ValueError("frequency must be positive")
    return SPEED_OF_LIGHT / frequency_hz
