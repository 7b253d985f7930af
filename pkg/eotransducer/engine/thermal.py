import numpy as np

from eotransducer.params import CONSTANTS
from eotransducer.units import ensure_positive


def thermal_occupancy(frequency, temperature):
    """
    Bose-Einstein occupancy of a mode at frequency (Hz) and temperature (K)
    """
    ensure_positive(frequency, "frequency")
    ensure_positive(temperature, "temperature")
    x = CONSTANTS.planck * frequency / (CONSTANTS.boltzmann * temperature)
    return float(1.0 / np.expm1(x))
