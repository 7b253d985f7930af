import logging
import math
from collections import namedtuple

from eotransducer.errors import DomainError
from eotransducer.params import CONSTANTS
from eotransducer.engine.efficiency import lorentzian
from eotransducer.units import TWO_PI

MICROWATT = 1e-6


class FitRequest(namedtuple("FitRequest", ["measured_efficiency_per_watt", "device"])):
    """
    an on-chip efficiency measured at zero detuning, normalised to the pump
    power in the feed waveguide, and the device it was measured on (g0 is
    ignored)
    """

    __slots__ = ()

    def __new__(cls, measured_efficiency_per_watt, device):
        value = float(measured_efficiency_per_watt)
        if not value > 0:
            raise DomainError(
                f"measured efficiency must be positive, got {value}",
                field="measured_efficiency_per_watt",
            )
        return super().__new__(cls, value, device)

    @classmethod
    def per_microwatt(cls, efficiency_per_uw, device):
        return cls(float(efficiency_per_uw) / MICROWATT, device)


def fit_g0(request):
    """
    g0 (rad/s) that makes the low-cooperativity efficiency at zero detuning
    equal the measurement
    """
    d = request.device
    peaks = (
        lorentzian(d.kappa_a_e, d.kappa_a, 0.0)
        * lorentzian(d.kappa_b_e, d.kappa_b, 0.0)
        * lorentzian(d.kappa_c_e, d.kappa_c, 0.0)
    )
    g0 = math.sqrt(
        request.measured_efficiency_per_watt * CONSTANTS.planck_reduced * d.omega_a / peaks
    )
    logging.info(f"fitted g0/2pi = {g0 / TWO_PI:.6g} Hz")
    return g0


def fitted_device(request):
    return request.device.replace(g0=fit_g0(request))
