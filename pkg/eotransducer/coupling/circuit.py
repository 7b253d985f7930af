import logging
import math
from collections import namedtuple

from eotransducer.errors import DomainError, ValidationError
from eotransducer.params import CONSTANTS
from eotransducer.units import ensure_non_negative

IMPEDANCE_TOLERANCE = 0.1


class CircuitParams(namedtuple("CircuitParams", ["c_total", "impedance", "omega_c"])):
    """
    lumped LC model of the microwave resonator. The characteristic impedance
    should match 1/(w_c C_tot); a disagreement above 10% is logged.
    """

    __slots__ = ()

    def __new__(cls, c_total, impedance, omega_c):
        values = []
        for name, value in (("c_total", c_total), ("impedance", impedance), ("omega_c", omega_c)):
            value = float(value)
            if not value > 0 or not math.isfinite(value):
                raise ValidationError(f"{name} must be positive, got {value}", field=name)
            values += [value]
        self = super().__new__(cls, *values)

        expected = self.impedance_from_capacitance
        if abs(self.impedance - expected) > IMPEDANCE_TOLERANCE * self.impedance:
            logging.warning(
                f"impedance {self.impedance:.4g} ohm disagrees with 1/(w_c C_tot) = "
                f"{expected:.4g} ohm by more than {IMPEDANCE_TOLERANCE:.0%}"
            )
        return self

    @classmethod
    def from_impedance(cls, impedance, omega_c):
        return cls(1.0 / (float(impedance) * float(omega_c)), impedance, omega_c)

    @property
    def impedance_from_capacitance(self):
        return 1.0 / (self.omega_c * self.c_total)


def zero_point_voltage(circuit):
    return math.sqrt(CONSTANTS.planck_reduced * circuit.omega_c / (2 * circuit.c_total))


def g0_from_gv(g_v, v_zp):
    """
    g0 = 3 g_V V_zp / 2 at full hybridization; g_v in rad/s per volt
    """
    ensure_non_negative(g_v, "g_v")
    ensure_non_negative(v_zp, "v_zp")
    return 1.5 * g_v * v_zp


def gv_from_g0(g0, v_zp):
    ensure_non_negative(g0, "g0")
    if not v_zp > 0:
        raise DomainError("v_zp must be positive", field="v_zp")
    return g0 / (1.5 * v_zp)
