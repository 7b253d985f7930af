import logging
import math
from collections import namedtuple

from scipy import constants as codata

from eotransducer.errors import ValidationError, OrderingError


class PhysicalConstants(
    namedtuple(
        "PhysicalConstants",
        [
            "planck_reduced",
            "planck",
            "boltzmann",
            "vacuum_permittivity",
            "speed_of_light",
        ],
    )
):
    """
    SI constants used by every formula in the package. Values come from the
    CODATA set bundled with scipy.constants (h, k_B and c are exact since the
    2019 SI redefinition; eps_0 differs between CODATA releases far below any
    tolerance used here).
    """

    __slots__ = ()

    def __new__(cls):
        return super().__new__(
            cls,
            codata.hbar,
            codata.h,
            codata.k,
            codata.epsilon_0,
            codata.c,
        )


CONSTANTS = PhysicalConstants()

# rates a DeviceParams carries, all angular frequencies (rad/s)
RATE_FIELDS = [
    "omega_a",
    "omega_b",
    "omega_c",
    "kappa_a_i",
    "kappa_a_e",
    "kappa_b_i",
    "kappa_b_e",
    "kappa_c_i",
    "kappa_c_e",
    "g0",
    "mu",
]


def _finite(value, name):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {value!r}", field=name)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite", field=name)
    return value


def _positive(value, name):
    value = _finite(value, name)
    if value <= 0.0:
        raise ValidationError(f"{name} must be strictly positive, got {value}", field=name)
    return value


def _non_negative(value, name):
    value = _finite(value, name)
    if value < 0.0:
        raise ValidationError(f"{name} must be non-negative, got {value}", field=name)
    return value


class DeviceParams(namedtuple("DeviceParams", RATE_FIELDS)):
    """
    the full set of measured device parameters, in rad/s.

    optical modes a and b are single-side coupled to the feed waveguide,
    the microwave mode c is coupled to both sides of its feedline:
        kappa_a = kappa_a_i + kappa_a_e
        kappa_b = kappa_b_i + kappa_b_e
        kappa_c = kappa_c_i + 2 kappa_c_e

    g0 may be zero (an uncoupled device, or one whose coupling is about to be
    fitted); every other rate must be strictly positive.
    """

    __slots__ = ()

    def __new__(cls, **kwargs):
        missing = [f for f in RATE_FIELDS if kwargs.get(f) is None]
        if missing:
            raise ValidationError(
                f"missing device parameter(s): {', '.join(missing)}", field=missing[0]
            )
        values = {}
        for name in RATE_FIELDS:
            if name == "g0":
                values[name] = _non_negative(kwargs[name], name)
            else:
                values[name] = _positive(kwargs[name], name)
        if values["omega_b"] <= values["omega_a"]:
            raise OrderingError(
                "omega_b must be above omega_a "
                f"({values['omega_b']} <= {values['omega_a']})",
                field="omega_b",
            )
        return super().__new__(cls, **values)

    @classmethod
    def from_hz(cls, **kwargs):
        """
        build from ordinary frequencies (the "/2pi" values of a parameter table)
        """
        return cls(**{k: 2 * math.pi * _finite(v, k) for k, v in kwargs.items()})

    @property
    def kappa_a(self):
        return self.kappa_a_i + self.kappa_a_e

    @property
    def kappa_b(self):
        return self.kappa_b_i + self.kappa_b_e

    @property
    def kappa_c(self):
        return self.kappa_c_i + 2 * self.kappa_c_e

    @property
    def splitting(self):
        return self.omega_b - self.omega_a

    @property
    def extraction_ceiling(self):
        """
        best possible conversion efficiency, (kappa_b_e/kappa_b)(kappa_c_e/kappa_c)
        """
        return (self.kappa_b_e / self.kappa_b) * (self.kappa_c_e / self.kappa_c)

    def replace(self, **changes):
        """
        like _replace but re-validates
        """
        values = self._asdict()
        values.update(changes)
        return type(self)(**values)

    def totals(self):
        return {"kappa_a": self.kappa_a, "kappa_b": self.kappa_b, "kappa_c": self.kappa_c}


class PumpDrive(namedtuple("PumpDrive", ["omega_p", "power"])):
    """
    optical pump: angular frequency and power in the feed waveguide (W)
    """

    __slots__ = ()

    def __new__(cls, omega_p, power):
        return super().__new__(
            cls, _positive(omega_p, "omega_p"), _non_negative(power, "pump_power")
        )

    def photon_flux(self, omega=None):
        """
        photons/s in the feed waveguide, referenced to omega (default omega_p)
        """
        omega = self.omega_p if omega is None else omega
        return self.power / (CONSTANTS.planck_reduced * omega)

    def amplitude(self, kappa_e, omega=None):
        """
        input field amplitude eps_p = sqrt(kappa_a_e P / hbar omega)
        """
        return math.sqrt(kappa_e * self.photon_flux(omega))

    def replace(self, **changes):
        values = self._asdict()
        values.update(changes)
        return type(self)(**values)


class MicrowaveDrive(namedtuple("MicrowaveDrive", ["omega_mu", "power"])):
    """
    microwave drive: angular frequency and power delivered at the device (W)
    """

    __slots__ = ()

    def __new__(cls, omega_mu, power):
        return super().__new__(
            cls, _positive(omega_mu, "omega_mu"), _non_negative(power, "microwave_power")
        )

    def photon_flux(self):
        return self.power / (CONSTANTS.planck_reduced * self.omega_mu)

    def amplitude(self, kappa_e):
        return math.sqrt(kappa_e * self.photon_flux())

    def replace(self, **changes):
        values = self._asdict()
        values.update(changes)
        return type(self)(**values)


def validate_device_params(raw, reported_totals=None, tolerance=0.01):
    """
    turn a candidate (a mapping of rates in rad/s, or an existing DeviceParams)
    into a validated DeviceParams.

    reported_totals, when given, maps kappa_a/kappa_b/kappa_c to tabulated
    totals (rad/s). They never override the composition rules; a disagreement
    larger than tolerance is logged so a bad table entry is visible.
    """
    if isinstance(raw, DeviceParams):
        raw = raw._asdict()
    params = DeviceParams(**dict(raw))

    totals = params.totals()
    for name, reported in (reported_totals or {}).items():
        if name not in totals:
            raise ValidationError(f"unknown reported total {name}", field=name)
        reported = _positive(reported, name)
        derived = totals[name]
        if abs(derived - reported) > tolerance * reported:
            logging.warning(
                f"{name} from its components is {derived / (2 * math.pi):.6g} Hz "
                f"but the reported total is {reported / (2 * math.pi):.6g} Hz; "
                "using the composed value"
            )
    return params
