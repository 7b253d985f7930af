import math
from collections import namedtuple
from enum import Enum

from eotransducer.errors import ValidationError
from eotransducer.engine.sideband import PathwayWeighting
from eotransducer.engine.solver import SolverMode
from eotransducer.hybridization import mixing_angle
from eotransducer.measurement.calibration import CalibrationChain
from eotransducer.measurement.detector import DetectorModel
from eotransducer.measurement.filters import FilterCascade
from eotransducer.units import TWO_PI

# per-stage width reproducing the ~30 MHz combined linewidth of two stages
DEFAULT_FILTER_FWHM = 46.6e6
DEFAULT_TEMPERATURE = 1.0


class SweepAxis(Enum):
    """
    quantities a scenario can sweep
    """

    pump_frequency = "pump_frequency"
    bias_voltage = "bias_voltage"
    microwave_frequency = "microwave_frequency"
    pump_power = "pump_power"
    temperature = "temperature"

    @property
    def unit(self):
        return AXIS_UNITS[self]

    @property
    def is_frequency(self):
        return self.unit == "Hz"


# the unit each axis takes in a manifest
AXIS_UNITS = {
    SweepAxis.pump_frequency: "Hz",
    SweepAxis.bias_voltage: "V",
    SweepAxis.microwave_frequency: "Hz",
    SweepAxis.pump_power: "W",
    SweepAxis.temperature: "K",
}


class SweepSpec(
    namedtuple("SweepSpec", ["axis", "start", "stop", "count", "outputs", "offset"])
):
    """
    a linear sweep of one axis. With offset set, frequency axes are read as
    offsets from the matching resonance (mode a for the pump, mode c for
    the microwave drive).
    """

    __slots__ = ()

    def __new__(cls, axis, start, stop, count, outputs, offset=False):
        try:
            axis = axis if isinstance(axis, SweepAxis) else SweepAxis[axis]
        except KeyError:
            valid = ", ".join(a.name for a in SweepAxis)
            raise ValidationError(f"unknown sweep axis {axis}; valid axes: {valid}", field="axis")
        try:
            whole = float(count).is_integer()
        except (TypeError, ValueError):
            whole = False
        if not whole:
            raise ValidationError(f"sweep count must be an integer, got {count}", field="count")
        count = int(count)
        if count < 2:
            raise ValidationError(f"sweep count must be at least 2, got {count}", field="count")
        start, stop = float(start), float(stop)
        if not (math.isfinite(start) and math.isfinite(stop)):
            raise ValidationError("sweep start and stop must be finite", field="start")
        if start == stop:
            raise ValidationError("sweep start and stop must differ", field="stop")
        outputs = tuple(outputs)
        if not outputs:
            raise ValidationError("sweep needs at least one output", field="outputs")
        if offset and not axis.is_frequency:
            raise ValidationError(
                f"offset only applies to frequency axes, not {axis.name}", field="offset"
            )
        return super().__new__(cls, axis, start, stop, count, outputs, bool(offset))


ModelOptions = namedtuple("ModelOptions", ["solver", "weighting", "filter_detuning"])


def default_model():
    return ModelOptions(SolverMode.BACKACTION, PathwayWeighting.EQUAL, 0.0)


class ScenarioConfig:
    """
    everything one manifest describes: the device and its drives, the
    measurement chain around it, and optionally a sweep, optimization
    bounds and a measured efficiency to fit.

    values are already converted to the internal units (rad/s for rates).
    """

    def __init__(self, **kwargs):
        self._name = kwargs.get("name", "scenario")
        self._device = kwargs.get("device")
        self._pump = kwargs.get("pump")
        self._mw = kwargs.get("mw")
        if self._device is None or self._pump is None or self._mw is None:
            raise ValidationError("a scenario needs device, pump and microwave", field="spec")

        self._reported_totals = kwargs.get("reported_totals", {})
        self._bare_modes = kwargs.get("bare_modes", None)
        self._calibration = kwargs.get("calibration", None) or CalibrationChain()
        self._filters = kwargs.get("filters", None) or FilterCascade.identical(
            2, DEFAULT_FILTER_FWHM
        )
        self._detector = kwargs.get("detector", None) or DetectorModel()
        self._temperature = float(kwargs.get("temperature", DEFAULT_TEMPERATURE))
        if not self._temperature > 0:
            raise ValidationError("temperature must be positive", field="temperature")
        self._model = kwargs.get("model", None) or default_model()
        self._sweep = kwargs.get("sweep", None)
        self._optimize = kwargs.get("optimize", {})
        self._fit = kwargs.get("fit", None)

    @property
    def name(self):
        return self._name

    @property
    def device(self):
        return self._device

    @property
    def pump(self):
        return self._pump

    @property
    def mw(self):
        return self._mw

    @property
    def reported_totals(self):
        return self._reported_totals

    @property
    def bare_modes(self):
        return self._bare_modes

    @property
    def calibration(self):
        return self._calibration

    @property
    def filters(self):
        return self._filters

    @property
    def detector(self):
        return self._detector

    @property
    def temperature(self):
        return self._temperature

    @property
    def model(self):
        return self._model

    @property
    def sweep(self):
        return self._sweep

    @sweep.setter
    def sweep(self, sweep):
        self._sweep = sweep

    @property
    def optimize(self):
        """
        bounds in rad/s keyed by kappa_b_e / kappa_c_e
        """
        return self._optimize

    @property
    def fit(self):
        """
        measured on-chip efficiency per watt of pump, or None
        """
        return self._fit

    def echo(self):
        """
        JSON-friendly summary in manifest units, written into result metadata
        """
        device = {k: v / TWO_PI for k, v in self.device._asdict().items()}
        echo = {
            "name": self.name,
            "device_hz": device,
            "pump": {"frequency": self.pump.omega_p / TWO_PI, "power": self.pump.power},
            "microwave": {"frequency": self.mw.omega_mu / TWO_PI, "power": self.mw.power},
            "calibration": dict(self.calibration._asdict()),
            "filters": [dict(s._asdict()) for s in self.filters.stages],
            "detector": dict(self.detector._asdict()),
            "temperature": self.temperature,
            "model": {
                "solver": self.model.solver.name.lower(),
                "weighting": self.model.weighting.name.lower(),
                "filter_detuning": self.model.filter_detuning,
            },
        }
        if self.reported_totals:
            echo["reported_totals_hz"] = {k: v / TWO_PI for k, v in self.reported_totals.items()}
        if self.bare_modes is not None:
            echo["bare_modes_hz"] = {
                "frequency_a_prime": self.bare_modes.omega_a_prime / TWO_PI,
                "frequency_b_prime": self.bare_modes.omega_b_prime / TWO_PI,
                "mu": self.bare_modes.mu / TWO_PI,
                "g_v_dc": self.bare_modes.g_v_dc / TWO_PI,
            }
        if self.sweep is not None:
            echo["sweep"] = {
                "axis": self.sweep.axis.name,
                "unit": self.sweep.axis.unit,
                "start": self.sweep.start,
                "stop": self.sweep.stop,
                "count": self.sweep.count,
                "offset": self.sweep.offset,
                "outputs": list(self.sweep.outputs),
            }
        return echo

    @property
    def theta(self):
        """
        mixing angle of the configured bare modes at zero bias; full
        hybridization when none are configured
        """
        if self.bare_modes is None:
            return math.pi / 4
        return mixing_angle(self.bare_modes.delta_prime, self.bare_modes.mu)
