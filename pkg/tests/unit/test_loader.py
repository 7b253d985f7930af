import math
import os
import unittest

from eotransducer.engine.sideband import PathwayWeighting
from eotransducer.engine.solver import SolverMode
from eotransducer.errors import ScenarioError
from eotransducer.scenarios import loader
from eotransducer.scenarios.config import SweepAxis

from tests import devices

TWO_PI = 2 * math.pi


def line_of(text, needle):
    return text.splitlines().index(needle) + 1


class TestShippedManifests(unittest.TestCase):
    def load(self, name):
        return loader.load_scenario(os.path.join(devices.MANIFEST_DIR, f"{name}.yaml"))

    def test_reference(self):
        scenario = self.load("reference")
        device = scenario.device
        assert scenario.name == "reference"
        assert math.isclose(device.omega_a, TWO_PI * 193.411e12, rel_tol=1e-15)
        assert math.isclose(device.kappa_a, TWO_PI * 923e6, rel_tol=1e-12)
        assert math.isclose(device.g0, TWO_PI * 1.2e3, rel_tol=1e-15)
        assert math.isclose(scenario.reported_totals["kappa_a"], TWO_PI * 923e6, rel_tol=1e-15)
        assert scenario.pump.omega_p == device.omega_a, "the pump defaults onto mode a"
        assert scenario.mw.omega_mu == device.omega_c
        assert math.isclose(scenario.fit, 0.095, rel_tol=1e-12)
        assert scenario.optimize["kappa_b_e"] == (TWO_PI * 1.0e6, TWO_PI * 50.0e9)
        assert scenario.sweep.axis == SweepAxis.temperature
        assert scenario.sweep.outputs == ("temperature", "thermal_occupancy")

    def test_microwave_response(self):
        scenario = self.load("microwave_response")
        assert math.isclose(scenario.mw.power, 1e-3 * 10 ** -1.3, rel_tol=1e-12)
        assert scenario.sweep.offset
        assert scenario.model.solver == SolverMode.BACKACTION
        assert len(scenario.filters.stages) == 2

    def test_avoided_crossing(self):
        scenario = self.load("avoided_crossing")
        bare = scenario.bare_modes
        assert math.isclose(bare.mu, TWO_PI * 3.4e9, rel_tol=1e-15)
        assert math.isclose(bare.g_v_dc, TWO_PI * 0.5e9, rel_tol=1e-15)
        assert scenario.sweep.count == 401

    def test_sidebands(self):
        scenario = self.load("sidebands")
        assert scenario.model.weighting == PathwayWeighting.EQUAL
        assert scenario.sweep.axis == SweepAxis.pump_frequency

    def test_missing_file(self):
        with self.assertRaises(OSError):
            loader.load_scenario(os.path.join(devices.MANIFEST_DIR, "missing.yaml"))


class TestManifestErrors(unittest.TestCase):
    def parse_error(self, text):
        with self.assertRaises(ScenarioError) as e:
            loader.parse_scenario(text)
        return e.exception

    def test_schema(self):
        text = devices.manifest().replace("eotransducer/v1", "eotransducer/v0")
        error = self.parse_error(text)
        assert error.field == "schema" and error.line == 1

    def test_kind(self):
        error = self.parse_error(devices.manifest().replace("kind: Scenario", "kind: Sweep"))
        assert error.field == "kind" and error.line == 2

    def test_negative_rate_names_field_and_line(self):
        text = devices.manifest().replace("kappa_c_e: 4.4e6", "kappa_c_e: -4.4e6")
        error = self.parse_error(text)
        assert error.field == "spec.device.kappa_c_e", error.field
        assert error.line == line_of(text, "    kappa_c_e: -4.4e6"), error.line
        assert "field=spec.device.kappa_c_e" in error.one_line()

    def test_unknown_device_key(self):
        text = devices.manifest().replace("    mu: 3.4e9\n", "    mu: 3.4e9\n    bogus: 1.0\n")
        error = self.parse_error(text)
        assert error.field == "spec.device.bogus"
        assert error.line == line_of(text, "    bogus: 1.0")

    def test_unknown_spec_section(self):
        error = self.parse_error(devices.manifest("  extras: {}\n"))
        assert error.field == "spec.extras"

    def test_missing_field(self):
        error = self.parse_error(devices.manifest().replace("    mu: 3.4e9\n", ""))
        assert error.field == "spec.device.mu"

    def test_not_a_number(self):
        error = self.parse_error(devices.manifest().replace("g0: 1.2e3", "g0: fast"))
        assert error.field == "spec.device.g0"

    def test_ordering(self):
        text = devices.manifest().replace("frequency_b: 193.417801e12", "frequency_b: 193.4e12")
        error = self.parse_error(text)
        assert error.field == "spec.device.frequency_b", error.field

    def test_unknown_output(self):
        section = devices.sweep_section("temperature", 0.01, 1.0, 5, ["temperature", "nope"])
        error = self.parse_error(devices.manifest(section))
        assert error.field == "spec.sweep.outputs"
        assert "nope" in error.message

    def test_bad_sweep_count(self):
        section = devices.sweep_section("temperature", 0.01, 1.0, 2.5, ["temperature"])
        assert self.parse_error(devices.manifest(section)).field == "spec.sweep.count"
        section = devices.sweep_section("temperature", 0.01, 1.0, 1, ["temperature"])
        assert self.parse_error(devices.manifest(section)).field == "spec.sweep.count"

    def test_offset_needs_frequency_axis(self):
        section = devices.sweep_section("temperature", 0.01, 1.0, 3, ["temperature"], offset=True)
        assert self.parse_error(devices.manifest(section)).field == "spec.sweep.offset"

    def test_bad_solver_mode(self):
        error = self.parse_error(devices.manifest("  model:\n    solver: magic\n"))
        assert error.field == "spec.model.solver"

    def test_bad_filter_stage(self):
        extra = (
            "  filters:\n"
            "    stages:\n"
            "      - fwhm: 40.0e6\n"
            "      - fwhm: 0.0\n"
        )
        text = devices.manifest(extra)
        error = self.parse_error(text)
        assert error.field == "spec.filters.stages.1.fwhm", error.field
        assert error.line == line_of(text, "      - fwhm: 0.0")

    def test_infinite_sweep_count(self):
        section = devices.sweep_section("temperature", 0.01, 1.0, ".inf", ["temperature"])
        text = devices.manifest(section)
        error = self.parse_error(text)
        assert error.field == "spec.sweep.count"
        assert error.line == line_of(text, "    count: .inf")

    def test_filter_stages_not_a_list(self):
        text = devices.manifest("  filters:\n    stages: 5\n")
        error = self.parse_error(text)
        assert error.field == "spec.filters.stages"
        assert error.line == line_of(text, "    stages: 5")

    def test_fractional_filter_count(self):
        for count in ("2.7", ".inf", ".nan"):
            text = devices.manifest(f"  filters:\n    count: {count}\n    fwhm: 46.6e6\n")
            assert self.parse_error(text).field == "spec.filters.count", count

    def test_negative_temperature(self):
        error = self.parse_error(devices.manifest("  temperature: -1.0\n"))
        assert error.field == "spec.temperature"

    def test_bad_optimize_bounds(self):
        error = self.parse_error(devices.manifest("  optimize:\n    kappa_b_e: [1.0e+6]\n"))
        assert error.field == "spec.optimize.kappa_b_e"

    def test_pump_frequency_and_detuning(self):
        text = devices.manifest().replace(
            "  pump:\n", "  pump:\n    frequency: 193.411e12\n    detuning: 1.0e+9\n"
        )
        assert self.parse_error(text).field == "spec.pump.detuning"

    def test_not_a_mapping(self):
        error = self.parse_error("- one\n- two\n")
        assert error.line == 1 and error.field is None

    def test_malformed_yaml(self):
        error = self.parse_error("schema: eotransducer/v1\nspec: [unclosed\n")
        assert error.line is not None


class TestManifestSections(unittest.TestCase):
    def test_minimal_defaults(self):
        scenario = loader.parse_scenario(devices.manifest())
        assert scenario.name == "unit"
        assert scenario.sweep is None and scenario.fit is None
        assert scenario.temperature == 1.0
        assert scenario.model.solver == SolverMode.BACKACTION
        assert scenario.calibration.heterodyne_gain == 1.02e4
        assert scenario.theta == math.pi / 4

    def test_reported_totals(self):
        # the tabulated 591 MHz intrinsic loss gives a 797 MHz total
        extra = "    reported:\n      kappa_a: 797.0e6\n      kappa_c: 21.6e6\n"
        text = devices.manifest().replace("    mu: 3.4e9\n", "    mu: 3.4e9\n" + extra)
        with self.assertLogs(level="WARNING") as logs:
            scenario = loader.parse_scenario(text)
        assert len(logs.output) == 1 and "kappa_a" in logs.output[0]
        assert math.isclose(scenario.device.kappa_a, TWO_PI * 923e6, rel_tol=1e-12)
        assert math.isclose(scenario.echo()["reported_totals_hz"]["kappa_a"], 797.0e6, rel_tol=1e-12)

    def test_pump_detuning(self):
        text = devices.manifest().replace("  pump:\n", "  pump:\n    detuning: 1.0e+9\n")
        scenario = loader.parse_scenario(text)
        expected = scenario.device.omega_a - TWO_PI * 1.0e9
        assert math.isclose(scenario.pump.omega_p, expected, rel_tol=1e-15)

    def test_generator_power(self):
        text = devices.manifest().replace(
            "  microwave:\n    power: 1.0e-9\n", "  microwave:\n    generator_power: 1.0e-3\n"
        )
        scenario = loader.parse_scenario(text + "  calibration:\n    mw_attenuation_db: 10.0\n")
        assert math.isclose(scenario.mw.power, 1e-4, rel_tol=1e-12)

    def test_filter_stages(self):
        extra = (
            "  filters:\n"
            "    stages:\n"
            "      - fwhm: 40.0e6\n"
            "        center_offset: -10.0e6\n"
            "      - fwhm: 40.0e6\n"
            "        center_offset: 10.0e6\n"
        )
        scenario = loader.parse_scenario(devices.manifest(extra))
        assert [s.center_offset for s in scenario.filters.stages] == [-10.0e6, 10.0e6]

    def test_model_and_fit(self):
        extra = (
            "  model:\n"
            "    solver: full\n"
            "    weighting: mixing\n"
            "  fit:\n"
            "    efficiency_per_watt: 0.1\n"
        )
        scenario = loader.parse_scenario(devices.manifest(extra))
        assert scenario.model.solver == SolverMode.FULL
        assert scenario.model.weighting == PathwayWeighting.MIXING
        assert scenario.fit == 0.1

    def test_echo(self):
        section = devices.sweep_section("pump_power", 1e-7, 1e-5, 3, ["pump_power"])
        echo = loader.parse_scenario(devices.manifest(section)).echo()
        assert echo["name"] == "unit"
        assert math.isclose(echo["device_hz"]["kappa_c_e"], 4.4e6, rel_tol=1e-15)
        assert echo["sweep"]["axis"] == "pump_power" and echo["sweep"]["count"] == 3
        assert echo["model"]["solver"] == "backaction"
