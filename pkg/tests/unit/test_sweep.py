import math
import os
import tempfile
import unittest
import unittest.mock as mock

from eotransducer.errors import UsageError, ValidationError
from eotransducer.scenarios import loader, outputs, sweep, writer
from eotransducer.scenarios.config import SweepAxis, SweepSpec

from tests import devices

BARE_MODES = """\
  bare_modes:
    frequency_a_prime: 193.4144005e12
    frequency_b_prime: 193.4144005e12
    mu: 3.4e9
    g_v_dc: 0.5e9
"""


def scenario_with(section, extra=""):
    return loader.parse_scenario(devices.manifest(extra + section))


class TestSweepRun(unittest.TestCase):
    def test_columns_in_request_order(self):
        names = ["thermal_occupancy", "temperature"]
        scenario = scenario_with(devices.sweep_section("temperature", 0.01, 1.0, 5, names))
        result = sweep.run_sweep(scenario)
        assert result.names == names
        assert len(result.rows()) == 5
        assert result.metadata["points"] == 5
        assert result.metadata["scenario"]["name"] == "unit"

    def test_endpoints_are_exact(self):
        section = devices.sweep_section("temperature", 0.01, 1.0, 2, ["temperature"])
        result = sweep.run_sweep(scenario_with(section))
        assert result.columns["temperature"] == [0.01, 1.0]

    def test_offset_frequency_axis(self):
        section = devices.sweep_section(
            "pump_frequency", -1e9, 1e9, 3, ["pump_frequency", "pump_detuning"], offset=True
        )
        result = sweep.run_sweep(scenario_with(section))
        assert math.isclose(result.columns["pump_frequency"][1], 193.411e12, rel_tol=1e-15)
        detunings = result.columns["pump_detuning"]
        assert math.isclose(detunings[0], 1e9, rel_tol=1e-6)
        assert detunings[1] == 0.0

    def test_bias_sweep_crosses_at_zero(self):
        names = ["bias_voltage", "mode_splitting", "mixing_angle"]
        section = devices.sweep_section("bias_voltage", -40.0, 40.0, 3, names)
        result = sweep.run_sweep(scenario_with(section, BARE_MODES))
        splitting = result.columns["mode_splitting"]
        angle = result.columns["mixing_angle"]
        assert math.isclose(splitting[1], 2 * 3.4e9, rel_tol=1e-9), "minimum gap is 2 mu"
        assert angle[1] == math.pi / 4
        assert math.isclose(splitting[2], 2 * math.hypot(3.4e9, 10e9), rel_tol=1e-9)
        assert angle[0] > math.pi / 4 > angle[2]

    def test_every_output_is_finite(self):
        names = sorted(outputs.OUTPUTS)
        section = devices.sweep_section("microwave_frequency", -5e6, 5e6, 3, names, offset=True)
        result = sweep.run_sweep(scenario_with(section))
        for name in names:
            assert all(math.isfinite(v) for v in result.columns[name]), name

    def test_threaded_errors_surface(self):
        section = devices.sweep_section(
            "pump_power", -1e-6, 1e-6, 8, ["pump_power", "efficiency_low_c"]
        )
        with self.assertRaises(ValidationError):
            sweep.run_sweep(scenario_with(section), threads=4)

    def test_unknown_output(self):
        scenario = loader.parse_scenario(devices.manifest())
        scenario.sweep = SweepSpec("temperature", 0.1, 1.0, 3, ["nope"])
        with self.assertRaises(UsageError):
            sweep.SweepRun(scenario)

    def test_needs_a_sweep(self):
        with self.assertRaises(UsageError):
            sweep.SweepRun(loader.parse_scenario(devices.manifest()))

    def test_bad_thread_count(self):
        section = devices.sweep_section("temperature", 0.01, 1.0, 3, ["temperature"])
        with self.assertRaises(UsageError):
            sweep.SweepRun(scenario_with(section), threads=0)


class TestThreading(unittest.TestCase):
    def setUp(self):
        section = devices.sweep_section(
            "pump_frequency",
            -2e9,
            9e9,
            23,
            ["pump_frequency", "eta_anti_stokes", "eta_stokes", "transmission"],
            offset=True,
        )
        self.scenario = scenario_with(section)

    def test_thread_count(self):
        assert sweep.SweepRun(self.scenario).threads == 1, "below the default threshold"
        assert sweep.SweepRun(self.scenario, threads=100).threads == 23
        with mock.patch.dict(os.environ, {"EOTRANSDUCER_PARALLEL_THRESHOLD": "10"}):
            with mock.patch("eotransducer.scenarios.sweep.os.cpu_count", return_value=3):
                assert sweep.SweepRun(self.scenario).threads == 3

    @mock.patch.dict(os.environ, {"SOURCE_DATE_EPOCH": "1700000000"})
    def test_threads_do_not_change_results(self):
        serial = sweep.run_sweep(self.scenario, threads=1)
        threaded = sweep.run_sweep(self.scenario, threads=4)
        assert serial.columns == threaded.columns
        assert serial.metadata == threaded.metadata

        with tempfile.TemporaryDirectory() as tmp:
            one = writer.write_result(serial, os.path.join(tmp, "one"), "unit")
            four = writer.write_result(threaded, os.path.join(tmp, "four"), "unit")
            for a, b in zip(one, four):
                with open(a, "rb") as fa, open(b, "rb") as fb:
                    assert fa.read() == fb.read(), os.path.basename(a)


class TestWriter(unittest.TestCase):
    @mock.patch.dict(os.environ, {"SOURCE_DATE_EPOCH": "1700000000"})
    def test_formats(self):
        section = devices.sweep_section("temperature", 0.1, 1.0, 3, ["temperature"])
        result = sweep.run_sweep(scenario_with(section))
        with tempfile.TemporaryDirectory() as tmp:
            paths = writer.write_result(result, tmp, "unit", "csv")
            assert [os.path.basename(p) for p in paths] == ["unit.csv"]
            with open(paths[0]) as f:
                lines = f.read().splitlines()
            assert lines[0] == "temperature" and lines[1] == "0.10000000000000001"
            assert [float(v) for v in lines[1:]] == result.columns["temperature"]

            paths = writer.write_result(result, tmp, "unit", "json")
            with open(paths[0]) as f:
                text = f.read()
            assert '"timestamp": "2023-11-14T22:13:20+00:00"' in text

    def test_full_precision(self):
        assert float(writer.format_float(0.1 + 0.2)) == 0.1 + 0.2


class TestSweepAxes(unittest.TestCase):
    def test_axes_are_distinct(self):
        assert len(list(SweepAxis)) == 5
        assert SweepAxis.microwave_frequency is not SweepAxis.pump_frequency
        assert SweepAxis["microwave_frequency"].name == "microwave_frequency"
        assert SweepAxis.microwave_frequency.unit == SweepAxis.pump_frequency.unit == "Hz"
        assert not SweepAxis.bias_voltage.is_frequency

    def test_count_must_be_whole(self):
        for count in (float("inf"), float("nan"), 2.5, "many"):
            with self.assertRaises(ValidationError) as e:
                SweepSpec("temperature", 0.1, 1.0, count, ["temperature"])
            assert e.exception.field == "count", count
        with self.assertRaises(ValidationError):
            SweepSpec("temperature", 0.1, float("inf"), 3, ["temperature"])

    def test_microwave_sweep_moves_the_drive(self):
        names = ["microwave_detuning", "pump_detuning", "efficiency_low_c"]
        section = devices.sweep_section("microwave_frequency", -10.8e6, 10.8e6, 3, names, offset=True)
        result = sweep.run_sweep(scenario_with(section))
        detuning = result.columns["microwave_detuning"]
        assert math.isclose(detuning[0], 10.8e6, rel_tol=1e-6), detuning
        assert detuning[1] == 0.0
        assert math.isclose(detuning[2], -10.8e6, rel_tol=1e-6), detuning
        assert result.columns["pump_detuning"] == [0.0, 0.0, 0.0], "the pump stays on mode a"
        assert result.metadata["scenario"]["sweep"]["axis"] == "microwave_frequency"

        # half power at kappa_c/2 = 10.8 MHz, less the slight detuning of mode b
        eta = result.columns["efficiency_low_c"]
        assert math.isclose(eta[0], eta[2], rel_tol=1e-9), "even in the microwave detuning"
        assert math.isclose(eta[0] / eta[1], 0.5, rel_tol=2e-3), eta[0] / eta[1]

    def test_shipped_microwave_response(self):
        scenario = loader.load_scenario(os.path.join(devices.MANIFEST_DIR, "microwave_response.yaml"))
        result = sweep.run_sweep(scenario)
        detuning = result.columns["microwave_detuning"]
        assert math.isclose(detuning[0], 50e6, rel_tol=1e-6)
        assert math.isclose(detuning[-1], -50e6, rel_tol=1e-6)
        eta = result.columns["efficiency_low_c"]
        assert eta.index(max(eta)) == 100, "peak on the microwave resonance"
        half = [d for d, e in zip(detuning, eta) if e >= 0.5 * max(eta)]
        assert 10.4e6 < max(half) < 11e6 and -11e6 < min(half) < -10.4e6


class TestPumpSweepPeaks(unittest.TestCase):
    def setUp(self):
        section = devices.sweep_section(
            "pump_frequency",
            -1e9,
            8e9,
            91,
            ["pump_frequency", "eta_anti_stokes", "eta_stokes"],
            offset=True,
        )
        self.result = sweep.run_sweep(scenario_with(section))
        self.pump = self.result.columns["pump_frequency"]

    def peak(self, name):
        column = self.result.columns[name]
        n = column.index(max(column))
        return self.pump[n], column[n]

    def test_anti_stokes_peaks_on_mode_a(self):
        frequency, eta = self.peak("eta_anti_stokes")
        assert abs(frequency - 193.411e12) < 1e6, frequency
        assert math.isclose(eta, 9.714e-8, rel_tol=1.5e-2), eta

    def test_stokes_peaks_on_mode_b(self):
        frequency, _ = self.peak("eta_stokes")
        assert abs(frequency - 193.417801e12) < 5e7, frequency
