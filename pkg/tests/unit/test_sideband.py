import math
import unittest

import numpy as np

from eotransducer.engine import efficiency, sideband, thermal
from eotransducer.engine.sideband import PathwayWeighting
from eotransducer.errors import DomainError
from eotransducer.params import PumpDrive

from tests import devices

TWO_PI = 2 * math.pi


class TestSelectivity(unittest.TestCase):
    def setUp(self):
        self.device = devices.reference()

    def test_reference_selectivity(self):
        selectivity = sideband.selectivity(self.device)
        assert abs(selectivity - 24.6) < 0.3, f"got {selectivity}"
        assert abs(selectivity - 24.2) < 1.0, "the measured 24.2 dB is within 1 dB"

    def test_mixing_weighting(self):
        equal = sideband.selectivity(self.device)
        mixing = sideband.selectivity(self.device, weighting=PathwayWeighting.MIXING)
        assert 29.5 < mixing < 32.0, f"got {mixing}"
        assert mixing > equal, "damping the intra-mode pathways favours anti-Stokes"

    def test_grows_with_microwave_frequency(self):
        previous = None
        for f_mu in (2e9, 4e9, 6e9, 8e9, 10e9):
            device = devices.reference(omega_b=193.411e12 + f_mu, omega_c=f_mu)
            value = sideband.selectivity(device)
            if previous is not None:
                assert value > previous, f"selectivity should grow with w_mu, {f_mu}"
            previous = value


class TestSidebandSpectrum(unittest.TestCase):
    def setUp(self):
        self.device = devices.reference()
        self.pump, self.mw = devices.resonant_drives(self.device)

    def test_rows_follow_pump_sweep(self):
        omegas = self.device.omega_a + TWO_PI * np.linspace(-8e9, 15e9, 47)
        rows = sideband.sideband_spectrum(self.device, self.pump, omegas, self.mw)
        assert len(rows) == len(omegas)
        assert [r.omega_p for r in rows] == [float(w) for w in omegas]
        assert all(r.eta_anti_stokes > 0 and r.eta_stokes > 0 for r in rows)

    def test_anti_stokes_peak_contains_resonant_term(self):
        plus, _ = sideband.sideband_efficiencies(self.device, self.pump, self.mw)
        low_c = efficiency.efficiency_low_c(self.device, self.pump, self.mw)
        assert plus >= low_c, "the resonant pathway is one of the summed terms"
        assert plus < 1.01 * low_c, "the other pathways are small"

    def test_detuned_pump_penalty(self):
        detuned = self.pump.replace(omega_p=self.device.omega_a - self.device.omega_c)
        on, _ = sideband.sideband_efficiencies(self.device, self.pump, self.mw)
        off, _ = sideband.sideband_efficiencies(self.device, detuned, self.mw)
        penalty = 10 * math.log10(on / off)
        assert abs(penalty - 24.2) < 2.0, f"got {penalty}"

    def test_stokes_and_anti_stokes_swap_roles(self):
        # a pump on mode b sends its Stokes sideband into mode a
        pump = PumpDrive(self.device.omega_b, 1e-6)
        plus, minus = sideband.sideband_efficiencies(self.device, pump, self.mw)
        assert minus > plus


class TestThermalOccupancy(unittest.TestCase):
    def test_cryogenic_values(self):
        expected = {1.0: 2.591, 0.1: 0.03975, 0.01: 6.680e-15}
        for temperature, n in expected.items():
            value = thermal.thermal_occupancy(6.801e9, temperature)
            assert math.isclose(value, n, rel_tol=2e-3), f"T = {temperature}: {value}"

    def test_classical_limit(self):
        value = thermal.thermal_occupancy(6.801e9, 300.0)
        classical = 1.380649e-23 * 300.0 / (6.62607015e-34 * 6.801e9)
        assert abs(value - (classical - 0.5)) < 1e-3 * classical

    def test_increases_with_temperature(self):
        rng = np.random.default_rng(5)
        temperatures = np.sort(10 ** rng.uniform(-2, 3, 100))
        for frequency in rng.uniform(1e9, 12e9, 10):
            values = [thermal.thermal_occupancy(frequency, t) for t in temperatures]
            assert all(b > a for a, b in zip(values, values[1:])), frequency

    def test_domain(self):
        with self.assertRaises(DomainError):
            thermal.thermal_occupancy(6.801e9, 0.0)
        with self.assertRaises(DomainError):
            thermal.thermal_occupancy(0.0, 1.0)
