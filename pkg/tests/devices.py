import math
import os

from eotransducer.params import DeviceParams, MicrowaveDrive, PumpDrive

MANIFEST_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "manifests")

# measured parameters, Hz. kappa_a_i is chosen so kappa_a adds up to 923 MHz
reference_hz = {
    "omega_a": 193.411e12,
    "omega_b": 193.417801e12,
    "omega_c": 6.801e9,
    "kappa_a_i": 717.0e6,
    "kappa_a_e": 206.0e6,
    "kappa_b_i": 466.0e6,
    "kappa_b_e": 134.0e6,
    "kappa_c_i": 12.8e6,
    "kappa_c_e": 4.4e6,
    "g0": 1.2e3,
    "mu": 3.4e9,
}


def reference(**changes):
    values = dict(reference_hz)
    values.update(changes)
    return DeviceParams.from_hz(**values)


def resonant_drives(device, pump_power=1e-6, mw_power=1e-9):
    return PumpDrive(device.omega_a, pump_power), MicrowaveDrive(device.omega_c, mw_power)


def random_device(rng):
    """
    a valid device with rates spread over a few decades; used by the
    randomized property tests
    """
    two_pi = 2 * math.pi
    omega_a = two_pi * rng.uniform(190e12, 200e12)
    return DeviceParams(
        omega_a=omega_a,
        omega_b=omega_a + two_pi * rng.uniform(1e9, 10e9),
        omega_c=two_pi * rng.uniform(5e9, 10e9),
        kappa_a_i=two_pi * 10 ** rng.uniform(7, 9),
        kappa_a_e=two_pi * 10 ** rng.uniform(7, 9),
        kappa_b_i=two_pi * 10 ** rng.uniform(7, 9),
        kappa_b_e=two_pi * 10 ** rng.uniform(7, 9),
        kappa_c_i=two_pi * 10 ** rng.uniform(5, 8),
        kappa_c_e=two_pi * 10 ** rng.uniform(5, 8),
        g0=two_pi * 10 ** rng.uniform(2, 4),
        mu=two_pi * rng.uniform(1e9, 5e9),
    )


def random_drives(device, rng):
    """
    pump and microwave drives detuned by at most half a linewidth on modes
    b, c and a
    """
    delta_a = rng.uniform(-0.5, 0.5) * device.kappa_a
    delta_c = rng.uniform(-0.5, 0.5) * device.kappa_c
    omega_p = device.omega_a - delta_a
    omega_mu = device.omega_c - delta_c
    # delta_b = omega_b - omega_p - omega_mu
    delta_b = rng.uniform(-0.5, 0.5) * device.kappa_b
    device = device.replace(omega_b=omega_p + omega_mu + delta_b)
    pump = PumpDrive(omega_p, 10 ** rng.uniform(-7, -2))
    mw = MicrowaveDrive(omega_mu, 10 ** rng.uniform(-13, -7))
    return device, pump, mw


REFERENCE_MANIFEST = """\
schema: eotransducer/v1
kind: Scenario
metadata:
  name: unit
spec:
  device:
    frequency_a: 193.411e12
    frequency_b: 193.417801e12
    frequency_c: 6.801e9
    kappa_a_i: 717.0e6
    kappa_a_e: 206.0e6
    kappa_b_i: 466.0e6
    kappa_b_e: 134.0e6
    kappa_c_i: 12.8e6
    kappa_c_e: 4.4e6
    g0: 1.2e3
    mu: 3.4e9
  pump:
    power: 1.0e-6
  microwave:
    power: 1.0e-9
"""


def manifest(extra=""):
    """
    the reference operating point with extra spec sections appended; extra is
    indented by the caller to sit under spec
    """
    return REFERENCE_MANIFEST + extra


def sweep_section(axis, start, stop, count, outputs, offset=False):
    return (
        "  sweep:\n"
        f"    axis: {axis}\n"
        f"    start: {start}\n"
        f"    stop: {stop}\n"
        f"    count: {count}\n"
        f"    offset: {'true' if offset else 'false'}\n"
        f"    outputs: [{', '.join(outputs)}]\n"
    )
