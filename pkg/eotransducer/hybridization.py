"""
two evanescently coupled racetrack modes a', b' (coupling mu) diagonalized into
the symmetric/antisymmetric supermodes a, b that the converter actually uses.
"""

import logging
import math
from collections import namedtuple

import numpy as np

from eotransducer.errors import DomainError, UsageError, ValidationError

InteractionCoefficients = namedtuple(
    "InteractionCoefficients", ["self_a", "self_b", "cross"]
)

CrossingRow = namedtuple("CrossingRow", ["bias_v", "omega_a", "omega_b"])

TransmissionRow = namedtuple("TransmissionRow", ["omega_probe", "transmission"])


class BareOpticalModes(
    namedtuple("BareOpticalModes", ["omega_a_prime", "omega_b_prime", "mu", "g_v_dc"])
):
    """
    uncoupled racetrack modes at zero bias. g_v_dc (rad/s per volt) is the DC
    tuning rate of the bare detuning; the bias electrodes sit on the right
    racetrack so only omega_b_prime moves with voltage.
    """

    __slots__ = ()

    def __new__(cls, omega_a_prime, omega_b_prime, mu, g_v_dc=0.0):
        if not mu > 0:
            raise ValidationError(f"mu must be positive, got {mu}", field="mu")
        return super().__new__(
            cls, float(omega_a_prime), float(omega_b_prime), float(mu), float(g_v_dc)
        )

    @property
    def delta_prime(self):
        return self.omega_b_prime - self.omega_a_prime

    def at_bias(self, bias_v):
        return type(self)(
            self.omega_a_prime,
            self.omega_b_prime + self.g_v_dc * bias_v,
            self.mu,
            self.g_v_dc,
        )


class HybridizedModes(namedtuple("HybridizedModes", ["omega_a", "omega_b", "theta"])):
    __slots__ = ()

    @property
    def splitting(self):
        return self.omega_b - self.omega_a


def mixing_angle(delta_prime, mu):
    """
    theta with tan(2 theta) = 2 mu / delta', taken on the branch that stays in
    (0, pi/2) continuously through delta' = 0
    """
    if not mu > 0:
        raise DomainError(f"mu must be positive, got {mu}", field="mu")
    return 0.5 * math.atan2(2 * mu, delta_prime)


def supermode_frequencies(bare, bias_v=0.0):
    """
    supermode frequencies at a bias voltage: the eigenvalues
    (w_a' + w_b')/2 -/+ sqrt(mu^2 + delta'^2/4) of [[w_a', mu], [mu, w_b']]
    """
    biased = bare.at_bias(bias_v)
    center = 0.5 * (biased.omega_a_prime + biased.omega_b_prime)
    half_gap = math.hypot(biased.mu, 0.5 * biased.delta_prime)
    return HybridizedModes(
        center - half_gap,
        center + half_gap,
        mixing_angle(biased.delta_prime, biased.mu),
    )


def interaction_coefficients(theta):
    """
    weights of the microwave modulation in the supermode basis: self terms for
    a and b, and the cross term that couples them (3/2 at full hybridization)
    """
    c, s = math.cos(theta), math.sin(theta)
    return InteractionCoefficients(
        2 * c * c - s * s,
        2 * s * s - c * c,
        3 * s * c,
    )


def avoided_crossing_spectrum(bare, bias_range):
    bias_range = list(bias_range)
    if not bias_range:
        raise UsageError("bias range is empty", field="bias_range")
    rows = []
    for v in bias_range:
        modes = supermode_frequencies(bare, v)
        rows += [CrossingRow(float(v), modes.omega_a, modes.omega_b)]
    logging.debug(f"avoided crossing evaluated at {len(rows)} bias points")
    return rows


def _check_kappas(kappa, kappa_e, mode):
    if not kappa > 0:
        raise ValidationError(f"total loss of mode {mode} must be positive", field=f"kappa_{mode}")
    if kappa_e < 0 or kappa_e > kappa:
        raise ValidationError(
            f"extrinsic loss of mode {mode} must lie in [0, kappa]", field=f"kappa_{mode}_e"
        )


def mode_response(omega, omega_m, kappa, kappa_e):
    """
    complex field transmission past one single-side coupled resonator
    """
    return 1 - kappa_e / (1j * (omega_m - omega) + kappa / 2)


def optical_transmission_spectrum(modes, kappas, probe):
    """
    power transmission of the feed waveguide, |t_a t_b|^2, over the probe
    angular frequencies. kappas is ((kappa_a, kappa_a_e), (kappa_b, kappa_b_e)).

    the two supermode responses are multiplied, interference between the two
    pathways is ignored.
    """
    (kappa_a, kappa_a_e), (kappa_b, kappa_b_e) = kappas
    _check_kappas(kappa_a, kappa_a_e, "a")
    _check_kappas(kappa_b, kappa_b_e, "b")

    omega = np.asarray(list(probe), dtype=float)
    t = mode_response(omega, modes.omega_a, kappa_a, kappa_a_e) * mode_response(
        omega, modes.omega_b, kappa_b, kappa_b_e
    )
    power = np.abs(t) ** 2
    return [TransmissionRow(float(w), float(p)) for w, p in zip(omega, power)]
