"""
mean-field steady state of the three coupled modes.

with every time derivative set to zero the equations of motion read

    0 = D_a a - i g0 b c*  + eps_p        (FULL only keeps the g0 term)
    0 = D_b b - i g0 a c
    0 = D_c c - i g0 a* b  + eps_mu       (LINEAR drops the g0 term)

where D_m = -i delta_m - kappa_m/2 and eps are the input amplitudes.
"""

import logging
from collections import namedtuple
from enum import Enum

import numpy as np

from eotransducer.errors import DomainError, SolverError
from eotransducer.engine.efficiency import damping, detunings

TOLERANCE = 1e-12
MAX_ITERATIONS = 10000
DAMPING = 0.5


class SolverMode(Enum):
    """
    which coupling terms are kept

    LINEAR: no back-conversion, the closed form is the three-Lorentzian product
    BACKACTION: b -> c back-conversion kept, the closed form carries the
                |1 + G^2/(D_b D_c)|^2 denominator
    FULL: pump depletion by the b c* term as well; no closed form
    """

    LINEAR = 0
    BACKACTION = 1
    FULL = 2


class SteadyStateSolution(
    namedtuple(
        "SteadyStateSolution",
        ["amp_a", "amp_b", "amp_c", "converged", "residual", "iterations", "mode"],
    )
):
    __slots__ = ()

    @property
    def photons(self):
        return abs(self.amp_a) ** 2, abs(self.amp_b) ** 2, abs(self.amp_c) ** 2


def _relative(*terms):
    """
    |sum of terms| over the largest term magnitude, 0 when every term vanishes
    """
    scale = max(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return abs(sum(terms)) / scale


class _System:
    def __init__(self, params, pump, mw, mode):
        delta = detunings(params, pump, mw)
        self.g = params.g0
        self.d_a = damping(delta.delta_a, params.kappa_a)
        self.d_b = damping(delta.delta_b, params.kappa_b)
        self.d_c = damping(delta.delta_c, params.kappa_c)
        self.eps_p = pump.amplitude(params.kappa_a_e, params.omega_a)
        self.eps_mu = mw.amplitude(params.kappa_c_e)
        self.mode = mode

    def residual(self, a, b, c):
        g = self.g
        if self.mode == SolverMode.FULL:
            r_a = _relative(self.d_a * a, -1j * g * b * c.conjugate(), self.eps_p)
        else:
            r_a = _relative(self.d_a * a, self.eps_p)
        r_b = _relative(self.d_b * b, -1j * g * a * c)
        if self.mode == SolverMode.LINEAR:
            r_c = _relative(self.d_c * c, self.eps_mu)
        else:
            r_c = _relative(self.d_c * c, -1j * g * a.conjugate() * b, self.eps_mu)
        return max(r_a, r_b, r_c)

    def b_from(self, a, c):
        return 1j * self.g * a * c / self.d_b

    def solve_pair(self, a):
        """
        the (b, c) equations are linear once a is fixed
        """
        g = self.g
        matrix = np.array(
            [[self.d_b, -1j * g * a], [-1j * g * a.conjugate(), self.d_c]],
            dtype=complex,
        )
        b, c = np.linalg.solve(matrix, np.array([0.0, -self.eps_mu], dtype=complex))
        return complex(b), complex(c)


def _solve_linear(system):
    a = complex(-system.eps_p / system.d_a)
    c = complex(-system.eps_mu / system.d_c)
    return a, system.b_from(a, c), c, 0


def _solve_backaction(system, tolerance, max_iterations, damping_factor):
    a = complex(-system.eps_p / system.d_a)
    big_g_squared = system.g ** 2 * abs(a) ** 2
    c = complex(-system.eps_mu / system.d_c)

    for iteration in range(1, max_iterations + 1):
        c_next = -(system.eps_mu + big_g_squared * c / system.d_b) / system.d_c
        c = (1 - damping_factor) * c + damping_factor * c_next
        if not np.isfinite(c):
            logging.debug(f"fixed point diverged after {iteration} iterations")
            break
        b = system.b_from(a, c)
        if system.residual(a, b, c) <= tolerance:
            return a, b, c, iteration

    logging.debug("falling back to the direct (b, c) solve")
    b, c = system.solve_pair(a)
    return a, b, c, max_iterations


def _solve_full(system, tolerance, max_iterations, damping_factor):
    a = complex(-system.eps_p / system.d_a)
    b, c = system.solve_pair(a)

    for iteration in range(1, max_iterations + 1):
        a_next = (1j * system.g * b * c.conjugate() - system.eps_p) / system.d_a
        a = (1 - damping_factor) * a + damping_factor * a_next
        b, c = system.solve_pair(a)
        if system.residual(a, b, c) <= tolerance:
            return a, b, c, iteration
    return a, b, c, max_iterations


def steady_state_solve(
    params,
    pump,
    mw,
    mode=SolverMode.BACKACTION,
    tolerance=TOLERANCE,
    max_iterations=MAX_ITERATIONS,
    damping_factor=DAMPING,
):
    system = _System(params, pump, mw, mode)

    if mode == SolverMode.LINEAR:
        a, b, c, iterations = _solve_linear(system)
    elif mode == SolverMode.BACKACTION:
        a, b, c, iterations = _solve_backaction(
            system, tolerance, max_iterations, damping_factor
        )
    else:
        a, b, c, iterations = _solve_full(
            system, tolerance, max_iterations, damping_factor
        )

    residual = system.residual(a, b, c)
    if not residual <= tolerance:
        raise SolverError(
            f"{mode.name} steady state did not converge in {max_iterations} "
            f"iterations (residual {residual:.3e})",
            residual=residual,
        )
    logging.debug(f"{mode.name} steady state after {iterations} iterations, residual {residual:.2e}")
    return SteadyStateSolution(a, b, c, True, residual, iterations, mode)


def efficiency_from_solution(solution, params, mw):
    """
    eta = kappa_b_e |b|^2 / (|eps_mu|^2 / kappa_c_e): output photon flux over
    input microwave photon flux
    """
    flux = mw.photon_flux()
    if flux <= 0:
        raise DomainError("efficiency needs a non-zero microwave drive", field="microwave_power")
    return params.kappa_b_e * abs(solution.amp_b) ** 2 / flux
