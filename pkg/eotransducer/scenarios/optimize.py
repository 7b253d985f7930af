"""
choose the extrinsic couplings of modes b and c that maximise the
low-cooperativity efficiency at zero detuning.

each axis is searched with a golden-section search inside its bounds and the
two axes are cycled until the efficiency stops improving.
"""

import logging
import math
from collections import namedtuple

from eotransducer.errors import UsageError
from eotransducer.engine.efficiency import DetuningSet, efficiency_low_c
from eotransducer.units import TWO_PI

INV_PHI = (math.sqrt(5) - 1) / 2
SEARCH_TOLERANCE = 1e-12
IMPROVEMENT_TOLERANCE = 1e-10
MAX_CYCLES = 100
BOUND_TOLERANCE = 1e-6
# central-difference step and slope bound, both relative to the coupling rate
STATIONARITY_STEP = 1e-6
STATIONARITY_TOLERANCE = 1e-6

AXES = ["kappa_b_e", "kappa_c_e"]

OptimizationResult = namedtuple(
    "OptimizationResult", ["kappa_b_e", "kappa_c_e", "efficiency", "at_bound", "stationary", "cycles"]
)


def golden_section_max(f, low, high, tolerance=SEARCH_TOLERANCE):
    """
    maximiser of a unimodal f on [low, high], to a bracket width of
    tolerance relative to the bracket position
    """
    a, b = low, high
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while abs(b - a) > tolerance * (abs(a) + abs(b)):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def default_bounds(device):
    """
    two decades either side of each intrinsic rate
    """
    return {
        "kappa_b_e": (device.kappa_b_i / 100, device.kappa_b_i * 100),
        "kappa_c_e": (device.kappa_c_i / 100, device.kappa_c_i * 100),
    }


def _check_bounds(bounds):
    for axis in AXES:
        if axis not in bounds:
            raise UsageError(f"missing optimization bounds for {axis}", field=axis)
        low, high = bounds[axis]
        if not 0 < low < high:
            raise UsageError(
                f"bounds for {axis} must satisfy 0 < low < high, got ({low}, {high})",
                field=axis,
            )


def objective(device, pump):
    def eta(**changes):
        return efficiency_low_c(device.replace(**changes), pump, None, DetuningSet.zero())

    return eta


def slope(eta, point, axis, step=STATIONARITY_STEP):
    """
    central finite-difference d(eta)/d(axis) at point
    """
    h = step * point[axis]
    above = eta(**{**point, axis: point[axis] + h})
    below = eta(**{**point, axis: point[axis] - h})
    return (above - below) / (2 * h)


def is_stationary(eta, point, axes, tolerance=STATIONARITY_TOLERANCE):
    """
    true when |d(eta)/d(kappa)| <= tolerance * eta / kappa along every axis given
    """
    value = eta(**point)
    return all(abs(slope(eta, point, a)) <= tolerance * value / point[a] for a in axes)


def optimize_coupling(device, pump, bounds=None):
    bounds = bounds or default_bounds(device)
    _check_bounds(bounds)
    eta = objective(device, pump)

    point = {axis: math.sqrt(bounds[axis][0] * bounds[axis][1]) for axis in AXES}
    best = eta(**point)
    for cycle in range(1, MAX_CYCLES + 1):
        for axis in AXES:
            low, high = bounds[axis]
            others = {k: v for k, v in point.items() if k != axis}
            point[axis] = golden_section_max(lambda x: eta(**others, **{axis: x}), low, high)
        current = eta(**point)
        improvement = (current - best) / current if current > 0 else 0.0
        best = current
        if improvement < IMPROVEMENT_TOLERANCE:
            break

    on_bound = [
        a
        for a in AXES
        if min(abs(point[a] - bounds[a][0]), abs(point[a] - bounds[a][1]))
        < BOUND_TOLERANCE * point[a]
    ]
    if on_bound:
        logging.warning(
            f"optimum sits on the search bound for {', '.join(on_bound)}; "
            "widen the bounds for an interior maximum"
        )
    # a bound point has a non-zero slope, so only interior axes are checked
    stationary = is_stationary(eta, point, [a for a in AXES if a not in on_bound])
    if not stationary:
        logging.warning("optimum failed the finite-difference stationarity check")
    logging.info(
        f"optimal kappa_b_e/2pi = {point['kappa_b_e'] / TWO_PI:.6g} Hz, "
        f"kappa_c_e/2pi = {point['kappa_c_e'] / TWO_PI:.6g} Hz, eta = {best:.6g}"
    )
    return OptimizationResult(
        point["kappa_b_e"], point["kappa_c_e"], best, bool(on_bound), stationary, cycle
    )
