"""
the quantities a sweep can tabulate. Each output is a function of one
evaluated PointState; frequencies are reported in Hz.
"""

from collections import namedtuple

from eotransducer.errors import UsageError
from eotransducer.engine import efficiency, sideband, solver, thermal
from eotransducer.hybridization import HybridizedModes, optical_transmission_spectrum
from eotransducer.measurement.detector import snspd_count_rate
from eotransducer.units import TWO_PI

# solver_iterations collects the iteration count of every solve made for the point
PointState = namedtuple(
    "PointState",
    ["params", "pump", "mw", "bias_v", "temperature", "theta", "scenario", "solver_iterations"],
)


def _sidebands(state):
    return sideband.sideband_efficiencies(
        state.params, state.pump, state.mw, state.scenario.model.weighting, state.theta
    )


def _solver_efficiency(state):
    solution = solver.steady_state_solve(
        state.params, state.pump, state.mw, state.scenario.model.solver
    )
    state.solver_iterations.append(solution.iterations)
    return solver.efficiency_from_solution(solution, state.params, state.mw)


def _transmission(state):
    p = state.params
    modes = HybridizedModes(p.omega_a, p.omega_b, state.theta)
    kappas = ((p.kappa_a, p.kappa_a_e), (p.kappa_b, p.kappa_b_e))
    return optical_transmission_spectrum(modes, kappas, [state.pump.omega_p])[0].transmission


def _count_rate(state):
    scenario = state.scenario
    return snspd_count_rate(
        efficiency.efficiency_low_c(state.params, state.pump, state.mw),
        state.mw,
        scenario.calibration,
        scenario.filters,
        scenario.detector,
        scenario.model.filter_detuning,
    )


OUTPUTS = {
    # axis values
    "pump_frequency": lambda s: s.pump.omega_p / TWO_PI,
    "bias_voltage": lambda s: s.bias_v,
    "microwave_frequency": lambda s: s.mw.omega_mu / TWO_PI,
    "pump_power": lambda s: s.pump.power,
    "temperature": lambda s: s.temperature,
    # detunings
    "pump_detuning": lambda s: (s.params.omega_a - s.pump.omega_p) / TWO_PI,
    "microwave_detuning": lambda s: (s.params.omega_c - s.mw.omega_mu) / TWO_PI,
    # conversion
    "efficiency_low_c": lambda s: efficiency.efficiency_low_c(s.params, s.pump, s.mw),
    "efficiency_full": lambda s: efficiency.efficiency_full(s.params, s.pump, s.mw).efficiency,
    "efficiency_solver": _solver_efficiency,
    "cooperativity": lambda s: efficiency.efficiency_full(s.params, s.pump, s.mw).cooperativity,
    "pump_photons": lambda s: efficiency.intracavity_pump_photons(s.pump, s.params),
    "eta_anti_stokes": lambda s: _sidebands(s)[0],
    "eta_stokes": lambda s: _sidebands(s)[1],
    # optical modes
    "mode_a_frequency": lambda s: s.params.omega_a / TWO_PI,
    "mode_b_frequency": lambda s: s.params.omega_b / TWO_PI,
    "mode_splitting": lambda s: s.params.splitting / TWO_PI,
    "mixing_angle": lambda s: s.theta,
    "transmission": _transmission,
    # noise and detection
    "thermal_occupancy": lambda s: thermal.thermal_occupancy(
        s.params.omega_c / TWO_PI, s.temperature
    ),
    "snspd_count_rate": _count_rate,
}


def validate_outputs(names):
    unknown = [n for n in names if n not in OUTPUTS]
    if unknown:
        raise UsageError(
            f"unknown output(s) {', '.join(unknown)}; valid outputs: {', '.join(sorted(OUTPUTS))}",
            field="outputs",
        )


def evaluate(state, names):
    return tuple(float(OUTPUTS[name](state)) for name in names)
