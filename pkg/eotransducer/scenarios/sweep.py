import logging
import os
import time
from collections import namedtuple

import numpy as np

from eotransducer import __version__
from eotransducer.errors import UsageError
from eotransducer.hybridization import BareOpticalModes, supermode_frequencies
from eotransducer.metrics.mixin import MetricsMixin
from eotransducer.scenarios import outputs
from eotransducer.scenarios.config import SweepAxis
from eotransducer.scenarios.queue import SweepQueue
from eotransducer.scenarios.worker import SweepWorker
from eotransducer.units import TWO_PI
from eotransducer.utils import dt

DEFAULT_PARALLEL_THRESHOLD = 64


class SweepResult(namedtuple("SweepResult", ["columns", "metadata"])):
    """
    columns maps each requested output name to its series, in request order
    """

    __slots__ = ()

    @property
    def names(self):
        return list(self.columns)

    def rows(self):
        return list(zip(*self.columns.values()))


def parallel_threshold():
    return int(os.environ.get("EOTRANSDUCER_PARALLEL_THRESHOLD", DEFAULT_PARALLEL_THRESHOLD))


def default_bare_modes(params):
    """
    bare modes that hybridize into the device's supermodes at full mixing
    """
    center = 0.5 * (params.omega_a + params.omega_b)
    return BareOpticalModes(center, center, params.splitting / 2)


def axis_values(spec):
    return np.linspace(spec.start, spec.stop, spec.count)


def point_state(scenario, value):
    """
    the scenario with its sweep axis set to value
    """
    params, pump, mw = scenario.device, scenario.pump, scenario.mw
    bias_v, temperature, theta = 0.0, scenario.temperature, scenario.theta
    spec = scenario.sweep
    value = float(value)

    if spec.axis == SweepAxis.pump_frequency:
        omega = TWO_PI * value + (params.omega_a if spec.offset else 0.0)
        pump = pump.replace(omega_p=omega)
    elif spec.axis == SweepAxis.microwave_frequency:
        omega = TWO_PI * value + (params.omega_c if spec.offset else 0.0)
        mw = mw.replace(omega_mu=omega)
    elif spec.axis == SweepAxis.pump_power:
        pump = pump.replace(power=value)
    elif spec.axis == SweepAxis.temperature:
        temperature = value
    elif spec.axis == SweepAxis.bias_voltage:
        bare = scenario.bare_modes or default_bare_modes(params)
        modes = supermode_frequencies(bare, value)
        params = params.replace(omega_a=modes.omega_a, omega_b=modes.omega_b)
        theta = modes.theta
        bias_v = value

    return outputs.PointState(params, pump, mw, bias_v, temperature, theta, scenario, [])


class SweepRun(MetricsMixin):
    """
    one evaluation of a scenario's sweep. Points are fanned out to
    SweepWorker threads when there are more of them than the parallel
    threshold; rows always come back in axis order.
    """

    def __init__(self, scenario, threads=None, **kwargs):
        super().__init__(**kwargs)
        if scenario.sweep is None:
            raise UsageError(f"scenario {scenario.name} has no sweep section", field="sweep")
        outputs.validate_outputs(scenario.sweep.outputs)

        self.scenario = scenario
        self.values = axis_values(scenario.sweep)
        if threads is None:
            threads = (os.cpu_count() or 1) if len(self.values) > parallel_threshold() else 1
        if threads < 1:
            raise UsageError(f"threads must be at least 1, got {threads}", field="threads")
        self.threads = min(threads, len(self.values))
        self._runtime = 0.0
        self._solver_iterations = []

    def evaluate(self, value):
        state = point_state(self.scenario, value)
        row = outputs.evaluate(state, self.scenario.sweep.outputs)
        self._solver_iterations.extend(state.solver_iterations)
        return row

    def _run_serial(self):
        return [self.evaluate(v) for v in self.values]

    def _run_threaded(self):
        q = SweepQueue()
        q.put_many(self.values)
        results = [None] * len(self.values)
        errors = {}

        workers = [
            SweepWorker(
                q,
                self.evaluate,
                results,
                errors,
                name=f"sweep-worker-{n}",
                shutdown=lambda: bool(errors),
            )
            for n in range(self.threads)
        ]
        for w in workers:
            w.start()
        for w in workers:
            w.join()

        if errors:
            raise errors[min(errors)]
        return results

    def run(self):
        spec = self.scenario.sweep
        logging.info(
            f"sweeping {spec.axis.name} over {len(self.values)} points "
            f"with {self.threads} thread(s)"
        )
        start = time.monotonic()
        rows = self._run_serial() if self.threads == 1 else self._run_threaded()
        self._runtime = time.monotonic() - start

        columns = {name: [row[i] for row in rows] for i, name in enumerate(spec.outputs)}
        metadata = {
            "scenario": self.scenario.echo(),
            "version": __version__,
            "timestamp": dt.now().isoformat(),
            "points": len(rows),
        }
        self.send_metrics()
        return SweepResult(columns, metadata)

    @property
    def metric_labels(self):
        return {
            "scenario": self.scenario.name,
            "axis": self.scenario.sweep.axis.name,
            "mode": self.scenario.model.solver.name,
        }

    @property
    def metric_values(self):
        values = {
            "eotransducer_sweep_points": len(self.values),
            "eotransducer_sweep_seconds": self._runtime,
            "eotransducer_sweep_workers": self.threads,
        }
        if self._solver_iterations:
            values["eotransducer_solver_iterations"] = max(self._solver_iterations)
        return values


def run_sweep(scenario, threads=None):
    return SweepRun(scenario, threads=threads).run()
