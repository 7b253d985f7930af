"""
scenario manifests, shaped like the other objects we keep in YAML:

    schema: eotransducer/v1
    kind: Scenario
    metadata:
      name: reference
    spec:
      device: {...}
      pump: {...}
      microwave: {...}

every frequency and rate is an ordinary frequency in Hz (the "/2pi" value).
Errors name the dotted path of the offending field and its line.
"""

import logging

import yaml

from eotransducer.errors import ScenarioError, TransducerError
from eotransducer.params import MicrowaveDrive, PumpDrive, validate_device_params
from eotransducer.hybridization import BareOpticalModes
from eotransducer.engine.sideband import PathwayWeighting
from eotransducer.engine.solver import SolverMode
from eotransducer.measurement.calibration import CalibrationChain, power_at_device
from eotransducer.measurement.detector import DetectorModel
from eotransducer.measurement.filters import FilterCascade, FilterStage
from eotransducer.scenarios import outputs
from eotransducer.scenarios.config import ModelOptions, ScenarioConfig, SweepSpec
from eotransducer.units import TWO_PI

SCHEMA = "eotransducer/v1"
KIND = "Scenario"

SPEC_SECTIONS = [
    "device",
    "pump",
    "microwave",
    "bare_modes",
    "calibration",
    "filters",
    "detector",
    "temperature",
    "model",
    "sweep",
    "optimize",
    "fit",
]

# manifest key -> DeviceParams field
DEVICE_KEYS = {
    "frequency_a": "omega_a",
    "frequency_b": "omega_b",
    "frequency_c": "omega_c",
    "kappa_a_i": "kappa_a_i",
    "kappa_a_e": "kappa_a_e",
    "kappa_b_i": "kappa_b_i",
    "kappa_b_e": "kappa_b_e",
    "kappa_c_i": "kappa_c_i",
    "kappa_c_e": "kappa_c_e",
    "g0": "g0",
    "mu": "mu",
}
DEVICE_FIELDS = {v: k for k, v in DEVICE_KEYS.items()}

_MISSING = object()


class ManifestReader:
    """
    wraps the loaded document with the composed node tree so any dotted
    path can be traced back to its line
    """

    def __init__(self, data, root, source):
        self.data = data
        self.root = root
        self.source = source

    def line(self, path):
        node = self.root
        line = node.start_mark.line + 1 if node is not None else None
        for part in path.split("."):
            child = None
            if isinstance(node, yaml.MappingNode):
                for key, value in node.value:
                    if key.value == part:
                        child = value
                        break
            elif isinstance(node, yaml.SequenceNode) and part.isdigit():
                if int(part) < len(node.value):
                    child = node.value[int(part)]
            if child is None:
                break
            node = child
            line = node.start_mark.line + 1
        return line

    def fail(self, message, path):
        raise ScenarioError(f"{self.source}: {message}", field=path, line=self.line(path))

    def section(self, path, mapping, key, required=False):
        where = f"{path}.{key}" if path else key
        value = mapping.get(key, None)
        if value is None:
            if required:
                self.fail(f"missing required section {where}", where)
            return {}
        if not isinstance(value, dict):
            self.fail(f"{where} must be a mapping", where)
        return value

    def check_keys(self, path, mapping, allowed):
        for key in mapping:
            if key not in allowed:
                self.fail(
                    f"unknown field {key} in {path}; expected one of {', '.join(allowed)}",
                    f"{path}.{key}",
                )

    def number(self, path, mapping, key, default=_MISSING):
        value = mapping.get(key, None)
        if value is None:
            if default is _MISSING:
                self.fail(f"missing required field {path}.{key}", f"{path}.{key}")
            return default
        # YAML 1.1 reads 193.411e12 as a string, so coerce everything
        try:
            return float(value)
        except (TypeError, ValueError):
            self.fail(f"{path}.{key} must be a number, got {value!r}", f"{path}.{key}")

    def integer(self, path, mapping, key):
        value = self.number(path, mapping, key)
        if not value.is_integer():
            self.fail(f"{path}.{key} must be a whole number, got {value}", f"{path}.{key}")
        return int(value)

    def build(self, path, factory, field_names=None):
        """
        run factory, turning any TransducerError into a ScenarioError that
        points at path.<field>
        """
        try:
            return factory()
        except ScenarioError:
            raise
        except TransducerError as e:
            field = (field_names or {}).get(e.field, e.field)
            where = f"{path}.{field}" if field else path
            raise ScenarioError(f"{self.source}: {e.message}", field=where, line=self.line(where))


def _device(reader, spec):
    path = "spec.device"
    section = reader.section("spec", spec, "device", required=True)
    reader.check_keys(path, section, list(DEVICE_KEYS) + ["reported"])
    rates = {
        DEVICE_KEYS[key]: TWO_PI * reader.number(path, section, key, 0.0 if key == "g0" else _MISSING)
        for key in DEVICE_KEYS
    }
    reported = reader.section(path, section, "reported")
    reader.check_keys(f"{path}.reported", reported, ["kappa_a", "kappa_b", "kappa_c"])
    totals = {k: TWO_PI * reader.number(f"{path}.reported", reported, k) for k in reported}
    device = reader.build(
        path, lambda: validate_device_params(rates, reported_totals=totals), DEVICE_FIELDS
    )
    return device, totals


def _calibration(reader, spec):
    path = "spec.calibration"
    section = reader.section("spec", spec, "calibration")
    reader.check_keys(path, section, CalibrationChain._fields)
    values = {k: reader.number(path, section, k) for k in section}
    return reader.build(path, lambda: CalibrationChain(**values))


def _pump(reader, spec, device):
    path = "spec.pump"
    section = reader.section("spec", spec, "pump", required=True)
    reader.check_keys(path, section, ["frequency", "detuning", "power"])
    if "frequency" in section and "detuning" in section:
        reader.fail("give either pump frequency or detuning, not both", f"{path}.detuning")
    if "detuning" in section:
        omega = device.omega_a - TWO_PI * reader.number(path, section, "detuning")
    elif "frequency" in section:
        omega = TWO_PI * reader.number(path, section, "frequency")
    else:
        omega = device.omega_a
    power = reader.number(path, section, "power")
    return reader.build(path, lambda: PumpDrive(omega, power), {"pump_power": "power"})


def _microwave(reader, spec, device, calibration):
    path = "spec.microwave"
    section = reader.section("spec", spec, "microwave", required=True)
    reader.check_keys(path, section, ["frequency", "power", "generator_power"])
    omega = device.omega_c
    if "frequency" in section:
        omega = TWO_PI * reader.number(path, section, "frequency")
    if "power" in section and "generator_power" in section:
        reader.fail("give either microwave power or generator_power, not both", f"{path}.power")
    if "generator_power" in section:
        generator = reader.number(path, section, "generator_power")
        power = reader.build(
            f"{path}.generator_power",
            lambda: power_at_device(generator, calibration),
            {"p_generator": ""},
        )
    else:
        power = reader.number(path, section, "power", 0.0)
    return reader.build(path, lambda: MicrowaveDrive(omega, power), {"microwave_power": "power"})


def _bare_modes(reader, spec):
    path = "spec.bare_modes"
    section = reader.section("spec", spec, "bare_modes")
    if not section:
        return None
    keys = ["frequency_a_prime", "frequency_b_prime", "mu", "g_v_dc"]
    reader.check_keys(path, section, keys)
    values = [TWO_PI * reader.number(path, section, k, 0.0 if k == "g_v_dc" else _MISSING) for k in keys]
    return reader.build(path, lambda: BareOpticalModes(*values))


def _filters(reader, spec):
    path = "spec.filters"
    section = reader.section("spec", spec, "filters")
    if not section:
        return None
    reader.check_keys(path, section, ["stages", "count", "fwhm"])
    if "stages" in section:
        stages = []
        if not isinstance(section["stages"], list):
            reader.fail("filter stages must be a list", f"{path}.stages")
        for n, stage in enumerate(section["stages"]):
            stage_path = f"{path}.stages.{n}"
            if not isinstance(stage, dict):
                reader.fail("filter stages must be mappings", stage_path)
            reader.check_keys(stage_path, stage, ["fwhm", "center_offset"])
            fwhm = reader.number(stage_path, stage, "fwhm")
            offset = reader.number(stage_path, stage, "center_offset", 0.0)
            stages += [reader.build(stage_path, lambda: FilterStage(fwhm, offset))]
        return reader.build(path, lambda: FilterCascade(stages))
    count = reader.integer(path, section, "count")
    fwhm = reader.number(path, section, "fwhm")
    return reader.build(path, lambda: FilterCascade.identical(count, fwhm))


def _detector(reader, spec):
    path = "spec.detector"
    section = reader.section("spec", spec, "detector")
    reader.check_keys(path, section, DetectorModel._fields)
    values = {k: reader.number(path, section, k) for k in section}
    return reader.build(path, lambda: DetectorModel(**values))


def _enum(reader, path, section, key, enum, default):
    value = section.get(key, None)
    if value is None:
        return default
    try:
        return enum[str(value).upper()]
    except KeyError:
        valid = ", ".join(e.name.lower() for e in enum)
        reader.fail(f"{path}.{key} must be one of {valid}, got {value}", f"{path}.{key}")


def _model(reader, spec):
    path = "spec.model"
    section = reader.section("spec", spec, "model")
    reader.check_keys(path, section, ModelOptions._fields)
    return ModelOptions(
        _enum(reader, path, section, "solver", SolverMode, SolverMode.BACKACTION),
        _enum(reader, path, section, "weighting", PathwayWeighting, PathwayWeighting.EQUAL),
        reader.number(path, section, "filter_detuning", 0.0),
    )


def _sweep(reader, spec):
    path = "spec.sweep"
    section = reader.section("spec", spec, "sweep")
    if not section:
        return None
    reader.check_keys(path, section, SweepSpec._fields)
    names = section.get("outputs", None)
    if not isinstance(names, list) or not names:
        reader.fail("sweep outputs must be a non-empty list", f"{path}.outputs")
    names = [str(n) for n in names]
    reader.build(path, lambda: outputs.validate_outputs(names))
    count = reader.integer(path, section, "count")
    return reader.build(
        path,
        lambda: SweepSpec(
            str(section.get("axis", "")),
            reader.number(path, section, "start"),
            reader.number(path, section, "stop"),
            count,
            names,
            bool(section.get("offset", False)),
        ),
    )


def _optimize(reader, spec):
    path = "spec.optimize"
    section = reader.section("spec", spec, "optimize")
    reader.check_keys(path, section, ["kappa_b_e", "kappa_c_e"])
    bounds = {}
    for key, value in section.items():
        if not isinstance(value, list) or len(value) != 2:
            reader.fail(f"{path}.{key} must be a [low, high] pair in Hz", f"{path}.{key}")
        pair = {"low": value[0], "high": value[1]}
        bounds[key] = (
            TWO_PI * reader.number(f"{path}.{key}", pair, "low"),
            TWO_PI * reader.number(f"{path}.{key}", pair, "high"),
        )
    return bounds


def _fit(reader, spec):
    path = "spec.fit"
    section = reader.section("spec", spec, "fit")
    if not section:
        return None
    reader.check_keys(path, section, ["efficiency_per_uw", "efficiency_per_watt"])
    if "efficiency_per_uw" in section:
        return reader.number(path, section, "efficiency_per_uw") / 1e-6
    return reader.number(path, section, "efficiency_per_watt")


def parse_scenario(text, source="<string>"):
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        problem = getattr(e, "problem", None) or str(e)
        raise ScenarioError(
            f"{source}: {problem}", line=mark.line + 1 if mark is not None else None
        )

    reader = ManifestReader(data, root, source)
    if not isinstance(data, dict):
        raise ScenarioError(f"{source}: a manifest must be a YAML mapping", line=1)
    if data.get("schema") != SCHEMA:
        reader.fail(f"unsupported schema {data.get('schema')!r}, expected {SCHEMA}", "schema")
    if data.get("kind") != KIND:
        reader.fail(f"unsupported kind {data.get('kind')!r}, expected {KIND}", "kind")

    metadata = reader.section("", data, "metadata")
    name = str(metadata.get("name", "scenario"))
    spec = reader.section("", data, "spec", required=True)
    reader.check_keys("spec", spec, SPEC_SECTIONS)

    device, totals = _device(reader, spec)
    calibration = _calibration(reader, spec)
    sections = dict(
        name=name,
        device=device,
        reported_totals=totals,
        pump=_pump(reader, spec, device),
        mw=_microwave(reader, spec, device, calibration),
        bare_modes=_bare_modes(reader, spec),
        calibration=calibration,
        filters=_filters(reader, spec),
        detector=_detector(reader, spec),
        temperature=reader.number("spec", spec, "temperature", 1.0),
        model=_model(reader, spec),
        sweep=_sweep(reader, spec),
        optimize=_optimize(reader, spec),
        fit=_fit(reader, spec),
    )
    scenario = reader.build("spec", lambda: ScenarioConfig(**sections))
    logging.debug(f"loaded scenario {name} from {source}")
    return scenario


def load_scenario(path):
    with open(path) as f:
        text = f.read()
    return parse_scenario(text, source=path)
