#!/usr/bin/env python

import argparse
import os
import sys

from eotransducer import __version__
from eotransducer.errors import TransducerError, UsageError, error_line
from eotransducer.engine import efficiency
from eotransducer.coupling import circuit, fields, overlap, tensor
from eotransducer.measurement import calibration
from eotransducer.scenarios import fit, loader, optimize, sweep, writer
from eotransducer.units import TWO_PI
from eotransducer.utils import log

log.configure()

DEFAULT_OUT_DIR = "./out"

MICROWATT = 1e-6


def emit(pairs):
    for key, value in pairs:
        if isinstance(value, float):
            value = f"{value:.6g}"
        print(f"{key}={value}")


def convert(args):
    scenario = loader.load_scenario(args.scenario)
    device, pump, mw = scenario.device, scenario.pump, scenario.mw
    if not pump.power > 0:
        raise UsageError("convert needs a non-zero pump power", field="spec.pump.power")

    low_c = efficiency.efficiency_low_c(device, pump, mw)
    full = efficiency.efficiency_full(device, pump, mw)
    per_uw = MICROWATT / pump.power
    emit(
        [
            ("scenario", scenario.name),
            ("pump_power", pump.power),
            ("efficiency_low_c", low_c),
            ("efficiency_full", full.efficiency),
            ("cooperativity", full.cooperativity),
            ("pump_photons", full.n_pump_photons),
            ("efficiency_per_uw", low_c * per_uw),
            ("cooperativity_per_uw", full.cooperativity * per_uw),
            ("pump_photons_per_uw", full.n_pump_photons * per_uw),
        ]
    )


def run_sweep(args):
    scenario = loader.load_scenario(args.scenario)
    result = sweep.run_sweep(scenario, threads=args.threads)
    for path in writer.write_result(result, args.out, scenario.name, args.format):
        print(path)


def fit_g0(args):
    scenario = loader.load_scenario(args.scenario)
    if args.efficiency_per_uw is not None:
        request = fit.FitRequest.per_microwatt(args.efficiency_per_uw, scenario.device)
    elif scenario.fit is not None:
        request = fit.FitRequest(scenario.fit, scenario.device)
    else:
        raise UsageError(
            "no measured efficiency: pass --efficiency-per-uw or add spec.fit",
            field="efficiency_per_uw",
        )
    g0 = fit.fit_g0(request)
    emit([("scenario", scenario.name), ("g0_hz", g0 / TWO_PI), ("g0", g0)])


def optimize_coupling(args):
    scenario = loader.load_scenario(args.scenario)
    bounds = dict(scenario.optimize) or optimize.default_bounds(scenario.device)
    if args.kappa_b_e:
        bounds["kappa_b_e"] = tuple(TWO_PI * v for v in args.kappa_b_e)
    if args.kappa_c_e:
        bounds["kappa_c_e"] = tuple(TWO_PI * v for v in args.kappa_c_e)
    defaults = optimize.default_bounds(scenario.device)
    for axis in optimize.AXES:
        bounds.setdefault(axis, defaults[axis])

    result = optimize.optimize_coupling(scenario.device, scenario.pump, bounds)
    emit(
        [
            ("scenario", scenario.name),
            ("kappa_b_e_hz", result.kappa_b_e / TWO_PI),
            ("kappa_c_e_hz", result.kappa_c_e / TWO_PI),
            ("efficiency", result.efficiency),
            ("at_bound", str(result.at_bound).lower()),
            ("stationary", str(result.stationary).lower()),
        ]
    )


def calibrate(args):
    if (args.sideband_power is None) == (args.rsa_power is None):
        raise UsageError("give exactly one of --sideband-power and --rsa-power", field="power")
    pairs = []
    if args.sideband_power is not None:
        rsa = calibration.rsa_power_from_sideband(args.sideband_power, args.lo_power, args.gain)
        pairs += [("sideband_power", args.sideband_power), ("rsa_power", rsa)]
    else:
        sideband = calibration.sideband_power_from_rsa(args.rsa_power, args.lo_power, args.gain)
        pairs += [("rsa_power", args.rsa_power), ("sideband_power", sideband)]

    if args.offchip_efficiency is not None:
        chain = calibration.CalibrationChain(
            heterodyne_gain=args.gain,
            grating_total_loss_db=args.coupler_loss_db,
            grating_split_uncertainty_db=args.split_uncertainty_db,
        )
        bounds = calibration.efficiency_decomposition(args.offchip_efficiency, chain)
        pairs += [
            ("onchip_efficiency", bounds.nominal),
            ("onchip_efficiency_low", bounds.low),
            ("onchip_efficiency_high", bounds.high),
        ]
    emit(pairs)


def coupling(args):
    grids = [fields.read_field_grid(p) for p in (args.field_a, args.field_b, args.field_c)]
    omegas = [TWO_PI * f for f in (args.freq_a, args.freq_b, args.freq_c)]

    if args.tensor == "lithium_niobate":
        rate = overlap.g0_overlap_full(*grids, omegas, tensor.EOTensor.lithium_niobate())
    else:
        if args.n_e is None:
            raise UsageError("the r33 overlap needs --n-e", field="n_e")
        rate = overlap.g0_overlap_r33(*grids, omegas, args.n_e, args.r33)
    pairs = [("g0_hz", rate.g0_hz), ("g0_phase", rate.phase)]

    if args.impedance is not None:
        lc = circuit.CircuitParams.from_impedance(args.impedance, omegas[2])
        v_zp = circuit.zero_point_voltage(lc)
        pairs += [
            ("c_total", lc.c_total),
            ("v_zp", v_zp),
            ("g_v_hz_per_v", circuit.gv_from_g0(rate.g0, v_zp) / TWO_PI),
        ]
        if args.g_v is not None:
            pairs += [("g0_lumped_hz", circuit.g0_from_gv(TWO_PI * args.g_v, v_zp) / TWO_PI)]
    elif args.g_v is not None:
        raise UsageError("--g-v needs --impedance to set the zero-point voltage", field="g_v")
    emit(pairs)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eotransducer",
        description="design and analysis of triply-resonant electro-optic transducers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("convert", help="efficiency, cooperativity and pump photons at one point")
    p.add_argument("--scenario", required=True)
    p.set_defaults(func=convert)

    p = sub.add_parser("sweep", help="evaluate a scenario's sweep and write CSV/JSON")
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", default=os.environ.get("EOTRANSDUCER_OUT_DIR", DEFAULT_OUT_DIR))
    p.add_argument("--format", choices=writer.FORMATS, default="both")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=run_sweep)

    p = sub.add_parser("fit", help="infer g0 from a measured efficiency")
    p.add_argument("--scenario", required=True)
    p.add_argument("--efficiency-per-uw", type=float, default=None)
    p.set_defaults(func=fit_g0)

    p = sub.add_parser("optimize", help="best extrinsic couplings of modes b and c")
    p.add_argument("--scenario", required=True)
    p.add_argument("--kappa-b-e", type=float, nargs=2, metavar=("LOW", "HIGH"))
    p.add_argument("--kappa-c-e", type=float, nargs=2, metavar=("LOW", "HIGH"))
    p.set_defaults(func=optimize_coupling)

    p = sub.add_parser("calibrate", help="heterodyne power arithmetic")
    p.add_argument("--sideband-power", type=float, default=None)
    p.add_argument("--rsa-power", type=float, default=None)
    p.add_argument("--lo-power", type=float, required=True)
    p.add_argument("--gain", type=float, default=1.02e4)
    p.add_argument("--offchip-efficiency", type=float, default=None)
    p.add_argument("--coupler-loss-db", type=float, default=24.4)
    p.add_argument("--split-uncertainty-db", type=float, default=3.3)
    p.set_defaults(func=calibrate)

    p = sub.add_parser("coupling", help="g0 from sampled mode fields")
    p.add_argument("--field-a", required=True)
    p.add_argument("--field-b", required=True)
    p.add_argument("--field-c", required=True)
    p.add_argument("--freq-a", type=float, required=True)
    p.add_argument("--freq-b", type=float, required=True)
    p.add_argument("--freq-c", type=float, required=True)
    p.add_argument("--tensor", choices=["r33", "lithium_niobate"], default="r33")
    p.add_argument("--r33", type=float, default=31e-12)
    p.add_argument("--n-e", type=float, default=None)
    p.add_argument("--impedance", type=float, default=None)
    p.add_argument("--g-v", type=float, default=None)
    p.set_defaults(func=coupling)

    return parser


def cli_main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        args.func(args)
    except (TransducerError, OSError) as e:
        print(error_line(e), file=sys.stderr)
        return 1
    return 0


def main():
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
