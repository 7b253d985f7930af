"""
power budgets of the heterodyne and photon-counting setups.

the two grating couplers are only characterised together; the nominal
budget gives each half of the total loss and the split uncertainty bounds
how far either one can be from that.
"""

from collections import namedtuple

from eotransducer.errors import DomainError, ValidationError
from eotransducer.units import apply_loss_db, db_to_ratio, ensure_non_negative

EfficiencyBounds = namedtuple("EfficiencyBounds", ["nominal", "low", "high"])


def _loss(value, name):
    value = float(value)
    if value < 0:
        raise ValidationError(f"{name} must be non-negative, got {value}", field=name)
    return value


class CalibrationChain(
    namedtuple(
        "CalibrationChain",
        [
            "heterodyne_gain",
            "mw_attenuation_db",
            "grating_total_loss_db",
            "grating_split_uncertainty_db",
            "downstream_optical_loss_db",
        ],
    )
):
    """
    heterodyne_gain G in 1/W (P_rsa = G P_sideband P_lo); every loss in dB
    """

    __slots__ = ()

    def __new__(
        cls,
        heterodyne_gain=1.02e4,
        mw_attenuation_db=13.0,
        grating_total_loss_db=24.4,
        grating_split_uncertainty_db=3.3,
        downstream_optical_loss_db=0.0,
    ):
        gain = float(heterodyne_gain)
        if not gain > 0:
            raise ValidationError("heterodyne_gain must be positive", field="heterodyne_gain")
        total = _loss(grating_total_loss_db, "grating_total_loss_db")
        split = _loss(grating_split_uncertainty_db, "grating_split_uncertainty_db")
        if split > total / 2:
            raise ValidationError(
                f"split uncertainty {split} dB exceeds half the total coupler loss {total} dB",
                field="grating_split_uncertainty_db",
            )
        return super().__new__(
            cls,
            gain,
            _loss(mw_attenuation_db, "mw_attenuation_db"),
            total,
            split,
            _loss(downstream_optical_loss_db, "downstream_optical_loss_db"),
        )

    @property
    def input_coupler_loss_db(self):
        return self.grating_total_loss_db / 2

    @property
    def output_coupler_loss_db(self):
        return self.grating_total_loss_db / 2

    def replace(self, **changes):
        values = self._asdict()
        values.update(changes)
        return type(self)(**values)


def _check_heterodyne(p_lo, gain):
    if not p_lo > 0:
        raise DomainError("LO power must be positive", field="p_lo")
    if not gain > 0:
        raise DomainError("heterodyne gain must be positive", field="gain")


def rsa_power_from_sideband(p_sideband, p_lo, gain):
    _check_heterodyne(p_lo, gain)
    ensure_non_negative(p_sideband, "p_sideband")
    return gain * p_sideband * p_lo


def sideband_power_from_rsa(p_mw_at_rsa, p_lo, gain):
    _check_heterodyne(p_lo, gain)
    ensure_non_negative(p_mw_at_rsa, "p_mw_at_rsa")
    return p_mw_at_rsa / (gain * p_lo)


def power_at_device(p_generator, chain):
    ensure_non_negative(p_generator, "p_generator")
    return apply_loss_db(p_generator, chain.mw_attenuation_db)


def optical_power_on_chip(p_incident, chain):
    """
    pump power in the feed waveguide after the input grating coupler
    """
    ensure_non_negative(p_incident, "p_incident")
    return apply_loss_db(p_incident, chain.input_coupler_loss_db)


def efficiency_decomposition(eta_offchip, chain):
    """
    on-chip efficiency from an off-chip one, correcting for the output
    coupler only. low/high move the output coupler loss by the split
    uncertainty.
    """
    if not eta_offchip > 0:
        raise DomainError("off-chip efficiency must be positive", field="eta_offchip")
    out = chain.output_coupler_loss_db
    spread = chain.grating_split_uncertainty_db
    return EfficiencyBounds(
        eta_offchip * db_to_ratio(out),
        eta_offchip * db_to_ratio(out - spread),
        eta_offchip * db_to_ratio(out + spread),
    )
