from collections import namedtuple

from eotransducer.errors import ValidationError
from eotransducer.units import db_to_ratio


class DetectorModel(namedtuple("DetectorModel", ["quantum_efficiency", "background_rate"])):
    """
    single-photon detector. quantum_efficiency defaults to 1, so predicted
    count rates are upper bounds unless a measured value is configured.
    """

    __slots__ = ()

    def __new__(cls, quantum_efficiency=1.0, background_rate=4.8e3):
        qe = float(quantum_efficiency)
        if not 0.0 <= qe <= 1.0:
            raise ValidationError(
                f"quantum_efficiency must lie in [0, 1], got {qe}", field="quantum_efficiency"
            )
        background = float(background_rate)
        if background < 0:
            raise ValidationError("background_rate must be non-negative", field="background_rate")
        return super().__new__(cls, qe, background)


def snspd_count_rate(eta_onchip, mw, chain, cascade, detector, filter_detuning=0.0):
    """
    counts/s: converted photons after the output coupler, downstream optics
    and filters, times detector efficiency, plus background
    """
    if eta_onchip < 0:
        raise ValidationError("efficiency must be non-negative", field="eta_onchip")
    loss_db = chain.output_coupler_loss_db + chain.downstream_optical_loss_db
    signal = (
        eta_onchip
        * mw.photon_flux()
        * db_to_ratio(-loss_db)
        * cascade.linear(filter_detuning)
        * detector.quantum_efficiency
    )
    return signal + detector.background_rate
