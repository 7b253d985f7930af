import math
from collections import namedtuple

import numpy as np
from scipy.optimize import bisect

from eotransducer.errors import ValidationError

# Hz
FWHM_RESOLUTION = 1.0


class FilterStage(namedtuple("FilterStage", ["fwhm", "center_offset"])):
    __slots__ = ()

    def __new__(cls, fwhm, center_offset=0.0):
        fwhm = float(fwhm)
        if not fwhm > 0:
            raise ValidationError(f"filter fwhm must be positive, got {fwhm}", field="fwhm")
        return super().__new__(cls, fwhm, float(center_offset))


class FilterCascade(namedtuple("FilterCascade", ["stages"])):
    """
    Lorentzian filters in series; offsets and widths in Hz
    """

    __slots__ = ()

    def __new__(cls, stages):
        stages = tuple(s if isinstance(s, FilterStage) else FilterStage(*s) for s in stages)
        if not stages:
            raise ValidationError("filter cascade needs at least one stage", field="stages")
        return super().__new__(cls, stages)

    @classmethod
    def identical(cls, count, fwhm):
        if not float(count).is_integer():
            raise ValidationError(f"filter count must be a whole number, got {count}", field="count")
        return cls([FilterStage(fwhm)] * int(count))

    def linear(self, detuning):
        t = 1.0
        for stage in self.stages:
            t *= 1.0 / (1.0 + (2.0 * (detuning - stage.center_offset) / stage.fwhm) ** 2)
        return t


def filter_transmission(cascade, detuning):
    """
    cascade transmission in dB (<= 0) at a detuning from the pass band, Hz
    """
    return -10.0 * math.fsum(
        math.log10(1.0 + (2.0 * (detuning - s.center_offset) / s.fwhm) ** 2)
        for s in cascade.stages
    )


def _peak(cascade):
    offsets = [s.center_offset for s in cascade.stages]
    low, high = min(offsets), max(offsets)
    if low == high:
        return low

    def slope(detuning):
        return -math.fsum(
            8.0 * (detuning - s.center_offset) / s.fwhm ** 2
            / (1.0 + (2.0 * (detuning - s.center_offset) / s.fwhm) ** 2)
            for s in cascade.stages
        )

    return bisect(slope, low, high, xtol=FWHM_RESOLUTION / 10)


def combined_fwhm(cascade):
    """
    half-power full width of the whole cascade, Hz
    """
    peak = _peak(cascade)
    half = 0.5 * cascade.linear(peak)
    widest = max(s.fwhm for s in cascade.stages)

    def edge(direction):
        def above_half(x):
            return cascade.linear(peak + direction * x) - half

        upper = widest
        while above_half(upper) > 0:
            upper *= 2
        return bisect(above_half, 0.0, upper, xtol=FWHM_RESOLUTION / 10)

    return edge(1) + edge(-1)


def stage_fwhm_for_combined(count, fwhm):
    """
    per-stage width of count identical centred stages whose product has the
    given half-power width
    """
    if count < 1:
        raise ValidationError("a cascade needs at least one stage", field="count")
    if not fwhm > 0:
        raise ValidationError("fwhm must be positive", field="fwhm")
    return fwhm / np.sqrt(2.0 ** (1.0 / count) - 1.0)
