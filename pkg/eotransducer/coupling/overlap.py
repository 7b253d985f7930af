"""
vacuum electro-optic coupling rate g0 from sampled fields.

every integral is a midpoint sum over voxels; real and imaginary parts are
reduced with math.fsum so the result does not depend on voxel order.
"""

import cmath
import logging
import math
from collections import namedtuple

import numpy as np

from eotransducer.errors import DomainError, ValidationError
from eotransducer.params import CONSTANTS
from eotransducer.units import TWO_PI, ensure_positive
from eotransducer.coupling.fields import check_same_grid


class CouplingRate(namedtuple("CouplingRate", ["g0", "phase"])):
    """
    magnitude (rad/s) and phase (rad) of the complex coupling rate
    """

    __slots__ = ()

    @property
    def g0_hz(self):
        return self.g0 / TWO_PI

    @property
    def complex(self):
        return cmath.rect(self.g0, self.phase)


def _fsum_complex(values):
    values = np.asarray(values)
    return complex(math.fsum(values.real), math.fsum(values.imag))


def normalization_constant(grid, omega_m):
    """
    N_m = sqrt(hbar w_m / (2 eps_0 integral sum_ij eps_ij e_i e_j* dV)) over
    the whole grid
    """
    ensure_positive(omega_m, "omega")
    density = np.einsum("nij,ni,nj->n", grid.permittivity, grid.field, grid.field.conj())
    energy = _fsum_complex(density).real * grid.voxel_volume
    if not energy > 0:
        raise DomainError("field carries no energy, cannot normalize", field="field")
    return math.sqrt(
        CONSTANTS.planck_reduced * omega_m / (2 * CONSTANTS.vacuum_permittivity * energy)
    )


def _rate(hbar_g, normalization):
    value = hbar_g * normalization / CONSTANTS.planck_reduced
    return CouplingRate(abs(value), cmath.phase(value) if value != 0 else 0.0)


def _normalizations(fields, omegas):
    return np.prod([normalization_constant(f, w) for f, w in zip(fields, omegas)])


def g0_overlap_full(field_a, field_b, field_c, omegas, tensor):
    """
    hbar g0 = eps_0 N_a N_b N_c sum over the masked voxels of
              sum_ijk eps_ii eps_jj r_ijk e_ai e_bj* e_ck dV
    omegas is (w_a, w_b, w_c)
    """
    check_same_grid(field_a, field_b, field_c)
    mask = field_a.mask
    diagonal = np.diagonal(field_a.permittivity[mask], axis1=1, axis2=2)
    density = np.einsum(
        "ni,nj,ijk,ni,nj,nk->n",
        diagonal,
        diagonal,
        tensor.r,
        field_a.field[mask],
        field_b.field[mask].conj(),
        field_c.field[mask],
    )
    hbar_g = (
        CONSTANTS.vacuum_permittivity * _fsum_complex(density) * field_a.voxel_volume
    )
    rate = _rate(hbar_g, _normalizations((field_a, field_b, field_c), omegas))
    logging.debug(f"g0/2pi = {rate.g0_hz:.6g} Hz from the full tensor overlap")
    return rate


def g0_overlap_r33(field_a, field_b, field_c, omegas, n_e, r33):
    """
    z components only: hbar g0 = eps_0 n_e^4 r33 N_a N_b N_c integral e_az e_bz* e_cz dV
    """
    check_same_grid(field_a, field_b, field_c)
    ensure_positive(n_e, "n_e")
    mask = field_a.mask
    density = field_a.field[mask, 2] * field_b.field[mask, 2].conj() * field_c.field[mask, 2]
    hbar_g = (
        CONSTANTS.vacuum_permittivity
        * n_e ** 4
        * r33
        * _fsum_complex(density)
        * field_a.voxel_volume
    )
    return _rate(hbar_g, _normalizations((field_a, field_b, field_c), omegas))


def g0_overlap_chi2(field_a, field_b, field_c, omegas, chi2):
    """
    hbar g0 = 2 eps_0 N_a N_b N_c integral sum_ijk chi2_ijk e_ai e_bj* e_ck dV

    chi2 is one 3x3x3 tensor (m/V) or one per voxel, shape (N, 3, 3, 3)
    """
    check_same_grid(field_a, field_b, field_c)
    mask = field_a.mask
    chi2 = np.asarray(chi2, dtype=float)
    if chi2.shape == (3, 3, 3):
        chi2 = np.broadcast_to(chi2, (field_a.size, 3, 3, 3))
    if chi2.shape != (field_a.size, 3, 3, 3):
        raise ValidationError(
            f"chi2 must be 3x3x3 or one tensor per voxel, got {chi2.shape}", field="chi2"
        )
    density = np.einsum(
        "nijk,ni,nj,nk->n",
        chi2[mask],
        field_a.field[mask],
        field_b.field[mask].conj(),
        field_c.field[mask],
    )
    hbar_g = (
        2 * CONSTANTS.vacuum_permittivity * _fsum_complex(density) * field_a.voxel_volume
    )
    return _rate(hbar_g, _normalizations((field_a, field_b, field_c), omegas))
