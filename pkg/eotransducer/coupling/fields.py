"""
sampled mode fields on a uniform voxel grid, and the columnar text format
used to exchange them with external mode solvers.

file layout:

    # shape nx ny nz
    # voxel_volume v
    i j k ex_re ex_im ey_re ey_im ez_re ez_im e11 e12 e13 e21 e22 e23 e31 e32 e33 mask

one row per voxel, in any order.
"""

import logging
from collections import namedtuple

import numpy as np

from eotransducer.errors import ValidationError, UsageError

COLUMNS = 19


class FieldGrid(
    namedtuple("FieldGrid", ["shape", "voxel_volume", "field", "permittivity", "mask"])
):
    """
    field: (N, 3) complex amplitudes, permittivity: (N, 3, 3) relative
    permittivity, mask: (N,) True inside the electro-optic region. N is the
    product of shape, voxels flattened in C order.
    """

    __slots__ = ()

    def __new__(cls, shape, voxel_volume, field, permittivity, mask):
        shape = tuple(int(n) for n in shape)
        if len(shape) != 3 or min(shape) < 1:
            raise ValidationError(f"grid shape must be three positive sizes, got {shape}", field="shape")
        voxel_volume = float(voxel_volume)
        if not voxel_volume > 0:
            raise ValidationError("voxel volume must be positive", field="voxel_volume")

        n = int(np.prod(shape))
        field = np.asarray(field, dtype=complex).reshape(n, 3)
        permittivity = np.asarray(permittivity, dtype=float).reshape(n, 3, 3)
        mask = np.asarray(mask, dtype=bool).reshape(n)

        if not np.allclose(permittivity, np.transpose(permittivity, (0, 2, 1))):
            raise ValidationError("permittivity tensors must be symmetric", field="permittivity")
        if np.any(np.linalg.eigvalsh(permittivity) <= 0):
            raise ValidationError(
                "permittivity tensors must be positive definite", field="permittivity"
            )
        return super().__new__(cls, shape, voxel_volume, field, permittivity, mask)

    @classmethod
    def from_arrays(cls, field, voxel_volume, permittivity=1.0, mask=None):
        """
        field has shape (nx, ny, nz, 3). permittivity is a scalar (isotropic),
        a 3x3 tensor shared by every voxel, or one tensor per voxel. mask
        defaults to the whole grid.
        """
        field = np.asarray(field, dtype=complex)
        if field.ndim != 4 or field.shape[-1] != 3:
            raise ValidationError("field must have shape (nx, ny, nz, 3)", field="field")
        shape = field.shape[:3]
        n = int(np.prod(shape))

        permittivity = np.asarray(permittivity, dtype=float)
        if permittivity.ndim == 0:
            permittivity = permittivity * np.eye(3)
        if permittivity.shape == (3, 3):
            permittivity = np.broadcast_to(permittivity, (n, 3, 3))
        if mask is None:
            mask = np.ones(n, dtype=bool)
        return cls(shape, voxel_volume, field, permittivity, mask)

    @property
    def size(self):
        return self.field.shape[0]

    def with_field(self, field):
        return type(self)(self.shape, self.voxel_volume, field, self.permittivity, self.mask)

    def same_grid(self, other):
        return (
            self.shape == other.shape
            and self.voxel_volume == other.voxel_volume
            and np.array_equal(self.mask, other.mask)
            and np.allclose(self.permittivity, other.permittivity)
        )


def check_same_grid(*grids):
    first = grids[0]
    for other in grids[1:]:
        if not first.same_grid(other):
            raise UsageError(
                "fields are not sampled on the same grid "
                f"({first.shape} vs {other.shape})",
                field="field",
            )


def _read_header(path):
    shape, voxel_volume = None, None
    with open(path) as f:
        for line in f:
            if not line.startswith("#"):
                break
            parts = line[1:].split()
            if not parts:
                continue
            if parts[0] == "shape":
                shape = tuple(int(p) for p in parts[1:4])
            elif parts[0] == "voxel_volume":
                voxel_volume = float(parts[1])
    if shape is None or voxel_volume is None:
        raise ValidationError(
            f"{path}: header must carry '# shape nx ny nz' and '# voxel_volume v'",
            field="header",
        )
    return shape, voxel_volume


def read_field_grid(path):
    shape, voxel_volume = _read_header(path)
    try:
        rows = np.loadtxt(path, comments="#", ndmin=2)
    except ValueError as e:
        raise ValidationError(f"{path}: {e}", field="rows")

    n = int(np.prod(shape))
    if rows.shape != (n, COLUMNS):
        raise ValidationError(
            f"{path}: expected {n} rows of {COLUMNS} columns, got {rows.shape[0]}x{rows.shape[1]}",
            field="rows",
        )

    index = rows[:, :3].astype(int)
    if np.any(index < 0) or np.any(index >= np.array(shape)):
        raise ValidationError(f"{path}: voxel index outside the grid", field="rows")
    flat = np.ravel_multi_index(index.T, shape)
    if len(np.unique(flat)) != n:
        raise ValidationError(f"{path}: duplicate voxel rows", field="rows")

    order = np.argsort(flat)
    rows = rows[order]
    field = rows[:, 3:9:2] + 1j * rows[:, 4:9:2]
    permittivity = rows[:, 9:18].reshape(n, 3, 3)
    mask = rows[:, 18] != 0

    logging.debug(f"read {n} voxels from {path}")
    return FieldGrid(shape, voxel_volume, field, permittivity, mask)


def write_field_grid(grid, path):
    index = np.array(np.unravel_index(np.arange(grid.size), grid.shape)).T
    field = np.empty((grid.size, 6))
    field[:, 0::2] = grid.field.real
    field[:, 1::2] = grid.field.imag
    rows = np.hstack(
        [
            index,
            field,
            grid.permittivity.reshape(grid.size, 9),
            grid.mask.astype(int)[:, None],
        ]
    )
    header = f"shape {' '.join(str(n) for n in grid.shape)}\nvoxel_volume {grid.voxel_volume:.17g}"
    fmt = ["%d"] * 3 + ["%.17g"] * 15 + ["%d"]
    np.savetxt(path, rows, fmt=fmt, header=header, comments="# ")
    logging.debug(f"wrote {grid.size} voxels to {path}")
