import re
from collections import namedtuple

import numpy as np

from eotransducer.errors import ValidationError

# contracted index I -> the symmetric (i, j) pairs it stands for
CONTRACTED = {
    1: [(0, 0)],
    2: [(1, 1)],
    3: [(2, 2)],
    4: [(1, 2), (2, 1)],
    5: [(0, 2), (2, 0)],
    6: [(0, 1), (1, 0)],
}

_CONTRACTED_KEY = re.compile(r"^r([1-6])([1-3])$")


class EOTensor(namedtuple("EOTensor", ["r"])):
    """
    Pockels tensor r_ijk in m/V, symmetric in its first two indices
    """

    __slots__ = ()

    def __new__(cls, r):
        r = np.asarray(r, dtype=float)
        if r.shape != (3, 3, 3):
            raise ValidationError(f"r tensor must be 3x3x3, got {r.shape}", field="r")
        scale = np.max(np.abs(r)) if r.size else 0.0
        if not np.allclose(r, np.transpose(r, (1, 0, 2)), rtol=0, atol=1e-12 * scale):
            raise ValidationError("r tensor must satisfy r_ijk = r_jik", field="r")
        return super().__new__(cls, r)

    @classmethod
    def from_contracted(cls, entries):
        """
        entries maps contracted names like "r33" or "r51" to values in m/V
        """
        r = np.zeros((3, 3, 3))
        for name, value in entries.items():
            match = _CONTRACTED_KEY.match(name)
            if not match:
                raise ValidationError(
                    f"{name} is not a contracted Pockels coefficient (r11..r63)", field=name
                )
            big_i, k = int(match.group(1)), int(match.group(2)) - 1
            for i, j in CONTRACTED[big_i]:
                r[i, j, k] = float(value)
        return cls(r)

    @classmethod
    def only_r33(cls, r33):
        return cls.from_contracted({"r33": r33})

    @classmethod
    def lithium_niobate(cls, r13=9.6e-12, r22=6.8e-12, r33=31e-12, r51=32.6e-12):
        """
        trigonal 3m point group, optic axis along z
        """
        return cls.from_contracted(
            {
                "r12": -r22,
                "r13": r13,
                "r22": r22,
                "r23": r13,
                "r33": r33,
                "r42": r51,
                "r51": r51,
                "r61": -r22,
            }
        )

    @property
    def r33(self):
        return float(self.r[2, 2, 2])


def chi2_from_r(tensor, permittivity):
    """
    chi2_ijk = eps_ii eps_jj r_ijk / 2 for each voxel's relative permittivity;
    permittivity may be a single 3x3 tensor or an (N, 3, 3) stack
    """
    permittivity = np.asarray(permittivity, dtype=float)
    diagonal = np.diagonal(permittivity, axis1=-2, axis2=-1)
    return 0.5 * np.einsum("...i,...j,ijk->...ijk", diagonal, diagonal, tensor.r)
