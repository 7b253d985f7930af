from eotransducer.units import ensure_positive


def acoustic_fsr(shear_velocity, substrate_thickness):
    """
    free spectral range (Hz) of bulk shear waves bouncing across the substrate
    """
    ensure_positive(shear_velocity, "shear_velocity")
    ensure_positive(substrate_thickness, "substrate_thickness")
    return shear_velocity / (2.0 * substrate_thickness)
