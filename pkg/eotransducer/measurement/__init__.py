from eotransducer.measurement import calibration, filters, detector, acoustic
