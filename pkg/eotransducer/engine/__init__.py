from eotransducer.engine import efficiency, solver, sideband, thermal
