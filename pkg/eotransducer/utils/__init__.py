from eotransducer.utils import dt
