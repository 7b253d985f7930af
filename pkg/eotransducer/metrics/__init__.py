from eotransducer.metrics import config, mixin, push
