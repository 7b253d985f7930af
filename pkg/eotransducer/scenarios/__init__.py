from eotransducer.scenarios import (
    config,
    outputs,
    queue,
    worker,
    loader,
    sweep,
    fit,
    optimize,
    writer,
)
