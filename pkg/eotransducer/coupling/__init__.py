from eotransducer.coupling import fields, tensor, overlap, circuit
