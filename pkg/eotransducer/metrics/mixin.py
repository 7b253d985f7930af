from eotransducer.metrics import push


class MetricsMixin:
    """
    MetricsMixin adds the methods needed to send metrics about a finished run.
    Classes using it provide metric_labels and metric_values.
    """

    def __init__(self, **kwargs):
        self.prometheus_gateway = kwargs.get("prometheus_gateway", None)

    @property
    def metric_labels(self):
        return {}

    @property
    def metric_values(self):
        return {}

    def send_metrics(self):
        return push.push_metrics(
            self.metric_labels,
            self.metric_values,
            prometheus_gateway=self.prometheus_gateway,
        )
