import logging
import os

from prometheus_client import CollectorRegistry, Gauge, push_to_gateway

from eotransducer.metrics.config import MetricsConfig

SupportedMetricTypes = ["Gauge"]


def build_registry(labels, values):
    """
    a CollectorRegistry holding one Gauge per configured metric that has a
    value. Every metric carries the scenario label plus its configured ones;
    other labels are dropped.
    """
    registry = CollectorRegistry()
    for key, value in values.items():
        if key not in MetricsConfig:
            logging.warning(f"{key} not in available metrics, discarding")
            continue
        c = MetricsConfig[key]
        if c.get("type", "") not in SupportedMetricTypes:
            logging.error(f"Discarding unsupported metric type {c.get('type')}")
            continue
        names = ["scenario"] + c.get("labels", [])
        gauge = Gauge(key, key, names, registry=registry)
        gauge.labels(**{n: str(labels.get(n, "")) for n in names}).set(value)
    return registry


def push_metrics(labels, values, prometheus_gateway=None, job="eotransducer.metrics"):
    """
    push run metrics when a gateway is configured (argument or
    PROMETHEUS_GATEWAY); returns the registry either way
    """
    prometheus_gateway = prometheus_gateway or os.environ.get("PROMETHEUS_GATEWAY", None)
    registry = build_registry(labels, values)
    if not prometheus_gateway:
        return registry
    try:
        logging.debug("pushing metrics to prometheus")
        push_to_gateway(prometheus_gateway, job=job, registry=registry)
    except Exception as e:
        logging.info(e)
    return registry
