MetricsConfig = {
    "eotransducer_sweep_points": {
        "type": "Gauge",
        "labels": ["axis"],
    },
    "eotransducer_sweep_seconds": {
        "type": "Gauge",
        "labels": ["axis"],
    },
    "eotransducer_sweep_workers": {
        "type": "Gauge",
        "labels": ["axis"],
    },
    "eotransducer_solver_iterations": {
        "type": "Gauge",
        "labels": ["mode"],
    },
}
