import csv
import json
import logging
import os

FORMATS = ["csv", "json", "both"]


def format_float(value):
    return format(value, ".17g")


def write_csv(result, path):
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(result.names)
        for row in result.rows():
            writer.writerow([format_float(v) for v in row])
    logging.info(f"wrote {path}")
    return path


def write_json(result, path):
    document = {
        "metadata": result.metadata,
        "columns": {name: list(series) for name, series in result.columns.items()},
    }
    with open(path, "w") as f:
        json.dump(document, f, indent=2)
        f.write("\n")
    logging.info(f"wrote {path}")
    return path


def write_result(result, out_dir, name, fmt="both"):
    """
    write a SweepResult as <out_dir>/<name>.csv and/or .json, returning the
    written paths
    """
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    if fmt in ("csv", "both"):
        paths += [write_csv(result, os.path.join(out_dir, f"{name}.csv"))]
    if fmt in ("json", "both"):
        paths += [write_json(result, os.path.join(out_dir, f"{name}.json"))]
    return paths
