#!/usr/bin/env python

import sys
import logging

from eotransducer.errors import TransducerError, error_line
from eotransducer.scenarios import loader
from eotransducer.utils import log

log.configure()


class Validator:
    """
    This is a separate entrypoint for eotransducer,
    called eotransducer-validate. It parses and checks
    scenario manifests without evaluating anything, so
    a broken manifest is caught before a long sweep.
    """

    def __init__(self, paths):
        self.paths = list(paths)

    def run(self):
        if not self.paths:
            print("usage: eotransducer-validate <manifest> [<manifest> ...]", file=sys.stderr)
            return 2
        failed = [p for p in self.paths if not self.validate_manifest(p)]
        return 1 if failed else 0

    def validate_manifest(self, path):
        try:
            scenario = loader.load_scenario(path)
        except (TransducerError, OSError) as e:
            print(error_line(e), file=sys.stderr)
            return False
        logging.info(f"{path}: scenario {scenario.name} is valid")
        return True


def main():
    return Validator(sys.argv[1:]).run()


if __name__ == "__main__":
    sys.exit(main())
